"""The distinguished boundary of the pentablock.

``K1`` is ``pi`` of the unitary group: ``(s, p)`` in bGamma and
``|a| <= sqrt(1 - |s|**2 / 4)``.  The distinguished boundary ``K0`` is the part
with equality, a Moebius-band-like surface parametrized by
``(sqrt(1 - x**2) omega, 2 x e^{i theta/2}, e^{i theta})``.
"""
from __future__ import annotations

import cmath
import math

from .matrix_core import PentaPoint, as_point
from .mobius import _unimodular
from .symmetrised_bidisc import BGAMMA_TOL, in_bGamma

TWO_PI = 2.0 * math.pi


def _bound(s: complex) -> float:
    return math.sqrt(max(0.0, 1.0 - 0.25 * abs(s) ** 2))


def in_K1(x, tol: float = BGAMMA_TOL) -> bool:
    a, s, p = as_point(x)
    return in_bGamma((s, p), tol) and abs(a) <= _bound(s) + tol


def in_bP(x, tol: float = BGAMMA_TOL) -> bool:
    a, s, p = as_point(x)
    return in_bGamma((s, p), tol) and abs(abs(a) - _bound(s)) <= tol


def bP_parametrize(x_coord: float, theta: float, omega=1.0) -> PentaPoint:
    x_coord = float(x_coord)
    theta = float(theta)
    if not -1.0 <= x_coord <= 1.0:
        raise ValueError(f"x must lie in [-1, 1], got {x_coord!r}")
    if not 0.0 <= theta <= TWO_PI:
        raise ValueError(f"theta must lie in [0, 2 pi], got {theta!r}")
    omega = _unimodular(omega, "omega")
    half = cmath.exp(0.5j * theta)
    return PentaPoint(math.sqrt(1.0 - x_coord * x_coord) * omega, 2.0 * x_coord * half, half * half)


def bP_coordinates(x, tol: float = BGAMMA_TOL) -> tuple[float, float, complex]:
    """``(x, theta, omega)`` with ``theta = arg p`` in ``[0, 2 pi)``.

    On the circle ``|s| = 2`` the ``a``-coordinate vanishes and ``omega = 1``.
    """
    x = as_point(x)
    if not in_bP(x, tol):
        raise ValueError(f"{tuple(x)} is not in the distinguished boundary")
    a, s, p = x
    theta = math.atan2(p.imag, p.real) % TWO_PI
    xc = (s / (2.0 * cmath.exp(0.5j * theta))).real
    xc = min(1.0, max(-1.0, xc))
    omega = a / abs(a) if abs(a) > 1e-12 else 1.0 + 0j
    return xc, theta, omega
