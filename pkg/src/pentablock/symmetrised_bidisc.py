"""The symmetrised bidisc G, its closure Gamma and distinguished boundary bGamma.

A point ``(s, p)`` is the pair of elementary symmetric functions of the roots
of ``z**2 - s*z + p``.
"""
from __future__ import annotations

import math
from typing import NamedTuple

from .matrix_core import quadratic_roots
from .mobius import MobiusParams

DEFAULT_TOL = 1e-10
BGAMMA_TOL = 1e-9

_EPS = 2.220446049250313e-16


class SymPoint(NamedTuple):
    s: complex
    p: complex


def as_sympoint(q) -> SymPoint:
    s, p = q
    return SymPoint(complex(s), complex(p))


def roots_of(q) -> tuple[complex, complex]:
    s, p = as_sympoint(q)
    return quadratic_roots(s, p)


def root_error(q, roots=None) -> float:
    """Forward error bound on the computed roots of ``z**2 - s*z + p``.

    Rounding in the discriminant is amplified like ``delta / |l1 - l2|`` for
    separated roots and like ``sqrt(delta)`` near a double root.
    """
    s, p = as_sympoint(q)
    l1, l2 = roots if roots is not None else quadratic_roots(s, p)
    delta = 8.0 * _EPS * (abs(s) ** 2 + 4.0 * abs(p) + 1.0)
    gap = abs(l1 - l2)
    return min(math.sqrt(delta), delta / gap) if gap > 0 else math.sqrt(delta)


def in_G(q, tol: float = 0.0) -> bool:
    """``|s - conj(s) p| < 1 - |p|**2``."""
    s, p = as_sympoint(q)
    return abs(s - s.conjugate() * p) < 1.0 - abs(p) ** 2 - tol


def in_G_roots(q, tol: float = 0.0) -> bool:
    """Root route to membership of G: both roots in the open disc."""
    l1, l2 = roots_of(q)
    return max(abs(l1), abs(l2)) < 1.0 - tol


def in_Gamma(q, tol: float = DEFAULT_TOL) -> bool:
    """Both roots in the closed disc, allowing for root conditioning."""
    q = as_sympoint(q)
    roots = roots_of(q)
    return max(abs(z) for z in roots) <= 1.0 + tol + root_error(q, roots)


def in_Gamma_beta(q, tol: float = DEFAULT_TOL) -> bool:
    """Existential criterion: ``|p| <= 1`` and ``s = b + conj(b) p`` for some ``|b| <= 1``.

    For ``|p| < 1`` the real-linear map ``b -> b + conj(b) p`` is invertible, so
    ``b`` is forced; on ``|p| = 1`` a solution needs ``s = conj(s) p`` and the
    smallest one is ``s / 2``.
    """
    s, p = as_sympoint(q)
    ap = abs(p)
    if ap > 1.0 + tol:
        return False
    if ap < 1.0 - tol:
        b = (s - s.conjugate() * p) / (1.0 - ap * ap)
        return abs(b) <= 1.0 + tol
    return abs(s - s.conjugate() * p) <= tol and abs(s) <= 2.0 + tol


def in_bGamma(q, tol: float = BGAMMA_TOL) -> bool:
    """``|s| <= 2``, ``|p| = 1`` and ``s = conj(s) p``."""
    s, p = as_sympoint(q)
    return (
        abs(s) <= 2.0 + tol
        and abs(abs(p) - 1.0) <= tol
        and abs(s - s.conjugate() * p) <= tol
    )


def beta_of(q, tol: float = DEFAULT_TOL) -> complex:
    """The parameter ``b`` with ``s = b + conj(b) p``.

    Canonical choice ``s / 2`` on ``|p| = 1`` where ``b`` is not unique.
    """
    q = as_sympoint(q)
    if not in_Gamma(q, tol):
        raise ValueError(f"{tuple(q)} is not in Gamma")
    s, p = q
    ap = abs(p)
    if abs(ap - 1.0) <= tol:
        return 0.5 * s
    return (s - s.conjugate() * p) / (1.0 - ap * ap)


def tau_apply(m: MobiusParams, q, tol: float = DEFAULT_TOL) -> SymPoint:
    """Symmetrised action ``(u(l1) + u(l2), u(l1) u(l2))`` of a disc automorphism ``u``.

    Evaluated through the symmetric functions directly, so no roots are taken.
    """
    q = as_sympoint(q)
    if not in_Gamma(q, tol):
        raise ValueError(f"{tuple(q)} is not in Gamma")
    s, p = q
    eta, al = m.eta, m.alpha
    alc = al.conjugate()
    den = 1.0 - alc * s + alc * alc * p
    ssum = eta * (-2.0 * al + (1.0 + abs(al) ** 2) * s - 2.0 * alc * p) / den
    prod = eta * eta * (al * al - al * s + p) / den
    return SymPoint(ssum, prod)


def from_roots(l1, l2) -> SymPoint:
    l1 = complex(l1)
    l2 = complex(l2)
    return SymPoint(l1 + l2, l1 * l2)
