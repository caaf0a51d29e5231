"""The structured singular value for ``E = span{I, [[0, 1], [0, 0]]}``.

``1 / mu_E(A)`` is the smallest norm of ``X = [[z, w], [0, z]]`` making
``1 - A X`` singular.  ``mu_E(A) < 1`` exactly when ``pi(A)`` lies in the
pentablock, which gives the value by bisection on the scale of ``A``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import optimize

from .domain import in_closed_pentablock, in_pentablock
from .matrix_core import _entries, as_matrix, operator_norm, pi_map, spectral_radius
from .symmetrised_bidisc import DEFAULT_TOL


@dataclass(frozen=True)
class EPerturbation:
    """The matrix ``[[z, w], [0, z]]``."""

    z: complex
    w: complex

    def as_matrix(self) -> np.ndarray:
        return np.array([[self.z, self.w], [0.0, self.z]], dtype=complex)

    def norm(self) -> float:
        return e_norm(self.z, self.w)

    def is_contraction(self, tol: float = 0.0) -> bool:
        return abs(self.w) <= 1.0 - abs(self.z) ** 2 + tol


def e_norm(z, w):
    """Operator norm of ``[[z, w], [0, z]]``: ``(|w| + sqrt(|w|**2 + 4|z|**2)) / 2``."""
    aw = np.abs(w)
    return 0.5 * (aw + np.sqrt(aw * aw + 4.0 * np.abs(z) ** 2))


def mu_lt_one(A) -> bool:
    return in_pentablock(pi_map(as_matrix(A)), criterion="sup_form")


def mu_le_one(A, tol: float = DEFAULT_TOL) -> bool:
    return in_closed_pentablock(pi_map(as_matrix(A)), tol)


def mu_value(A, rtol: float = 1e-13) -> float:
    """``mu_E(A)`` by bisection between the spectral radius and the norm.

    Returns the upper end of the final bracket, so ``A / mu_value(A)`` is
    never strictly inside.  For ``a21 = 0`` the value is the spectral radius.
    """
    A = as_matrix(A)
    rho = spectral_radius(A)
    if _entries(A)[2] == 0:
        return rho
    lo = rho
    hi = operator_norm(A) * (1.0 + 1e-12)
    width = rtol * max(1.0, hi)
    while hi - lo > width:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if mu_lt_one(A / mid):
            hi = mid
        else:
            lo = mid
    return hi


def _objective(z: np.ndarray, s: complex, p: complex, a21: complex) -> np.ndarray:
    w = (1.0 - s * z + p * z * z) / a21
    return e_norm(z, w)


def mu_oracle(A, grid: float = 1e-2, starts: int = 5, return_minimizer: bool = False):
    """``mu_E(A)`` straight from the definition.

    For ``a21 != 0`` every singular ``1 - A X`` has ``w = (1 - s z + p z**2) / a21``,
    so ``||X||`` is minimised over ``z`` alone.  Since ``||X|| >= |z|`` and
    ``z = 0`` already gives ``1 / |a21|``, the minimiser lies in the disc of
    radius ``R = 1 / |a21|`` (also ``<= 1 / rho`` when ``rho > 0``).  That disc
    is scanned with pitch ``grid * R`` and the best few grid points are refined
    by Nelder-Mead.  For ``a21 = 0`` the constraint forces ``z = 1 / lambda``,
    ``w`` is free and ``w = 0`` is optimal.

    With ``return_minimizer`` the optimal :class:`EPerturbation` is returned too
    (``None`` when no ``X`` makes ``1 - A X`` singular).
    """
    A = as_matrix(A)
    _, _, a21, _ = _entries(A)
    pt = pi_map(A)
    s, p = pt.s, pt.p
    if a21 == 0:
        rho = spectral_radius(A)
        if rho == 0:
            return (0.0, None) if return_minimizer else 0.0
        lam = max(np.linalg.eigvals(A), key=abs)
        out = (rho, EPerturbation(1.0 / lam, 0j))
        return out if return_minimizer else rho

    rho = spectral_radius(A)
    R = 1.0 / abs(a21)
    if rho > 0:
        R = min(R, 1.0 / rho)
    n = max(2, int(math.ceil(2.0 / grid)))
    xs = np.linspace(-R, R, n + 1)
    Z = xs[None, :] + 1j * xs[:, None]
    Z = Z[np.abs(Z) <= R * (1.0 + 1e-12)]
    vals = _objective(Z, s, p, a21)
    order = np.argsort(vals, kind="stable")[:starts]

    def f(v):
        return float(_objective(complex(v[0], v[1]), s, p, a21))

    best_val, best_z = float(vals[order[0]]), complex(Z[order[0]])
    h = grid * R
    for idx in order:
        z0 = complex(Z[idx])
        x0 = np.array([z0.real, z0.imag])
        res = optimize.minimize(
            f, x0, method="Nelder-Mead",
            options={"initial_simplex": np.array([x0, x0 + [h, 0.0], x0 + [0.0, h]]),
                     "xatol": 1e-12, "fatol": 1e-15, "maxiter": 4000},
        )
        if res.fun < best_val:
            best_val, best_z = float(res.fun), complex(res.x[0], res.x[1])
    value = 1.0 / best_val
    if not return_minimizer:
        return value
    w = (1.0 - s * best_z + p * best_z * best_z) / a21
    return value, EPerturbation(best_z, w)
