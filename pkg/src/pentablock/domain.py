"""Membership engine for the pentablock and its closure.

The open pentablock fibres over G: above ``(s, p)`` sits the open disc of
``a``-values of radius ``1 / kappa(s, p)``, where

    kappa(s, p) = sup_{|z| < 1} (1 - |z|**2) / |1 - s z + p z**2|.

Three closed forms of that radius are provided (through ``beta``, through the
roots, through ``kappa``) together with a brute-force grid oracle for ``kappa``.
"""
from __future__ import annotations

import cmath
import functools
import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as npoly
from scipy import optimize

from ._kernels import angle_tables, polar_grid_max
from .matrix_core import PentaPoint, as_point
from .symmetrised_bidisc import (
    DEFAULT_TOL,
    SymPoint,
    as_sympoint,
    beta_of,
    in_G,
    in_Gamma,
    roots_of,
)

CRITERIA = ("beta_form", "root_form", "sup_form")


def psi(z, x) -> complex:
    """``Psi_z(a, s, p) = a (1 - |z|**2) / (1 - s z + p z**2)``."""
    z = complex(z)
    a, s, p = as_point(x)
    den = 1.0 - s * z + p * z * z
    if den == 0:
        raise ZeroDivisionError(f"1 - s z + p z^2 vanishes at z = {z!r}")
    return a * (1.0 - abs(z) ** 2) / den


def _require_G(q) -> SymPoint:
    q = as_sympoint(q)
    if not in_G(q):
        raise ValueError(f"{tuple(q)} is not in the open symmetrised bidisc")
    return q


def _beta_radius(q, beta: complex) -> float:
    s = q.s
    return abs(1.0 - 0.5 * s * beta.conjugate() / (1.0 + math.sqrt(max(0.0, 1.0 - abs(beta) ** 2))))


def beta_radius(q, tol: float = DEFAULT_TOL) -> float:
    """``|1 - (s conj(b) / 2) / (1 + sqrt(1 - |b|**2))|`` for ``(s, p)`` in Gamma."""
    q = as_sympoint(q)
    return _beta_radius(q, beta_of(q, tol))


def kappa_closed(q) -> float:
    q = _require_G(q)
    return 1.0 / _beta_radius(q, beta_of(q))


def _maximizer_from_beta(beta: complex) -> complex:
    return beta.conjugate() / (1.0 + math.sqrt(max(0.0, 1.0 - abs(beta) ** 2)))


def kappa_maximizer(q) -> complex:
    """The unique point of the disc where the supremum defining kappa is attained."""
    q = _require_G(q)
    return _maximizer_from_beta(beta_of(q))


def fiber_radius_from_roots(l1, l2) -> float:
    """``|1 - conj(l2) l1| / 2 + sqrt((1 - |l1|**2)(1 - |l2|**2)) / 2``."""
    l1 = complex(l1)
    l2 = complex(l2)
    lam = math.sqrt(max(0.0, 1.0 - abs(l1) ** 2) * max(0.0, 1.0 - abs(l2) ** 2))
    return 0.5 * abs(1.0 - l2.conjugate() * l1) + 0.5 * lam


def fiber_radius(q, tol: float = DEFAULT_TOL) -> float:
    """Radius of the fibre over ``(s, p)`` in Gamma.

    Same quantity as :func:`fiber_radius_from_roots`, rewritten in the symmetric
    functions ``|l1|**2 + |l2|**2 = (|s|**2 + |s**2 - 4p|) / 2`` and
    ``2 Re(conj(l2) l1) = (|s|**2 - |s**2 - 4p|) / 2`` so that it stays accurate
    near double roots, where the roots themselves are ill-conditioned.
    """
    q = as_sympoint(q)
    if not in_Gamma(q, tol):
        raise ValueError(f"{tuple(q)} is not in Gamma")
    s, p = q
    d = abs(s * s - 4.0 * p)
    base = 1.0 + abs(p) ** 2 - 0.5 * abs(s) ** 2
    return 0.5 * math.sqrt(max(0.0, base + 0.5 * d)) + 0.5 * math.sqrt(max(0.0, base - 0.5 * d))


def in_pentablock(x, criterion: str = "root_form") -> bool:
    a, s, p = as_point(x)
    q = SymPoint(s, p)
    if criterion == "beta_form":
        return in_G(q) and abs(a) < _beta_radius(q, beta_of(q))
    if criterion == "root_form":
        return in_G(q) and abs(a) < fiber_radius_from_roots(*roots_of(q))
    if criterion == "sup_form":
        return in_G(q) and abs(a) * kappa_closed(q) < 1.0
    raise ValueError(f"unknown criterion {criterion!r}; expected one of {CRITERIA}")


def in_closed_pentablock(x, tol: float = DEFAULT_TOL) -> bool:
    a, s, p = as_point(x)
    q = SymPoint(s, p)
    return in_Gamma(q, tol) and abs(a) <= fiber_radius(q, tol) + tol


# -- brute-force oracle ------------------------------------------------------


@functools.lru_cache(maxsize=8)
def _tables(step: float):
    return angle_tables(step)


def _kappa_ratio(z: complex, s: complex, p: complex) -> float:
    r2 = abs(z) ** 2
    if r2 >= 1.0:
        return 0.0
    return (1.0 - r2) / abs(1.0 - s * z + p * z * z)


def _neg_log_ratio_and_grad(xy, s, p):
    z = complex(xy[0], xy[1])
    r2 = abs(z) ** 2
    if r2 >= 1.0:
        return np.inf, np.zeros(2)
    h = 1.0 - s * z + p * z * z
    dh = -s + 2.0 * p * z
    w = dh / h
    val = -math.log1p(-r2) + math.log(abs(h))
    grad = np.array([2.0 * xy[0] / (1.0 - r2) + w.real, 2.0 * xy[1] / (1.0 - r2) - w.imag])
    return val, grad


def kappa_oracle(q, step: float = 1e-3, refine: bool = True, return_argmax: bool = False):
    """Grid lower bound on ``kappa(s, p)`` with local refinement.

    The polar grid has radii ``0, step, 2 step, ...`` below 1 and angular pitch
    at most ``step``.  The best grid point seeds a Nelder-Mead climb that is
    polished by BFGS on ``-log`` of the ratio using its analytic gradient.
    """
    q = _require_G(q)
    if not 0.0 < step <= 1e-2:
        raise ValueError("step must lie in (0, 1e-2]")
    s, p = q
    theta, ct, st, c2, s2 = _tables(float(step))
    best, i, j = polar_grid_max(s.real, s.imag, p.real, p.imag, float(step), ct, st, c2, s2)
    z_best = i * step * cmath.exp(1j * theta[j])
    if refine:
        x0 = np.array([z_best.real, z_best.imag])
        simplex = np.array([x0, x0 + [step, 0.0], x0 + [0.0, step]])
        nm = optimize.minimize(
            lambda v: -_kappa_ratio(complex(v[0], v[1]), s, p),
            x0,
            method="Nelder-Mead",
            options={"initial_simplex": simplex, "xatol": 1e-12, "fatol": 1e-15, "maxiter": 4000},
        )
        cand = [complex(nm.x[0], nm.x[1])]
        if abs(cand[0]) < 1.0:
            bf = optimize.minimize(
                _neg_log_ratio_and_grad, nm.x, args=(s, p), jac=True, method="BFGS",
                options={"gtol": 1e-13, "maxiter": 200},
            )
            cand.append(complex(bf.x[0], bf.x[1]))
        for z in cand:
            v = _kappa_ratio(z, s, p)
            if v >= best:
                best, z_best = v, z
    if return_argmax:
        return best, z_best
    return best


# -- separating polynomial ---------------------------------------------------


@dataclass(frozen=True)
class SeparatingPolynomial:
    """``f(a, s, p) = a * sum_{j,k} coeffs[j, k] s**j p**k``.

    ``degree`` is the truncation order ``N`` of the geometric series and
    ``center`` the point ``z0`` whose linear fractional function is
    approximated; the trivial separator ``f = a`` has ``center = None``.
    """

    coeffs: np.ndarray
    degree: int
    center: complex | None
    eps: float

    def __call__(self, a, s, p):
        return np.asarray(a) * npoly.polyval2d(s, p, self.coeffs)

    def terms(self) -> dict[tuple[int, int, int], complex]:
        """Nonzero monomials as ``{(deg_a, deg_s, deg_p): coefficient}``."""
        out = {}
        for (j, k), c in np.ndenumerate(self.coeffs):
            if c != 0:
                out[(1, j, k)] = complex(c)
        return out


def _power_sums(n: int) -> list[np.ndarray]:
    """``u1**m + u2**m`` as arrays indexed ``[deg_s, deg_p]`` (Newton's identities)."""
    sums = [np.zeros((n + 1, n + 1), dtype=complex) for _ in range(n + 1)]
    sums[0][0, 0] = 2.0
    if n >= 1:
        sums[1][1, 0] = 1.0
    for m in range(2, n + 1):
        sums[m][1:, :] += sums[m - 1][:-1, :]
        sums[m][:, 1:] -= sums[m - 2][:, :-1]
    return sums


def symmetrized_geometric(z0: complex, n: int) -> np.ndarray:
    """Coefficients of ``sum_{j,k<=n} z0**(j+k) u1**j u2**k`` in ``s = u1+u2, p = u1 u2``.

    Diagonal terms give ``p**j``; each off-diagonal pair ``j > k`` gives
    ``p**k (u1**(j-k) + u2**(j-k))``.
    """
    coeffs = np.zeros((n + 1, n + 1), dtype=complex)
    sums = _power_sums(n)
    for j in range(n + 1):
        coeffs[0, j] += z0 ** (2 * j)
    for m in range(1, n + 1):
        # sum_{k=0}^{n-m} z0**(2k+m) p**k times P_m(s, p)
        kmax = n - m
        weights = z0 ** (2 * np.arange(kmax + 1) + m)
        pm = sums[m]
        for k in range(kmax + 1):
            coeffs[:, k:] += weights[k] * pm[:, : n + 1 - k]
    return coeffs


def truncation_degree(z0: complex, eps: float) -> int:
    """Smallest ``N >= 1`` with ``4 |z0|**(N+1) / (1 - |z0|) < eps``."""
    r = abs(z0)
    if r == 0.0:
        return 1
    bound = eps * (1.0 - r) / 4.0
    n = max(1, math.ceil(math.log(bound) / math.log(r)) - 1)
    while 4.0 * r ** (n + 1) / (1.0 - r) >= eps:
        n += 1
    while n > 1 and 4.0 * r ** n / (1.0 - r) < eps:
        n -= 1
    return n


def _separating_center(x: PentaPoint, tol: float) -> tuple[complex, float]:
    """Centre ``z0`` in the disc with ``|Psi_z0(x)| > 1`` and the value ``|Psi_z0(x)|``.

    Uses the kappa maximiser when it lies inside the disc.  When ``|beta| = 1``
    the maximiser sits on the circle; then the centre is pulled radially inward
    and the candidate with the smallest truncation degree is kept.
    """
    q = SymPoint(x.s, x.p)
    z_star = _maximizer_from_beta(beta_of(q, tol))

    def value(z):
        try:
            return abs(psi(z, x))
        except ZeroDivisionError:
            return 0.0

    if abs(z_star) < 1.0 - 1e-12:
        v = value(z_star)
        if v > 1.0:
            return z_star, v
    best = None
    for k in range(1, 53):
        z = (1.0 - 2.0 ** -k) * z_star
        v = value(z)
        if v > 1.0:
            n = truncation_degree(z, (v - 1.0) / 4.0)
            if best is None or n < best[0]:
                best = (n, z, v)
    if best is None:
        raise ValueError(f"no separating centre found for {tuple(x)}")
    return best[1], best[2]


def separating_polynomial(x, eps: float | None = None, tol: float = DEFAULT_TOL) -> SeparatingPolynomial:
    """Polynomial ``f`` with ``|f| <= 1`` on the closed pentablock and ``|f(x)| > 1``.

    Requires ``x`` outside the closed pentablock with ``(x2, x3)`` in Gamma.  For
    ``|x1| > 1`` the coordinate function ``a`` already separates.  Otherwise the
    linear fractional ``Psi_z0`` is replaced by the truncated product of
    geometric series in the roots, rewritten in ``(s, p)``, and scaled by
    ``1 / (1 + eps)``.  The default ``eps`` is a quarter of ``|Psi_z0(x)| - 1``.
    """
    x = as_point(x)
    q = SymPoint(x.s, x.p)
    if not in_Gamma(q, tol):
        raise ValueError("(x2, x3) must lie in Gamma; separation outside Gamma is not provided")
    if in_closed_pentablock(x, tol):
        raise ValueError(f"{tuple(x)} lies in the closed pentablock")
    if abs(x.a) > 1.0:
        return SeparatingPolynomial(np.ones((1, 1), dtype=complex), 0, None, 0.0)
    z0, v = _separating_center(x, tol)
    margin = (v - 1.0) / 3.0
    if eps is None:
        eps = 0.75 * margin
    elif not 0.0 < eps < margin:
        raise ValueError(f"eps must lie in (0, {margin!r}) for this point")
    n = truncation_degree(z0, eps)
    coeffs = (1.0 - abs(z0) ** 2) * symmetrized_geometric(z0, n) / (1.0 + eps)
    return SeparatingPolynomial(coeffs, n, z0, float(eps))
