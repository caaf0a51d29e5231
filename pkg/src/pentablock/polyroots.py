"""Univariate complex polynomials: trimming, root clusters and multiplicities.

Polynomials are coefficient arrays from low to high degree, as in
``numpy.polynomial.polynomial``.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np
from numpy.polynomial import polynomial as npoly

CLUSTER_RADIUS = 1e-7
CIRCLE_TOL = 1e-9


def as_poly(c) -> np.ndarray:
    """Complex coefficient array with trailing zeros removed (``[0]`` for zero)."""
    c = np.atleast_1d(np.asarray(c, dtype=complex))
    if c.ndim != 1:
        raise ValueError("polynomial coefficients must be one-dimensional")
    if not np.all(np.isfinite(c)):
        raise ValueError("polynomial has non-finite coefficients")
    nz = np.flatnonzero(c)
    if nz.size == 0:
        return np.zeros(1, dtype=complex)
    return c[: nz[-1] + 1].copy()


def is_zero(c) -> bool:
    c = as_poly(c)
    return c.size == 1 and c[0] == 0


def degree(c) -> int:
    """Degree, with ``-1`` for the zero polynomial."""
    c = as_poly(c)
    return -1 if is_zero(c) else c.size - 1


def trim_small(c, rtol: float = 1e-12) -> np.ndarray:
    """Drop trailing coefficients below ``rtol`` times the largest one."""
    c = as_poly(c)
    scale = np.max(np.abs(c))
    if scale == 0:
        return c
    keep = np.flatnonzero(np.abs(c) > rtol * scale)
    return c[: keep[-1] + 1].copy()


@dataclass(frozen=True)
class RootCluster:
    center: complex
    multiplicity: int

    @property
    def in_disc(self) -> bool:
        return abs(self.center) < 1.0 - CIRCLE_TOL

    @property
    def near_circle(self) -> bool:
        return abs(abs(self.center) - 1.0) <= CIRCLE_TOL


def _merge_radius(m: int, radius: float) -> float:
    # a root of multiplicity m splits under rounding roughly like eps**(1/m)
    return max(radius, 4.0 * 1e-14 ** (1.0 / m))


def root_clusters(c, radius: float = CLUSTER_RADIUS) -> list[RootCluster]:
    """Roots grouped into clusters; multiplicity is the cluster size.

    Starting from the leftmost unassigned root, the largest group of ``m``
    nearest roots lying within the spread expected for an ``m``-fold root
    (never less than ``radius``) becomes one cluster.  The zero polynomial has
    no clusters.
    """
    c = as_poly(c)
    if c.size <= 1:
        return []
    roots = sorted(npoly.polyroots(c), key=lambda z: (z.real, z.imag))
    groups: list[list[complex]] = []
    while roots:
        seed = roots[0]
        group = [seed]
        # largest m such that m roots sit within the spread of an m-fold root
        for m in range(len(roots), 1, -1):
            near = sorted(roots, key=lambda z: abs(z - seed))[:m]
            if abs(near[-1] - seed) < 2.0 * _merge_radius(m, radius):
                group = near
                break
        for z in group:
            roots.remove(z)
        groups.append(group)
    out = [RootCluster(complex(np.mean(g)), len(g)) for g in groups]
    return sorted(out, key=lambda rc: (rc.center.real, rc.center.imag))


def multiplicity_at(c, alpha: complex, clusters: list[RootCluster] | None = None) -> int | float:
    """Order of vanishing of ``c`` at ``alpha``; ``inf`` for the zero polynomial."""
    if is_zero(c):
        return float("inf")
    clusters = root_clusters(c) if clusters is None else clusters
    for rc in clusters:
        if abs(rc.center - alpha) < _merge_radius(rc.multiplicity + 1, CLUSTER_RADIUS):
            return rc.multiplicity
    return 0


def taylor_at(c, alpha: complex, n: int) -> np.ndarray:
    """First ``n`` Taylor coefficients of ``c`` about ``alpha``."""
    c = as_poly(c)
    out = np.zeros(n, dtype=complex)
    d = c.copy()
    fact = 1.0
    for k in range(n):
        out[k] = npoly.polyval(alpha, d) / fact
        d = npoly.polyder(d) if d.size > 1 else np.zeros(1, dtype=complex)
        fact *= k + 1
    return out


def series_sqrt(c: np.ndarray, n: int, sign: int = 1) -> np.ndarray:
    """First ``n`` coefficients of a square root of a power series with ``c[0] != 0``."""
    c = np.asarray(c, dtype=complex)
    out = np.zeros(n, dtype=complex)
    if n == 0:
        return out
    out[0] = sign * np.sqrt(c[0] + 0.0)  # drop a negative zero imaginary part
    for k in range(1, n):
        ck = c[k] if k < c.size else 0.0
        acc = ck - np.dot(out[1:k], out[k - 1:0:-1])
        out[k] = acc / (2.0 * out[0])
    return out


def hermite_interpolate(nodes: list[complex], data: list[np.ndarray]) -> np.ndarray:
    """Polynomial of degree ``< sum(len(d))`` with Taylor data ``d`` at each node.

    Solves the confluent Vandermonde system in the monomial basis.
    """
    total = sum(len(d) for d in data)
    if total == 0:
        return np.zeros(1, dtype=complex)
    M = np.zeros((total, total), dtype=complex)
    rhs = np.zeros(total, dtype=complex)
    row = 0
    powers = np.arange(total)
    for alpha, d in zip(nodes, data):
        for k in range(len(d)):
            # k-th Taylor coefficient of lambda**j at alpha is C(j, k) alpha**(j-k)
            coef = np.array([comb(j, k) * alpha ** (j - k) if j >= k else 0.0 for j in powers])
            M[row] = coef
            rhs[row] = d[k]
            row += 1
    return np.linalg.solve(M, rhs)


def sqrt_at_infinity(c) -> np.ndarray | None:
    """Polynomial part ``P`` of the square root of ``c`` at infinity.

    ``deg(c - P**2) < deg(c) / 2``.  Returns ``None`` for odd degree.  The
    leading coefficient of ``P`` is the principal square root.
    """
    c = as_poly(c)
    d = degree(c)
    if d < 0 or d % 2:
        return None
    h = d // 2
    rev = c[::-1]
    root = series_sqrt(rev, h + 1)
    return root[::-1]
