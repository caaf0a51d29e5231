"""Matrices over pentablock points, and analytic lifting of polynomial maps.

Pointwise: every ``x`` in the pentablock is ``pi(A)`` for an explicit strict
contraction ``A``, closure points come from contractions, and points of ``K1``
from unitaries.  For polynomial maps ``h = (a, s, p)`` of the disc, a
holomorphic ``H = [[s/2 - eta, g], [a, s/2 + eta]]`` with ``pi o H = h`` exists
iff ``eta**2 = q - g a`` is solvable, ``q = s**2 / 4 - p``.
"""
from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial import polynomial as npoly

from .domain import in_closed_pentablock, in_pentablock
from .matrix_core import PentaPoint, as_point, operator_norm
from .polyroots import (
    as_poly,
    degree,
    hermite_interpolate,
    is_zero,
    multiplicity_at,
    root_clusters,
    series_sqrt,
    sqrt_at_infinity,
    taylor_at,
    trim_small,
)
from .symmetrised_bidisc import BGAMMA_TOL, DEFAULT_TOL, in_bGamma, roots_of

# -- pointwise liftings -----------------------------------------------------


def fiber_constants(s, p) -> tuple[float, float]:
    """``c_-, c_+ = |1 - conj(l2) l1| / 2 -+ sqrt((1-|l1|^2)(1-|l2|^2)) / 2``."""
    l1, l2 = roots_of((s, p))
    u = 0.5 * abs(1.0 - l2.conjugate() * l1)
    v = 0.5 * math.sqrt(max(0.0, 1.0 - abs(l1) ** 2) * max(0.0, 1.0 - abs(l2) ** 2))
    return u - v, u + v


def _half_gap(s: complex, p: complex) -> complex:
    """``w`` with ``w**2 = s**2 / 4 - p`` (principal root)."""
    return cmath.sqrt(0.25 * s * s - p)


def lifting_branch(x) -> str:
    """``"off_diagonal"`` when ``|a| > |w|``, else ``"diagonal"``."""
    a, s, p = as_point(x)
    return "off_diagonal" if abs(a) > abs(_half_gap(s, p)) else "diagonal"


def _off_diagonal(a, s, w) -> np.ndarray:
    return np.array([[0.5 * s, w * w / a], [a, 0.5 * s]], dtype=complex)


def _diagonal(a, s, w) -> np.ndarray:
    aw = abs(w)
    zeta = w / aw if aw > 0 else 1.0 + 0j
    r = math.sqrt(max(0.0, aw * aw - abs(a) ** 2))
    return np.array(
        [[0.5 * s + r * zeta, zeta * zeta * a.conjugate()], [a, 0.5 * s - r * zeta]],
        dtype=complex,
    )


def construct_matrix(x) -> np.ndarray:
    """A strict contraction ``A`` with ``pi(A) = x``, for ``x`` in the pentablock."""
    x = as_point(x)
    if not in_pentablock(x):
        raise ValueError(f"{tuple(x)} is not in the pentablock")
    a, s, p = x
    w = _half_gap(s, p)
    if abs(a) > abs(w):
        return _off_diagonal(a, s, w)
    return _diagonal(a, s, w)


def _bgamma_roots(s: complex, p: complex) -> tuple[complex, complex]:
    """Roots of ``z**2 - s z + p`` for ``(s, p)`` in bGamma, placed exactly on the circle.

    With ``rho**2 = p`` the roots are ``rho (x +- i sqrt(1 - x**2))`` where
    ``x = Re(s / (2 rho))``.
    """
    rho = cmath.sqrt(p / abs(p))
    xr = min(1.0, max(-1.0, (s / (2.0 * rho)).real))
    y = math.sqrt(1.0 - xr * xr)
    return rho * complex(xr, y), rho * complex(xr, -y)


def construct_unitary(x, tol: float = BGAMMA_TOL) -> np.ndarray:
    """A unitary ``U`` with ``pi(U) = x`` for ``x`` in ``K1``.

    ``U = V* diag(l1, l2) V`` with ``V`` a rotation by ``theta`` twisted by a
    phase ``eta``, where ``sin(2 theta) = |a / w|`` and ``eta`` is chosen so
    the ``(2, 1)`` entry comes out as ``a``.
    """
    a, s, p = as_point(x)
    if not in_bGamma((s, p), tol) or abs(a) > math.sqrt(max(0.0, 1.0 - 0.25 * abs(s) ** 2)) + tol:
        raise ValueError(f"{(a, s, p)} is not in K1")
    l1, l2 = _bgamma_roots(s, p)
    w = 0.5 * (l1 - l2)
    if abs(w) <= tol:
        return np.diag([l1, l2]).astype(complex)
    ratio = a / w
    theta = 0.5 * math.asin(min(1.0, abs(ratio)))
    eta = (ratio / abs(ratio)).conjugate() if ratio != 0 else 1.0 + 0j
    c, sn = math.cos(theta), math.sin(theta)
    d = l1 - l2
    return np.array(
        [
            [l1 * c * c + l2 * sn * sn, d * eta * sn * c],
            [d * eta.conjugate() * sn * c, l1 * sn * sn + l2 * c * c],
        ],
        dtype=complex,
    )


def construct_matrix_closed(x, tol: float = DEFAULT_TOL) -> np.ndarray:
    """A contraction ``A`` with ``pi(A) = x`` for ``x`` in the closed pentablock."""
    x = as_point(x)
    if not in_closed_pentablock(x, tol):
        raise ValueError(f"{tuple(x)} is not in the closed pentablock")
    a, s, p = x
    if in_bGamma((s, p)):
        return construct_unitary(x)
    if in_pentablock(x):
        return construct_matrix(x)
    # same branch rule as the open case; the norm bound holds by continuity
    w = _half_gap(s, p)
    A = _off_diagonal(a, s, w) if abs(a) > abs(w) else _diagonal(a, s, w)
    if operator_norm(A) > 1.0 + 1e-9:
        raise ArithmeticError(f"no contraction found over {tuple(x)} (norm {operator_norm(A)!r})")
    return A


# -- polynomial maps --------------------------------------------------------


@dataclass(frozen=True)
class PolyTriple:
    """Polynomial map ``lambda -> (a, s, p)``; coefficients low to high."""

    a: np.ndarray
    s: np.ndarray
    p: np.ndarray

    def __post_init__(self):
        for name in ("a", "s", "p"):
            object.__setattr__(self, name, as_poly(getattr(self, name)))

    def q(self) -> np.ndarray:
        return as_poly(npoly.polysub(0.25 * npoly.polymul(self.s, self.s), self.p))

    def __call__(self, lam) -> PentaPoint:
        return PentaPoint(*(complex(npoly.polyval(lam, c)) for c in (self.a, self.s, self.p)))


@dataclass(frozen=True)
class Obstruction:
    alpha: complex
    mult_q: int
    mult_a: int | float


@dataclass(frozen=True)
class LiftReport:
    exists: bool
    offending: list[Obstruction] = field(default_factory=list)
    ambiguous: list[Obstruction] = field(default_factory=list)
    note: str = ""

    def __bool__(self) -> bool:
        return self.exists


def _as_triple(h) -> PolyTriple:
    return h if isinstance(h, PolyTriple) else PolyTriple(*h)


def analytic_lift_exists(h) -> LiftReport:
    """Decide whether ``h`` lifts to a holomorphic ``2x2`` matrix function on the disc.

    The obstruction is a point of the open disc that is a zero of ``q`` of odd
    multiplicity ``n`` and a zero of ``a`` of multiplicity greater than ``n``.
    Odd zeros of ``q`` within ``1e-9`` of the circle are reported as ambiguous
    and do not affect the verdict.
    """
    h = _as_triple(h)
    q = h.q()
    if is_zero(q):
        return LiftReport(True, note="q vanishes identically; eta = 0 works for any g")
    a_clusters = None if is_zero(h.a) else root_clusters(h.a)
    offending, ambiguous = [], []
    for rc in root_clusters(q):
        if rc.multiplicity % 2 == 0:
            continue
        ma = float("inf") if a_clusters is None else multiplicity_at(h.a, rc.center, a_clusters)
        ob = Obstruction(rc.center, rc.multiplicity, ma)
        if rc.near_circle:
            ambiguous.append(ob)
        elif rc.in_disc and ma > rc.multiplicity:
            offending.append(ob)
    note = "ambiguous zeros of q near the unit circle" if ambiguous else ""
    return LiftReport(not offending, offending, ambiguous, note)


@dataclass(frozen=True)
class PolynomialLift:
    """``H = [[s/2 - eta, g], [a, s/2 + eta]]``, or ``status="non-polynomial"``."""

    status: str
    h: PolyTriple
    eta: np.ndarray | None = None
    g: np.ndarray | None = None
    note: str = ""

    @property
    def found(self) -> bool:
        return self.status == "polynomial"

    def entries(self) -> list[list[np.ndarray]]:
        if not self.found:
            raise ValueError("no polynomial lift available")
        half_s = 0.5 * self.h.s
        return [
            [as_poly(npoly.polysub(half_s, self.eta)), as_poly(self.g)],
            [self.h.a, as_poly(npoly.polyadd(half_s, self.eta))],
        ]

    def __call__(self, lam) -> np.ndarray:
        return np.array(
            [[npoly.polyval(lam, c) for c in row] for row in self.entries()], dtype=complex
        )


def _scale(*polys) -> float:
    return max(1.0, *(float(np.max(np.abs(c))) for c in polys))


def lift_residual(h: PolyTriple, eta, g) -> float:
    """Max coefficient of ``det H - p`` for the assembled ``H``."""
    res = npoly.polysub(h.q(), npoly.polyadd(npoly.polymul(eta, eta), npoly.polymul(g, h.a)))
    return float(np.max(np.abs(res)))


def _local_data(q, alpha: complex, m: int, q_clusters) -> list[np.ndarray] | None:
    """Taylor data for ``eta`` at a root ``alpha`` of ``a`` of multiplicity ``m``.

    Returns the admissible sign choices, or ``None`` if ``eta**2 = q`` modulo
    ``(lambda - alpha)**m`` has no solution.
    """
    n = multiplicity_at(q, alpha, q_clusters)
    if n >= m:
        return [np.zeros((m + 1) // 2, dtype=complex)]
    if n % 2:
        return None
    r = taylor_at(q, alpha, m)[n:]
    out = []
    for sign in (1, -1):
        u = series_sqrt(r, m - n, sign)
        out.append(np.concatenate([np.zeros(n // 2, dtype=complex), u]))
    return out


def _candidate_etas(h: PolyTriple, q: np.ndarray, max_patterns: int = 1024):
    clusters = root_clusters(h.a)
    q_clusters = root_clusters(q)
    options = []
    for rc in clusters:
        data = _local_data(q, rc.center, rc.multiplicity, q_clusters)
        if data is None:
            return None
        options.append((rc.center, data))
    nodes = [alpha for alpha, _ in options]
    modulus = np.ones(1, dtype=complex)
    for alpha, data in options:
        for _ in range(len(data[0])):
            modulus = npoly.polymul(modulus, [-alpha, 1.0])
    at_infinity = sqrt_at_infinity(q)
    out = []
    for pattern in itertools.islice(itertools.product(*(d for _, d in options)), max_patterns):
        eta0 = hermite_interpolate(nodes, list(pattern)) if nodes else np.zeros(1, dtype=complex)
        out.append(eta0)
        if at_infinity is not None:
            t, _ = npoly.polydiv(npoly.polysub(at_infinity, eta0), modulus)
            out.append(npoly.polyadd(eta0, npoly.polymul(modulus, t)))
    return out


def polynomial_lift(h, tol: float = 1e-10) -> PolynomialLift:
    """Polynomial ``eta, g`` with ``eta**2 + g a = q``, of minimal ``deg g``.

    Candidates for ``eta`` solve ``eta**2 = q`` modulo ``a`` root by root
    (square roots of Taylor series, glued by Hermite interpolation, over all
    sign choices), optionally corrected towards the square root of ``q`` at
    infinity; then ``g = (q - eta**2) / a``.  Ties in ``deg g`` are broken by
    the size of ``g`` and then by enumeration order.
    """
    h = _as_triple(h)
    report = analytic_lift_exists(h)
    if not report.exists:
        raise ValueError(f"no analytic lift exists: obstructions {report.offending}")
    q = h.q()
    zero = np.zeros(1, dtype=complex)
    if is_zero(q):
        return PolynomialLift("polynomial", h, zero, zero)
    root = sqrt_at_infinity(q)
    if root is not None:
        root = trim_small(root)
        if lift_residual(h, root, zero) <= tol * _scale(q):
            return PolynomialLift("polynomial", h, root, zero)
    if is_zero(h.a):
        return PolynomialLift("non-polynomial", h, note="a = 0 and q is not a square of a polynomial")
    etas = _candidate_etas(h, q)
    if etas is None:
        return PolynomialLift(
            "non-polynomial", h,
            note="eta**2 = q mod a has no polynomial solution; the obstruction lies outside the disc",
        )
    best = None
    for k, eta in enumerate(etas):
        eta = trim_small(eta, 1e-13)
        g, _ = npoly.polydiv(npoly.polysub(q, npoly.polymul(eta, eta)), h.a)
        g = trim_small(g, 1e-13) if np.max(np.abs(g)) > tol else zero
        if lift_residual(h, eta, g) > tol * _scale(q, eta):
            continue
        key = (degree(g), float(np.linalg.norm(g)), k)
        if best is None or key < best[0]:
            best = (key, eta, g)
    if best is None:
        return PolynomialLift("non-polynomial", h, note="no candidate passed the determinant check")
    return PolynomialLift("polynomial", h, as_poly(best[1]), as_poly(best[2]))


def schur_lift_monomial(a: complex, n: int, m: int):
    """Schur lift of ``(a lambda**m, 0, lambda**n)`` for ``0 < |a| <= 1``.

    Exists iff ``n`` is even and ``m <= n``; then
    ``H = [[i c lambda**(n/2), -conj(a) lambda**(n-m)], [a lambda**m, -i c lambda**(n/2)]]``
    with ``c = sqrt(1 - |a|**2)``.  Returns ``None`` when no Schur lift exists.
    """
    a = complex(a)
    if not 0.0 < abs(a) <= 1.0 or n < 0 or m < 0:
        raise ValueError("need 0 < |a| <= 1 and nonnegative exponents")
    if n % 2 or m > n:
        return None
    c = math.sqrt(max(0.0, 1.0 - abs(a) ** 2))

    def mono(coef, k):
        out = np.zeros(k + 1, dtype=complex)
        out[k] = coef
        return out

    return [
        [mono(1j * c, n // 2), mono(-a.conjugate(), n - m)],
        [mono(a, m), mono(-1j * c, n // 2)],
    ]


# catalogued polynomial maps of the disc with their expected verdicts
EXAMPLES = {
    "jordan": (PolyTriple([0, 1], [0], [0, 1]), True),
    "no_lift": (PolyTriple([0, 0, 1], [0], [0, 1]), False),
    "no_schur": (PolyTriple([0.5], [0], [0, 1]), True),
}
