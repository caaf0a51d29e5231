"""Two-point interpolation from ``0`` into the pentablock and into the mu-unit ball.

Only necessary conditions are available for the pentablock; for the mu-ball
with target ``W`` at ``lambda0`` the flat map ``(lambda / lambda0) W`` settles
the question.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .domain import in_closed_pentablock, in_pentablock, kappa_closed
from .matrix_core import PentaPoint, as_matrix, as_point
from .mu import mu_lt_one, mu_value
from .symmetrised_bidisc import SymPoint, beta_of


def _check_lambda0(lambda0) -> complex:
    lambda0 = complex(lambda0)
    if not 0.0 < abs(lambda0) < 1.0:
        raise ValueError("lambda0 must lie in the punctured open disc")
    return lambda0


@dataclass(frozen=True)
class SchwarzCheck:
    """Outcome of the two necessary inequalities, with both left-hand sides."""

    holds: bool
    gamma_lhs: float
    fiber_lhs: float
    bound: float

    def __bool__(self) -> bool:
        return self.holds

    @property
    def margin(self) -> float:
        return self.bound - max(self.gamma_lhs, self.fiber_lhs)


def schwarz_necessary(lambda0, x, tol: float = 0.0) -> SchwarzCheck:
    """Necessary conditions for ``h(0) = 0, h(lambda0) = x`` with ``h`` into the pentablock.

    ``(2|s - conj(s) p| + |s**2 - 4p|) / (4 - |s|**2) <= |lambda0|`` and
    ``|a| kappa(s, p) <= |lambda0|``.
    """
    lambda0 = _check_lambda0(lambda0)
    a, s, p = as_point(x)
    if abs(s) >= 2.0:
        raise ValueError("|s| >= 2: the first inequality is undefined")
    if not in_pentablock((a, s, p)):
        raise ValueError(f"{(a, s, p)} is not in the pentablock")
    gamma_lhs = (2.0 * abs(s - s.conjugate() * p) + abs(s * s - 4.0 * p)) / (4.0 - abs(s) ** 2)
    fiber_lhs = abs(a) * kappa_closed((s, p))
    bound = abs(lambda0)
    holds = gamma_lhs <= bound + tol and fiber_lhs <= bound + tol
    return SchwarzCheck(holds, gamma_lhs, fiber_lhs, bound)


def infinitesimal_necessary(A, S, P, tol: float = 1e-12) -> bool:
    """``|A| <= 1`` and ``|S| / 2 + |P| <= 1`` for ``h'(0) = (A, S, P)``."""
    return abs(complex(A)) <= 1.0 + tol and 0.5 * abs(complex(S)) + abs(complex(P)) <= 1.0 + tol


@dataclass(frozen=True)
class FlatInterpolant:
    feasible: bool
    mu: float
    lambda0: complex
    W: np.ndarray

    def __bool__(self) -> bool:
        return self.feasible

    def __call__(self, lam) -> np.ndarray:
        if not self.feasible:
            raise ValueError("no flat interpolant: mu(W) exceeds |lambda0|")
        return (complex(lam) / self.lambda0) * self.W


def flat_interpolant_feasible(lambda0, W, tol: float = 1e-10) -> FlatInterpolant:
    """Feasibility of ``F(0) = 0, F(lambda0) = W`` with ``mu(F) < 1`` on the disc.

    Equivalent to ``mu(W) <= |lambda0|``; the witness is ``(lambda / lambda0) W``.
    """
    lambda0 = _check_lambda0(lambda0)
    W = as_matrix(W)
    m = mu_value(W)
    return FlatInterpolant(m <= abs(lambda0) + tol, m, lambda0, W)


@dataclass(frozen=True)
class CounterexampleTrace:
    P: float
    xi: float
    derivative: tuple[float, float, float]
    infinitesimal_ok: bool
    second_condition_slack: float
    h_at_one: PentaPoint
    beta: complex
    fiber_bound: float
    in_closed: bool

    @property
    def confirmed(self) -> bool:
        return self.infinitesimal_ok and not self.in_closed and self.fiber_bound < 1.0


def counterexample_h(P: float) -> Callable[[complex], PentaPoint]:
    """``lambda -> (lambda, lambda (2(1 - P), lambda + P) / (1 + P lambda))``."""

    def h(lam):
        lam = complex(lam)
        k = lam / (1.0 + P * lam)
        return PentaPoint(lam, k * 2.0 * (1.0 - P), k * (lam + P))

    return h


def counterexample_trace(P: float) -> CounterexampleTrace:
    """Map satisfying the infinitesimal condition at 0 but leaving the closed pentablock.

    ``h'(0) = (1, 2(1 - P), P)`` meets the condition with equality, while
    ``h(1) = (1, 2 xi, 1)`` with ``xi = (1 - P) / (1 + P)`` has fibre bound
    ``sqrt(1 - xi**2) < 1``.
    """
    P = float(P)
    if not 0.0 < P < 1.0:
        raise ValueError("P must lie in (0, 1)")
    xi = (1.0 - P) / (1.0 + P)
    deriv = (1.0, 2.0 * (1.0 - P), P)
    slack = 1.0 - (0.5 * deriv[1] + deriv[2])
    h1 = counterexample_h(P)(1.0)
    q = SymPoint(h1.s, h1.p)
    beta = beta_of(q)
    bound = abs(1.0 - 0.5 * q.s * beta.conjugate() / (1.0 + math.sqrt(max(0.0, 1.0 - abs(beta) ** 2))))
    return CounterexampleTrace(
        P=P,
        xi=xi,
        derivative=deriv,
        infinitesimal_ok=infinitesimal_necessary(*deriv),
        second_condition_slack=slack,
        h_at_one=h1,
        beta=beta,
        fiber_bound=bound,
        in_closed=in_closed_pentablock(h1),
    )


@dataclass(frozen=True)
class ScaledMuCheck:
    """Sampling evidence for: ``mu(lambda G) < 1`` on the disc implies ``mu(G) <= 1``."""

    hypothesis_max: float
    conclusion_max: float

    @property
    def consistent(self) -> bool:
        return self.hypothesis_max >= 1.0 or self.conclusion_max <= 1.0 + 1e-6


def _polyval_matrix(coeffs: np.ndarray, lam: complex) -> np.ndarray:
    out = np.zeros((2, 2), dtype=complex)
    for c in coeffs[::-1]:
        out = out * lam + c
    return out


def scaled_mu_check(G_coeffs, rng: np.random.Generator, n_circle: int = 256,
                    n_disc: int = 256, radius: float = 1.0 - 1e-9) -> ScaledMuCheck:
    """Sample both sides of the implication.

    ``G_coeffs`` has shape ``(d + 1, 2, 2)`` (low to high degree).  The
    hypothesis is probed on the circle of the given radius, the conclusion at
    uniformly sampled disc points.
    """
    G = np.asarray(G_coeffs, dtype=complex)
    angles = 2.0 * np.pi * np.arange(n_circle) / n_circle
    hyp = max(mu_value(lam * _polyval_matrix(G, lam)) for lam in radius * np.exp(1j * angles))
    pts = np.sqrt(rng.uniform(size=n_disc)) * np.exp(2j * np.pi * rng.uniform(size=n_disc))
    con = max(mu_value(_polyval_matrix(G, lam)) for lam in pts)
    return ScaledMuCheck(hyp, con)


def flat_witness_ok(fi: FlatInterpolant, lams, tol: float = 1e-9) -> bool:
    """``mu(F(lambda)) <= |lambda|`` and ``mu(F(lambda)) < 1`` at the sample points."""
    for lam in lams:
        F = fi(lam)
        if mu_value(F) > abs(lam) + tol or not mu_lt_one(F):
            return False
    return True
