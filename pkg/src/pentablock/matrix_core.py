"""Closed-form linear algebra on 2x2 complex matrices.

Matrices are plain ``numpy`` arrays of shape ``(2, 2)``; every quantity here is
computed from the four entries directly rather than through LAPACK, which keeps
the routines exact up to rounding and cheap enough to call in tight loops.
"""
from __future__ import annotations

import cmath
import math
from typing import NamedTuple

import numpy as np


class PentaPoint(NamedTuple):
    """A candidate point ``(a, s, p)`` of the pentablock."""

    a: complex
    s: complex
    p: complex


def as_matrix(A) -> np.ndarray:
    M = np.asarray(A, dtype=complex)
    if M.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        raise ValueError("matrix has non-finite entries")
    return M


def as_point(x) -> PentaPoint:
    a, s, p = (complex(v) for v in x)
    for v in (a, s, p):
        if not (math.isfinite(v.real) and math.isfinite(v.imag)):
            raise ValueError("point has non-finite components")
    return PentaPoint(a, s, p)


def _entries(A):
    A = np.asarray(A)
    return complex(A[0, 0]), complex(A[0, 1]), complex(A[1, 0]), complex(A[1, 1])


def trace(A) -> complex:
    a11, _, _, a22 = _entries(A)
    return a11 + a22


def determinant(A) -> complex:
    a11, a12, a21, a22 = _entries(A)
    return a11 * a22 - a12 * a21


def _lex_key(z: complex):
    return (z.real, z.imag)


def quadratic_roots(s: complex, p: complex) -> tuple[complex, complex]:
    """Roots of ``z**2 - s*z + p`` in lexicographic (real, imag) order.

    Uses the cancellation-free form: the larger root comes from the quadratic
    formula, the smaller one from ``p / larger``.
    """
    s = complex(s)
    p = complex(p)
    d = cmath.sqrt(s * s - 4.0 * p)
    if abs(s + d) < abs(s - d):
        d = -d
    big = 0.5 * (s + d)
    if big == 0:
        return 0j, 0j
    small = p / big
    return tuple(sorted((big, small), key=_lex_key))


def eigenvalues(A) -> tuple[complex, complex]:
    return quadratic_roots(trace(A), determinant(A))


def spectral_radius(A) -> float:
    return max(abs(z) for z in eigenvalues(A))


def singular_values(A) -> tuple[float, float]:
    """``(sigma_max, sigma_min)`` from ``tr(A*A)`` and ``|det A|``."""
    a11, a12, a21, a22 = _entries(A)
    t = abs(a11) ** 2 + abs(a12) ** 2 + abs(a21) ** 2 + abs(a22) ** 2
    ad = abs(a11 * a22 - a12 * a21)
    disc = max(t * t - 4.0 * ad * ad, 0.0)
    smax = math.sqrt(0.5 * (t + math.sqrt(disc)))
    smin = ad / smax if smax > 0 else 0.0
    return smax, smin


def operator_norm(A) -> float:
    return singular_values(A)[0]


def det_one_minus_gram(A) -> float:
    """``det(1 - A*A) = 1 - tr(A*A) + |det A|**2``."""
    a11, a12, a21, a22 = _entries(A)
    t = abs(a11) ** 2 + abs(a12) ** 2 + abs(a21) ** 2 + abs(a22) ** 2
    return 1.0 - t + abs(a11 * a22 - a12 * a21) ** 2


def pi_map(A) -> PentaPoint:
    """``pi(A) = (a21, tr A, det A)``."""
    a11, a12, a21, a22 = _entries(A)
    return PentaPoint(a21, a11 + a22, a11 * a22 - a12 * a21)


def in_open_ball(A, tol: float = 0.0) -> bool:
    return operator_norm(A) < 1.0 - tol


def in_open_ball_det(A, tol: float = 0.0) -> bool:
    """Determinant route to ``||A|| < 1``.

    Valid only when the spectrum lies in the closed disc; outside it the
    spectral radius already exceeds 1 and the answer is ``False``.
    """
    if spectral_radius(A) > 1.0:
        return False
    return det_one_minus_gram(A) > tol


def in_closed_ball(A, tol: float = 0.0) -> bool:
    return operator_norm(A) <= 1.0 + tol
