"""Automorphisms ``f_{omega, upsilon}`` of the pentablock and their matrix lifts.

``upsilon`` is a disc automorphism and ``omega`` a unimodular scalar.  On the
matrix ball the lift is ``A -> U_omega upsilon(A) U_omega*`` with
``U_omega = diag(1, omega)``; on the pentablock it acts by

    (a, s, p) -> eta / (1 - conj(alpha) s + conj(alpha)**2 p) * (
        omega (1 - |alpha|**2) a,
        -2 alpha + (1 + |alpha|**2) s - 2 conj(alpha) p,
        eta (alpha**2 - alpha s + p),
    ).
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .matrix_core import PentaPoint, _entries, as_matrix, as_point
from .mobius import (
    IDENTITY_MOBIUS,
    MobiusParams,
    _unimodular,
    mobius_apply,
    mobius_compose,
    mobius_inverse,
)

__all__ = [
    "AutoParams",
    "F_apply",
    "IDENTITY",
    "IDENTITY_MOBIUS",
    "MobiusParams",
    "f_apply",
    "group_compose",
    "group_inverse",
    "mobius_apply",
    "mobius_compose",
    "mobius_inverse",
]


@dataclass(frozen=True)
class AutoParams:
    omega: complex = 1 + 0j
    mobius: MobiusParams = field(default_factory=MobiusParams)

    def __post_init__(self):
        object.__setattr__(self, "omega", _unimodular(self.omega, "omega"))
        if not isinstance(self.mobius, MobiusParams):
            object.__setattr__(self, "mobius", MobiusParams(*self.mobius))

    @classmethod
    def from_values(cls, omega=1, eta=1, alpha=0) -> "AutoParams":
        return cls(omega, MobiusParams(eta, alpha))


IDENTITY = AutoParams()


def f_apply(g: AutoParams, x) -> PentaPoint:
    a, s, p = as_point(x)
    eta, al, om = g.mobius.eta, g.mobius.alpha, g.omega
    alc = al.conjugate()
    den = 1.0 - alc * s + alc * alc * p
    if den == 0:
        raise ZeroDivisionError("1 - conj(alpha) s + conj(alpha)^2 p vanishes")
    k = eta / den
    return PentaPoint(
        k * om * (1.0 - abs(al) ** 2) * a,
        k * (-2.0 * al + (1.0 + abs(al) ** 2) * s - 2.0 * alc * p),
        k * eta * (al * al - al * s + p),
    )


def F_apply(g: AutoParams, A) -> np.ndarray:
    """``U_omega upsilon(A) U_omega*`` with ``upsilon(A) = eta (A - alpha)(1 - conj(alpha) A)^-1``."""
    A = as_matrix(A)
    eta, al, om = g.mobius.eta, g.mobius.alpha, g.omega
    alc = al.conjugate()
    a11, a12, a21, a22 = _entries(A)
    # 1 - conj(alpha) A and its adjugate
    b11, b12, b21, b22 = 1.0 - alc * a11, -alc * a12, -alc * a21, 1.0 - alc * a22
    det = b11 * b22 - b12 * b21
    if det == 0:
        raise ZeroDivisionError("1 - conj(alpha) A is singular")
    inv = np.array([[b22, -b12], [-b21, b11]], dtype=complex) / det
    V = eta * (A - al * np.eye(2)) @ inv
    return np.array(
        [[V[0, 0], V[0, 1] * om.conjugate()], [V[1, 0] * om, V[1, 1]]], dtype=complex
    )


def group_compose(g1: AutoParams, g2: AutoParams) -> AutoParams:
    """Parameters of ``f_{g1} o f_{g2}``."""
    return AutoParams(g1.omega * g2.omega, mobius_compose(g1.mobius, g2.mobius))


def group_inverse(g: AutoParams) -> AutoParams:
    return AutoParams(g.omega.conjugate(), mobius_inverse(g.mobius))
