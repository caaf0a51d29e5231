"""Disc automorphisms ``z -> eta * (z - alpha) / (1 - conj(alpha) * z)``."""
from __future__ import annotations

from dataclasses import dataclass

UNIMODULAR_DRIFT = 1e-6


def _unimodular(z: complex, name: str) -> complex:
    z = complex(z)
    r = abs(z)
    if abs(r - 1.0) > UNIMODULAR_DRIFT:
        raise ValueError(f"{name} must be unimodular, |{name}| = {r!r}")
    return z / r


@dataclass(frozen=True)
class MobiusParams:
    eta: complex = 1 + 0j
    alpha: complex = 0j

    def __post_init__(self):
        object.__setattr__(self, "eta", _unimodular(self.eta, "eta"))
        alpha = complex(self.alpha)
        if not abs(alpha) < 1.0:
            raise ValueError(f"alpha must lie in the open disc, |alpha| = {abs(alpha)!r}")
        object.__setattr__(self, "alpha", alpha)

    def as_matrix(self):
        """Coefficients ``(A, B, C, D)`` of ``(A z + B) / (C z + D)``."""
        e, al = self.eta, self.alpha
        return e, -e * al, -al.conjugate(), 1.0 + 0j

    def __call__(self, z) -> complex:
        return mobius_apply(self, z)


IDENTITY_MOBIUS = MobiusParams()


def mobius_apply(m: MobiusParams, z) -> complex:
    z = complex(z)
    den = 1.0 - m.alpha.conjugate() * z
    if den == 0:
        raise ZeroDivisionError("conj(alpha) * z == 1: point is the pole of the Mobius map")
    return m.eta * (z - m.alpha) / den


def _from_coefficients(A, B, C, D) -> MobiusParams:
    # (A z + B)/(C z + D) = (A/D) (z + B/A) / (1 + (C/D) z)
    return MobiusParams(eta=A / D, alpha=-B / A)


def mobius_compose(m1: MobiusParams, m2: MobiusParams) -> MobiusParams:
    """Parameters of ``m1 o m2``."""
    a1, b1, c1, d1 = m1.as_matrix()
    a2, b2, c2, d2 = m2.as_matrix()
    return _from_coefficients(
        a1 * a2 + b1 * c2,
        a1 * b2 + b1 * d2,
        c1 * a2 + d1 * c2,
        c1 * b2 + d1 * d2,
    )


def mobius_inverse(m: MobiusParams) -> MobiusParams:
    return MobiusParams(eta=m.eta.conjugate(), alpha=-m.eta * m.alpha)
