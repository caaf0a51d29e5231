"""Numerics for the pentablock and the structured singular value on 2x2 matrices."""
from types import ModuleType as _ModuleType

from .automorphisms import AutoParams, F_apply, f_apply, group_compose, group_inverse
from .boundary import bP_coordinates, bP_parametrize, in_bP, in_K1
from .domain import (
    CRITERIA,
    SeparatingPolynomial,
    fiber_radius,
    in_closed_pentablock,
    in_pentablock,
    kappa_closed,
    kappa_maximizer,
    kappa_oracle,
    psi,
    separating_polynomial,
)
from .lifting import (
    PolyTriple,
    analytic_lift_exists,
    construct_matrix,
    construct_matrix_closed,
    construct_unitary,
    polynomial_lift,
)
from .matrix_core import PentaPoint, operator_norm, pi_map, spectral_radius
from .mobius import MobiusParams, mobius_apply, mobius_compose, mobius_inverse
from .mu import e_norm, mu_le_one, mu_lt_one, mu_oracle, mu_value
from .real_geometry import K_real, classify_face, hessian_K, in_real_pentablock
from .symmetrised_bidisc import SymPoint, beta_of, in_bGamma, in_G, in_Gamma, tau_apply

__version__ = "0.1.0"

__all__ = sorted(
    name for name, value in globals().items()
    if not name.startswith("_") and not isinstance(value, _ModuleType)
)
