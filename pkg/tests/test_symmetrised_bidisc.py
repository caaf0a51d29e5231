import cmath
import math

import pytest

from pentablock.mobius import IDENTITY_MOBIUS, MobiusParams, mobius_apply
from pentablock.symmetrised_bidisc import (
    beta_of,
    from_roots,
    in_bGamma,
    in_G,
    in_G_roots,
    in_Gamma,
    in_Gamma_beta,
    roots_of,
    tau_apply,
)


@pytest.mark.parametrize("q, expected", [((0, 0), True), ((1 + 1j, 0), False), ((1.0, 0.25), True)])
def test_in_G(q, expected):
    assert in_G(q) is expected
    assert in_G_roots(q) is expected


@pytest.mark.parametrize("q, expected", [((2, 1), True), ((1 + 1j, 0), False), ((0, -1), True)])
def test_in_Gamma(q, expected):
    assert in_Gamma(q) is expected
    assert in_Gamma_beta(q) is expected


@pytest.mark.parametrize(
    "q, expected", [((0, 0.7j), 0), ((2 / 3, 1), 1 / 3), ((1, 0), 1)]
)
def test_beta_of(q, expected):
    assert abs(beta_of(q) - expected) < 1e-15


@pytest.mark.parametrize(
    "q, expected", [((0, -1), {-1, 1}), ((2, 1), {1}), ((0, 0), {0})]
)
def test_roots_of(q, expected):
    for z in roots_of(q):
        assert min(abs(z - e) for e in expected) < 1e-12


@pytest.mark.parametrize("q, expected", [((2, 1), True), ((0, -1), True), ((0, 0), False)])
def test_in_bGamma(q, expected):
    assert in_bGamma(q) is expected


def test_tau_identity():
    q = (0.3 + 0.1j, -0.2j)
    assert tau_apply(IDENTITY_MOBIUS, q) == pytest.approx(q)


def test_tau_negation_on_double_root():
    assert tau_apply(MobiusParams(-1, 0), (2, 1)) == pytest.approx((-2, 1))


@pytest.mark.parametrize("theta", [0.2, 0.9, 1.4])
def test_tau_sends_boundary_pair_to_zero_minus_one(theta):
    # real alpha moves the conjugate pair e^{+-i theta} onto +-i, then eta = -i
    alpha = math.tan((math.pi / 2 - theta) / 2)
    m = MobiusParams(-1j, alpha)
    l1, l2 = cmath.exp(1j * theta), cmath.exp(-1j * theta)
    assert {round(mobius_apply(m, z).real) for z in (l1, l2)} == {1, -1}
    assert tau_apply(m, from_roots(l1, l2)) == pytest.approx((0, -1), abs=1e-12)


def test_tau_matches_root_images(rng):
    from pentablock import sampling

    for g, (l1, l2) in zip(sampling.auto_params(rng, 100), sampling.root_pairs(rng, 100)):
        u1, u2 = mobius_apply(g.mobius, l1), mobius_apply(g.mobius, l2)
        assert tau_apply(g.mobius, from_roots(l1, l2)) == pytest.approx((u1 + u2, u1 * u2), abs=1e-12)
