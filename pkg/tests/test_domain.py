import math

import numpy as np
import pytest

from pentablock import sampling
from pentablock.domain import (
    CRITERIA,
    fiber_radius,
    fiber_radius_from_roots,
    in_closed_pentablock,
    in_pentablock,
    kappa_closed,
    kappa_maximizer,
    kappa_oracle,
    psi,
    separating_polynomial,
    truncation_degree,
)
from pentablock.lifting import construct_matrix
from pentablock.matrix_core import operator_norm
from pentablock.symmetrised_bidisc import roots_of

XI = 1 / 3


@pytest.mark.parametrize("x", [(0.4, 0.3, 0.1j), (-0.2j, 1.1, 0.3)])
def test_psi_at_origin_is_a(x):
    assert psi(0, x) == x[0]


@pytest.mark.parametrize("z", [0.3, 0.5j, -0.9 + 0.1j])
def test_psi_vanishes_for_zero_a(z):
    assert psi(z, (0, 0.4, 0.2)) == 0


def test_psi_tends_to_zero_at_circle():
    vals = [abs(psi((1 - 10.0 ** -k) * np.exp(0.3j), (0.5, 0.2, 0.1))) for k in (2, 4, 6)]
    assert vals[0] > vals[1] > vals[2] and vals[2] < 1e-5


@pytest.mark.parametrize("p", [0, 0.5, -0.9j, 0.3 + 0.4j])
def test_kappa_zero_s_is_one(p):
    assert kappa_closed((0, p)) == pytest.approx(1, abs=1e-15)
    assert kappa_maximizer((0, p)) == 0


@pytest.mark.parametrize("eps", [1e-3, 1e-5, 1e-7])
def test_kappa_near_boundary_limit(eps):
    limit = 1 / math.sqrt(1 - XI ** 2)
    assert kappa_closed((2 * XI, 1 - eps)) == pytest.approx(limit, rel=10 * eps + 1e-9)


def test_kappa_oracle_origin():
    assert kappa_oracle((0, 0)) == pytest.approx(1, abs=1e-6)


def test_kappa_real_beta_gives_real_maximizer():
    z = kappa_maximizer((0.6, 0.1))
    assert z.imag == 0 and 0 < z.real < 1


def test_kappa_oracle_below_closed_form(rng):
    for q in sampling.sym_points(rng, 30):
        k, z = kappa_oracle(q, return_argmax=True)
        assert k <= kappa_closed(q) + 1e-9
        assert abs(k - kappa_closed(q)) < 1e-4
        assert abs(z - kappa_maximizer(q)) < 1e-6


def test_maximizer_attains_kappa(rng):
    for q in sampling.sym_points(rng, 100):
        assert abs(psi(kappa_maximizer(q), (1, *q))) == pytest.approx(kappa_closed(q), abs=1e-10)


@pytest.mark.parametrize("q, expected", [((0, 0), 1), ((2, 1), 0), ((0, -1), 1), ((0, 0.9), 1)])
def test_fiber_radius(q, expected):
    assert fiber_radius(q) == pytest.approx(expected, abs=1e-12)


def test_fiber_radius_forms_agree(rng):
    for q in sampling.sym_points(rng, 500):
        assert fiber_radius(q) == pytest.approx(fiber_radius_from_roots(*roots_of(q)), abs=1e-12)
        assert fiber_radius(q) == pytest.approx(1 / kappa_closed(q), abs=1e-12)


def test_fiber_radius_rejects_outside_gamma():
    with pytest.raises(ValueError):
        fiber_radius((1 + 1j, 0))


@pytest.mark.parametrize(
    "x, expected",
    [
        ((0.999, 0, 0), True),
        ((1, 0, 0), False),
        ((0, 1 + 1j, 0), False),
        ((0.5, 0, 0.9), True),
    ],
)
@pytest.mark.parametrize("criterion", CRITERIA)
def test_in_pentablock(x, expected, criterion):
    assert in_pentablock(x, criterion) is expected


def test_half_zero_nine_lifts():
    A = construct_matrix((0.5, 0, 0.9))
    assert operator_norm(A) < 1


def test_unknown_criterion():
    with pytest.raises(ValueError):
        in_pentablock((0, 0, 0), "nope")


@pytest.mark.parametrize(
    "x, expected", [((0, 2, 1), True), ((0, 2j, -1), True), ((0, 2j, 1j), False)]
)
def test_in_closed_pentablock(x, expected):
    assert in_closed_pentablock(x) is expected


def test_separating_trivial_case():
    f = separating_polynomial((1.5, 0.2, 0.1))
    assert f.degree == 0 and f.center is None
    assert f(1.5, 0.2, 0.1) == 1.5


def test_separating_witness_point():
    x = (1, 2 * XI, 1)
    f = separating_polynomial(x)
    assert abs(psi(f.center, x)) > 1
    assert abs(f(*x)) >= 1 + 2 * f.eps - 1e-12


def test_separating_bounded_on_closure(rng):
    x = (1, 2 * XI, 1)
    f = separating_polynomial(x)
    pts = sampling.closed_points(rng, 2000)
    assert max(abs(f(*y)) for y in pts) <= 1


def test_truncation_degree_monotone():
    z0 = 0.4 + 0.2j
    degs = [truncation_degree(z0, 0.1 / 2 ** k) for k in range(6)]
    assert all(b >= a for a, b in zip(degs, degs[1:])) and degs[-1] > degs[0]


def test_separating_rejects_members():
    with pytest.raises(ValueError):
        separating_polynomial((0.2, 0, 0))
