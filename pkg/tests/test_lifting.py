import cmath

import numpy as np
import pytest

from pentablock import sampling
from pentablock.lifting import (
    EXAMPLES,
    PolyTriple,
    analytic_lift_exists,
    construct_matrix,
    construct_matrix_closed,
    construct_unitary,
    fiber_constants,
    lift_residual,
    lifting_branch,
    polynomial_lift,
    schur_lift_monomial,
)
from pentablock.matrix_core import operator_norm, pi_map

LAMS = [0.3, -0.5j, 0.2 + 0.6j]


def test_zero_point():
    assert np.array_equal(construct_matrix((0, 0, 0)), np.zeros((2, 2)))


def test_off_diagonal_branch():
    assert lifting_branch((0.5, 0, 0)) == "off_diagonal"
    A = construct_matrix((0.5, 0, 0))
    assert np.allclose(A, [[0, 0], [0.5, 0]])
    assert operator_norm(A) == pytest.approx(0.5)


def test_diagonal_branch():
    x = (0.25, 0, 0.25)
    assert lifting_branch(x) == "diagonal"
    A = construct_matrix(x)
    assert np.allclose(pi_map(A), x, atol=1e-14) and operator_norm(A) < 1


def test_round_trip_random(rng):
    for x in sampling.inside_points(rng, 500):
        A = construct_matrix(x)
        assert np.allclose(pi_map(A), x, atol=1e-12)
        assert operator_norm(A) < 1


def test_fiber_constants_sum(rng):
    for q in sampling.sym_points(rng, 50):
        lo, hi = fiber_constants(*q)
        assert lo <= hi


def test_outside_rejected():
    with pytest.raises(ValueError):
        construct_matrix((1.0, 0, 0))


@pytest.mark.parametrize("x, u21", [((0.5, 0, -1), 0.5), ((1, 0, -1), 1)])
def test_construct_unitary(x, u21):
    U = construct_unitary(x)
    assert np.allclose(U.conj().T @ U, np.eye(2), atol=1e-12)
    assert abs(U[1, 0]) == pytest.approx(u21)
    assert np.allclose(pi_map(U), x, atol=1e-12)


def test_unitary_at_double_root():
    assert np.allclose(construct_unitary((0, 2, 1)), np.eye(2))


def test_closed_delegation():
    x = (0.1, 0.2j, 0.3)
    assert np.allclose(construct_matrix_closed(x), construct_matrix(x))
    U = construct_matrix_closed((1, 0, -1))
    assert np.allclose(U.conj().T @ U, np.eye(2), atol=1e-12)


def test_closed_fibre_circle(rng):
    for q in sampling.sym_points(rng, 50):
        from pentablock.domain import fiber_radius

        x = (fiber_radius(q) * cmath.exp(1j), *q)
        A = construct_matrix_closed(x)
        assert np.allclose(pi_map(A), x, atol=1e-10)
        assert operator_norm(A) <= 1 + 1e-9


@pytest.mark.parametrize(
    "h, expected",
    [
        (PolyTriple([0, 1], [0], [0, 1]), True),
        (PolyTriple([0, 0, 1], [0], [0, 1]), False),
        (PolyTriple([1], [0], [0, 0, 1]), True),
    ],
)
def test_analytic_lift_exists(h, expected):
    assert bool(analytic_lift_exists(h)) is expected


def test_obstruction_report():
    rep = analytic_lift_exists(PolyTriple([0, 0, 1], [0], [0, 1]))
    (ob,) = rep.offending
    assert abs(ob.alpha) < 1e-9 and ob.mult_q == 1 and ob.mult_a == 2


def test_zero_outside_disc_is_harmless():
    # q has a simple zero at 2, a vanishes there to order 2
    h = PolyTriple(np.polynomial.polynomial.polyfromroots([2, 2]), [0], [-2, 1])
    assert analytic_lift_exists(h)


@pytest.mark.parametrize(
    "h, H",
    [
        (PolyTriple([0, 1], [0], [0, 1]), lambda l: [[0, -1], [l, 0]]),
        (PolyTriple([0], [0, 2], [0, 0, 1]), lambda l: [[l, 0], [0, l]]),
        (PolyTriple([1], [0], [0, 0, -1]), lambda l: [[-l, 0], [1, l]]),
    ],
)
def test_polynomial_lift_examples(h, H):
    lift = polynomial_lift(h)
    assert lift.found
    for lam in LAMS:
        assert np.allclose(lift(lam), H(lam), atol=1e-10)
        assert np.allclose(pi_map(lift(lam)), h(lam), atol=1e-10)


def test_polynomial_lift_refuses_obstructed():
    with pytest.raises(ValueError):
        polynomial_lift(PolyTriple([0, 0, 1], [0], [0, 1]))


def test_polynomial_lift_residual_random(rng):
    for _ in range(30):
        roots = sampling.disc(rng, 2, 0.8)
        a = np.polynomial.polynomial.polyfromroots(roots) * rng.uniform(0.1, 1)
        s = sampling.disc(rng, 2, 0.5)
        p = sampling.disc(rng, 3, 0.3)
        h = PolyTriple(a, s, p)
        if not analytic_lift_exists(h):
            continue
        lift = polynomial_lift(h)
        if lift.found:
            assert lift_residual(h, lift.eta, lift.g) < 1e-9


@pytest.mark.parametrize("a, n, m", [(0.5, 2, 1), (1j, 4, 4), (0.3, 2, 0)])
def test_schur_lift_monomial(a, n, m):
    H = schur_lift_monomial(a, n, m)
    for lam in LAMS + [np.exp(0.7j)]:
        M = np.array([[np.polynomial.polynomial.polyval(lam, c) for c in row] for row in H])
        assert np.allclose(pi_map(M), (a * lam ** m, 0, lam ** n), atol=1e-12)
        assert operator_norm(M) <= 1 + 1e-12


@pytest.mark.parametrize("n, m", [(1, 0), (2, 3)])
def test_schur_lift_monomial_absent(n, m):
    assert schur_lift_monomial(0.5, n, m) is None


@pytest.mark.parametrize("name", sorted(EXAMPLES))
def test_catalogue(name):
    h, expected = EXAMPLES[name]
    assert bool(analytic_lift_exists(h)) is expected
