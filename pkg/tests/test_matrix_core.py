import numpy as np
import pytest

from pentablock.matrix_core import (
    PentaPoint,
    as_matrix,
    det_one_minus_gram,
    determinant,
    eigenvalues,
    in_closed_ball,
    in_open_ball,
    in_open_ball_det,
    operator_norm,
    pi_map,
    quadratic_roots,
    spectral_radius,
    trace,
)

LAM = 0.3 - 0.2j
JORDAN = np.array([[0, -1], [LAM, 0]])
I2 = np.eye(2)
Z2 = np.zeros((2, 2))


@pytest.mark.parametrize("A, expected", [(I2, 2), (Z2, 0), (JORDAN, 0)])
def test_trace(A, expected):
    assert trace(A) == expected


@pytest.mark.parametrize(
    "A, expected",
    [(I2, 1), (JORDAN, LAM), (np.diag([0.2, 0.5j]), 0.1j)],
)
def test_determinant(A, expected):
    assert abs(determinant(A) - expected) < 1e-15


@pytest.mark.parametrize(
    "A, expected",
    [
        (np.diag([0.2, -0.7j]), {0.2, -0.7j}),
        (np.array([[0, -1], [0.25, 0]]), {0.5j, -0.5j}),
        (Z2, {0}),
    ],
)
def test_eigenvalues(A, expected):
    ev = eigenvalues(A)
    for z in ev:
        assert min(abs(z - e) for e in expected) < 1e-14


@pytest.mark.parametrize(
    "A, expected", [(I2, 1.0), (np.array([[0, -1], [0.5, 0]]), 1.0), (Z2, 0.0)]
)
def test_operator_norm(A, expected):
    assert operator_norm(A) == pytest.approx(expected, abs=1e-15)


@pytest.mark.parametrize(
    "A, expected",
    [(JORDAN, (LAM, 0, LAM)), (I2, (0, 2, 1)), (Z2, (0, 0, 0))],
)
def test_pi_map(A, expected):
    x = pi_map(A)
    assert isinstance(x, PentaPoint)
    assert np.allclose(x, expected, atol=1e-15)


@pytest.mark.parametrize(
    "A, expected",
    [(0.5 * I2, True), (I2, False), (np.array([[0, -1], [0.5, 0]]), False)],
)
def test_in_open_ball(A, expected):
    assert in_open_ball(A) is expected
    assert in_open_ball_det(A) is expected


def test_closed_ball_contains_unit_norm():
    assert in_closed_ball(I2)
    assert not in_closed_ball(1.01 * I2)


def test_det_one_minus_gram_identity():
    assert det_one_minus_gram(0.5 * I2) == pytest.approx(0.5625)


def test_quadratic_roots_double():
    r1, r2 = quadratic_roots(2, 1)
    assert r1 == pytest.approx(1) and r2 == pytest.approx(1)


def test_spectral_radius_below_norm(rng):
    for _ in range(200):
        A = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        assert spectral_radius(A) <= operator_norm(A) * (1 + 1e-12)


@pytest.mark.parametrize("bad", [np.eye(3), np.array([[np.nan, 0], [0, 0]]), [[1, 2]]])
def test_as_matrix_rejects(bad):
    with pytest.raises(ValueError):
        as_matrix(bad)
