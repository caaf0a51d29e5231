import numpy as np
import numpy.polynomial.polynomial as npoly
import pytest

from pentablock.polyroots import (
    as_poly,
    degree,
    hermite_interpolate,
    is_zero,
    multiplicity_at,
    root_clusters,
    series_sqrt,
    sqrt_at_infinity,
    taylor_at,
)


def test_as_poly_trims():
    assert as_poly([1, 2, 0, 0]).tolist() == [1, 2]
    assert is_zero([0, 0]) and degree([0, 0, 3]) == 2


@pytest.mark.parametrize("roots", [[0.5, 0.5, 0.5], [0.2j, 0.2j, -0.7], [1, -1, 1, -1]])
def test_clusters_recover_multiplicity(roots):
    c = npoly.polyfromroots(roots)
    for r in set(roots):
        assert multiplicity_at(c, r) == roots.count(r)
    assert sum(rc.multiplicity for rc in root_clusters(c)) == len(roots)


def test_multiplicity_of_zero_poly():
    assert multiplicity_at([0], 0.3) == float("inf")


def test_taylor_and_hermite_round_trip():
    c = np.array([1, -2, 0.5j, 3])
    nodes = [0.2, -0.4j]
    data = [taylor_at(c, z, 2) for z in nodes]
    assert np.allclose(hermite_interpolate(nodes, data), c)


@pytest.mark.parametrize("c0", [4, -1, -1 - 0j, 2j])
def test_series_sqrt(c0):
    c = np.array([c0, 1, 0.3], dtype=complex)
    r = series_sqrt(c, 5)
    assert np.allclose(npoly.polymul(r, r)[:5], np.pad(c, (0, 2))[:5])


def test_series_sqrt_principal_for_negative_zero():
    assert series_sqrt(np.array([complex(-1, -0.0)]), 1)[0] == 1j


def test_sqrt_at_infinity():
    c = npoly.polymul([1, 2], [1, 2])
    r = sqrt_at_infinity(c)
    assert r is not None and np.allclose(npoly.polymul(r, r), c) or np.allclose(npoly.polymul(-r, -r), c)
    assert sqrt_at_infinity([0, 1]) is None
