import math

import numpy as np
import pytest

from pentablock import sampling
from pentablock.domain import fiber_radius, in_closed_pentablock, in_pentablock
from pentablock.real_geometry import (
    FACES,
    K_real,
    classify_face,
    face_sample,
    hessian_K,
    in_real_pentablock,
    scale_point,
    starlike_derivative,
    starlike_f,
)


def test_K_origin():
    assert K_real(0, 0) == 1


def test_K_matches_fiber_radius(rng):
    for _, s, p in sampling.real_points(rng, 500):
        assert K_real(s, p) == pytest.approx(fiber_radius((s, p)), abs=1e-12)


@pytest.mark.parametrize("p", [-0.5, 0.0, 0.7])
def test_K_edge_limit(p):
    s = (1 + p) * (1 - 1e-12)
    assert K_real(s, p) == pytest.approx(1 - 0.5 * (1 + p), abs=1e-5)


def test_hessian_origin():
    assert np.allclose(hessian_K(0, 0), 0.5 * np.array([[-1, 0], [0, 0]]))


def test_hessian_rank_one_nsd(rng):
    for _, s, p in sampling.real_points(rng, 200, margin=0.01):
        H = hessian_K(s, p)
        assert abs(np.linalg.det(H)) <= 1e-9 * max(1.0, np.abs(H).max()) ** 2
        assert np.linalg.eigvalsh(H).max() <= 1e-12 * max(1.0, np.abs(H).max())


@pytest.mark.parametrize("x, expected", [((0, 0, 0), True), ((0, 2, 1), False), ((0, -2, 1), False),
                                         ((1, 0, -1), False), ((-1, 0, -1), False)])
def test_in_real_pentablock(x, expected):
    assert in_real_pentablock(*x) is expected


def test_midpoint_convexity(rng):
    pts = sampling.real_points(rng, 400)
    for x, y in zip(pts[::2], pts[1::2]):
        assert in_real_pentablock(*(0.5 * (u + v) for u, v in zip(x, y)))


@pytest.mark.parametrize(
    "x, label",
    [
        ((0, 1.0, 0), "triangle_plus"),
        ((0, -1.0, 0), "triangle_minus"),
        ((0.6, 0, 1), "ellipse"),
        ((K_real(0.5, 0.2), 0.5, 0.2), "surface_plus"),
        ((-K_real(0.5, 0.2), 0.5, 0.2), "surface_minus"),
        ((0, 2, 1), "vertex"),
        ((1, 0, -1), "vertex"),
    ],
)
def test_classify_face(x, label):
    assert classify_face(*x).label == label


def test_minus_one_segment_is_edge():
    fc = classify_face(0.3, 0, -1)
    assert fc.label == "edge" and set(fc.faces) == {"T+", "T-"}


@pytest.mark.parametrize("x", [(0, 0, 0), (2, 0, 0)])
def test_classify_rejects(x):
    with pytest.raises(ValueError):
        classify_face(*x)


@pytest.mark.parametrize("face", FACES)
def test_face_samples_classify_back(face, rng):
    for u, v in rng.uniform(0.05, 0.95, size=(50, 2)):
        fc = classify_face(*face_sample(face, u, v))
        assert face in fc.faces


def test_scale_point_edge_cases():
    x = (0.2, 0.3j, -0.1)
    assert scale_point(x, 1) == pytest.approx(x)
    assert scale_point(x, 0) == (0, 0, 0)


def test_scale_point_quasi_balanced(rng):
    for x in sampling.inside_points(rng, 100, 0.0):
        for z in sampling.disc(rng, 10):
            assert in_pentablock(scale_point(x, z))
        assert in_closed_pentablock(scale_point(x, np.exp(0.3j)))


@pytest.mark.parametrize("r", [0.1, 0.5, 0.9])
def test_starlike_at_origin(r):
    assert starlike_f(r, (0, 0)) == pytest.approx(2 / r ** 2)
    assert starlike_derivative(r, (0, 0)) == pytest.approx(-4 / r ** 3)


def test_starlike_derivative_negative_and_fd(rng):
    for q in sampling.sym_points(rng, 100):
        r = rng.uniform(0.05, 0.95)
        d = starlike_derivative(r, q)
        h = 1e-4 * min(r, 1 - r)
        fd = (-starlike_f(r + 2 * h, q) + 8 * starlike_f(r + h, q) - 8 * starlike_f(r - h, q)
              + starlike_f(r - 2 * h, q)) / (12 * h)
        assert d < 0
        assert abs(d - fd) <= 1e-6 * max(1.0, abs(d))


@pytest.mark.parametrize("r, q", [(0, (0, 0)), (1, (0, 0)), (0.5, (2, 1))])
def test_starlike_rejects(r, q):
    with pytest.raises(ValueError):
        starlike_derivative(r, q)


def test_real_inputs_required():
    with pytest.raises(ValueError):
        in_real_pentablock(0.1j, 0, 0)
    assert math.isfinite(K_real(0.3, 0.1))
