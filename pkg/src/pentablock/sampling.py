"""Seeded random samplers for property checks.

All samplers take a ``numpy.random.Generator`` and return plain Python
objects (lists of points, arrays of matrices) so results are reproducible.
"""
from __future__ import annotations

import math

import numpy as np

from .automorphisms import AutoParams
from .boundary import bP_parametrize
from .domain import fiber_radius
from .matrix_core import PentaPoint
from .mobius import MobiusParams
from .real_geometry import K_real
from .symmetrised_bidisc import SymPoint


def disc(rng: np.random.Generator, n: int, radius: float = 1.0) -> np.ndarray:
    """Uniform points of the disc ``|z| < radius``."""
    return radius * np.sqrt(rng.uniform(size=n)) * np.exp(2j * np.pi * rng.uniform(size=n))


def circle(rng: np.random.Generator, n: int) -> np.ndarray:
    return np.exp(2j * np.pi * rng.uniform(size=n))


def root_pairs(rng: np.random.Generator, n: int, radius: float = 1.0) -> np.ndarray:
    """``(n, 2)`` array of independent roots in the disc of the given radius."""
    return disc(rng, 2 * n, radius).reshape(n, 2)


def sym_points(rng: np.random.Generator, n: int, radius: float = 1.0) -> list[SymPoint]:
    roots = root_pairs(rng, n, radius)
    return [SymPoint(complex(l1 + l2), complex(l1 * l2)) for l1, l2 in roots]


def bgamma_points(rng: np.random.Generator, n: int) -> list[SymPoint]:
    z = circle(rng, 2 * n).reshape(n, 2)
    return [SymPoint(complex(a + b), complex(a * b)) for a, b in z]


def inside_points(rng: np.random.Generator, n: int, margin: float = 1e-6) -> list[PentaPoint]:
    """Pentablock points with ``|a|`` at most ``fiber_radius - margin``."""
    out = []
    for q in sym_points(rng, n):
        r = max(0.0, fiber_radius(q) - margin)
        out.append(PentaPoint(complex(disc(rng, 1, r)[0]), q.s, q.p))
    return out


def mixed_points(rng: np.random.Generator, n: int, margin: float = 1e-6) -> list[PentaPoint]:
    """Half inside, half outside (fibre overshoot or roots leaving the disc)."""
    half = n // 2
    out = inside_points(rng, half, margin)
    for k in range(n - half):
        if k % 2 == 0:
            q = sym_points(rng, 1)[0]
            r = fiber_radius(q) * (1.0 + margin) + rng.uniform(0.0, 0.5)
            a = r * np.exp(2j * np.pi * rng.uniform())
        else:
            l1, l2 = disc(rng, 2, 1.6)
            q = SymPoint(complex(l1 + l2), complex(l1 * l2))
            a = disc(rng, 1, 1.2)[0]
        out.append(PentaPoint(complex(a), q.s, q.p))
    return out


def matrix_ball(rng: np.random.Generator, n: int) -> np.ndarray:
    """``(n, 2, 2)`` matrices of norm uniform in ``[0, 1)``."""
    G = rng.normal(size=(n, 2, 2)) + 1j * rng.normal(size=(n, 2, 2))
    norms = np.linalg.norm(G, ord=2, axis=(1, 2))
    r = rng.uniform(size=n)
    return G * (r / norms)[:, None, None]


def matrices(rng: np.random.Generator, n: int, radius: float = 2.0) -> np.ndarray:
    """``(n, 2, 2)`` matrices with independent entries uniform in a disc."""
    return disc(rng, 4 * n, radius).reshape(n, 2, 2)


def unitaries(rng: np.random.Generator, n: int) -> np.ndarray:
    """Haar unitaries from QR of complex Gaussians with phase correction."""
    out = np.empty((n, 2, 2), dtype=complex)
    for k in range(n):
        Z = (rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))) / math.sqrt(2.0)
        Q, R = np.linalg.qr(Z)
        d = np.diag(R)
        out[k] = Q * (d / np.abs(d))
    return out


def k1_points(rng: np.random.Generator, n: int) -> list[PentaPoint]:
    out = []
    for q in bgamma_points(rng, n):
        bound = math.sqrt(max(0.0, 1.0 - 0.25 * abs(q.s) ** 2))
        out.append(PentaPoint(complex(disc(rng, 1, bound)[0]), q.s, q.p))
    return out


def bp_points(rng: np.random.Generator, n: int) -> list[PentaPoint]:
    xs = rng.uniform(-1.0, 1.0, size=n)
    th = rng.uniform(0.0, 2.0 * np.pi, size=n)
    om = circle(rng, n)
    return [bP_parametrize(x, t, w) for x, t, w in zip(xs, th, om)]


def auto_params(rng: np.random.Generator, n: int, alpha_radius: float = 0.9) -> list[AutoParams]:
    om = circle(rng, n)
    eta = circle(rng, n)
    al = disc(rng, n, alpha_radius)
    return [AutoParams(o, MobiusParams(e, a)) for o, e, a in zip(om, eta, al)]


def closed_points(rng: np.random.Generator, n: int) -> list[PentaPoint]:
    """Mixture over the closed pentablock, a third of it on the topological boundary.

    Kinds cycle through: interior points, points on the fibre circle over G,
    points over the boundary of Gamma (one root on the circle), ``K1`` points
    and distinguished-boundary points.
    """
    out = []
    for k in range(n):
        kind = k % 6
        if kind in (0, 1):
            out.extend(inside_points(rng, 1, 0.0))
        elif kind == 2:
            q = sym_points(rng, 1)[0]
            out.append(PentaPoint(complex(fiber_radius(q) * circle(rng, 1)[0]), q.s, q.p))
        elif kind == 3:
            l1 = circle(rng, 1)[0]
            l2 = disc(rng, 1)[0]
            q = SymPoint(complex(l1 + l2), complex(l1 * l2))
            r = fiber_radius(q) * math.sqrt(rng.uniform())
            out.append(PentaPoint(complex(r * circle(rng, 1)[0]), q.s, q.p))
        elif kind == 4:
            out.extend(k1_points(rng, 1))
        else:
            out.extend(bp_points(rng, 1))
    return out


def exterior_points(rng: np.random.Generator, n: int) -> list[PentaPoint]:
    """Points outside the closed pentablock with ``(s, p)`` in Gamma and ``|a| <= 1``.

    ``(s, p)`` has roots of modulus at most 0.9, or lies in bGamma with
    ``|s| <= 1.6``; ``|a|`` is placed between the fibre radius and 1.
    """
    out = []
    while len(out) < n:
        if len(out) % 4 == 3:
            q = bgamma_points(rng, 1)[0]
            if abs(q.s) > 1.6:
                continue
        else:
            q = sym_points(rng, 1, 0.9)[0]
        r = fiber_radius(q)
        if r >= 1.0 - 1e-3:
            continue
        mod = r + (1.0 - r) * rng.uniform(0.25, 1.0)
        out.append(PentaPoint(complex(mod * circle(rng, 1)[0]), q.s, q.p))
    return out


def real_points(rng: np.random.Generator, n: int, margin: float = 0.0) -> list[tuple[float, float, float]]:
    """Points of the open real pentablock, uniform in ``(s, p)`` over the triangle."""
    out = []
    while len(out) < n:
        p = rng.uniform(-1.0, 1.0)
        s = rng.uniform(-2.0, 2.0)
        if not (abs(s) < 1.0 + p - margin and abs(p) < 1.0 - margin):
            continue
        k = K_real(s, p)
        out.append((rng.uniform(-1.0, 1.0) * max(0.0, k - margin), s, p))
    return out
