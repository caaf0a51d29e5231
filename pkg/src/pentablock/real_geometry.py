"""The real pentablock and the scaling structure of the complex one.

Over the open triangle ``|p| < 1, |s| < 1 + p`` the fibre radius is

    K(s, p) = 1 - (1 + p - sqrt((1 + p)**2 - s**2)) / 2,

a concave function, so the real slice is convex.  Its boundary consists of two
flat triangles ``T+`` (``s = 1 + p``) and ``T-`` (``s = -(1 + p)``), the
ellipse ``E`` (``p = 1``) and the two sheets ``S+`` / ``S-`` (``a = +-K``).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .matrix_core import PentaPoint, as_point
from .symmetrised_bidisc import SymPoint, as_sympoint, in_G

FACES = ("T+", "T-", "E", "S+", "S-")
FACE_NAMES = {
    "T+": "triangle_plus",
    "T-": "triangle_minus",
    "E": "ellipse",
    "S+": "surface_plus",
    "S-": "surface_minus",
}


def _real(v, name: str) -> float:
    v = complex(v)
    if v.imag != 0.0:
        raise ValueError(f"{name} must be real")
    return v.real


def in_real_triangle(s: float, p: float) -> bool:
    return abs(p) < 1.0 and abs(s) < 1.0 + p


def K_real(s: float, p: float) -> float:
    s, p = float(s), float(p)
    if not in_real_triangle(s, p):
        raise ValueError(f"({s}, {p}) is outside the open real triangle")
    return _K_closed(s, p)


def _K_closed(s: float, p: float) -> float:
    t = 1.0 + p
    return 1.0 - 0.5 * (t - math.sqrt(max(0.0, t * t - s * s)))


def hessian_K(s: float, p: float) -> np.ndarray:
    s, p = float(s), float(p)
    if not in_real_triangle(s, p):
        raise ValueError(f"({s}, {p}) is not an interior point of the real triangle")
    t = 1.0 + p
    scale = 1.0 / (2.0 * (t * t - s * s) ** 1.5)
    return scale * np.array([[-t * t, s * t], [s * t, -s * s]])


def in_real_pentablock(a, s, p) -> bool:
    a, s, p = _real(a, "a"), _real(s, "s"), _real(p, "p")
    return in_real_triangle(s, p) and abs(a) < _K_closed(s, p)


@dataclass(frozen=True)
class FaceClassification:
    label: str
    faces: tuple[str, ...]

    @property
    def short(self) -> str:
        """CSV label: the face code, or ``edge`` / ``vertex``."""
        if len(self.faces) == 1:
            return self.faces[0]
        return self.label


def faces_within(a: float, s: float, p: float, tol: float) -> tuple[str, ...]:
    """All faces of the closed real pentablock within ``tol`` of ``(a, s, p)``."""
    in_tri = -1.0 - tol <= p <= 1.0 + tol and abs(s) <= 1.0 + p + tol
    k = _K_closed(max(-abs(1.0 + p), min(abs(1.0 + p), s)), min(1.0, max(-1.0, p)))
    out = []
    if abs(s - (1.0 + p)) <= tol and abs(a) <= 1.0 - 0.5 * s + tol and in_tri:
        out.append("T+")
    if abs(s + 1.0 + p) <= tol and abs(a) <= 1.0 + 0.5 * s + tol and in_tri:
        out.append("T-")
    if abs(p - 1.0) <= tol and a * a + 0.25 * s * s <= 1.0 + tol and abs(s) <= 2.0 + tol:
        out.append("E")
    if in_tri and abs(a - k) <= tol:
        out.append("S+")
    if in_tri and abs(a + k) <= tol:
        out.append("S-")
    return tuple(out)


def classify_face(a, s, p, tol: float = 1e-9) -> FaceClassification:
    """Face (or edge / vertex) of a boundary point of the real pentablock.

    Every face within ``tol`` is reported; two faces make an edge and three or
    more a vertex.  Interior and exterior points are rejected.
    """
    a, s, p = _real(a, "a"), _real(s, "s"), _real(p, "p")
    faces = faces_within(a, s, p, tol)
    if not faces:
        if in_real_pentablock(a, s, p):
            raise ValueError(f"({a}, {s}, {p}) is an interior point")
        raise ValueError(f"({a}, {s}, {p}) is outside the closed real pentablock")
    if len(faces) == 1:
        return FaceClassification(FACE_NAMES[faces[0]], faces)
    return FaceClassification("edge" if len(faces) == 2 else "vertex", faces)


def face_sample(face: str, u: float, v: float) -> tuple[float, float, float]:
    """Point of ``face`` from parameters ``u, v`` in ``[0, 1]``."""
    if face in ("T+", "T-"):
        p = -1.0 + 2.0 * u
        s = 1.0 + p if face == "T+" else -(1.0 + p)
        bound = 1.0 - 0.5 * abs(s)
        return (2.0 * v - 1.0) * bound, s, p
    if face == "E":
        s = -2.0 + 4.0 * u
        bound = math.sqrt(max(0.0, 1.0 - 0.25 * s * s))
        return (2.0 * v - 1.0) * bound, s, 1.0
    if face in ("S+", "S-"):
        p = -1.0 + 2.0 * u
        s = (2.0 * v - 1.0) * (1.0 + p)
        k = _K_closed(s, p)
        return (k if face == "S+" else -k), s, p
    raise ValueError(f"unknown face {face!r}; expected one of {FACES}")


# -- complex scaling ---------------------------------------------------------


def scale_point(x, z) -> PentaPoint:
    """``(z a, z s, z**2 p)``."""
    a, s, p = as_point(x)
    z = complex(z)
    return PentaPoint(z * a, z * s, z * z * p)


def _beta_r(r: float, q: SymPoint) -> complex:
    s, p = q
    return (r * s - r * r * s.conjugate() * p) / (1.0 - r * r * abs(p) ** 2)


def starlike_f(r: float, q) -> float:
    """``(1 + sqrt(1 - |b_r|**2)(1 - r**2 |p|**2)) / r**2`` with ``b_r`` as in :func:`starlike_derivative`."""
    q = as_sympoint(q)
    b = _beta_r(r, q)
    return (1.0 + math.sqrt(1.0 - abs(b) ** 2) * (1.0 - r * r * abs(q.p) ** 2)) / (r * r)


def starlike_derivative(r: float, q) -> float:
    """Closed-form derivative of :func:`starlike_f` in ``r``.

    With ``b_r = (r s - r**2 conj(s) p) / (1 - r**2 |p|**2)``::

        f'(r) = -2/r**3 - (2 - |b_r|**2) / (r**3 sqrt(1 - |b_r|**2))
                + Re(p conj(b_r)**2) / (r**2 sqrt(1 - |b_r|**2))
    """
    q = as_sympoint(q)
    if not in_G(q):
        raise ValueError(f"{tuple(q)} is not in the open symmetrised bidisc")
    r = float(r)
    if not 0.0 < r < 1.0:
        raise ValueError("r must lie in (0, 1)")
    b = _beta_r(r, q)
    root = math.sqrt(1.0 - abs(b) ** 2)
    return (
        -2.0 / r ** 3
        - (2.0 - abs(b) ** 2) / (r ** 3 * root)
        + (q.p * b.conjugate() ** 2).real / (r * r * root)
    )

