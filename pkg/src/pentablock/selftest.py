"""Seeded property suites cross-checking the closed forms against oracles.

Each suite returns a :class:`SuiteResult` made of named checks.  Failing checks
keep up to a few counterexample inputs verbatim.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import sampling as S
from .automorphisms import F_apply, group_compose, group_inverse, f_apply
from .boundary import bP_coordinates, bP_parametrize, in_bP, in_K1
from .domain import (
    CRITERIA,
    fiber_radius,
    fiber_radius_from_roots,
    in_closed_pentablock,
    in_pentablock,
    kappa_closed,
    kappa_maximizer,
    kappa_oracle,
    separating_polynomial,
)
from .interpolation import counterexample_trace
from .lifting import (
    analytic_lift_exists,
    construct_matrix,
    construct_unitary,
    fiber_constants,
    lifting_branch,
    polynomial_lift,
)
from .matrix_core import det_one_minus_gram, eigenvalues, operator_norm, pi_map, spectral_radius
from .mobius import mobius_apply, mobius_compose
from .mu import mu_oracle, mu_value
from .real_geometry import (
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
from .symmetrised_bidisc import beta_of, in_G, roots_of

SHELL = 1e-9
MAX_EXAMPLES = 5


@dataclass
class Check:
    name: str
    passed: bool = True
    checked: int = 0
    worst: float = 0.0
    examples: list[str] = field(default_factory=list)

    def record(self, ok: bool, value: float = 0.0, example=None):
        self.checked += 1
        if value > self.worst:
            self.worst = float(value)
        if not ok:
            self.passed = False
            if len(self.examples) < MAX_EXAMPLES and example is not None:
                self.examples.append(repr(example))

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"  [{status}] {self.name}: {self.checked} checked, worst {self.worst:.3e}"


@dataclass
class SuiteResult:
    name: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def report(self) -> str:
        head = f"{'PASS' if self.passed else 'FAIL'} {self.name}"
        lines = [head]
        for c in self.checks:
            lines.append(c.line())
            lines.extend(f"      counterexample: {e}" for e in c.examples)
        return "\n".join(lines)


def _dist(x, y) -> float:
    return max(abs(complex(u) - complex(v)) for u, v in zip(x, y))


def near_boundary(x, shell: float = SHELL) -> bool:
    """Within ``shell`` of the boundary of G (either test) or of the fibre circle."""
    a, s, p = x
    a, s, p = complex(a), complex(s), complex(p)
    g_margin = 1.0 - abs(p) ** 2 - abs(s - s.conjugate() * p)
    l1, l2 = roots_of((s, p))
    if abs(g_margin) < shell or abs(1.0 - max(abs(l1), abs(l2))) < shell:
        return True
    if g_margin > 0:
        return abs(abs(a) - fiber_radius((s, p))) < shell
    return False


# -- 1 -----------------------------------------------------------------------


def suite_criteria(n: int = 100_000, seed: int = 0) -> SuiteResult:
    rng = np.random.default_rng(seed)
    agree = Check("beta_form, root_form and sup_form agree")
    skipped = 0
    for x in S.mixed_points(rng, n):
        if near_boundary(x):
            skipped += 1
            continue
        votes = [in_pentablock(x, c) for c in CRITERIA]
        agree.record(len(set(votes)) == 1, example=(x, votes))
    push = Check("pi maps the matrix ball into the pentablock")
    for A in S.matrix_ball(rng, max(1, n // 10)):
        if operator_norm(A) > 1.0 - SHELL:
            continue
        push.record(all(in_pentablock(pi_map(A), c) for c in CRITERIA), example=A.tolist())
    agree.name += f" ({skipped} in the boundary shell skipped)"
    return SuiteResult("criteria", [agree, push])


# -- 2 -----------------------------------------------------------------------


def suite_oracle(n: int = 1000, seed: int = 0) -> SuiteResult:
    rng = np.random.default_rng(seed)
    val = Check("|kappa_closed - kappa_oracle| <= 1e-4")
    arg = Check("|oracle argmax - closed maximiser| <= 1e-6")
    low = Check("kappa_oracle <= kappa_closed + 1e-9")
    for q in S.sym_points(rng, n):
        k = kappa_closed(q)
        ko, zo = kappa_oracle(q, step=1e-3, return_argmax=True)
        z = kappa_maximizer(q)
        val.record(abs(k - ko) <= 1e-4, abs(k - ko), q)
        arg.record(abs(z - zo) <= 1e-6, abs(z - zo), q)
        low.record(ko <= k + 1e-9, ko - k, q)
    return SuiteResult("oracle", [val, arg, low])


# -- 3 -----------------------------------------------------------------------


def beta_side(q) -> float:
    s = complex(q[0])
    b = beta_of(q)
    return abs(1.0 - 0.5 * s * b.conjugate() / (1.0 + math.sqrt(max(0.0, 1.0 - abs(b) ** 2))))


def suite_identity(n: int = 10_000, seed: int = 0) -> SuiteResult:
    rng = np.random.default_rng(seed)
    chk = Check("beta-form radius equals root-form radius to 1e-12")
    for l1, l2 in S.root_pairs(rng, n):
        q = (l1 + l2, l1 * l2)
        d = abs(beta_side(q) - fiber_radius_from_roots(l1, l2))
        chk.record(d <= 1e-12, d, (complex(l1), complex(l2)))
    return SuiteResult("identity", [chk])


# -- 4 -----------------------------------------------------------------------


def suite_lifting(n: int = 10_000, seed: int = 0) -> SuiteResult:
    rng = np.random.default_rng(seed)
    trip = Check("pi(construct_matrix(x)) = x to 1e-12 with norm < 1")
    det_d = Check("diagonal branch: det(1 - A*A) = (1-|l1|^2)(1-|l2|^2) to 1e-10")
    det_o = Check("off-diagonal branch: |a|^2 det(1 - A*A) = -(|a|^2-c-^2)(|a|^2-c+^2) to 1e-10")
    for x in S.inside_points(rng, n, 1e-6):
        A = construct_matrix(x)
        d = _dist(pi_map(A), x)
        trip.record(d <= 1e-12 and operator_norm(A) < 1.0, d, x)
        D = det_one_minus_gram(A)
        if lifting_branch(x) == "diagonal":
            l1, l2 = roots_of((x.s, x.p))
            e = abs(D - (1 - abs(l1) ** 2) * (1 - abs(l2) ** 2))
            det_d.record(e <= 1e-10, e, x)
        else:
            cm, cp = fiber_constants(x.s, x.p)
            a2 = abs(x.a) ** 2
            e = abs(a2 * D + (a2 - cm * cm) * (a2 - cp * cp))
            det_o.record(e <= 1e-10, e, x)
    sound = Check("polynomial lifts satisfy det H = p and the existence test")
    for _ in range(max(1, n // 100)):
        h = _random_poly_triple(rng)
        report = analytic_lift_exists(h)
        if not report.exists:
            continue
        lift = polynomial_lift(h)
        if not lift.found:
            continue
        lam = complex(S.disc(rng, 1)[0])
        H = lift(lam)
        e = _dist(pi_map(H), h(lam))
        sound.record(e <= 1e-8, e, (h.a.tolist(), h.s.tolist(), h.p.tolist()))
    return SuiteResult("lifting", [trip, det_d, det_o, sound])


def _random_poly_triple(rng):
    from .lifting import PolyTriple

    da, ds, dp = rng.integers(0, 4, size=3)
    a_roots = S.disc(rng, da, 1.2)
    a = np.polynomial.polynomial.polyfromroots(a_roots) if da else np.ones(1)
    s = S.disc(rng, ds + 1, 1.0)
    p = S.disc(rng, dp + 1, 1.0)
    return PolyTriple(a, s, p)


# -- 5 -----------------------------------------------------------------------


def suite_mu(n: int = 1000, seed: int = 0) -> SuiteResult:
    rng = np.random.default_rng(seed)
    orc = Check("|mu_value - mu_oracle| <= 1e-4")
    hom = Check("mu(cA) = |c| mu(A) to 1e-9")
    sandwich = Check("rho(A) - 1e-9 <= mu(A) <= ||A|| + 1e-9")
    quot = Check("mu depends only on pi(A), to 1e-9")
    for A in S.matrices(rng, n, 2.0):
        m = mu_value(A)
        mo = mu_oracle(A, grid=1e-2)
        orc.record(abs(m - mo) <= 1e-4, abs(m - mo), A.tolist())
        c = complex(S.disc(rng, 1, 3.0)[0])
        e = abs(mu_value(c * A) - abs(c) * m)
        hom.record(e <= 1e-9, e, (A.tolist(), c))
        lo = spectral_radius(A) - m
        hi = m - operator_norm(A)
        sandwich.record(lo <= 1e-9 and hi <= 1e-9, max(lo, hi), A.tolist())
        a, s, p = pi_map(A)
        if a != 0:
            x11 = complex(S.disc(rng, 1, 2.0)[0])
            B = np.array([[x11, (x11 * (s - x11) - p) / a], [a, s - x11]])
            e = abs(mu_value(B) - m)
            quot.record(e <= 1e-9 * max(1.0, m), e, (A.tolist(), B.tolist()))
    return SuiteResult("mu", [orc, hom, sandwich, quot])


# -- 6 -----------------------------------------------------------------------


def suite_automorphisms(n: int = 10_000, seed: int = 0) -> SuiteResult:
    rng = np.random.default_rng(seed)
    inter = Check("f(pi(A)) = pi(F(A)) to 1e-10")
    ball = Check("F maps the ball into the ball")
    spec = Check("spectrum of F(A) is upsilon(spectrum of A)")
    comp = Check("f_{g1 g2} = f_{g1} o f_{g2} to 1e-10")
    inv = Check("f_{g^-1} o f_g = id to 1e-10")
    mob = Check("mobius_compose agrees pointwise to 1e-12")
    pres = Check("membership preserved in both directions")
    params = S.auto_params(rng, 2 * n)
    mats = S.matrix_ball(rng, n)
    pts = S.mixed_points(rng, n)
    for k in range(n):
        g1, g2 = params[2 * k], params[2 * k + 1]
        A = mats[k]
        FA = F_apply(g1, A)
        e = _dist(f_apply(g1, pi_map(A)), pi_map(FA))
        inter.record(e <= 1e-10, e, (g1, A.tolist()))
        if operator_norm(A) < 1.0 - SHELL:
            ball.record(operator_norm(FA) < 1.0, operator_norm(FA), (g1, A.tolist()))
        ups = sorted(
            (mobius_apply(g1.mobius, lam) for lam in eigenvalues(A)), key=lambda z: (z.real, z.imag)
        )
        ev = eigenvalues(FA)
        e = min(
            max(abs(ev[0] - ups[0]), abs(ev[1] - ups[1])),
            max(abs(ev[0] - ups[1]), abs(ev[1] - ups[0])),
        )
        spec.record(e <= 1e-8, e, (g1, A.tolist()))
        x = pi_map(A)
        e = _dist(f_apply(group_compose(g1, g2), x), f_apply(g1, f_apply(g2, x)))
        comp.record(e <= 1e-10, e, (g1, g2, x))
        e = _dist(f_apply(group_inverse(g1), f_apply(g1, x)), x)
        inv.record(e <= 1e-10, e, (g1, x))
        z = complex(S.disc(rng, 1)[0])
        m12 = mobius_compose(g1.mobius, g2.mobius)
        e = abs(mobius_apply(m12, z) - mobius_apply(g1.mobius, mobius_apply(g2.mobius, z)))
        mob.record(e <= 1e-12, e, (g1.mobius, g2.mobius, z))
        y = pts[k]
        if in_G((y.s, y.p)) or in_closed_pentablock(y):
            fy = f_apply(g1, y)
            if near_boundary(y) or near_boundary(fy):
                continue
            pres.record(in_pentablock(y) == in_pentablock(fy), example=(g1, y))
            back = f_apply(group_inverse(g1), fy)
            pres.record(in_pentablock(back) == in_pentablock(fy), example=(g1, fy))
    return SuiteResult("automorphisms", [inter, ball, spec, comp, inv, mob, pres])


# -- 7 -----------------------------------------------------------------------


def suite_boundary(n: int = 10_000, seed: int = 0) -> SuiteResult:
    rng = np.random.default_rng(seed)
    uk = Check("pi(U) lies in K1 for unitary U")
    lift = Check("K1 points lift to unitaries (defect <= 1e-12, pi to 1e-10)")
    trip = Check("bP parametrize / coordinates round trip to 1e-10")
    ident = Check("identification (x, 0, w) ~ (-x, 2 pi, w) to 1e-12")
    nest = Check("bP inside K1 inside the closed pentablock")
    inv = Check("automorphisms map bP to bP")
    for U in S.unitaries(rng, n):
        uk.record(in_K1(pi_map(U)), example=U.tolist())
    for x in S.k1_points(rng, n):
        U = construct_unitary(x)
        defect = float(np.max(np.abs(U.conj().T @ U - np.eye(2))))
        e = _dist(pi_map(U), x)
        lift.record(defect <= 1e-12 and e <= 1e-10, max(defect, e), x)
        nest.record(in_closed_pentablock(x), example=x)
    params = S.auto_params(rng, n)
    for k, x in enumerate(S.bp_points(rng, n)):
        xc, th, om = bP_coordinates(x)
        e = _dist(bP_parametrize(xc, th, om), x)
        trip.record(e <= 1e-10, e, x)
        nest.record(in_bP(x) and in_K1(x) and in_closed_pentablock(x), example=x)
        inv.record(in_bP(f_apply(params[k], x)), example=(params[k], x))
    for xc, w in zip(rng.uniform(-1.0, 1.0, size=n), S.circle(rng, n)):
        e = _dist(bP_parametrize(xc, 0.0, w), bP_parametrize(-xc, 2.0 * math.pi, w))
        ident.record(e <= 1e-12, e, (xc, w))
    return SuiteResult("boundary", [uk, lift, trip, ident, nest, inv])


# -- 8 -----------------------------------------------------------------------


def _fd_hessian(s: float, p: float, h: float) -> np.ndarray:
    """Fourth-order central differences of ``K_real``."""
    w = [(-2, -1.0 / 12), (-1, 4.0 / 3), (0, -5.0 / 2), (1, 4.0 / 3), (2, -1.0 / 12)]
    d1 = [(-2, 1.0 / 12), (-1, -2.0 / 3), (1, 2.0 / 3), (2, -1.0 / 12)]
    kss = sum(c * K_real(s + k * h, p) for k, c in w) / h ** 2
    kpp = sum(c * K_real(s, p + k * h) for k, c in w) / h ** 2
    ksp = sum(ci * cj * K_real(s + i * h, p + j * h) for i, ci in d1 for j, cj in d1) / h ** 2
    return np.array([[kss, ksp], [ksp, kpp]])


def _triangle_margin(s: float, p: float) -> float:
    return min(1.0 - abs(p), 1.0 + p - abs(s))


def suite_real(n: int = 1000, seed: int = 0) -> SuiteResult:
    rng = np.random.default_rng(seed)
    nsd = Check("Hessian eigenvalues <= 1e-12 (relative to ||H||)")
    fd = Check("Hessian matches finite differences to 1e-6 (relative)")
    conv = Check("convex combinations stay inside")
    conc = Check("K midpoint concave to 1e-12")
    agree = Check("K_real equals fiber_radius; real and complex membership agree")
    faces = Check("face samples classify back to their face")
    for _, s, p in S.real_points(rng, n, margin=0.05):
        H = hessian_K(s, p)
        scale = max(1.0, float(np.max(np.abs(H))))
        ev = float(np.max(np.linalg.eigvalsh(H)))
        nsd.record(ev <= 1e-12 * scale, ev / scale, (s, p))
        h = 1e-3 * min(1.0, _triangle_margin(s, p))
        e = float(np.max(np.abs(_fd_hessian(s, p, h) - H))) / scale
        fd.record(e <= 1e-6, e, (s, p))
    pts = S.real_points(rng, 20 * n)
    for k in range(10 * n):
        x1, x2 = pts[2 * k], pts[2 * k + 1]
        t = rng.uniform()
        y = tuple(t * u + (1 - t) * v for u, v in zip(x1, x2))
        conv.record(in_real_pentablock(*y), example=(x1, x2, t))
        m = (0.5 * (x1[1] + x2[1]), 0.5 * (x1[2] + x2[2]))
        gap = 0.5 * K_real(x1[1], x1[2]) + 0.5 * K_real(x2[1], x2[2]) - K_real(*m)
        conc.record(gap <= 1e-12, gap, (x1, x2))
    for a, s, p in pts[:n]:
        e = abs(K_real(s, p) - fiber_radius((s, p)))
        ok = e <= 1e-12
        if not near_boundary((a, s, p)):
            ok = ok and in_real_pentablock(a, s, p) == in_pentablock((a, s, p))
        agree.record(ok, e, (a, s, p))
    for face in FACES:
        for u, v in rng.uniform(0.01, 0.99, size=(max(1, n // 5), 2)):
            pt = face_sample(face, u, v)
            got = classify_face(*pt).faces
            faces.record(got == (face,), example=(face, pt, got))
    return SuiteResult("convexity-real", [nsd, fd, conv, conc, agree, faces])


# -- 9 -----------------------------------------------------------------------


def suite_regression(n: int = 0, seed: int = 0) -> SuiteResult:
    del n, seed
    chk = []
    c = Check("(0, 1+i, 0) is outside the closed pentablock")
    c.record(not in_closed_pentablock((0, 1 + 1j, 0)))
    chk.append(c)
    c = Check("(0, 2i, i) is outside the closed pentablock")
    c.record(not in_closed_pentablock((0, 2j, 1j)))
    chk.append(c)
    c = Check("(0, 2, 1) and (0, 2i, -1) are in the closed pentablock")
    c.record(in_closed_pentablock((0, 2, 1)) and in_closed_pentablock((0, 2j, -1)))
    chk.append(c)
    c = Check("(lambda, 0, lambda) lifts with H = [[0, -1], [lambda, 0]]")
    lift = polynomial_lift(([0, 1], [0], [0, 1]))
    e = max(float(np.max(np.abs(np.asarray(lift(z)) - np.array([[0, -1], [z, 0]]))))
            for z in (0.0, 0.3, 0.5j, -0.7 + 0.1j))
    c.record(lift.found and e <= 1e-12, e)
    chk.append(c)
    c = Check("(lambda^2, 0, lambda) has no analytic lift")
    c.record(not analytic_lift_exists(([0, 0, 1], [0], [0, 1])).exists)
    chk.append(c)
    c = Check("counterexample at P = 0.5: bound sqrt(1 - 1/9) < 1 and h(1) outside")
    tr = counterexample_trace(0.5)
    e = abs(tr.fiber_bound - math.sqrt(8.0) / 3.0)
    c.record(tr.confirmed and abs(tr.xi - 1.0 / 3.0) <= 1e-15 and e <= 1e-12, e)
    chk.append(c)
    return SuiteResult("regression", chk)


# -- 10 ----------------------------------------------------------------------


def suite_starlike(n: int = 1000, seed: int = 0) -> SuiteResult:
    rng = np.random.default_rng(seed)
    neg = Check("starlike derivative is negative")
    fd = Check("derivative matches finite differences to 1e-6 (relative)")
    for q in S.sym_points(rng, n):
        r = float(rng.uniform(0.05, 0.99))
        d = starlike_derivative(r, q)
        neg.record(d < 0.0, d, (r, q))
        h = 1e-4 * r
        num = (-starlike_f(r + 2 * h, q) + 8 * starlike_f(r + h, q)
               - 8 * starlike_f(r - h, q) + starlike_f(r - 2 * h, q)) / (12 * h)
        e = abs(num - d) / max(1.0, abs(d))
        fd.record(e <= 1e-6, e, (r, q))
    scale = Check("scaling by |z| <= 1 stays in the closure, |z| < 1 stays inside")
    members = S.inside_points(rng, 10 * n, 1e-6)
    for x in members:
        zs = S.disc(rng, 100)
        zs[:5] = S.circle(rng, 5)
        for z in zs:
            y = scale_point(x, z)
            ok = in_closed_pentablock(y)
            if abs(z) < 1.0 - SHELL and not near_boundary(y):
                ok = ok and in_pentablock(y)
            scale.record(ok, example=(x, complex(z)))
    return SuiteResult("starlike", [neg, fd, scale])


# -- 11 ----------------------------------------------------------------------


def suite_separation(n: int = 100, seed: int = 0, samples: int = 10_000) -> SuiteResult:
    rng = np.random.default_rng(seed)
    cl = S.closed_points(rng, samples)
    A = np.array([x.a for x in cl])
    Sv = np.array([x.s for x in cl])
    P = np.array([x.p for x in cl])
    out = Check("|f(x)| > 1 at the exterior point")
    inn = Check("max |f| <= 1 over closed-pentablock samples")
    for x in S.exterior_points(rng, n):
        f = separating_polynomial(x)
        fx = abs(complex(f(x.a, x.s, x.p)))
        out.record(fx > 1.0, fx, x)
        m = float(np.max(np.abs(f(A, Sv, P))))
        inn.record(m <= 1.0, m, (x, f.degree))
    return SuiteResult("separation", [out, inn])


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "criteria": suite_criteria,
    "oracle": suite_oracle,
    "identity": suite_identity,
    "lifting": suite_lifting,
    "mu": suite_mu,
    "automorphisms": suite_automorphisms,
    "boundary": suite_boundary,
    "convexity-real": suite_real,
    "regression": suite_regression,
    "starlike": suite_starlike,
    "separation": suite_separation,
}

ALIASES = {
    "criteria-agreement": "criteria",
    "oracle-agreement": "oracle",
    "automorphism-laws": "automorphisms",
    "boundary-roundtrip": "boundary",
    "convexity": "convexity-real",
}


def run_suite(name: str, n: int | None = None, seed: int = 0) -> SuiteResult:
    name = ALIASES.get(name, name)
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'")
    fn = SUITES[name]
    return fn(seed=seed) if n is None else fn(n=n, seed=seed)


def run_all(n: int | None = None, seed: int = 0) -> list[SuiteResult]:
    return [run_suite(name, n, seed) for name in SUITES]
