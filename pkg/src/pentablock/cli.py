"""Command-line front end.

Complex numbers are written ``re,im`` on the command line (a bare real is
accepted) and ``[re, im]`` in JSON output.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import re
import sys

import numpy as np

from . import boundary, domain, lifting, mu, real_geometry
from .automorphisms import AutoParams, F_apply, f_apply
from .matrix_core import pi_map
from .selftest import ALIASES, SUITES, run_suite
from .symmetrised_bidisc import beta_of, in_bGamma, in_G, in_Gamma, roots_of

EXIT_OK, EXIT_USAGE, EXIT_SUITE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # let "-1,0" through as a value rather than an option
        self._negative_number_matcher = re.compile(r"^-\.?\d")

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_complex(text: str) -> complex:
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise argparse.ArgumentTypeError(f"expected 're,im', got {text!r}")


def _encode(obj):
    if isinstance(obj, (complex, np.complexfloating)):
        return [float(obj.real), float(obj.imag)]
    if isinstance(obj, np.ndarray):
        return [_encode(v) for v in obj.tolist()]
    if isinstance(obj, (list, tuple)):
        return [_encode(v) for v in obj]
    if isinstance(obj, dict):
        return {k: _encode(v) for k, v in obj.items()}
    if isinstance(obj, (np.floating, np.integer, np.bool_)):
        return obj.item()
    return obj


def _flatten(prefix: str, obj, out: list):
    if isinstance(obj, dict):
        for k, v in obj.items():
            _flatten(f"{prefix}.{k}" if prefix else k, v, out)
    elif isinstance(obj, (complex, np.complexfloating)):
        out.append((f"{prefix}.re", float(obj.real)))
        out.append((f"{prefix}.im", float(obj.imag)))
    elif isinstance(obj, (list, tuple, np.ndarray)):
        for i, v in enumerate(obj):
            _flatten(f"{prefix}[{i}]", v, out)
    else:
        out.append((prefix, obj))


def _write(text: str, path: str | None):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="") as fh:
            fh.write(text)


def emit_report(report: dict, args) -> None:
    if args.format == "csv":
        rows: list = []
        _flatten("", report, rows)
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["key", "value"])
        w.writerows(rows)
        _write(buf.getvalue(), args.out)
    else:
        _write(json.dumps(_encode(report), indent=2, sort_keys=True) + "\n", args.out)


def emit_table(header: list[str], rows: list, args) -> None:
    if args.format == "json":
        _write(json.dumps([dict(zip(header, r)) for r in rows], indent=1) + "\n", args.out)
        return
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    _write(buf.getvalue(), args.out)


# -- commands ----------------------------------------------------------------


def cmd_query(args) -> int:
    a, s, p = args.point
    x = (a, s, p)
    q = (s, p)
    rep = {
        "point": {"a": a, "s": s, "p": p},
        "criteria": {c: domain.in_pentablock(x, c) for c in domain.CRITERIA},
        "open": domain.in_pentablock(x),
        "closed": domain.in_closed_pentablock(x, args.tol),
        "in_G": in_G(q),
        "in_Gamma": in_Gamma(q, args.tol),
        "in_bGamma": in_bGamma(q),
        "roots": list(roots_of(q)),
        "G_margin": 1.0 - abs(p) ** 2 - abs(s - s.conjugate() * p),
        "in_K1": boundary.in_K1(x),
        "in_bP": boundary.in_bP(x),
    }
    if in_Gamma(q, args.tol):
        r = domain.fiber_radius(q, args.tol)
        rep["beta"] = beta_of(q, args.tol)
        rep["fiber_radius"] = r
        rep["fiber_margin"] = r - abs(a)
    if in_G(q):
        rep["kappa"] = domain.kappa_closed(q)
        rep["kappa_maximizer"] = domain.kappa_maximizer(q)
    emit_report(rep, args)
    return EXIT_OK


def cmd_mu(args) -> int:
    A = np.array(args.matrix, dtype=complex).reshape(2, 2)
    value = mu.mu_value(A)
    oracle = mu.mu_oracle(A, grid=args.oracle_grid)
    rep = {
        "matrix": A,
        "mu": value,
        "oracle": oracle,
        "gap": abs(value - oracle),
        "mu_lt_one": mu.mu_lt_one(A),
        "mu_le_one": mu.mu_le_one(A, args.tol),
        "pi": list(pi_map(A)),
    }
    emit_report(rep, args)
    return EXIT_OK


def _poly_arg(values):
    return np.array(values if values else [0.0], dtype=complex)


def cmd_lift(args) -> int:
    if args.point is not None:
        x = tuple(args.point)
        if args.closed:
            A = lifting.construct_matrix_closed(x, args.tol)
        else:
            A = lifting.construct_matrix(x)
        rep = {"point": list(x), "matrix": A, "norm": float(np.linalg.norm(A, 2)), "pi": list(pi_map(A))}
        emit_report(rep, args)
        return EXIT_OK
    if args.poly_a is None and args.poly_s is None and args.poly_p is None:
        raise UsageError("lift needs --point or polynomial coefficients (--poly-a/--poly-s/--poly-p)")
    h = lifting.PolyTriple(_poly_arg(args.poly_a), _poly_arg(args.poly_s), _poly_arg(args.poly_p))
    report = lifting.analytic_lift_exists(h)
    rep = {
        "exists": report.exists,
        "offending": [{"alpha": o.alpha, "mult_q": o.mult_q, "mult_a": _mult(o.mult_a)} for o in report.offending],
        "ambiguous": [{"alpha": o.alpha, "mult_q": o.mult_q, "mult_a": _mult(o.mult_a)} for o in report.ambiguous],
        "note": report.note,
    }
    if report.exists:
        pl = lifting.polynomial_lift(h)
        rep["status"] = pl.status
        if pl.found:
            rep["eta"] = pl.eta
            rep["g"] = pl.g
            rep["H"] = [[c for c in row] for row in pl.entries()]
        else:
            rep["note"] = pl.note
    emit_report(rep, args)
    return EXIT_OK


def _mult(m):
    return "inf" if m == float("inf") else int(m)


def cmd_auto(args) -> int:
    g = AutoParams.from_values(args.omega, args.eta, args.alpha)
    rep = {"omega": g.omega, "eta": g.mobius.eta, "alpha": g.mobius.alpha}
    if args.point is not None:
        rep["image"] = list(f_apply(g, tuple(args.point)))
    elif args.matrix is not None:
        A = np.array(args.matrix, dtype=complex).reshape(2, 2)
        rep["image"] = F_apply(g, A)
    else:
        raise UsageError("auto needs --point or --matrix")
    emit_report(rep, args)
    return EXIT_OK


def cmd_boundary(args) -> int:
    if args.param is not None:
        xc, theta, omega = args.param
        x = boundary.bP_parametrize(xc.real, theta.real, omega)
        emit_report({"point": list(x), "in_bP": boundary.in_bP(x)}, args)
        return EXIT_OK
    if args.point is None:
        raise UsageError("boundary needs --point or --param")
    x = tuple(args.point)
    rep = {"point": list(x), "in_K1": boundary.in_K1(x), "in_bP": boundary.in_bP(x)}
    if rep["in_bP"]:
        xc, theta, omega = boundary.bP_coordinates(x)
        rep["coordinates"] = {"x": xc, "theta": theta, "omega": omega}
    if all(v.imag == 0 for v in x):
        try:
            fc = real_geometry.classify_face(*(v.real for v in x), tol=max(args.tol, 1e-9))
            rep["real_face"] = {"label": fc.label, "faces": list(fc.faces)}
        except ValueError as exc:
            rep["real_face"] = {"label": None, "reason": str(exc)}
    emit_report(rep, args)
    return EXIT_OK


def cmd_emit_slice(args) -> int:
    n = args.resolution
    if n < 2:
        raise UsageError("--resolution must be at least 2")
    grid = np.linspace(0.0, 1.0, n)
    if args.kind == "real3d":
        rows = []
        for face in real_geometry.FACES:
            for u in grid:
                for v in grid:
                    a, s, p = real_geometry.face_sample(face, u, v)
                    label = real_geometry.classify_face(a, s, p, tol=1e-9).short
                    rows.append((repr(float(a)), repr(float(s)), repr(float(p)), label))
        emit_table(["a", "s", "p", "face"], rows, args)
    elif args.kind == "fiber":
        s, p = args.s, args.p
        r = domain.fiber_radius((s, p), args.tol)
        rows = []
        for t in np.linspace(0.0, 2.0 * math.pi, n, endpoint=False):
            z = r * complex(math.cos(t), math.sin(t))
            rows.append((repr(float(t)), repr(z.real), repr(z.imag), repr(s.real), repr(s.imag),
                         repr(p.real), repr(p.imag)))
        emit_table(["theta", "a_re", "a_im", "s_re", "s_im", "p_re", "p_im"], rows, args)
    else:
        rows = []
        for t in np.linspace(0.0, 2.0 * math.pi, n, endpoint=False):
            rows.append((repr(math.sin(t)), repr(2.0 * math.cos(t)), repr(1.0)))
        emit_table(["a", "s", "p"], rows, args)
    return EXIT_OK


def cmd_selftest(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    ok = True
    for name in names:
        result = run_suite(name, args.n, args.seed)
        print(result.report())
        ok = ok and result.passed
    return EXIT_OK if ok else EXIT_SUITE


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--tol", type=float, default=1e-10, help="tolerance for weak inequalities")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled suites")
    common.add_argument("--oracle-grid", type=float, default=1e-2, help="relative pitch of the mu oracle grid")
    common.add_argument("--out", default=None, help="write output to this path instead of stdout")
    common.add_argument("--format", choices=("json", "csv"), default=None)

    parser = _Parser(prog="pentablock", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def cplx(n):
        return {"type": parse_complex, "nargs": n, "metavar": "RE,IM"}

    p = sub.add_parser("query", parents=[common], help="membership report for a point (a, s, p)")
    p.add_argument("--point", required=True, **cplx(3))
    p.set_defaults(func=cmd_query, default_format="json")

    p = sub.add_parser("mu", parents=[common], help="mu of a 2x2 matrix (row-major entries)")
    p.add_argument("--matrix", required=True, **cplx(4))
    p.set_defaults(func=cmd_mu, default_format="json")

    p = sub.add_parser("lift", parents=[common], help="matrix over a point, or polynomial lifting")
    p.add_argument("--point", **cplx(3))
    p.add_argument("--closed", action="store_true", help="allow closure points (contraction, not strict)")
    p.add_argument("--poly-a", **cplx("+"))
    p.add_argument("--poly-s", **cplx("+"))
    p.add_argument("--poly-p", **cplx("+"))
    p.set_defaults(func=cmd_lift, default_format="json")

    p = sub.add_parser("auto", parents=[common], help="apply an automorphism")
    p.add_argument("--omega", type=parse_complex, default=1 + 0j, metavar="RE,IM")
    p.add_argument("--eta", type=parse_complex, default=1 + 0j, metavar="RE,IM")
    p.add_argument("--alpha", type=parse_complex, default=0j, metavar="RE,IM")
    p.add_argument("--point", **cplx(3))
    p.add_argument("--matrix", **cplx(4))
    p.set_defaults(func=cmd_auto, default_format="json")

    p = sub.add_parser("boundary", parents=[common], help="distinguished-boundary and real-face report")
    p.add_argument("--point", **cplx(3))
    p.add_argument("--param", help="x theta omega", **cplx(3))
    p.set_defaults(func=cmd_boundary, default_format="json")

    p = sub.add_parser("emit-slice", parents=[common], help="sample data for plots")
    p.add_argument("kind", choices=("real3d", "fiber", "ellipse"))
    p.add_argument("--resolution", type=int, default=50)
    p.add_argument("--s", type=parse_complex, default=0j, metavar="RE,IM")
    p.add_argument("--p", type=parse_complex, default=0j, metavar="RE,IM")
    p.set_defaults(func=cmd_emit_slice, default_format="csv")

    p = sub.add_parser("selftest", parents=[common], help="run a property suite")
    p.add_argument("suite", choices=sorted(SUITES) + sorted(ALIASES) + ["all"])
    p.add_argument("-n", type=int, default=None, help="main sample count (suite default if omitted)")
    p.set_defaults(func=cmd_selftest, default_format="json")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = args.default_format
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"pentablock: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, ZeroDivisionError, ArithmeticError) as exc:
        print(f"pentablock: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"pentablock: I/O error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
