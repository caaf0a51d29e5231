import csv
import io
import json
import math

import pytest

from pentablock.cli import main, parse_complex


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize(
    "point, key, expected",
    [
        (("0,0", "2,0", "1,0"), "open", False),
        (("0,0", "2,0", "1,0"), "closed", True),
        (("0,0", "1,1", "0,0"), "closed", False),
        (("0.5,0", "0,0", "0,0"), "open", True),
    ],
)
def test_query(capsys, point, key, expected):
    code, out, _ = run(capsys, "query", "--point", *point)
    assert code == 0
    assert json.loads(out)[key] is expected


def test_query_report_fields(capsys):
    _, out, _ = run(capsys, "query", "--point", "0.1,0.2", "0.3,0", "0,0.1")
    rep = json.loads(out)
    assert set(rep["criteria"]) == {"beta_form", "root_form", "sup_form"}
    assert rep["fiber_margin"] == pytest.approx(rep["fiber_radius"] - math.hypot(0.1, 0.2))
    assert len(rep["beta"]) == 2 and "kappa" in rep


@pytest.mark.parametrize(
    "entries, expected",
    [(("0", "0", "0.5", "0"), 0.5), (("0", "0", "0", "0"), 0.0), (("0", "1", "0", "0"), 0.0)],
)
def test_mu(capsys, entries, expected):
    code, out, _ = run(capsys, "mu", "--matrix", *entries)
    rep = json.loads(out)
    assert code == 0
    assert rep["mu"] == pytest.approx(expected, abs=1e-12)
    assert rep["gap"] <= 1e-4


def test_mu_identity_half(capsys):
    _, out, _ = run(capsys, "mu", "--matrix", "0.5", "0", "0", "0.5")
    assert json.loads(out)["mu"] <= 0.5 + 1e-12


def test_lift_polynomial(capsys):
    _, out, _ = run(capsys, "lift", "--poly-a", "0", "1", "--poly-s", "0", "--poly-p", "0", "1")
    rep = json.loads(out)
    assert rep["exists"] and rep["status"] == "polynomial"


def test_lift_obstructed(capsys):
    _, out, _ = run(capsys, "lift", "--poly-a", "0", "0", "1", "--poly-s", "0", "--poly-p", "0", "1")
    rep = json.loads(out)
    assert rep["exists"] is False and rep["offending"][0]["mult_a"] == 2


def test_lift_point_csv(capsys):
    code, out, _ = run(capsys, "lift", "--point", "0.5,0", "0,0", "0,0", "--format", "csv")
    rows = dict(csv.reader(io.StringIO(out)))
    assert code == 0 and float(rows["matrix[1][0].re"]) == 0.5


def test_auto(capsys):
    _, out, _ = run(capsys, "auto", "--point", "0.1,0", "0.2,0", "0.05,0")
    assert json.loads(out)["image"] == [[0.1, 0.0], [0.2, 0.0], [0.05, 0.0]]


def test_boundary(capsys):
    _, out, _ = run(capsys, "boundary", "--point", "1,0", "0,0", "-1,0")
    rep = json.loads(out)
    assert rep["in_bP"] and rep["coordinates"]["theta"] == pytest.approx(math.pi)
    assert rep["real_face"]["label"] == "vertex"


def test_emit_real3d(tmp_path, capsys):
    path = tmp_path / "real.csv"
    assert main(["emit-slice", "real3d", "--resolution", "7", "--out", str(path)]) == 0
    rows = list(csv.DictReader(path.open()))
    assert set(rows[0]) == {"a", "s", "p", "face"}
    assert {r["face"] for r in rows} <= {"T+", "T-", "E", "S+", "S-", "edge", "vertex"}
    assert {"T+", "T-", "E", "S+", "S-"} <= {r["face"] for r in rows}


def test_emit_deterministic(tmp_path):
    p1, p2 = tmp_path / "a.csv", tmp_path / "b.csv"
    main(["emit-slice", "real3d", "--resolution", "5", "--out", str(p1)])
    main(["emit-slice", "real3d", "--resolution", "5", "--out", str(p2)])
    assert p1.read_bytes() == p2.read_bytes()


def test_emit_fiber(capsys):
    _, out, _ = run(capsys, "emit-slice", "fiber", "--resolution", "16")
    for r in csv.DictReader(io.StringIO(out)):
        assert math.hypot(float(r["a_re"]), float(r["a_im"])) == pytest.approx(1.0)


def test_emit_ellipse_json(capsys):
    _, out, _ = run(capsys, "emit-slice", "ellipse", "--resolution", "12", "--format", "json")
    for r in json.loads(out):
        assert float(r["a"]) ** 2 + float(r["s"]) ** 2 / 4 == pytest.approx(1.0)


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest", "identity", "-n", "50", "--seed", "7")
    assert code == 0 and out.startswith("PASS")


def test_selftest_alias(capsys):
    code, out, _ = run(capsys, "selftest", "convexity", "-n", "20")
    assert code == 0


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["query", "--point", "x", "0", "0"])
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 1
    assert main(["lift"]) == 1
    assert main(["query", "--point", "0", "0", "0", "--out", "/nonexistent/dir/x"]) == 1


def test_parse_complex():
    assert parse_complex("1.5,-2") == complex(1.5, -2)
    assert parse_complex("3") == 3
