import csv
import io
import json
import math
import subprocess
import sys

import numpy as np
import pytest

from lct import engine
from lct.cli import main
from lct.specfun import bessel_j


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def write_gaussian(path, grid):
    x = grid.nodes
    with open(path, "w") as fh:
        fh.write("x,re,im\n")
        for xi, v in zip(x, np.exp(-0.5 * x * x)):
            fh.write(f"{xi:.17g},{v:.17g},0\n")


def test_kernel_dk_parabolic_fourier(capsys):
    code, out, _ = run(capsys, "kernel", "--series", "dk", "--k", "0.5", "--basis", "parabolic",
                       "--grid", "4,3", "--matrix", "0,1,-1,0")
    assert code == 0
    table = rows(out)
    assert list(table[0]) == ["row", "col", "re", "im"] and len(table) == 16
    # At F the k = 1/2 kernel reduces to -i sqrt(r r') J0(r r').
    r = rp = 0.75
    val = complex(float(table[0]["re"]), float(table[0]["im"]))
    assert abs(val + 1j * math.sqrt(r * rp) * bessel_j(0.0, r * rp)) <= 1e-12


def test_kernel_cont_has_component_columns(capsys):
    code, out, _ = run(capsys, "kernel", "--series", "cont", "--eps", "0", "--s", "0.5", "--basis",
                       "parabolic", "--grid", "3,2", "--matrix", "0,-1,1,0")
    assert code == 0
    table = rows(out)
    assert list(table[0])[:2] == ["sigma", "sigmap"]
    assert {(t["sigma"], t["sigmap"]) for t in table} == {("1", "1"), ("1", "-1"), ("-1", "1"), ("-1", "-1")}


@pytest.mark.parametrize("argv", [
    ["kernel", "--series", "exceptional", "--matrix", "1,0,0,1"],
    ["kernel", "--series", "dk", "--matrix", "1,1,1,1"],
    ["kernel", "--series", "dk", "--matrix", "1,0"],
    ["kernel", "--series", "dk", "--basis", "hyperbolic-j1", "--grid", "0,3", "--matrix", "1,0,0,1"],
    ["verify", "--suite", "gauge"],
    ["specfun", "eval", "--func", "zeta", "--args", "2"],
])
def test_usage_errors_exit_two(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and err.startswith("lct: error")


def test_transform_gaussian_through_fourier(tmp_path, capsys):
    grid = engine.line_grid()
    src = tmp_path / "g.csv"
    write_gaussian(src, grid)
    out, rep = tmp_path / "o.csv", tmp_path / "r.json"
    code, _, _ = run(capsys, "transform", "--series", "line", "--matrix", "0,1,-1,0",
                     "--in", str(src), "--out", str(out), "--report", str(rep))
    assert code == 0
    table = rows(out.read_text())
    vals = np.array([complex(float(t["re"]), float(t["im"])) for t in table])
    x = np.array([float(t["x"]) for t in table])
    assert np.max(np.abs(vals - np.exp(-0.25j * math.pi) * np.exp(-0.5 * x * x))) <= 1e-6
    report = json.loads(rep.read_text())
    assert report["schemaVersion"] == engine.REPORT_SCHEMA_VERSION
    assert report["maxAbsError"] <= 1e-6


def test_transform_b_zero_is_noted(tmp_path, capsys):
    grid = engine.line_grid()
    src = tmp_path / "g.csv"
    write_gaussian(src, grid)
    code, out, err = run(capsys, "transform", "--series", "line", "--matrix", "2,0,0.5,0.5", "--in", str(src))
    assert code == 0
    report = json.loads(err)
    assert any("b = 0" in n for n in report["notes"])
    x = np.array([float(t["x"]) for t in rows(out)])
    vals = np.array([complex(float(t["re"]), float(t["im"])) for t in rows(out)])
    # M = [[2, 0], [c, 1/2]] acts as sqrt(d) exp(i c d x^2 / 2) f(d x) up to the metaplectic sign.
    expected = math.sqrt(0.5) * np.exp(0.5j * 0.5 * 0.5 * x * x) * np.exp(-0.5 * (0.5 * x) ** 2)
    inner = np.abs(x) < 4
    assert np.max(np.abs(np.abs(vals[inner]) - np.abs(expected[inner]))) <= 1e-6


@pytest.mark.parametrize("body, line", [
    ("x,re,im\n0,1,0\nfoo,1,0\n", 3),
    ("x,re,im\n0,1,0\n-1,1,0\n", 3),
    ("x,re\n0,1\n", 1),
    ("x,re,im\n0,nan,0\n", 2),
])
def test_transform_malformed_input(tmp_path, capsys, body, line):
    src = tmp_path / "bad.csv"
    src.write_text(body)
    code, _, err = run(capsys, "transform", "--series", "line", "--matrix", "0,-1,1,0", "--in", str(src))
    assert code == 2
    assert f"line {line}" in err


def test_transform_radial_rejects_nonpositive_r(tmp_path, capsys):
    src = tmp_path / "bad.csv"
    src.write_text("r,re,im\n0,1,0\n1,1,0\n")
    code, _, err = run(capsys, "transform", "--series", "dk", "--k", "1", "--matrix", "0,-1,1,0", "--in", str(src))
    assert code == 2


def test_specfun_eval(capsys):
    code, out, _ = run(capsys, "specfun", "eval", "--func", "gamma", "--args", "5")
    assert code == 0
    assert complex(*map(float, rows(out)[0].values())) == pytest.approx(24.0, rel=1e-14)
    code, out, _ = run(capsys, "specfun", "eval", "--func", "hyp1f1", "--args", "1,1,1+1j")
    val = complex(*map(float, rows(out)[0].values()))
    assert val == pytest.approx(np.exp(1 + 1j), rel=1e-13)


def test_basis_eval(capsys):
    code, out, _ = run(capsys, "basis", "eval", "--series", "dk", "--k", "0.5", "--basis", "elliptic",
                       "--index", "0", "--grid", "3,2")
    assert code == 0
    for t in rows(out):
        r = float(t["r"])
        assert float(t["re"]) == pytest.approx(math.sqrt(2 * r) * math.exp(-r * r / 2), rel=1e-13)


def test_verify_exit_codes(capsys):
    code, out, err = run(capsys, "verify", "--suite", "fourier", "--quick")
    assert code == 0 and "[PASS] 1." in err
    assert json.loads(out)["passed"] is True
    code, out, err = run(capsys, "verify", "--suite", "reconstruction", "--quick")
    assert code == 1 and "[FAIL] 3." in err


def test_console_output_is_deterministic():
    argv = [sys.executable, "-m", "lct", "kernel", "--series", "dk", "--k", "0.75", "--basis", "parabolic",
            "--grid", "8,4", "--matrix", "1.2,0.8,-0.3,0.6333333333333333"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second and first.startswith(b"row,col,re,im")


def test_matrix_accepted_as_positional_entries(capsys):
    base = ["kernel", "--series", "dk", "--k", "0.5", "--grid", "3,3"]
    _, flagged, _ = run(capsys, *base, "--matrix", "0,1,-1,0")
    code, positional, _ = run(capsys, *base, "0", "1", "-1", "0")
    assert code == 0 and positional == flagged
    code, _, err = run(capsys, *base, "0", "1", "-1")
    assert code == 2 and "four" in err
