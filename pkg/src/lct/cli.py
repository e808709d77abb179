"""Command-line interface.

Subcommands::

    lct kernel     --series dk --k 0.5 --basis parabolic --matrix 0,1,-1,0
    lct transform  --matrix 0,1,-1,0 --in signal.csv --out image.csv
    lct verify     --suite composition|reconstruction|all [--quick]
    lct specfun eval --func hyp1f1 --args 0.5,1.5,2j
    lct basis eval --series dk --k 0.75 --basis elliptic --index 2

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
Numbers in CSV output carry 17 significant digits; JSON reports carry a
``schemaVersion`` field.
"""

import argparse
import contextlib
import csv
import json
import math
import sys
import warnings

import numpy as np

from . import bases, engine, kernels, specfun, suite
from .bases import ContinuousLabel, DiscreteLabel, Sign
from .errors import GridTooCoarse, LCTError, ParseError, UnsupportedCombination
from .symplectic import GroupElement

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

SCHEMA_VERSION = 1

SERIES = ("line", "dk", "dkminus", "cont")
BASES = ("elliptic", "parabolic", "parabolic-plus", "hyperbolic-j1", "hyperbolic-j2")

# What `kernel` can produce for each (series, basis) pair.
KERNEL_SUPPORT = {
    ("line", "parabolic"): "line kernel C_M(x, x')",
    ("dk", "parabolic"): "radial kernel",
    ("dkminus", "parabolic"): "radial kernel",
    ("dk", "parabolic-plus"): "kernel in the J+ basis",
    ("dkminus", "parabolic-plus"): "kernel in the J+ basis",
    ("dk", "elliptic"): "oscillator-basis matrix",
    ("dkminus", "elliptic"): "oscillator-basis matrix",
    ("dk", "hyperbolic-j2"): "Mellin-basis kernel",
    ("dkminus", "hyperbolic-j2"): "Mellin-basis kernel",
    ("dk", "hyperbolic-j1"): "repulsive-oscillator-basis kernel",
    ("dkminus", "hyperbolic-j1"): "repulsive-oscillator-basis kernel",
    ("cont", "parabolic"): "2x2 radial kernel blocks",
    ("cont", "elliptic"): "oscillator-basis matrix",
    ("cont", "hyperbolic-j2"): "2x2 Mellin-basis kernel blocks",
}

# What `basis eval` can sample.
BASIS_SUPPORT = {
    ("dk", "elliptic"): "Laguerre oscillator function",
    ("dk", "parabolic-plus"): "Bessel function",
    ("dk", "hyperbolic-j1"): "confluent repulsive-oscillator function",
    ("dk", "hyperbolic-j2"): "Mellin power",
    ("cont", "elliptic"): "two-component Whittaker function",
    ("cont", "hyperbolic-j2"): "two-component Mellin power",
}

EXCLUDED_SERIES = {
    "exceptional": "the exceptional continuous series (k = 1/2 + s, 0 < s < 1/2) "
                   "is outside the treated representations",
}

SPECFUN_TABLE = {
    "gamma": (specfun.gamma, 1),
    "log_gamma": (specfun.log_gamma, 1),
    "rgamma": (specfun.rgamma, 1),
    "hyp1f1": (specfun.hyp1f1, 3),
    "hyp2f1": (specfun.hyp2f1, 4),
    "bessel_j": (specfun.bessel_j, 2),
    "bessel_y0": (specfun.bessel_y0, 1),
    "hankel1": (lambda nu, x: specfun.hankel(1, nu, x), 2),
    "hankel2": (lambda nu, x: specfun.hankel(2, nu, x), 2),
    "macdonald": (specfun.macdonald_imaginary_order, 2),
    "whittaker_m": (specfun.whittaker_m, 3),
    "whittaker_w": (specfun.whittaker_w, 3),
    "laguerre": (lambda n, alpha, x: specfun.laguerre(int(n.real), alpha, x), 3),
}


class UsageError(Exception):
    pass


def fmt(x):
    return format(float(x), ".17g")


# ---------------------------------------------------------------------------
# Argument parsing helpers
# ---------------------------------------------------------------------------

def parse_matrix(text):
    try:
        vals = [float(v) for v in text.split(",")]
    except ValueError:
        raise UsageError(f"--matrix expects four numbers a,b,c,d, got {text!r}")
    if len(vals) != 4:
        raise UsageError("--matrix expects four numbers a,b,c,d")
    try:
        return GroupElement(*vals)
    except ValueError as exc:
        raise UsageError(str(exc))


def parse_grid(text, default):
    if text is None:
        return default
    try:
        n, extent = text.split(",")
        return int(n), float(extent)
    except ValueError:
        raise UsageError(f"--grid expects n,extent, got {text!r}")


def parse_complex(text):
    try:
        return complex(text.replace(" ", ""))
    except ValueError:
        raise UsageError(f"cannot read {text!r} as a number")


def _check_series(series):
    if series in EXCLUDED_SERIES:
        raise UnsupportedCombination(f"series {series!r}: {EXCLUDED_SERIES[series]}")
    if series not in SERIES:
        raise UsageError(f"unknown series {series!r}; choose from {', '.join(SERIES)}")


def _label(args, series):
    if series in ("dk", "dkminus"):
        if args.k is None:
            raise UsageError("--k is required for the discrete series")
        try:
            return DiscreteLabel(args.k, Sign.MINUS if series == "dkminus" else Sign.PLUS)
        except ValueError as exc:
            raise UsageError(str(exc))
    if series == "cont":
        if args.eps is None or args.s is None:
            raise UsageError("--eps and --s are required for the continuous series")
        try:
            return ContinuousLabel(args.eps, args.s)
        except ValueError as exc:
            raise UsageError(str(exc))
    return None


def _lookup(table, series, basis, what):
    _check_series(series)
    if basis not in BASES:
        raise UsageError(f"unknown basis {basis!r}; choose from {', '.join(BASES)}")
    if (series, basis) not in table:
        raise UnsupportedCombination(f"{what} is not available for series {series!r} "
                                     f"in the {basis!r} basis")
    return table[(series, basis)]


# ---------------------------------------------------------------------------
# CSV input/output
# ---------------------------------------------------------------------------

def write_rows(stream, header, rows):
    w = csv.writer(stream, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([v if isinstance(v, str) else fmt(v) for v in row])


@contextlib.contextmanager
def _open_out(path):
    if path in (None, "-"):
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def read_signal(path):
    """Read a sampled signal.

    Returns ``(kind, nodes, columns)`` where ``kind`` is ``"x"``, ``"r"`` or
    ``"two"`` and ``columns`` holds one complex array (two for ``"two"``).
    """
    try:
        fh = sys.stdin if path == "-" else open(path, newline="")
    except OSError as exc:
        raise UsageError(f"cannot open {path}: {exc.strerror}")
    with fh:
        reader = csv.reader(fh)
        try:
            header = [h.strip() for h in next(reader)]
        except StopIteration:
            raise ParseError("empty file", 1)
        layouts = {("x", "re", "im"): "x", ("r", "re", "im"): "r",
                   ("r", "re_p", "im_p", "re_m", "im_m"): "two"}
        kind = layouts.get(tuple(header))
        if kind is None:
            raise ParseError(f"unrecognized header {','.join(header)!r}", 1)
        data, linenos = [], []
        for lineno, row in enumerate(reader, start=2):
            if not row or all(not c.strip() for c in row):
                continue
            if len(row) != len(header):
                raise ParseError(f"expected {len(header)} fields, found {len(row)}", lineno)
            try:
                vals = [float(c) for c in row]
            except ValueError:
                raise ParseError(f"non-numeric field in {','.join(row)!r}", lineno)
            if not all(math.isfinite(v) for v in vals):
                raise ParseError("non-finite value", lineno)
            data.append(vals)
            linenos.append(lineno)
    if len(data) < 2:
        raise ParseError("need at least two samples", len(data) + 1)
    arr = np.array(data)
    bad = np.flatnonzero(np.diff(arr[:, 0]) <= 0)
    if bad.size:
        raise ParseError("sample positions must be strictly increasing", linenos[bad[0] + 1])
    if kind in ("r", "two") and arr[0, 0] <= 0:
        raise ParseError("radial positions must be positive", linenos[0])
    if kind == "two":
        return kind, arr[:, 0], (arr[:, 1] + 1j * arr[:, 2], arr[:, 3] + 1j * arr[:, 4])
    return kind, arr[:, 0], (arr[:, 1] + 1j * arr[:, 2],)


def _match_grid(nodes, kind, grid_arg):
    """Use the engine's Gauss-Legendre grid when the nodes are its nodes."""
    n = len(nodes)
    candidates = []
    if n % engine.PANEL_ORDER == 0:
        if kind == "x":
            extents = [grid_arg[1]] if grid_arg else [engine.DEFAULT_X_RANGE[1]]
            candidates = [engine.line_grid(n, (-x, x)) for x in extents]
        else:
            extents = [grid_arg[1]] if grid_arg else [engine.DEFAULT_R_MAX]
            candidates = [engine.radial_grid(n, r) for r in extents]
    for g in candidates:
        if np.allclose(g.nodes, nodes, rtol=1e-12, atol=1e-12):
            return g, "Gauss-Legendre weights"
    return engine.grid_from_nodes(nodes), "trapezoid weights on the given nodes"


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def _positions(kind, n, extent):
    if kind == "line":
        return np.linspace(-extent, extent, n)
    return np.linspace(extent / n, extent, n)


def cmd_kernel(args):
    series = args.series
    basis = args.basis
    _lookup(KERNEL_SUPPORT, series, basis, "a kernel")
    label = _label(args, series)
    m = _matrix(args)
    eps_b = args.eps_b
    out = []
    if basis in ("parabolic", "parabolic-plus"):
        n, extent = parse_grid(args.grid, (64, 8.0))
        pts = _positions("line" if series == "line" else "radial", n, extent)
        X, XP = np.meshgrid(pts, pts, indexing="ij")
        if abs(m.b) < eps_b and basis == "parabolic":
            if series == "line":
                kv = kernels.classic_kernel_b0(m, pts, eps_b)
            elif series == "cont":
                kv = None
                header = ["sigma", "row", "support", "re", "im"]
                for sg in (1, -1):
                    kv = kernels.cont_radial_b0(label, m, sg, pts, eps_b)
                    out += [(sg, x, s, v.real, v.imag)
                            for x, s, v in zip(pts, kv.support, kv.amplitude)]
                return header, out
            else:
                kv = kernels.radial_kernel_b0(label, m, pts, eps_b)
            return (["row", "support", "re", "im"],
                    [(x, s, v.real, v.imag) for x, s, v in zip(pts, kv.support, kv.amplitude)])
        if series == "line":
            vals = kernels.classic_kernel(m, X, XP, eps_b).value
        elif series == "cont":
            header = ["sigma", "sigmap", "row", "col", "re", "im"]
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                for sg in (1, -1):
                    for sp in (1, -1):
                        v = kernels.cont_radial_kernel(label, m, sg, X, sp, XP, eps_b).value
                        out += [(sg, sp, x, y, z.real, z.imag)
                                for x, y, z in zip(X.ravel(), XP.ravel(), v.ravel())]
            return header, out
        elif basis == "parabolic":
            vals = kernels.radial_kernel(label, m, X, XP, eps_b).value
        else:
            vals = kernels.jplus_kernel(label, m, X, XP, eps_b).value
        return (["row", "col", "re", "im"],
                [(x, y, z.real, z.imag) for x, y, z in zip(X.ravel(), XP.ravel(), vals.ravel())])
    if basis == "elliptic":
        n, _ = parse_grid(args.grid, (8, 0.0))
        if series == "cont":
            idx = [label.epsilon + j for j in range(-(n // 2), n - n // 2)]
            elem = kernels.cont_elliptic_element
        else:
            idx = [label.k + j for j in range(n)]
            elem = kernels.dk_matrix_element
        return (["row", "col", "re", "im"],
                [(i, j, z.real, z.imag) for i in idx for j in idx
                 for z in [elem(label, m, i, j)]])
    n, extent = parse_grid(args.grid, (9, 1.0))
    mus = np.linspace(-extent, extent, n)
    if series == "cont":
        rows = [(t, tp, mu, mup, z.real, z.imag)
                for t in (1, -1) for tp in (1, -1) for mu in mus for mup in mus
                for z in [kernels.cont_hyperbolic_element(label, m, t, mu, tp, mup, eps_b)]]
        return ["tau", "taup", "row", "col", "re", "im"], rows
    elem = kernels.dk_hyperbolic_element if basis == "hyperbolic-j2" else kernels.reposc_element
    return (["row", "col", "re", "im"],
            [(mu, mup, z.real, z.imag) for mu in mus for mup in mus
             for z in [elem(label, m, mu, mup, eps_b)]])


def cmd_transform(args):
    m = _matrix(args)
    kind, nodes, cols = read_signal(args.input)
    series = args.series
    if series is None:
        series = {"x": "line", "r": "dk", "two": "cont"}[kind]
    _check_series(series)
    expected = {"line": "x", "dk": "r", "dkminus": "r", "cont": "two"}[series]
    if kind != expected:
        raise UsageError(f"series {series!r} needs a {expected!r}-type CSV")
    label = _label(args, series)
    grid_arg = parse_grid(args.grid, None)
    grid, rule = _match_grid(nodes, kind, grid_arg)
    report = engine.TransformReport()
    report.notes.append(f"quadrature: {rule}")
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", GridTooCoarse)
        if series == "cont":
            f = engine.TwoComponentSampled(grid, *cols)
            res = engine.apply_cont_radial(label, m, f, report, args.eps_b)
            before, after = f.norm(), res.norm()
            out_cols = (res.plus, res.minus)
        else:
            f = engine.SampledFunction(grid, cols[0])
            if series == "line":
                res = engine.apply_classic(m, f, report, args.eps_b)
            else:
                res = engine.apply_radial(label, m, f, report, args.eps_b)
            before, after = f.norm(), res.norm()
            out_cols = (res.values,)
    for w in caught:
        if issubclass(w.category, GridTooCoarse) and "GridTooCoarse" not in report.flags:
            report.flags.append("GridTooCoarse")
    if abs(m.b) < args.eps_b:
        report.notes.append("b = 0: delta-line action by interpolation; unitarityDefect not measured")
    elif grid.size <= 1024:
        if series == "cont":
            U = engine.cont_matrix(label, m, grid)
            w2 = np.concatenate([grid.weights, grid.weights])
            report.unitarity_defect = engine.unitarity_defect(U, w2)
        elif series == "line":
            report.unitarity_defect = engine.unitarity_defect(engine.classic_matrix(m, grid), grid.weights)
        else:
            report.unitarity_defect = engine.unitarity_defect(
                engine.radial_matrix(label, m, grid), grid.weights)
    report.max_abs_error = abs(after - before) / before if before > 0 else 0.0
    report.notes.append("maxAbsError is the relative change of the L2 norm")
    report.notes.append("composition sign not measured by this command")
    if series == "cont":
        header = ["r", "re_p", "im_p", "re_m", "im_m"]
        rows = [(r, p.real, p.imag, q.real, q.imag) for r, p, q in zip(nodes, *out_cols)]
    else:
        header = ["x" if kind == "x" else "r", "re", "im"]
        rows = [(r, v.real, v.imag) for r, v in zip(nodes, out_cols[0])]
    return header, rows, report


def cmd_verify(args):
    keys = list(suite.CHECKS) if args.suite == "all" else [args.suite]
    results = []
    for key in keys:
        res = suite.run_check(key, quick=args.quick)
        print(res.line(), file=sys.stderr, flush=True)
        results.append(res)
    summary = {"schemaVersion": SCHEMA_VERSION, "quick": bool(args.quick),
               "passed": all(r.passed for r in results),
               "checks": [r.to_dict() for r in results]}
    return summary


def cmd_specfun(args):
    if args.func not in SPECFUN_TABLE:
        raise UsageError(f"unknown function {args.func!r}; choose from {', '.join(SPECFUN_TABLE)}")
    fn, arity = SPECFUN_TABLE[args.func]
    vals = [parse_complex(t) for t in args.args.split(",")] if args.args else []
    if len(vals) != arity:
        raise UsageError(f"{args.func} takes {arity} argument(s), got {len(vals)}")
    real_only = {"bessel_j", "bessel_y0", "hankel1", "hankel2", "macdonald", "whittaker_w", "laguerre"}
    if args.func in real_only:
        if any(v.imag != 0 for v in vals):
            raise UsageError(f"{args.func} takes real arguments here")
        vals = [v.real for v in vals]
    if args.func == "laguerre":
        vals[0] = complex(vals[0])
    val = complex(np.asarray(fn(*vals)))
    return ["re", "im"], [(val.real, val.imag)]


def cmd_basis(args):
    series = args.series
    basis = args.basis
    _lookup(BASIS_SUPPORT, series, basis, "basis sampling")
    label = _label(args, series)
    n, extent = parse_grid(args.grid, (64, 8.0))
    r = _positions("radial", n, extent)
    idx = args.index
    if series == "cont":
        if basis == "elliptic":
            plus, minus = bases.phi0_continuous(label, idx, r)
        else:
            plus, minus = bases.phi2_continuous(args.tau, idx, r)
        return (["r", "re_p", "im_p", "re_m", "im_m"],
                [(x, p.real, p.imag, q.real, q.imag) for x, p, q in zip(r, plus, minus)])
    if basis == "elliptic":
        if idx < 0 or int(idx) != idx:
            raise UsageError("--index must be a non-negative integer n for the elliptic basis")
        vals = bases.phi0_discrete(label, int(idx), r)
    elif basis == "parabolic-plus":
        vals = bases.phi_plus_discrete(label, idx, r)
    elif basis == "hyperbolic-j1":
        vals = bases.phi1_discrete(label, idx, r)
    else:
        vals = bases.phi2_discrete(idx, r)
    vals = np.asarray(vals, dtype=complex)
    return ["r", "re", "im"], [(x, v.real, v.imag) for x, v in zip(r, vals)]


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _add_selectors(p, basis_default=None):
    p.add_argument("--series", help="line, dk, dkminus or cont")
    p.add_argument("--k", type=float, help="Bargmann index of the discrete series")
    p.add_argument("--eps", type=float, help="epsilon (0 or 0.5) of the continuous series")
    p.add_argument("--s", type=float, help="s of the continuous series, k = 1/2 + i s")
    p.add_argument("--basis", default=basis_default, help=", ".join(BASES))
    p.add_argument("--grid", help="n,extent (points and r_max, x_max or mu_max)")
    p.add_argument("--eps-b", type=float, default=kernels.EPS_B,
                   help="threshold below which |b| counts as zero (default %(default)g)")


def _add_matrix(p):
    p.add_argument("--matrix", help="a,b,c,d")
    p.add_argument("entries", nargs="*", metavar="a b c d", help="the matrix as four positional numbers")


def _matrix(args):
    if (args.matrix is None) == (not args.entries):
        raise UsageError("give the matrix either as --matrix a,b,c,d or as four positional numbers")
    if args.matrix is not None:
        return parse_matrix(args.matrix)
    if len(args.entries) != 4:
        raise UsageError(f"expected four matrix entries, found {len(args.entries)}")
    return parse_matrix(",".join(args.entries))


def build_parser():
    parser = _Parser(prog="lct", description="Linear canonical transforms of SL(2,R) representations.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("kernel", help="tabulate a kernel or matrix block as CSV")
    _add_selectors(p, "parabolic")
    _add_matrix(p)
    p.add_argument("--out", help="output CSV path (default stdout)")

    p = sub.add_parser("transform", help="apply a transform to a sampled signal")
    _add_selectors(p)
    _add_matrix(p)
    p.add_argument("--in", dest="input", required=True, help="input CSV (x,re,im | r,re,im | r,re_p,im_p,re_m,im_m)")
    p.add_argument("--out", help="output CSV path (default stdout)")
    p.add_argument("--report", help="report JSON path (default stderr)")

    p = sub.add_parser("verify", help="run acceptance checks")
    p.add_argument("--suite", default="all", help="all or one of: " + ", ".join(suite.CHECKS))
    p.add_argument("--quick", action="store_true", help="reduced sizes for a fast pass")
    p.add_argument("--out", help="summary JSON path (default stdout)")

    p = sub.add_parser("specfun", help="evaluate a special function")
    ssub = p.add_subparsers(dest="action", parser_class=_Parser)
    e = ssub.add_parser("eval")
    e.add_argument("--func", required=True, help=", ".join(SPECFUN_TABLE))
    e.add_argument("--args", default="", help="comma-separated arguments, complex allowed (e.g. 1+2j)")

    p = sub.add_parser("basis", help="sample a basis function")
    bsub = p.add_subparsers(dest="action", parser_class=_Parser)
    e = bsub.add_parser("eval")
    _add_selectors(e, "elliptic")
    e.add_argument("--index", type=float, required=True, help="n, m, rho or mu")
    e.add_argument("--tau", type=int, default=1, choices=(1, -1))
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a command is required: kernel, transform, verify, specfun, basis")
        if args.command in ("specfun", "basis") and args.action != "eval":
            raise UsageError(f"usage: lct {args.command} eval ...")
        if args.command == "kernel":
            if args.series is None:
                raise UsageError("--series is required")
            header, rows = cmd_kernel(args)
            with _open_out(args.out) as fh:
                write_rows(fh, header, rows)
            return EXIT_OK
        if args.command == "transform":
            header, rows, report = cmd_transform(args)
            with _open_out(args.out) as fh:
                write_rows(fh, header, rows)
            text = report.to_json()
            if args.report:
                with open(args.report, "w") as fh:
                    fh.write(text + "\n")
            else:
                print(text, file=sys.stderr)
            return EXIT_OK
        if args.command == "verify":
            if args.suite != "all" and args.suite not in suite.CHECKS:
                raise UsageError(f"unknown suite {args.suite!r}")
            summary = cmd_verify(args)
            text = json.dumps(summary, indent=2, sort_keys=True)
            if args.out:
                with open(args.out, "w") as fh:
                    fh.write(text + "\n")
            else:
                print(text)
            return EXIT_OK if summary["passed"] else EXIT_FAILED
        if args.command == "specfun":
            header, rows = cmd_specfun(args)
        else:
            header, rows = cmd_basis(args)
        write_rows(sys.stdout, header, rows)
        return EXIT_OK
    except (UsageError, ParseError, UnsupportedCombination) as exc:
        print(f"lct: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except LCTError as exc:
        print(f"lct: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
