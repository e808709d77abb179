"""Acceptance checks, one function per criterion.

Each check returns a :class:`CheckResult` whose ``passed`` field applies the
stated tolerance literally.  ``details`` carries the measured numbers and
any supplementary diagnostics; a check never loosens its own threshold.
``quick=True`` shrinks sample counts and grids for a fast smoke run.
"""

from dataclasses import dataclass, field
import math
import time
import warnings

import numpy as np

from . import engine, kernels, specfun
from .bases import ContinuousLabel, DiscreteLabel, phi0_continuous, phi0_discrete
from .errors import LCTError, Undetermined, UnderflowWarning
from .symplectic import (FOURIER, LORENTZ_METRIC, GroupElement, SubgroupTag,
                         compose, random_element, subgroup_element, to_lorentz)


@dataclass
class CheckResult:
    name: str
    passed: bool
    details: dict = field(default_factory=dict)
    seconds: float = 0.0

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.name} ({self.seconds:.1f} s)"

    def to_dict(self):
        return {"name": self.name, "passed": bool(self.passed),
                "seconds": round(self.seconds, 3), "details": _plain(self.details)}


def _plain(obj):
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, (np.floating, float)):
        return float(obj)
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.bool_,)):
        return bool(obj)
    if isinstance(obj, complex):
        return [obj.real, obj.imag]
    return obj


def _timed(name, fn, quick):
    t0 = time.perf_counter()
    try:
        passed, details = fn(quick)
    except LCTError as exc:
        passed, details = False, {"error": f"{type(exc).__name__}: {exc}"}
    return CheckResult(name, bool(passed), details, time.perf_counter() - t0)


def _wnorm(v, w):
    return math.sqrt(float(np.sum(w * np.abs(v) ** 2)))


# ---------------------------------------------------------------------------
# 1. Fourier identification
# ---------------------------------------------------------------------------

def _fourier(quick):
    g = engine.line_grid()
    x, w = g.nodes, g.weights
    probes = engine.hermite_functions(x, 3 if quick else 6)
    errs = []
    for n in range(probes.shape[1]):
        f = engine.SampledFunction(g, probes[:, n])
        out = engine.apply_classic(FOURIER, f).values
        # ordinary Fourier transform of psi_n is (-i)^n psi_n
        ref = np.exp(-0.25j * math.pi) * (-1j) ** n * probes[:, n]
        errs.append(_wnorm(out - ref, w) / _wnorm(ref, w))
    eighth = []
    for n in range(probes.shape[1]):
        f = engine.SampledFunction(g, probes[:, n])
        for _ in range(8):
            f = engine.apply_classic(FOURIER, f)
        eighth.append(_wnorm(f.values - probes[:, n], w) / _wnorm(probes[:, n], w))
    ok = max(errs) <= 1e-6 and max(eighth) <= 1e-5
    return ok, {"maxRelErrorFourier": max(errs), "maxRelErrorEighthPower": max(eighth)}


# ---------------------------------------------------------------------------
# 2. Metaplectic composition
# ---------------------------------------------------------------------------

def composition_pairs(count, seed=2024, min_b=0.1, scale=1.5, bound=3.0):
    """Random pairs whose factors and product all have ``|b| >= min_b``.

    Entries are also kept below ``bound`` so that a 1024-node grid on
    ``[-10, 10]`` resolves every chirp met along the way.
    """
    rng = np.random.default_rng(seed)

    def fine(m):
        return abs(m.b) >= min_b and max(abs(m.a), abs(m.b), abs(m.c), abs(m.d)) <= bound

    pairs = []
    while len(pairs) < count:
        m1 = random_element(rng, scale, min_b)
        m2 = random_element(rng, scale, min_b)
        if fine(m1) and fine(m2) and fine(compose(m1, m2)):
            pairs.append((m1, m2))
    return pairs


def _composition(quick):
    g = engine.line_grid(1024, (-10.0, 10.0))
    probe = engine.SampledFunction(g, np.exp(-0.5 * g.nodes ** 2))
    pairs = composition_pairs(20 if quick else 100)
    signs, residuals, undetermined = [], [], 0
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        for m1, m2 in pairs:
            res = engine.composition_residuals(m1, m2, engine.apply_classic, probe)
            best = min(res, key=res.get)
            residuals.append(res[best])
            try:
                signs.append(engine.composition_sign(m1, m2, engine.apply_classic, probe))
            except Undetermined:
                undetermined += 1
    ok = undetermined == 0 and max(residuals) <= 1e-4
    return ok, {"pairs": len(pairs), "maxResidual": max(residuals),
                "plusCount": signs.count(1), "minusCount": signs.count(-1),
                "undetermined": undetermined}


# ---------------------------------------------------------------------------
# 3. k = 1/4 and 3/4 reconstruction of the line kernel
# ---------------------------------------------------------------------------

def _reconstruction(quick):
    rng = np.random.default_rng(7)
    r = np.linspace(0.3, 2.5, 5)
    R, RP = np.meshgrid(r, r, indexing="ij")
    d14, d34 = DiscreteLabel(0.25), DiscreteLabel(0.75)
    literal, even, odd = [], [], []
    for _ in range(3 if quick else 10):
        m = random_element(rng, 1.5, 0.2)
        lo = kernels.radial_kernel(d14, m, R, RP).value
        hi = kernels.radial_kernel(d34, m, R, RP).value
        c_same = kernels.classic_kernel(m, R, RP).value
        c_flip = kernels.classic_kernel(m, R, -RP).value
        literal.append(np.max(np.abs(lo + hi - c_same)))
        even.append(np.max(np.abs(lo - (c_same + c_flip))))
        odd.append(np.max(np.abs(hi - (c_same - c_flip))))
    ok = max(literal) <= 1e-10
    return ok, {"literalMaxError": max(literal),
                "evenPartMaxError": max(even), "oddPartMaxError": max(odd),
                "note": "D(1/4) + D(3/4) equals 2 C(r, r'); the parity split is the exact identity"}


# ---------------------------------------------------------------------------
# 4. Discretized unitarity
# ---------------------------------------------------------------------------

def _cont_basis(label, grid, count):
    cols = []
    eps = label.epsilon
    for j in range(-(count // 2), count - count // 2):
        p, mi = phi0_continuous(label, eps + j, grid.nodes)
        cols.append(np.concatenate([p, mi]))
    return np.array(cols).T


def _unitarity(quick):
    m = GroupElement(1.0, 1.0, 0.0, 1.0)
    sizes = (256,) if quick else (256, 512)
    lit = {}
    restricted = {}
    for n in sizes:
        lg = engine.line_grid(n)
        U = engine.classic_matrix(FOURIER, lg)
        lit[f"classic/{n}"] = engine.unitarity_defect(U, lg.weights)
        if n == 256:
            restricted["classic"] = engine.restricted_unitarity_defect(
                U, lg.weights, engine.hermite_functions(lg.nodes, 12))
        rg = engine.radial_grid(n)
        for k in (0.5, 1.0, 1.5):
            lab = DiscreteLabel(k)
            U = engine.radial_matrix(lab, m, rg)
            lit[f"radial k={k}/{n}"] = engine.unitarity_defect(U, rg.weights)
            if n == 256:
                V = np.array([phi0_discrete(lab, j, rg.nodes) for j in range(12)]).T
                restricted[f"radial k={k}"] = engine.restricted_unitarity_defect(U, rg.weights, V)
        lab = ContinuousLabel(0.0, 0.7)
        U = engine.cont_matrix(lab, m, rg)
        w2 = np.concatenate([rg.weights, rg.weights])
        lit[f"cont/{n}"] = engine.unitarity_defect(U, w2)
        if n == 256:
            restricted["cont"] = engine.restricted_unitarity_defect(U, w2, _cont_basis(lab, rg, 8))
    at256 = [v for key, v in lit.items() if key.endswith("/256")]
    ok = max(at256) <= 1e-3
    if not quick:
        for key in [k for k in lit if k.endswith("/256")]:
            ok = ok and lit[key.replace("/256", "/512")] < lit[key]
    return ok, {"literalDefects": lit, "restrictedDefects": restricted}


# ---------------------------------------------------------------------------
# 5. Closed-form action against kernel quadrature
# ---------------------------------------------------------------------------

CLOSED_FORM_MATRICES = (GroupElement(1.0, 1.0, 0.0, 1.0),
                        GroupElement.from_abc(0.8, 0.6, -0.4),
                        GroupElement.from_abc(-0.7, 1.2, 0.5))


def _closed_form(quick):
    rg = engine.radial_grid()
    r = rg.nodes
    inner = (r > 0.2) & (r < 6.0)
    disc = 0.0
    for k in ((0.75,) if quick else (0.25, 0.75, 1.5)):
        lab = DiscreteLabel(k)
        for m in CLOSED_FORM_MATRICES:
            U = engine.radial_matrix(lab, m, rg)
            for n in (0, 3):
                out = U @ phi0_discrete(lab, n, r)
                ref = kernels.transformed_phi0(lab, m, n, r)
                disc = max(disc, float(np.max(np.abs(out - ref)[inner])))
    cont = 0.0
    n = rg.size
    for lab in ((ContinuousLabel(0.0, 0.7),) if quick
                else (ContinuousLabel(0.0, 0.7), ContinuousLabel(0.5, 0.4))):
        for m in (CLOSED_FORM_MATRICES[1], GroupElement.from_abc(0.9, -0.8, 0.3)):
            U = engine.cont_matrix(lab, m, rg)
            for mval in (lab.epsilon, lab.epsilon + 1.0, lab.epsilon - 2.0):
                out = U @ np.concatenate(phi0_continuous(lab, mval, r))
                for sg, comp in ((1, out[:n]), (-1, out[n:])):
                    ref = kernels.transformed_phi0_continuous(lab, m, mval, sg, r)
                    cont = max(cont, float(np.max(np.abs(comp - ref)[inner])))
    return disc <= 1e-6 and cont <= 1e-4, {"discreteMaxError": disc, "continuousMaxError": cont}


# ---------------------------------------------------------------------------
# 6. Bargmann matrix elements
# ---------------------------------------------------------------------------

def bargmann_samples(count, seed=11):
    rng = np.random.default_rng(seed)
    ks = (0.25, 0.5, 0.75, 1.0, 1.5, 2.0)
    out = []
    while len(out) < count:
        m = random_element(rng, 1.3, 0.1)
        if kernels.is_elliptic_degenerate(m, 1e-3):
            continue
        if m.a * m.a + m.b * m.b > 3.0:
            continue
        k = ks[len(out) % len(ks)]
        out.append((k, m, int(rng.integers(0, 5)), int(rng.integers(0, 5))))
    return out


def _bargmann(quick):
    rg = engine.radial_grid()
    worst = 0.0
    samples = bargmann_samples(8 if quick else 24)
    for k, m, n, npr in samples:
        lab = DiscreteLabel(k)
        ref = np.sum(rg.weights * phi0_discrete(lab, n, rg.nodes)
                     * kernels.transformed_phi0(lab, m, npr, rg.nodes))
        val = kernels.dk_matrix_element(lab, m, k + n, k + npr)
        worst = max(worst, abs(val - ref))
    diag = 0.0
    for phi in (0.3, 1.7, -2.9, 5.0):
        m = subgroup_element(SubgroupTag.ELLIPTIC, phi)
        for k in (0.5, 1.25):
            lab = DiscreteLabel(k)
            for i in range(4):
                for j in range(4):
                    ref = np.exp(1j * (k + i) * phi) if i == j else 0.0
                    diag = max(diag, abs(kernels.dk_matrix_element(lab, m, k + i, k + j) - ref))
    return worst <= 1e-6 and diag <= 1e-14, {"samples": len(samples), "maxError": worst,
                                             "ellipticDiagonalError": diag}


# ---------------------------------------------------------------------------
# 7. Hyperbolic-basis elements against double Mellin quadrature
# ---------------------------------------------------------------------------

def _mellin(quick):
    disc_cases = [(0.5, GroupElement(2.0, 1.0, 1.0, 1.0), [(0.0, 0.0), (0.2, -0.3), (-0.1, 0.25)]),
                  (1.0, GroupElement.from_abc(-1.5, 0.8, 0.6), [(0.15, 0.1), (-0.2, -0.3)])]
    cont_cases = [(ContinuousLabel(0.0, 0.5), GroupElement(2.0, 1.0, 1.0, 1.0),
                   [(1, 0.0, 1, 0.0), (1, 0.2, -1, -0.3), (-1, 0.1, 1, 0.25)]),
                  (ContinuousLabel(0.5, 0.5), GroupElement.from_abc(1.3, -0.7, -0.9),
                   [(1, 0.1, 1, -0.2), (-1, -0.3, -1, 0.1)])]
    if quick:
        disc_cases = [(0.5, GroupElement(2.0, 1.0, 1.0, 1.0), [(0.0, 0.0), (0.2, -0.3)])]
        cont_cases = []
    disc_r, cont_r = 32.0, 24.0
    errors = []
    points = 0
    for k, m, pairs in disc_cases:
        lab = DiscreteLabel(k)
        vals = engine.mellin_oracle(lab, m, pairs, truncation=(1e-8, disc_r))
        for (mu, mup), v in zip(pairs, vals):
            errors.append(abs(v - kernels.dk_hyperbolic_element(lab, m, mu, mup)))
            points += 1
    cont_err = []
    for lab, m, pairs in cont_cases:
        vals = engine.mellin_oracle(lab, m, pairs, truncation=(1e-8, cont_r))
        for (tau, mu, taup, mup), v in zip(pairs, vals):
            cont_err.append(abs(v - kernels.cont_hyperbolic_element(lab, m, tau, mu, taup, mup)))
    ok = points >= (2 if quick else 5) and max(errors) <= 1e-3 and (not cont_err or max(cont_err) <= 1e-3)
    return ok, {"discretePoints": points, "discreteMaxError": max(errors),
                "continuousPoints": len(cont_err),
                "continuousMaxError": max(cont_err) if cont_err else None}


# ---------------------------------------------------------------------------
# 8. Dual forms
# ---------------------------------------------------------------------------

def _h_raw(eps, s, sigma, sigmap, z):
    """The H functions written out for a signed ``s``, independent of the labels."""
    h = 1.0 if eps == 0 else -1.0
    g = math.cosh(math.pi * s) if eps == 0 else math.sinh(math.pi * s)
    if sigma == sigmap:
        val = 1j * math.pi * (math.exp(-math.pi * s) * specfun.hankel_imaginary_order(1, s, z, "above")
                              - h * math.exp(math.pi * s)
                              * specfun.hankel_imaginary_order(2, s, z, "below"))
    else:
        parity = -np.sign(z) if eps else 1.0
        val = 4.0 * parity * g * specfun.macdonald_imaginary_order(s, np.abs(z))
    return val if sigma == 1 else h * val


def _dual_forms(quick):
    rng = np.random.default_rng(5)
    bessel = 0.0
    for k in (0.25, 0.5, 0.75, 1.0, 1.7):
        lab = DiscreteLabel(k)
        for _ in range(2 if quick else 4):
            m = random_element(rng, 1.5, 0.3)
            r = rng.uniform(0.2, 3.0, 6)
            rp = rng.uniform(0.2, 3.0, 6)
            a = kernels.radial_kernel(lab, m, r, rp).value
            b = np.array([kernels.radial_kernel_1f1(lab, m, x, y).value for x, y in zip(r, rp)])
            bessel = max(bessel, float(np.max(np.abs(a - b))))
    rho = 0.0
    for eps, s in ((0.0, 0.5), (0.5, 0.7), (0.0, 0.3)):
        lab = ContinuousLabel(eps, s)
        for _ in range(2 if quick else 4):
            m = random_element(rng, 1.5, 0.3)
            for sg in (1, -1):
                for sp in (1, -1):
                    x, y = rng.uniform(0.2, 3.0, 2)
                    a = kernels.cont_radial_kernel(lab, m, sg, x, sp, y).value
                    b = kernels.cont_radial_kernel_rho(lab, m, sg * x, sp * y).value
                    rho = max(rho, abs(complex(a) - b))
    chain = 0.0
    z = np.array([-3.1, -0.7, 0.4, 2.2])
    for eps, s in ((0.0, 0.5), (0.5, 0.7)):
        h = 1.0 if eps == 0 else -1.0
        pp = _h_raw(eps, s, 1, 1, z)
        pm = _h_raw(eps, s, 1, -1, z)
        for lhs, rhs in ((pp, h * _h_raw(eps, s, -1, -1, z)),
                         (pp, h * _h_raw(eps, s, 1, 1, -z)),
                         (pp, _h_raw(eps, -s, 1, 1, z)),
                         (pm, h * _h_raw(eps, s, -1, 1, z)),
                         (pm, h * _h_raw(eps, s, 1, -1, -z)),
                         (pm, h * _h_raw(eps, -s, 1, -1, z))):
            chain = max(chain, float(np.max(np.abs(lhs - rhs))))
    ok = bessel <= 1e-9 and rho <= 1e-8 and chain <= 1e-10
    return ok, {"besselVsConfluent": bessel, "productVsConfluent": rho, "hChain": chain}


# ---------------------------------------------------------------------------
# 9. b -> 0 limits
# ---------------------------------------------------------------------------

def _limits(quick):
    bs = [1e-1, 1e-2] if quick else [1e-1, 1e-2, 1e-3]
    base = GroupElement(2.0, 0.0, 0.3, 0.5)
    reports = {
        "classic": engine.b_limit_study(base, lambda x: np.exp(-0.5 * x * x), bs, window=6.5),
        "radial": engine.b_limit_study(base, lambda r: r ** 1.5 * np.exp(-0.5 * r * r), bs,
                                       kind="radial", label=DiscreteLabel(1.0), window=6.5),
        "cont": engine.b_limit_study(
            base, lambda r: (r * np.exp(-0.5 * r * r), 0.5 * r * np.exp(-0.5 * r * r)), bs,
            kind="cont", label=ContinuousLabel(0.0, 0.5), window=6.5),
    }
    # deviations are O(b); the constant 10 is generous
    ok = all(rep.extra["monotone"] and rep.max_abs_error < 10.0 * bs[-1] for rep in reports.values())
    return ok, {name: rep.extra["deviations"] for name, rep in reports.items()}


# ---------------------------------------------------------------------------
# 10. Structure maps
# ---------------------------------------------------------------------------

def _structure(quick):
    rng = np.random.default_rng(3)
    hom = metric = parity = 0.0
    for _ in range(20 if quick else 100):
        m1, m2 = random_element(rng), random_element(rng)
        L1, L2 = to_lorentz(m1), to_lorentz(m2)
        hom = max(hom, float(np.max(np.abs(to_lorentz(compose(m1, m2)) - L1 @ L2)))
                  / max(1.0, float(np.max(np.abs(L1 @ L2)))))
        metric = max(metric, float(np.max(np.abs(L1.T @ LORENTZ_METRIC @ L1 - LORENTZ_METRIC)))
                     / max(1.0, float(np.max(np.abs(L1))) ** 2))
        parity = max(parity, float(np.max(np.abs(to_lorentz(-m1) - L1))))
    sub = 0.0
    for tag in SubgroupTag:
        for t1, t2 in ((0.3, 0.9), (-1.1, 0.4), (2.0, 1.5)):
            lhs = compose(subgroup_element(tag, t1), subgroup_element(tag, t2)).matrix
            rhs = subgroup_element(tag, t1 + t2).matrix
            sub = max(sub, float(np.max(np.abs(lhs - rhs))))
    ok = hom <= 1e-10 and metric <= 1e-10 and parity == 0.0 and sub <= 1e-12
    return ok, {"homomorphism": hom, "metric": metric, "kernelOfCover": parity,
                "subgroupLaw": sub}


# ---------------------------------------------------------------------------
# 11. Continuous-series oscillator elements
# ---------------------------------------------------------------------------

def _cont_elliptic(quick):
    rg = engine.radial_grid()
    w = rg.weights
    err = 0.0
    rows = 0.0
    cases = [(ContinuousLabel(0.0, 0.5), GroupElement.from_abc(0.8, 0.6, -0.4)),
             (ContinuousLabel(0.5, 0.7), GroupElement(1.0, 1.0, 0.0, 1.0))]
    if quick:
        cases = cases[:1]
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", UnderflowWarning)
        for lab, m in cases:
            eps = lab.epsilon
            for i in range(-1, 2):
                mi = eps + i
                left = phi0_continuous(lab, mi, rg.nodes)
                for j in range(-1, 2):
                    mj = eps + j
                    act = [kernels.transformed_phi0_continuous(lab, m, mj, sg, rg.nodes)
                           for sg in (1, -1)]
                    ref = sum(np.sum(w * np.conj(left[c]) * act[c]) for c in (0, 1))
                    err = max(err, abs(kernels.cont_elliptic_element(lab, m, mi, mj) - ref))
                row = sum(abs(kernels.cont_elliptic_element(lab, m, mi, eps + j)) ** 2
                          for j in range(-60, 61))
                rows = max(rows, abs(row - 1.0))
    return err <= 1e-4 and rows <= 1e-4, {"quadratureMaxError": err, "rowSumMaxDeviation": rows}


CHECKS = {
    "fourier": ("1. Fourier identification", _fourier),
    "composition": ("2. Metaplectic composition", _composition),
    "reconstruction": ("3. k=1/4 + 3/4 reconstruction", _reconstruction),
    "unitarity": ("4. Discretized unitarity", _unitarity),
    "closed-form": ("5. Closed-form action vs quadrature", _closed_form),
    "bargmann": ("6. Bargmann matrix elements", _bargmann),
    "mellin": ("7. Hyperbolic-basis Mellin oracle", _mellin),
    "dual-forms": ("8. Dual-form equalities", _dual_forms),
    "limits": ("9. b -> 0 limits", _limits),
    "structure": ("10. Structure maps", _structure),
    "cont-elliptic": ("11. Continuous oscillator elements", _cont_elliptic),
}


def run_check(key, quick=False):
    name, fn = CHECKS[key]
    return _timed(name, fn, quick)


def run_suite(keys=None, quick=False):
    """Run the selected checks (all by default) and return their results."""
    return [run_check(k, quick) for k in (keys or list(CHECKS))]
