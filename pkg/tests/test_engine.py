import cmath
import json
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from lct import engine, kernels
from lct.bases import ContinuousLabel, DiscreteLabel, phi0_continuous, phi0_discrete
from lct.errors import GridTooCoarse, NonConvergence, Undetermined
from lct.symplectic import (FOURIER, GroupElement, SubgroupTag, compose, inverse,
                            subgroup_element)

SHEAR = GroupElement(1.0, 1.0, 0.0, 1.0)
HYP = GroupElement(2.0, 1.0, 1.0, 1.0)
GENERIC = GroupElement.from_abc(1.2, 0.8, -0.3)


@pytest.fixture(scope="module")
def line():
    return engine.line_grid()


@pytest.fixture(scope="module")
def radial():
    return engine.radial_grid()


def gaussian(grid, power=0.0):
    x = grid.nodes
    return engine.SampledFunction(grid, np.abs(x) ** power * np.exp(-0.5 * x * x))


def two_gaussian(grid):
    r = grid.nodes
    return engine.TwoComponentSampled(grid, r * np.exp(-0.5 * r * r), 0.5 * r ** 1.5 * np.exp(-0.6 * r * r))


# --- grids -----------------------------------------------------------------------

def test_grids_are_valid_rules(line, radial):
    for g, length in ((radial, engine.DEFAULT_R_MAX), (line, 16.0)):
        assert np.all(np.diff(g.nodes) > 0)
        assert np.all(g.weights > 0)
        assert g.weights.sum() == pytest.approx(length, rel=1e-13)
    assert radial.nodes[0] > 0 and radial.size == engine.DEFAULT_N


def test_grid_interpolation(radial):
    f = np.sin(radial.nodes) * np.exp(-0.1 * radial.nodes)
    t = np.linspace(0.05, 11.9, 50)
    np.testing.assert_allclose(radial.interpolate(f, t), np.sin(t) * np.exp(-0.1 * t), atol=1e-12)
    assert radial.interpolate(f, np.array([13.0]))[0] == 0


def test_grid_from_nodes():
    g = engine.grid_from_nodes([0.0, 1.0, 3.0])
    np.testing.assert_allclose(g.weights, [0.5, 1.5, 1.0])
    assert g.interpolate(np.array([0.0, 2.0, 6.0]), np.array([0.5, 2.0]))[1] == 4.0
    with pytest.raises(ValueError):
        engine.grid_from_nodes([1.0, 1.0])


def test_sampled_function_validates(line):
    with pytest.raises(ValueError):
        engine.SampledFunction(line, np.zeros(3))
    bad = np.zeros(line.size)
    bad[0] = np.nan
    with pytest.raises(ValueError):
        engine.SampledFunction(line, bad)


# --- line transform -------------------------------------------------------------------

def test_apply_classic_identity(line):
    f = gaussian(line)
    np.testing.assert_allclose(engine.apply_classic(GroupElement.identity(), f).values, f.values, atol=1e-15)


def test_apply_classic_fourier_on_gaussian(line):
    f = gaussian(line)
    out = engine.apply_classic(FOURIER, f)
    assert np.max(np.abs(out.values - cmath.exp(-0.25j * math.pi) * f.values)) <= 1e-6


def test_fourier_eighth_power(line):
    f = engine.SampledFunction(line, engine.hermite_functions(line.nodes, 4) @ [1.0, 0.5j, -0.3, 0.2])
    g = f
    for _ in range(8):
        g = engine.apply_classic(FOURIER, g)
    assert np.max(np.abs(g.values - f.values)) <= 1e-5


def test_oscillation_flag(line):
    report = engine.TransformReport()
    with pytest.warns(GridTooCoarse):
        engine.apply_classic(GroupElement(1.0, 1e-3, 0.0, 1.0), gaussian(line), report)
    assert "GridTooCoarse" in report.flags
    assert engine.oscillation_ok(FOURIER, line)


# --- radial transforms ---------------------------------------------------------------------

def test_apply_radial_identity(radial):
    f = gaussian(radial, 1.5)
    out = engine.apply_radial(DiscreteLabel(1.0), GroupElement.identity(), f)
    np.testing.assert_allclose(out.values, f.values, atol=1e-15)


def test_apply_radial_matches_closed_form(radial):
    lab = DiscreteLabel(0.75)
    f = engine.SampledFunction(radial, phi0_discrete(lab, 2, radial.nodes))
    out = engine.apply_radial(lab, GENERIC, f)
    inner = (radial.nodes > 0.3) & (radial.nodes < 5)
    ref = kernels.transformed_phi0(lab, GENERIC, 2, radial.nodes[inner])
    assert np.max(np.abs(out.values[inner] - ref)) <= 1e-6


@pytest.mark.parametrize("k", [0.5, 1.0, 1.5])
def test_apply_radial_preserves_norm_and_inverts(radial, k):
    lab = DiscreteLabel(k)
    f = gaussian(radial, 2 * k - 0.5)
    out = engine.apply_radial(lab, GENERIC, f)
    assert abs(out.norm() - f.norm()) <= 1e-5 * f.norm()
    back = engine.apply_radial(lab, inverse(GENERIC), out)
    assert np.max(np.abs(back.values - f.values)) <= 2e-5 * np.max(np.abs(f.values))


def test_apply_cont_radial_identity(radial):
    f = two_gaussian(radial)
    out = engine.apply_cont_radial(ContinuousLabel(0.0, 0.5), GroupElement.identity(), f)
    np.testing.assert_allclose(out.stacked(), f.stacked(), atol=1e-15)


def test_apply_cont_radial_mixes_components(radial):
    r = radial.nodes
    f = engine.TwoComponentSampled(radial, r * np.exp(-0.5 * r * r), np.zeros_like(r))
    out = engine.apply_cont_radial(ContinuousLabel(0.0, 0.5), GENERIC, f)
    assert np.sum(radial.weights * np.abs(out.minus) ** 2) > 1e-3 * f.norm() ** 2


@pytest.mark.parametrize("eps", [0.0, 0.5])
def test_apply_cont_radial_preserves_norm_and_inverts(radial, eps):
    lab = ContinuousLabel(eps, 0.7)
    p1, m1 = phi0_continuous(lab, eps + 1, radial.nodes)
    p2, m2 = phi0_continuous(lab, eps - 1, radial.nodes)
    f = engine.TwoComponentSampled(radial, p1 + 0.5j * p2, m1 + 0.5j * m2)
    out = engine.apply_cont_radial(lab, GENERIC, f)
    assert abs(out.norm() - f.norm()) <= 1e-4 * f.norm()
    back = engine.apply_cont_radial(lab, inverse(GENERIC), out)
    assert np.max(np.abs(back.stacked() - f.stacked())) <= 2e-4 * np.max(np.abs(f.stacked()))


# --- oscillator basis ----------------------------------------------------------------------------

def test_apply_discrete_elliptic_phases():
    lab = DiscreteLabel(0.5)
    m = subgroup_element(SubgroupTag.ELLIPTIC, 0.4)
    c = np.array([1.0, 2.0, -1.0j])
    out, report = engine.apply_discrete(lab, m, c)
    np.testing.assert_allclose(out, c * np.exp(0.4j * (0.5 + np.arange(3))), atol=1e-14)
    assert abs(report.extra["tailMass"]) <= 1e-13


def test_apply_discrete_matches_quadrature(radial):
    lab = DiscreteLabel(1.0)
    e0 = np.zeros(32)
    e0[0] = 1.0
    out, _ = engine.apply_discrete(lab, GENERIC, e0)
    moved = engine.SampledFunction(radial, kernels.transformed_phi0(lab, GENERIC, 0, radial.nodes))
    np.testing.assert_allclose(out, engine.project_phi0(lab, moved, 32), atol=1e-5)


def test_apply_discrete_norm_improves_with_truncation():
    lab = DiscreteLabel(0.75)
    m = GroupElement.from_abc(2.0, 1.2, 0.3)
    c = np.exp(-0.3 * np.arange(8)) * np.exp(1j * np.arange(8))
    tails = [engine.apply_discrete(lab, m, c, N)[1].extra["tailMass"] for N in (8, 16, 32, 64, 128)]
    assert all(x >= y for x, y in zip(tails, tails[1:]))
    assert abs(tails[-1]) <= 1e-10


def test_change_of_basis_commutes(radial):
    lab = DiscreteLabel(1.0)
    f = gaussian(radial, 1.5)
    N = 16
    direct = engine.project_phi0(lab, engine.apply_radial(lab, GENERIC, f), N)
    coeffs = engine.project_phi0(lab, f, 64)
    via, _ = engine.apply_discrete(lab, GENERIC, coeffs, 64)
    assert np.max(np.abs(direct - via[:N])) <= 1e-4


# --- unitarity ---------------------------------------------------------------------------------------

def test_unitarity_defect_of_identity(line):
    assert engine.unitarity_defect(np.eye(line.size), line.weights) == 0.0


def test_unitarity_defect_classic_fourier(line):
    assert engine.unitarity_defect(engine.classic_matrix(FOURIER, line), line.weights) <= 1e-3


def test_unitarity_defect_radial_shear(radial):
    U = engine.radial_matrix(DiscreteLabel(0.5), SHEAR, radial)
    assert engine.unitarity_defect(U, radial.weights) <= 1e-3


def test_restricted_unitarity_defect_classic(line):
    V = engine.hermite_functions(line.nodes, 12)
    U = engine.classic_matrix(FOURIER, line)
    assert engine.restricted_unitarity_defect(U, line.weights, V) <= 1e-12


# --- composition ------------------------------------------------------------------------------------

def classic_op(m, f):
    return engine.apply_classic(m, f)


@pytest.fixture(scope="module")
def wide_line():
    return engine.line_grid(1024, (-10.0, 10.0))


def probes(grid, count=5):
    x = grid.nodes
    out = []
    for j in range(count):
        out.append(engine.SampledFunction(grid, (1 + 0.3 * j * x) * np.exp(-0.5 * (x - 0.2 * j) ** 2 * (1 + 0.2 * j))))
    return out


def test_composition_sign_with_identity(wide_line):
    assert engine.composition_sign(GroupElement.identity(), GENERIC, classic_op, probes(wide_line, 1)[0]) == 1


def test_composition_sign_fourier_squared(wide_line):
    signs = {engine.composition_sign(FOURIER, FOURIER, classic_op, p) for p in probes(wide_line)}
    assert len(signs) == 1 and signs <= {1, -1}


def test_composition_sign_independent_of_probe(wide_line):
    rng = np.random.default_rng(7)
    pairs = []
    while len(pairs) < 4:
        m1 = GroupElement.from_abc(rng.uniform(0.3, 1.5), rng.uniform(0.3, 1.2) * rng.choice([-1, 1]), rng.uniform(-1, 1))
        m2 = GroupElement.from_abc(rng.uniform(0.3, 1.5), rng.uniform(0.3, 1.2) * rng.choice([-1, 1]), rng.uniform(-1, 1))
        p = compose(m1, m2)
        if abs(p.b) >= 0.3 and max(abs(p.a), abs(p.b), abs(p.c), abs(p.d)) <= 3:
            pairs.append((m1, m2))
    seen = set()
    for m1, m2 in pairs:
        signs = {engine.composition_sign(m1, m2, classic_op, p) for p in probes(wide_line)}
        assert len(signs) == 1
        seen |= signs
    assert seen <= {1, -1}


def test_composition_sign_undetermined(line):
    f = gaussian(line)
    with pytest.raises(Undetermined):
        engine.composition_sign(FOURIER, FOURIER, lambda m, g: engine.SampledFunction(
            g.grid, g.values * (1.0 if m is FOURIER else 1j)), f)


# --- Mellin oracle -------------------------------------------------------------------------------------

def test_mellin_oracle_matches_closed_form():
    lab = DiscreteLabel(0.5)
    val = engine.mellin_oracle(lab, HYP, [(0.0, 0.0)])[0]
    assert abs(val - kernels.dk_hyperbolic_element(lab, HYP, 0.0, 0.0)) <= 1e-3


def test_mellin_oracle_inverse_symmetry():
    lab = DiscreteLabel(0.5)
    fwd = engine.mellin_oracle(lab, HYP, [(0.2, -0.3)])[0]
    back = engine.mellin_oracle(lab, inverse(HYP), [(-0.3, 0.2)])[0]
    assert abs(back - np.conj(fwd)) <= 2e-3


def test_mellin_oracle_truncation_improves():
    lab = DiscreteLabel(0.5)
    exact = kernels.dk_hyperbolic_element(lab, HYP, 0.0, 0.0)
    errs = [abs(engine.mellin_oracle(lab, HYP, [(0.0, 0.0)], truncation=(1e-8, R), tol=np.inf)[0] - exact)
            for R in (8.0, 16.0, 32.0)]
    assert errs[0] > errs[1] > errs[2]


def test_mellin_oracle_reports_nonconvergence():
    with pytest.raises(NonConvergence):
        engine.mellin_oracle(DiscreteLabel(0.5), HYP, [(0.0, 0.0)], truncation=(1e-8, 4.0), tol=1e-6)


# --- limits -----------------------------------------------------------------------------------------------

@pytest.mark.parametrize("kind, label, f", [
    ("classic", None, lambda x: np.exp(-0.5 * x * x)),
    ("radial", DiscreteLabel(1.0), lambda r: r ** 1.5 * np.exp(-0.5 * r * r)),
    ("cont", ContinuousLabel(0.5, 0.5), lambda r: (r * np.exp(-0.5 * r * r), 0.5 * r * np.exp(-0.5 * r * r))),
])
def test_b_limit_study_decreases(kind, label, f):
    base = GroupElement(-2.0, 0.0, 0.3, -0.5) if kind == "cont" else GroupElement(2.0, 0.0, 0.3, 0.5)
    rep = engine.b_limit_study(base, f, [1e-1, 1e-2], kind=kind, label=label, window=6.5)
    assert rep.extra["monotone"]
    assert rep.max_abs_error < 0.1


def test_b_limit_study_requires_b_zero():
    with pytest.raises(ValueError):
        engine.b_limit_study(GENERIC, lambda x: x, [1e-2])


# --- reports -------------------------------------------------------------------------------------------------

def test_report_json_schema():
    rep = engine.TransformReport(unitarity_defect=1e-4, composition_sign=-1, max_abs_error=2e-6,
                                 notes=["n"], flags=["GridTooCoarse"])
    obj = json.loads(rep.to_json())
    assert obj == {"schemaVersion": engine.REPORT_SCHEMA_VERSION, "unitarityDefect": 1e-4,
                   "compositionSign": -1, "maxAbsError": 2e-6, "notes": ["n"], "flags": ["GridTooCoarse"]}
    assert json.loads(engine.TransformReport().to_json())["compositionSign"] == "undetermined"


@settings(max_examples=10)
@given(st.floats(0.3, 2.0), st.floats(0.2, 1.5), st.floats(-1, 1))
def test_line_transform_is_unitary_on_smooth_signals(a, b, c):
    g = engine.line_grid(512, (-10.0, 10.0))
    m = GroupElement.from_abc(a, b, c)
    f = gaussian(g)
    out = engine.apply_classic(m, f)
    assert abs(out.norm() - f.norm()) <= 1e-6 * f.norm()
