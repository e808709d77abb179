import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from lct import engine, specfun
from lct.bases import (BasisTag, ContinuousLabel, DiscreteLabel, apply_generator,
                       phi0_continuous, phi0_discrete, phi1_discrete,
                       phi1_discrete_whittaker, phi2_continuous, phi2_discrete,
                       phi_plus_discrete)


def gl_grid(r_max=12.0, n=512):
    return engine.radial_grid(n, r_max)


def test_labels_validate():
    with pytest.raises(ValueError):
        DiscreteLabel(0.0)
    with pytest.raises(ValueError):
        ContinuousLabel(0.5, 0.0)
    with pytest.raises(ValueError):
        ContinuousLabel(0.25, 1.0)
    lab = ContinuousLabel(0.0, 0.3)
    assert lab.k == complex(0.5, 0.3)
    assert lab.g == pytest.approx(math.cosh(0.3 * math.pi))
    assert ContinuousLabel(0.5, 0.3).g == pytest.approx(math.sinh(0.3 * math.pi))
    assert (lab.h, ContinuousLabel(0.5, 0.3).h) == (1.0, -1.0)


def test_phi0_discrete_lowest_mode():
    r = np.linspace(0.1, 5, 7)
    np.testing.assert_allclose(phi0_discrete(DiscreteLabel(0.5), 0, r),
                               math.sqrt(2) * np.sqrt(r) * np.exp(-r * r / 2), rtol=1e-14)


@pytest.mark.parametrize("k", [0.5, 1.0, 1.5, 0.75])
def test_phi0_discrete_gram_is_identity(k):
    g = gl_grid()
    lab = DiscreteLabel(k)
    phis = np.array([phi0_discrete(lab, n, g.nodes) for n in range(8)])
    gram = (phis * g.weights) @ phis.T
    assert np.max(np.abs(gram - np.eye(8))) <= 1e-6


@pytest.mark.parametrize("k, n", [(0.5, 0), (1.0, 2), (1.5, 3), (0.75, 1)])
def test_phi0_discrete_is_j0_eigenfunction(k, n):
    lab = DiscreteLabel(k)
    r = np.linspace(0.2, 8.0, 4001)
    f = phi0_discrete(lab, n, r)
    jf = apply_generator(BasisTag.ELLIPTIC, lab.gamma, r, f)
    inner = slice(1, -1)
    assert np.linalg.norm(jf[inner] - (k + n) * f[inner]) / np.linalg.norm(f[inner]) <= 1e-4


def test_phi_plus_values_and_symmetry():
    r = np.linspace(0.5, 6, 9)
    lab = DiscreteLabel(0.5)
    np.testing.assert_allclose(phi_plus_discrete(lab, 1.0, r), 1j * np.sqrt(r) * specfun.bessel_j(0.0, r),
                               rtol=1e-14, atol=1e-16)
    lab = DiscreteLabel(1.25)
    for rho in (0.3, 1.7):
        np.testing.assert_allclose(np.abs(phi_plus_discrete(lab, rho, r)),
                                   [abs(phi_plus_discrete(lab, x, rho)) for x in r], rtol=1e-13)


def test_phi_plus_concentrates_as_range_grows():
    lab = DiscreteLabel(1.0)
    peaks = []
    for R in (20.0, 40.0, 80.0):
        g = engine.line_grid(2048, (1e-6, R))
        w = g.weights * engine.taper(g.nodes, 0.5 * R, R)
        base = phi_plus_discrete(lab, 1.0, g.nodes)
        on = abs(np.sum(w * np.conj(base) * base))
        off = abs(np.sum(w * np.conj(base) * phi_plus_discrete(lab, 1.5, g.nodes)))
        peaks.append(off / on)
    assert peaks[0] > peaks[1] > peaks[2]


@pytest.mark.parametrize("k, mu", [(1.0, 0.3), (0.5, 0.0), (0.75, -1.2), (2.0, 0.8)])
def test_phi1_dual_forms(k, mu):
    r = np.linspace(0.1, 6, 31)
    lab = DiscreteLabel(k)
    a = phi1_discrete(lab, mu, r)
    b = phi1_discrete_whittaker(lab, mu, r)
    assert np.max(np.abs(a - b) / np.abs(b)) <= 1e-9


def test_phi1_modulus_at_k_half_mu_zero():
    r = np.linspace(0.2, 3.0, 8)
    lab = DiscreteLabel(0.5)
    expected = (math.exp(specfun.log_gamma(0.5).real) / math.sqrt(math.pi)
                * np.sqrt(r) * np.abs(specfun.hyp1f1(0.5, 1.0, -1j * r * r)))
    np.testing.assert_allclose(np.abs(phi1_discrete(lab, 0.0, r)), expected, rtol=1e-13)


@pytest.mark.parametrize("k, mu", [(1.0, 0.4), (0.75, -0.6)])
def test_phi1_is_j1_eigenfunction(k, mu):
    lab = DiscreteLabel(k)
    r = np.linspace(0.3, 5.0, 6001)
    f = phi1_discrete(lab, mu, r)
    jf = apply_generator(BasisTag.HYPERBOLIC_REPULSIVE, lab.gamma, r, f)
    inner = slice(1, -1)
    assert np.linalg.norm(jf[inner] - mu * f[inner]) / np.linalg.norm(f[inner]) <= 1e-4


@given(st.floats(-5, 5), st.floats(0.01, 50))
def test_phi2_discrete_modulus(mu, r):
    assert abs(phi2_discrete(mu, r)) == pytest.approx(1 / math.sqrt(math.pi * r), rel=1e-13)


def test_phi2_discrete_is_j2_eigenfunction():
    r = np.linspace(0.5, 4.0, 2001)
    f = phi2_discrete(0.7, r)
    jf = apply_generator(BasisTag.HYPERBOLIC_SCALING, 0.0, r, f)
    assert np.max(np.abs(jf[1:-1] - 0.7 * f[1:-1])) <= 1e-5


def test_phi2_continuous_values():
    p, m = phi2_continuous(1, 0.0, 1.0)
    assert p == pytest.approx(1 / math.sqrt(2 * math.pi)) and m == p
    p2, m2 = phi2_continuous(-1, 0.4, 2.0)
    p1, m1 = phi2_continuous(1, 0.4, 2.0)
    assert (p2, m2) == (p1, -m1)
    assert abs(np.conj(p1) * p2 + np.conj(m1) * m2) == 0.0
    assert abs(p1) == pytest.approx(1 / math.sqrt(2 * math.pi * 2.0))


def test_phi0_continuous_component_structure():
    lab = ContinuousLabel(0.0, 0.5)
    r = np.linspace(0.3, 4, 9)
    plus, minus = phi0_continuous(lab, 0.0, r)
    np.testing.assert_allclose(plus, minus, rtol=1e-13)
    plus, minus = phi0_continuous(lab, 2.0, r)
    ref = lab.g / (math.pi * np.sqrt(r)) * math.sqrt(2)
    w_plus = specfun.whittaker_w(2.0, lab.k - 0.5, r * r)
    w_minus = specfun.whittaker_w(-2.0, lab.k - 0.5, r * r)
    np.testing.assert_allclose(minus / (ref * w_minus), math.exp(specfun.log_gamma(lab.k + 2).real), rtol=1e-12)
    assert np.allclose(np.abs(plus / (ref * w_plus)), math.exp(specfun.log_gamma(lab.k - 2).real), rtol=1e-12)


def test_phi0_continuous_rejects_off_lattice_m():
    with pytest.raises(ValueError):
        phi0_continuous(ContinuousLabel(0.5, 0.4), 1.0, 1.0)


@pytest.mark.parametrize("eps, s, m", [(0.0, 0.5, 1.0), (0.5, 0.4, -1.5), (0.0, 0.7, -2.0)])
def test_phi0_continuous_is_j0_eigenfunction(eps, s, m):
    lab = ContinuousLabel(eps, s)
    r = np.linspace(0.3, 7.0, 6001)
    plus, minus = phi0_continuous(lab, m, r)
    inner = slice(1, -1)
    for comp, sign in ((plus, 1), (minus, -1)):
        jf = sign * apply_generator(BasisTag.ELLIPTIC, lab.gamma, r, comp)
        assert np.linalg.norm(jf[inner] - m * comp[inner]) / np.linalg.norm(comp[inner]) <= 1e-3


def test_phi0_continuous_orthonormal():
    lab = ContinuousLabel(0.5, 0.4)
    g = gl_grid(14.0, 1024)
    ms = [lab.epsilon + j for j in range(-3, 3)]
    vecs = [np.concatenate(phi0_continuous(lab, m, g.nodes)) for m in ms]
    w = np.concatenate([g.weights, g.weights])
    gram = np.array([[np.sum(w * np.conj(u) * v) for v in vecs] for u in vecs])
    assert np.max(np.abs(gram - np.eye(len(ms)))) <= 1e-6


def _casimir(gamma, r, f):
    j0 = lambda v: apply_generator(BasisTag.ELLIPTIC, gamma, r, v)
    j1 = lambda v: apply_generator(BasisTag.HYPERBOLIC_REPULSIVE, gamma, r, v)
    j2 = lambda v: apply_generator(BasisTag.HYPERBOLIC_SCALING, gamma, r, v)
    return j1(j1(f)) + j2(j2(f)) - j0(j0(f))


def test_casimir_discrete():
    lab = DiscreteLabel(0.75)
    r = np.linspace(0.4, 5.0, 4001)
    f = phi0_discrete(lab, 1, r)
    c = _casimir(lab.gamma, r, f)
    inner = slice(3, -3)
    assert (np.linalg.norm(c[inner] - lab.casimir * f[inner])
            <= 1e-3 * np.linalg.norm(f[inner]) * max(1.0, abs(lab.casimir)))


def test_casimir_continuous():
    lab = ContinuousLabel(0.0, 0.5)
    r = np.linspace(0.4, 5.0, 4001)
    f, _ = phi0_continuous(lab, 1.0, r)
    c = _casimir(lab.gamma, r, f)
    inner = slice(3, -3)
    assert np.linalg.norm(c[inner] - lab.casimir * f[inner]) <= 1e-3 * np.linalg.norm(f[inner])
