"""Discretization, transform application and numerical oracles.

Signals are sampled on composite Gauss-Legendre grids.  A kernel ``K(x, x')``
becomes the matrix ``U = K(x_i, x_j) w_j`` acting on samples, so that
``(U f)_i`` approximates ``int K(x_i, x') f(x') dx'``.  Norms and inner
products use the same weights.

The oracles here check the closed forms of :mod:`lct.kernels` against
quadrature: discretized unitarity, the metaplectic composition sign, double
Mellin transforms and the ``b -> 0`` limit.
"""

from dataclasses import dataclass, field
import json
import math
import warnings

import numpy as np

from . import kernels
from .bases import ContinuousLabel, phi0_discrete, phi2_continuous, phi2_discrete
from .errors import GridTooCoarse, NonConvergence, Undetermined, UnderflowWarning
from .symplectic import EPS_B, GroupElement, compose

REPORT_SCHEMA_VERSION = 1
DEFAULT_N = 256
DEFAULT_R_MAX = 12.0
DEFAULT_X_RANGE = (-8.0, 8.0)
PANEL_ORDER = 16


# ---------------------------------------------------------------------------
# Grids and sampled functions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RadialGrid:
    """Composite Gauss-Legendre rule with ``order`` nodes per panel.

    Used both for ``(0, r_max]`` and for symmetric line intervals; ``edges``
    holds the panel boundaries.
    """

    nodes: np.ndarray
    weights: np.ndarray
    edges: np.ndarray
    order: int = PANEL_ORDER

    @property
    def r_max(self):
        return float(self.edges[-1])

    @property
    def size(self):
        return len(self.nodes)

    def max_spacing(self):
        return float(np.max(np.diff(np.concatenate([[self.edges[0]], self.nodes,
                                                    [self.edges[-1]]]))))

    def interpolate(self, values, targets):
        """Evaluate the panel-wise interpolating polynomial of ``values`` at ``targets``.

        Points outside ``[edges[0], edges[-1]]`` get 0.  Grids built by
        :func:`grid_from_nodes` (``order == 0``) interpolate linearly.
        """
        targets = np.asarray(targets, dtype=float)
        values = np.asarray(values)
        if self.order == 0:
            inside = (targets >= self.nodes[0]) & (targets <= self.nodes[-1])
            re = np.interp(targets, self.nodes, values.real)
            im = np.interp(targets, self.nodes, values.imag)
            return np.where(inside, re + 1j * im, 0.0)
        out = np.zeros(targets.shape, dtype=complex)
        inside = (targets >= self.edges[0]) & (targets <= self.edges[-1])
        panel = np.clip(np.searchsorted(self.edges, targets, side="right") - 1,
                        0, len(self.edges) - 2)
        xg, _ = np.polynomial.legendre.leggauss(self.order)
        # barycentric weights of Gauss-Legendre nodes
        bw = np.array([1.0 / np.prod(xg[j] - np.delete(xg, j)) for j in range(self.order)])
        for p in np.unique(panel[inside]):
            sel = inside & (panel == p)
            lo, hi = self.edges[p], self.edges[p + 1]
            t = (2.0 * targets[sel] - (lo + hi)) / (hi - lo)
            f = values[p * self.order:(p + 1) * self.order]
            diff = t[:, None] - xg[None, :]
            exact = np.isclose(diff, 0.0, atol=1e-15)
            diff = np.where(exact, 1.0, diff)
            q = bw[None, :] / diff
            val = (q @ f) / q.sum(axis=1)
            hit = exact.any(axis=1)
            if np.any(hit):
                val[hit] = f[np.argmax(exact[hit], axis=1)]
            out[sel] = val
        return out


def _panel_rule(edges, order):
    xg, wg = np.polynomial.legendre.leggauss(order)
    half = 0.5 * (edges[1:] - edges[:-1])
    mid = 0.5 * (edges[1:] + edges[:-1])
    nodes = (half[:, None] * xg[None, :] + mid[:, None]).ravel()
    weights = (half[:, None] * wg[None, :]).ravel()
    return RadialGrid(nodes, weights, np.asarray(edges, dtype=float), order)


def _panel_count(n, order):
    if n % order or n <= 0:
        raise ValueError(f"grid size {n} must be a positive multiple of the panel order {order}")
    return n // order


def _composite(lo, hi, n, order):
    return _panel_rule(np.linspace(lo, hi, _panel_count(n, order) + 1), order)


def radial_grid(n=DEFAULT_N, r_max=DEFAULT_R_MAX, order=PANEL_ORDER, levels=6):
    """Gauss-Legendre panels on ``(0, r_max]``, graded towards the origin.

    The first of the uniform panels is split dyadically ``levels`` times,
    keeping ``n`` nodes in total.  Radial signals behave like
    ``r^{1/2 + 2i s}`` near 0 and oscillate in ``log r``; the grading keeps
    such integrands resolved.
    """
    panels = _panel_count(n, order)
    levels = max(0, min(int(levels), panels - 1))
    uniform = panels - levels
    if levels == 0:
        return _composite(0.0, float(r_max), n, order)
    h = r_max / (uniform + 1)
    edges = np.concatenate([[0.0], h * 2.0 ** -np.arange(levels - 1, 0, -1),
                            np.linspace(h, r_max, uniform + 1)])
    return _panel_rule(edges, order)


def line_grid(n=DEFAULT_N, x_range=DEFAULT_X_RANGE, order=PANEL_ORDER):
    """Gauss-Legendre panels on a symmetric interval of the real line."""
    return _composite(float(x_range[0]), float(x_range[1]), n, order)


def grid_from_nodes(nodes):
    """Trapezoid-rule grid on arbitrary strictly increasing nodes."""
    nodes = np.asarray(nodes, dtype=float)
    if nodes.ndim != 1 or len(nodes) < 2 or np.any(np.diff(nodes) <= 0):
        raise ValueError("nodes must be strictly increasing with at least two entries")
    gaps = np.diff(nodes)
    weights = np.zeros_like(nodes)
    weights[:-1] += 0.5 * gaps
    weights[1:] += 0.5 * gaps
    return RadialGrid(nodes, weights, np.array([nodes[0], nodes[-1]]), 0)


@dataclass
class SampledFunction:
    grid: RadialGrid
    values: np.ndarray

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=complex)
        if self.values.shape != self.grid.nodes.shape:
            raise ValueError("values must match the grid")
        if not np.all(np.isfinite(self.values)):
            raise ValueError("sampled values must be finite")

    def norm(self):
        return math.sqrt(float(np.sum(self.grid.weights * np.abs(self.values) ** 2)))


@dataclass
class TwoComponentSampled:
    grid: RadialGrid
    plus: np.ndarray
    minus: np.ndarray

    def __post_init__(self):
        self.plus = np.asarray(self.plus, dtype=complex)
        self.minus = np.asarray(self.minus, dtype=complex)
        if self.plus.shape != self.grid.nodes.shape or self.minus.shape != self.grid.nodes.shape:
            raise ValueError("components must match the grid")

    def stacked(self):
        return np.concatenate([self.plus, self.minus])

    def norm(self):
        w = self.grid.weights
        return math.sqrt(float(np.sum(w * (np.abs(self.plus) ** 2 + np.abs(self.minus) ** 2))))


@dataclass
class TransformReport:
    unitarity_defect: float = 0.0
    composition_sign: object = None
    max_abs_error: float = 0.0
    notes: list = field(default_factory=list)
    flags: list = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    def to_dict(self):
        sign = self.composition_sign
        return {
            "schemaVersion": REPORT_SCHEMA_VERSION,
            "unitarityDefect": float(self.unitarity_defect),
            "compositionSign": "undetermined" if sign is None else int(sign),
            "maxAbsError": float(self.max_abs_error),
            "notes": list(self.notes),
            "flags": list(self.flags),
            **({"extra": self.extra} if self.extra else {}),
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


# ---------------------------------------------------------------------------
# Kernel matrices
# ---------------------------------------------------------------------------

def oscillation_ok(m, grid):
    """Check that the kernel chirp is resolved by the grid.

    The local wavelength ``2 pi |b| / (max(|a|, |d|) r_max)`` must exceed
    four grid spacings.
    """
    extent = max(abs(grid.edges[0]), abs(grid.edges[-1]))
    rate = max(abs(m.a), abs(m.d)) * extent
    if rate == 0:
        return True
    return 2.0 * math.pi * abs(m.b) / rate > 4.0 * grid.max_spacing()


def _flag_oscillation(m, grid, report):
    if not oscillation_ok(m, grid):
        msg = "kernel oscillation is under-resolved on this grid"
        warnings.warn(msg, GridTooCoarse, stacklevel=3)
        if report is not None and "GridTooCoarse" not in report.flags:
            report.flags.append("GridTooCoarse")
            report.notes.append(msg)


def classic_matrix(m, grid):
    """``U_ij = C_M(x_i, x_j) w_j``."""
    x = grid.nodes
    return kernels.classic_kernel(m, x[:, None], x[None, :]).value * grid.weights[None, :]


def radial_matrix(label, m, grid):
    """``U_ij = D^k_M(r_i, r_j) w_j``."""
    r = grid.nodes
    return kernels.radial_kernel(label, m, r[:, None], r[None, :], fast=True).value * grid.weights[None, :]


def _cont_blocks(label, m, r):
    """The four ``(sigma, sigma')`` kernel blocks on ``r x r``.

    ``H`` depends on ``r r'`` only, so it is evaluated once per unordered
    pair; ``H_{--} = h H_{++}`` and ``H_{-+} = h H_{+-}``.
    """
    n = len(r)
    iu = np.triu_indices(n)
    z = -r[iu[0]] * r[iu[1]] / m.b
    h = label.h
    sym = {}
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", UnderflowWarning)
        for key in ((1, 1), (1, -1)):
            full = np.empty((n, n), dtype=complex)
            full[iu] = kernels.h_function(label, key[0], key[1], z, fast=True)
            full.T[iu] = full[iu]
            sym[key] = full
    sym[(-1, -1)] = h * sym[(1, 1)]
    sym[(-1, 1)] = h * sym[(1, -1)]
    a, b, d = m.a, m.b, m.d
    root = np.sqrt(np.outer(r, r)) / (2.0 * math.pi * abs(b))
    out = {}
    for (sg, sp), hv in sym.items():
        phase = np.exp(1j * (d * sg * r[:, None] ** 2 + a * sp * r[None, :] ** 2) / (2.0 * b))
        out[sg, sp] = root * phase * hv
    return out


def cont_matrix(label, m, grid):
    """Two-component operator as a ``2N x 2N`` block matrix, ``sigma = +1`` first."""
    n = grid.size
    w = grid.weights
    blocks = _cont_blocks(label, m, grid.nodes)
    out = np.empty((2 * n, 2 * n), dtype=complex)
    for i, sg in enumerate((1, -1)):
        for j, sp in enumerate((1, -1)):
            out[i * n:(i + 1) * n, j * n:(j + 1) * n] = blocks[sg, sp] * w[None, :]
    return out


# ---------------------------------------------------------------------------
# Transform application
# ---------------------------------------------------------------------------

def _delta_apply(grid, values, amp, support):
    return amp * grid.interpolate(values, support)


def apply_classic(m, f, report=None, eps_b=EPS_B):
    """Apply the line transform to samples on a symmetric grid.

    For ``|b| < eps_b`` the delta-line limit is used:
    ``f_M(x) = e^{icx^2/2a} f(x/a) / sqrt(a)``.
    """
    grid = f.grid
    if abs(m.b) < eps_b:
        kv = kernels.classic_kernel_b0(m, grid.nodes, eps_b)
        return SampledFunction(grid, _delta_apply(grid, f.values, kv.amplitude, kv.support))
    _flag_oscillation(m, grid, report)
    return SampledFunction(grid, classic_matrix(m, grid) @ f.values)


def apply_radial(label, m, f, report=None, eps_b=EPS_B):
    """Apply the radial transform of ``D_k`` to samples on ``(0, r_max]``."""
    grid = f.grid
    if abs(m.b) < eps_b:
        kv = kernels.radial_kernel_b0(label, m, grid.nodes, eps_b)
        return SampledFunction(grid, _delta_apply(grid, f.values, kv.amplitude, kv.support))
    _flag_oscillation(m, grid, report)
    return SampledFunction(grid, radial_matrix(label, m, grid) @ f.values)


def apply_cont_radial(label, m, f, report=None, eps_b=EPS_B):
    """Apply the continuous-series 2x2 kernel to a two-component signal."""
    grid = f.grid
    if abs(m.b) < eps_b:
        out = []
        for sg, comp in ((1, f.plus), (-1, f.minus)):
            kv = kernels.cont_radial_b0(label, m, sg, grid.nodes, eps_b)
            out.append(_delta_apply(grid, comp, kv.amplitude, kv.support))
        return TwoComponentSampled(grid, out[0], out[1])
    _flag_oscillation(m, grid, report)
    v = cont_matrix(label, m, grid) @ f.stacked()
    n = grid.size
    return TwoComponentSampled(grid, v[:n], v[n:])


def dk_matrix(label, m, size):
    """``size x size`` block of the oscillator-basis matrix, rows ``m = k + n``."""
    k = label.k
    return np.array([[kernels.dk_matrix_element(label, m, k + i, k + j)
                      for j in range(size)] for i in range(size)])


def apply_discrete(label, m, coeffs, N=None):
    """Transform oscillator-basis coefficients with the truncated Bargmann matrix.

    Returns
    -------
    out : ndarray
        The first ``N`` transformed coefficients.
    report : TransformReport
        ``extra["tailMass"]`` is the norm lost to truncation,
        ``||coeffs||^2 - ||out||^2``.
    """
    coeffs = np.asarray(coeffs, dtype=complex)
    N = len(coeffs) if N is None else int(N)
    if N < 1:
        raise ValueError("truncation N must be at least 1")
    c = np.zeros(N, dtype=complex)
    c[:min(N, len(coeffs))] = coeffs[:N]
    out = dk_matrix(label, m, N) @ c
    report = TransformReport()
    report.extra["tailMass"] = float(np.sum(np.abs(coeffs) ** 2) - np.sum(np.abs(out) ** 2))
    report.notes.append(f"truncated to N = {N}")
    return out, report


def project_phi0(label, f, N):
    """Coefficients ``<Phi_{k+n}, f>`` for ``n < N`` by quadrature."""
    g = f.grid
    return np.array([np.sum(g.weights * phi0_discrete(label, n, g.nodes) * f.values)
                     for n in range(N)])


# ---------------------------------------------------------------------------
# Unitarity and composition
# ---------------------------------------------------------------------------

def unitarity_defect(kernel_matrix, weights):
    """``||U^H W U - W||_2 / ||W||_2`` for the discretized operator ``U``.

    ``kernel_matrix`` is ``U_ij = K(x_i, x_j) w_j``; for two-component
    operators pass the block matrix and the weights repeated once per
    component.
    """
    U = np.asarray(kernel_matrix)
    w = np.asarray(weights, dtype=float)
    W = np.diag(w)
    return float(np.linalg.norm(U.conj().T @ (w[:, None] * U) - W, 2) / np.linalg.norm(W, 2))


def restricted_unitarity_defect(kernel_matrix, weights, basis):
    """Unitarity defect on the span of the columns of ``basis``.

    ``basis`` holds samples of functions that are orthonormal under the
    quadrature; the result is ``||V^H (U^H W U - W) V||_2``.
    """
    U = np.asarray(kernel_matrix)
    w = np.asarray(weights, dtype=float)
    V = np.asarray(basis)
    UV = U @ V
    return float(np.linalg.norm(UV.conj().T @ (w[:, None] * UV) - V.conj().T @ (w[:, None] * V), 2))


def hermite_functions(x, count):
    """Orthonormal Hermite functions ``psi_0 .. psi_{count-1}`` as columns."""
    x = np.asarray(x, dtype=float)
    out = np.empty((len(x), count))
    out[:, 0] = np.pi ** -0.25 * np.exp(-0.5 * x * x)
    if count > 1:
        out[:, 1] = math.sqrt(2.0) * x * out[:, 0]
    for n in range(2, count):
        out[:, n] = math.sqrt(2.0 / n) * x * out[:, n - 1] - math.sqrt((n - 1) / n) * out[:, n - 2]
    return out


def _weighted_norm(v, w):
    return math.sqrt(float(np.sum(w * np.abs(v) ** 2)))


def composition_residuals(m1, m2, apply_op, probe):
    """Relative residuals of ``C_{M1} C_{M2} f -/+ C_{M1 M2} f`` for signs +1 and -1."""
    twice = apply_op(m1, apply_op(m2, probe))
    once = apply_op(compose(m1, m2), probe)
    w = probe.grid.weights
    a = twice.stacked() if isinstance(twice, TwoComponentSampled) else twice.values
    b = once.stacked() if isinstance(once, TwoComponentSampled) else once.values
    if isinstance(once, TwoComponentSampled):
        w = np.concatenate([w, w])
    scale = _weighted_norm(b, w)
    return {s: _weighted_norm(a - s * b, w) / scale for s in (1, -1)}


def composition_sign(m1, m2, apply_op, probe, tol=1e-4):
    """Sign ``s`` with ``C_{M1} C_{M2} = s C_{M1 M2}`` on ``probe``.

    Raises
    ------
    Undetermined
        If neither sign brings the relative residual under ``tol``.
    """
    res = composition_residuals(m1, m2, apply_op, probe)
    best = min(res, key=res.get)
    if res[best] > tol:
        raise Undetermined(f"residuals {res[1]:.3g} (+1) and {res[-1]:.3g} (-1) exceed {tol:g}")
    return best


# ---------------------------------------------------------------------------
# Double Mellin oracle
# ---------------------------------------------------------------------------

def taper(x, start, stop):
    """Smooth step equal to 1 below ``start`` and 0 above ``stop``."""
    t = np.clip((np.asarray(x, dtype=float) - start) / (stop - start), 0.0, 1.0)

    def bump(s):
        return np.where(s > 0, np.exp(-1.0 / np.maximum(s, 1e-300)), 0.0)

    return bump(1.0 - t) / (bump(1.0 - t) + bump(t))


def mellin_grid(r_min, r_max, panels=None, order=PANEL_ORDER):
    """Nodes and weights for ``int_{r_min}^{r_max} dr`` via ``r = t^2``.

    The substitution clusters nodes at small ``r`` where Mellin functions
    are singular, and spreads them at large ``r`` where the kernel chirp
    is fastest in ``r`` but uniform in ``t^2``.
    """
    if panels is None:
        panels = int(math.ceil(3.75 * r_max))
    xg, wg = np.polynomial.legendre.leggauss(order)
    edges = np.linspace(math.sqrt(r_min), math.sqrt(r_max), panels + 1)
    half = 0.5 * (edges[1:] - edges[:-1])
    mid = 0.5 * (edges[1:] + edges[:-1])
    t = (half[:, None] * xg[None, :] + mid[:, None]).ravel()
    wt = (half[:, None] * wg[None, :]).ravel()
    return t * t, 2.0 * t * wt


def _mellin_once(label, m, pairs, r_min, r_max, panels):
    r, w = mellin_grid(r_min, r_max, panels)
    wt = w * taper(r, 0.5 * r_max, r_max)
    out = []
    if isinstance(label, ContinuousLabel):
        blocks = _cont_blocks(label, m, r)
        full = np.block([[blocks[1, 1], blocks[1, -1]], [blocks[-1, 1], blocks[-1, -1]]])
        ww = np.concatenate([wt, wt])
        cont_matrix_raw = ww[:, None] * full * ww[None, :]
        for tau, mu, taup, mup in pairs:
            left = np.concatenate(phi2_continuous(tau, mu, r))
            right = np.concatenate(phi2_continuous(taup, mup, r))
            out.append(complex(np.conj(left) @ cont_matrix_raw @ right))
    else:
        mat = wt[:, None] * kernels.radial_kernel(label, m, r[:, None], r[None, :],
                                                  fast=True).value * wt[None, :]
        for mu, mup in pairs:
            out.append(complex(np.conj(phi2_discrete(mu, r)) @ mat @ phi2_discrete(mup, r)))
    return out


def mellin_oracle(label, m, pairs, truncation=(1e-8, 32.0), tol=1e-3, panels=None):
    """Hyperbolic-basis matrix elements by windowed double Mellin quadrature.

    Computes ``int int Phi2_mu(r)^* K_M(r, r') Phi2_mu'(r') dr dr'`` with both
    variables tapered smoothly to zero over the upper half of the range.
    The value is also computed with half the range; if the two differ by
    more than ``tol`` ``NonConvergence`` is raised.

    Parameters
    ----------
    label : DiscreteLabel or ContinuousLabel
    m : GroupElement
    pairs : list
        ``(mu, mu')`` tuples for the discrete series, or
        ``(tau, mu, tau', mu')`` tuples for the continuous series.
    truncation : (float, float)
        ``(r_min, r_max)``.
    tol : float
    panels : int, optional
        Panels in ``t = sqrt(r)``; by default proportional to ``r_max``.

    Returns
    -------
    list of complex
    """
    r_min, r_max = truncation
    if not (0 < r_min < r_max):
        raise ValueError("truncation must satisfy 0 < r_min < r_max")
    full = _mellin_once(label, m, pairs, r_min, r_max, panels)
    half_panels = None if panels is None else max(1, panels // 2)
    half = _mellin_once(label, m, pairs, r_min, 0.5 * r_max, half_panels)
    change = max(abs(x - y) for x, y in zip(full, half))
    if change > tol:
        raise NonConvergence(f"halving r_max changes the value by {change:.3g} > {tol:g}")
    return full


# ---------------------------------------------------------------------------
# b -> 0 limit
# ---------------------------------------------------------------------------

def _with_b(m_base, b):
    a, c = m_base.a, m_base.c
    return GroupElement(a, b, c, (1.0 + b * c) / a)


def b_limit_study(m_base, f, b_sequence, kind="classic", label=None,
                  output_points=None, window=8.0):
    """Distance between the quadrature transform at small ``b`` and the delta-line action.

    Parameters
    ----------
    m_base : GroupElement
        Matrix with ``b = 0`` (``a > 0`` keeps the limit single-valued).
    f : callable
        Test signal.  For ``kind="cont"`` it returns the pair of components.
    b_sequence : sequence of float
        Values of ``b``; ``d`` is adjusted to keep the determinant 1.
    kind : {"classic", "radial", "cont"}
    label : DiscreteLabel or ContinuousLabel
        Needed for the radial kinds.
    output_points : array_like, optional
        Where the transforms are compared.
    window : float
        Half-width (line) or upper limit (radial) of the input quadrature.

    Returns
    -------
    TransformReport
        ``extra["deviations"]`` lists the max deviations per ``b`` and
        ``extra["monotone"]`` whether they decrease.
    """
    if abs(m_base.b) > EPS_B:
        raise ValueError("m_base must have b = 0")
    line = kind == "classic"
    if output_points is None:
        output_points = np.linspace(-2.0, 2.0, 21) if line else np.linspace(0.25, 3.0, 12)
    xo = np.asarray(output_points, dtype=float)
    deviations = []
    for b in b_sequence:
        mb = _with_b(m_base, b)
        # the chirp exp(i a x'^2 / 2b) sets the resolution
        build = (lambda n: line_grid(n, (-window, window))) if line else (lambda n: radial_grid(n, window))
        n = DEFAULT_N
        g = build(n)
        while not oscillation_ok(mb, g):
            n = PANEL_ORDER * int(math.ceil(1.25 * n / PANEL_ORDER))
            g = build(n)
        xi, wi = g.nodes, g.weights
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", UnderflowWarning)
            if kind == "classic":
                num = kernels.classic_kernel(mb, xo[:, None], xi[None, :]).value @ (wi * f(xi))
                kv = kernels.classic_kernel_b0(m_base, xo)
                ref = kv.amplitude * f(kv.support)
                dev = np.max(np.abs(num - ref))
            elif kind == "radial":
                num = kernels.radial_kernel(label, mb, xo[:, None], xi[None, :], fast=True).value @ (wi * f(xi))
                kv = kernels.radial_kernel_b0(label, m_base, xo)
                ref = kv.amplitude * f(kv.support)
                dev = np.max(np.abs(num - ref))
            elif kind == "cont":
                fp, fm = f(xi)
                comps = {1: fp, -1: fm}
                dev = 0.0
                for sg in (1, -1):
                    num = sum(kernels.cont_radial_kernel(label, mb, sg, xo[:, None], sp, xi[None, :], fast=True).value
                              @ (wi * comps[sp]) for sp in (1, -1))
                    kv = kernels.cont_radial_b0(label, m_base, sg, xo)
                    ref = kv.amplitude * f(kv.support)[0 if sg == 1 else 1]
                    dev = max(dev, float(np.max(np.abs(num - ref))))
            else:
                raise ValueError("kind must be 'classic', 'radial' or 'cont'")
        deviations.append(float(dev))
    report = TransformReport(max_abs_error=deviations[-1])
    report.extra["bSequence"] = [float(b) for b in b_sequence]
    report.extra["deviations"] = deviations
    report.extra["monotone"] = bool(all(y < x for x, y in zip(deviations, deviations[1:])))
    return report
