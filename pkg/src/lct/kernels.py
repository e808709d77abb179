"""Closed-form kernels and matrix elements of linear canonical transforms.

Every function takes a :class:`~lct.symplectic.GroupElement` and evaluates
the transform in one basis: the line kernel ``C_M(x, x')``, the radial
kernels of the discrete series, the Bargmann matrix ``D_{m,m'}`` in the
oscillator basis, the hyperbolic (Mellin) basis elements, and their
two-component continuous-series counterparts.

Integral kernels broadcast over their position arguments.  When ``|b|``
falls below ``EPS_B`` the kernel collapses onto a line ``x' = x/a``; the
``*_b0`` functions return that limit as a :class:`KernelValue` of form
``"deltaLine"`` holding the amplitude and the support.

Complex powers are principal unless stated otherwise.
"""

from dataclasses import dataclass
import cmath
import math

import numpy as np

from . import specfun
from .bases import ContinuousLabel, DiscreteLabel, Sign, phi0_continuous, phi0_discrete
from .errors import (BranchCutProximity, DegenerateA, DegenerateB,
                     EllipticDegenerate, SmallS)
from .symplectic import (EPS_B, cayley_conjugate_reposc, hankel_conjugate,
                         reflection_conjugate)

ELLIPTIC_TOL = 1e-8
CUT_TOL = 1e-10


@dataclass(frozen=True)
class KernelValue:
    """Kernel value, or the amplitude and support of its delta-line limit.

    For ``form == "regular"`` only ``value`` is set.  For ``"deltaLine"``
    the kernel is ``amplitude * delta(x' - support)``.
    """

    value: object = None
    form: str = "regular"
    amplitude: object = None
    support: object = None

    def __post_init__(self):
        if self.form not in ("regular", "deltaLine"):
            raise ValueError("form must be 'regular' or 'deltaLine'")


def _check_b(m, eps_b):
    if abs(m.b) < eps_b:
        raise DegenerateB(f"|b| = {abs(m.b):.3g} is below {eps_b:.1g}; use the b -> 0 form")


def _sign(x):
    return 1.0 if x > 0 else -1.0


# ---------------------------------------------------------------------------
# Line kernel
# ---------------------------------------------------------------------------

def classic_kernel(m, x, xp, eps_b=EPS_B):
    """``C_M(x, x') = e^{-i pi sign(b)/4} / sqrt(2 pi |b|) exp(i(dx^2 - 2xx' + ax'^2)/2b)``."""
    _check_b(m, eps_b)
    x = np.asarray(x, dtype=float)
    xp = np.asarray(xp, dtype=float)
    a, b, d = m.a, m.b, m.d
    pref = cmath.exp(-0.25j * math.pi * _sign(b)) / math.sqrt(2.0 * math.pi * abs(b))
    return KernelValue(pref * np.exp(1j * (d * x * x - 2.0 * x * xp + a * xp * xp) / (2.0 * b)))


def classic_kernel_b0(m, x, eps_b=EPS_B):
    """Limit ``b -> 0+`` of the line kernel: ``e^{icx^2/2a}/sqrt(a) delta(x' - x/a)``.

    ``sqrt(a)`` is principal, which is the limit taken from ``b > 0``.
    """
    if abs(m.a) < eps_b:
        raise DegenerateA("a vanishes together with b, impossible for a unimodular matrix")
    x = np.asarray(x, dtype=float)
    amp = np.exp(1j * m.c * x * x / (2.0 * m.a)) / cmath.sqrt(m.a)
    return KernelValue(form="deltaLine", amplitude=amp, support=x / m.a)


# ---------------------------------------------------------------------------
# Discrete series: radial kernels
# ---------------------------------------------------------------------------

def _for_label(label, m):
    """D- quantities equal D+ quantities at the reflected matrix."""
    return m if label.sign is Sign.PLUS else reflection_conjugate(m)


def _bessel_signed(nu, z, fast=False):
    """``J_nu(z)`` for real ``z`` of either sign, with ``J_nu(-x) = e^{i pi nu} J_nu(x)``."""
    z = np.asarray(z, dtype=float)
    if fast:
        val = specfun.panel_interpolate(lambda x: specfun.bessel_j(nu, x), np.abs(z))
    else:
        val = specfun.bessel_j(nu, np.abs(z)).astype(complex)
    return np.where(z < 0, np.exp(1j * math.pi * nu) * val, val)


def radial_kernel(label, m, rho, rhop, eps_b=EPS_B, fast=False):
    """Radial canonical transform kernel of ``D_k``.

    ``(e^{-i pi k}/b) sqrt(rho rho') exp(i(d rho^2 + a rho'^2)/2b) J_{2k-1}(rho rho'/b)``
    for ``D+_k``; ``D-_k`` uses the reflected matrix.  ``fast=True``
    interpolates the Bessel factor from panel tables, which pays off for
    large matrices.
    """
    m = _for_label(label, m)
    _check_b(m, eps_b)
    k = label.k
    rho = np.asarray(rho, dtype=float)
    rhop = np.asarray(rhop, dtype=float)
    a, b, d = m.a, m.b, m.d
    prod = rho * rhop
    val = (cmath.exp(-1j * math.pi * k) / b * np.sqrt(prod)
           * np.exp(1j * (d * rho * rho + a * rhop * rhop) / (2.0 * b))
           * _bessel_signed(2.0 * k - 1.0, prod / b, fast))
    return KernelValue(val)


def radial_kernel_1f1(label, m, rho, rhop, eps_b=EPS_B):
    """Confluent form of the radial kernel.

    ``2 (rho rho')^{2k-1/2} / ((2ib)^{2k} Gamma(2k))
    exp(i(d rho^2 - 2 rho rho' + a rho'^2)/2b) 1F1(2k-1/2; 4k-1; 2i rho rho'/b)``.
    At ``k = 1/4`` the confluent function is taken as its limit ``(1 + e^z)/2``.
    """
    m = _for_label(label, m)
    _check_b(m, eps_b)
    k = label.k
    rho = np.asarray(rho, dtype=float)
    rhop = np.asarray(rhop, dtype=float)
    a, b, d = m.a, m.b, m.d
    prod = rho * rhop
    pref = 2.0 * np.exp(-2.0 * k * cmath.log(2j * b) - specfun.log_gamma(2.0 * k))
    z = 2j * prod / b
    if abs(4.0 * k - 1.0) < 1e-14:
        # 1F1(e; 2e; z) -> (1 + e^z)/2 as e -> 0
        f = 0.5 * (1.0 + np.exp(z))
    else:
        f = specfun.hyp1f1(2.0 * k - 0.5, 4.0 * k - 1.0, z)
    val = (pref * prod ** (2.0 * k - 0.5)
           * np.exp(1j * (d * rho * rho - 2.0 * prod + a * rhop * rhop) / (2.0 * b)) * f)
    return KernelValue(val)


def radial_kernel_b0(label, m, r, eps_b=EPS_B):
    """Limit ``b -> 0`` of the radial kernel.

    ``(sign a)^{2k} / sqrt|a| exp(i c r^2 / 2a) delta(r' - r/|a|)`` with the
    principal power ``(-1)^{2k} = e^{2 i pi k}``.
    """
    m = _for_label(label, m)
    if abs(m.a) < eps_b:
        raise DegenerateA("a vanishes together with b")
    r = np.asarray(r, dtype=float)
    k = label.k
    sa = 1.0 if m.a > 0 else cmath.exp(2j * math.pi * k)
    amp = sa / math.sqrt(abs(m.a)) * np.exp(1j * m.c * r * r / (2.0 * m.a))
    return KernelValue(form="deltaLine", amplitude=amp, support=r / abs(m.a))


def jplus_kernel(label, m, rho, rhop, eps_b=EPS_B):
    """Kernel in the J+ (Hankel) basis: the radial kernel at ``((d, -c), (-b, a))``."""
    return radial_kernel(label, hankel_conjugate(m), rho, rhop, eps_b)


# ---------------------------------------------------------------------------
# Discrete series: oscillator basis
# ---------------------------------------------------------------------------

def _trace_norm(m):
    return m.a * m.a + m.b * m.b + m.c * m.c + m.d * m.d


def is_elliptic_degenerate(m, tol=ELLIPTIC_TOL):
    """True on the elliptic subgroup through the identity, where ``a^2+b^2+c^2+d^2 = 2``."""
    return abs(_trace_norm(m) - 2.0) < tol


def elliptic_phase(m):
    """``2 arg(a - i b)``: the oscillator-mode phase angle of ``m``."""
    return 2.0 * math.atan2(-m.b, m.a)


def elliptic_diagonal_element(mrow, mcol, phi):
    """``delta_{m m'} e^{i m phi}``."""
    if abs(mrow - mcol) > 1e-12:
        return 0j
    return cmath.exp(1j * mrow * phi)


def transformed_phi0(label, m, n, r):
    """Closed-form action of ``C_M`` on the oscillator mode ``n``.

    ``e^{2im arg(a - ib)} e^{i r^2 (ac + bd)/(2S)} S^{-1/4} Phi_m(r/sqrt S)``,
    ``S = a^2 + b^2``, ``m = k + n``.
    """
    m = _for_label(label, m)
    r = np.asarray(r, dtype=float)
    mval = label.k + n
    s2 = m.a * m.a + m.b * m.b
    phase = cmath.exp(1j * mval * elliptic_phase(m))
    return (phase * np.exp(1j * r * r * (m.a * m.c + m.b * m.d) / (2.0 * s2))
            * s2 ** -0.25 * phi0_discrete(label, n, r / math.sqrt(s2)))


def dk_matrix_element(label, m, mrow, mcol, strict=False):
    """Bargmann matrix element ``D^k_{m,m'}(M)`` in the oscillator basis.

    Parameters
    ----------
    label : DiscreteLabel
    m : GroupElement
    mrow, mcol : float
        ``k + n`` and ``k + n'``.
    strict : bool
        On the elliptic locus raise ``EllipticDegenerate`` instead of
        returning the diagonal phase.

    Notes
    -----
    With ``S = a^2 + b^2 + c^2 + d^2``::

        2^{2k} Gamma(m + m') / sqrt(Gamma(k+m) Gamma(1-k+m) Gamma(k+m') Gamma(1-k+m'))
        * [(d-a) - i(b+c)]^{m-k} [(a-d) - i(b+c)]^{m'-k} [(a+d) + i(b-c)]^{-m-m'}
        * 2F1(k-m, k-m'; 1-m-m'; (S+2)/(S-2))

    The first two powers are integers.  The last one follows ``M`` along
    the group: its angle is ``arg(a^2+b^2+1 - i(ac+bd)) - arg(a - ib)``,
    which matches the principal value near the identity and stays
    continuous around the elliptic subgroup.
    """
    m = _for_label(label, m)
    k = label.k
    n = mrow - k
    npr = mcol - k
    if min(n, npr) < -1e-12 or abs(n - round(n)) > 1e-9 or abs(npr - round(npr)) > 1e-9:
        raise ValueError("rows and columns must be k + n with n a non-negative integer")
    n, npr = int(round(n)), int(round(npr))
    if is_elliptic_degenerate(m):
        if strict:
            raise EllipticDegenerate("matrix lies on the elliptic subgroup")
        return elliptic_diagonal_element(mrow, mcol, elliptic_phase(m))
    a, b, c, d = m.a, m.b, m.c, m.d
    S = _trace_norm(m)
    lg = specfun.log_gamma
    log_pre = (2.0 * k * math.log(2.0) + lg(mrow + mcol)
               - 0.5 * (lg(k + mrow) + lg(1.0 - k + mrow) + lg(k + mcol) + lg(1.0 - k + mcol)))
    p1 = complex(d - a, -(b + c)) ** n
    p2 = complex(a - d, -(b + c)) ** npr
    w_abs = math.hypot(a + d, b - c)
    w_arg = (cmath.phase(complex(a * a + b * b + 1.0, -(a * c + b * d)))
             - math.atan2(-b, a))
    p3 = cmath.exp(-(mrow + mcol) * complex(math.log(w_abs), w_arg))
    f = specfun.hyp2f1(k - mrow, k - mcol, 1.0 - mrow - mcol, (S + 2.0) / (S - 2.0))
    return complex(np.exp(log_pre) * p1 * p2 * p3 * f)


# ---------------------------------------------------------------------------
# Discrete series: hyperbolic (Mellin) basis
# ---------------------------------------------------------------------------

def _cpow(z, w):
    return cmath.exp(w * cmath.log(z))


def transformed_phi2(label, m, mu, r, eps_b=EPS_B):
    """Closed-form action of ``C_M`` on ``r^{-1/2 + 2i mu}/sqrt(pi)``.

    ``e^{-i pi k} Gamma(k + i mu) / (2^{k - i mu} sqrt(pi) Gamma(2k))
    r^{2k-1/2} e^{i d r^2/2b} / (b^{2k} (-ia/b)^{k + i mu})
    1F1(k + i mu; 2k; -i r^2/(2ab))``.
    """
    m = _for_label(label, m)
    _check_b(m, eps_b)
    if abs(m.a) < eps_b:
        raise DegenerateA("a = 0")
    k = label.k
    a, b, d = m.a, m.b, m.d
    r = np.asarray(r, dtype=float)
    pref = (cmath.exp(-1j * math.pi * k) * np.exp(specfun.log_gamma(k + 1j * mu)
                                                  - specfun.log_gamma(2.0 * k))
            / (_cpow(2.0, k - 1j * mu) * math.sqrt(math.pi))
            / (_cpow(b, 2.0 * k) * _cpow(complex(0.0, -a / b), k + 1j * mu)))
    return (pref * r ** (2.0 * k - 0.5) * np.exp(1j * d * r * r / (2.0 * b))
            * specfun.hyp1f1(k + 1j * mu, 2.0 * k, -1j * r * r / (2.0 * a * b)))


def _check_hyperbolic(m, eps_b):
    _check_b(m, eps_b)
    if abs(m.a) < eps_b or abs(m.d) < eps_b:
        raise DegenerateA("hyperbolic elements need a and d non-zero")
    ad = m.a * m.d
    if 0.0 < ad and 1.0 / ad >= 1.0 - CUT_TOL:
        raise BranchCutProximity(f"1/(ad) = {1.0 / ad:.6g} lies on the 2F1 cut")


def dk_hyperbolic_element(label, m, mu, mup, eps_b=EPS_B):
    """Matrix element between Mellin eigenfunctions ``r^{-1/2 + 2i mu}/sqrt(pi)``.

    ``e^{-i pi k} 2^{i(mu'-mu)} Gamma(k - i mu) Gamma(k + i mu') / (2 pi Gamma(2k))
    b^{-2k} (-id/b)^{-k + i mu} (-ia/b)^{-k - i mu'} 2F1(k - i mu, k + i mu'; 2k; 1/ad)``.
    """
    m = _for_label(label, m)
    _check_hyperbolic(m, eps_b)
    k = label.k
    a, b, d = m.a, m.b, m.d
    lg = specfun.log_gamma
    val = (cmath.exp(-1j * math.pi * k) * _cpow(2.0, 1j * (mup - mu))
           * np.exp(lg(k - 1j * mu) + lg(k + 1j * mup) - lg(2.0 * k)) / (2.0 * math.pi)
           * _cpow(b, -2.0 * k) * _cpow(complex(0.0, -d / b), -k + 1j * mu)
           * _cpow(complex(0.0, -a / b), -k - 1j * mup)
           * specfun.hyp2f1(k - 1j * mu, k + 1j * mup, 2.0 * k, 1.0 / (a * d)))
    return complex(val)


def reposc_element(label, m, mu, mup, eps_b=EPS_B):
    """Matrix element in the J1 (repulsive oscillator) basis.

    Evaluated as the hyperbolic element at the matrix conjugated by the
    square root of the Fourier matrix.
    """
    return dk_hyperbolic_element(label, cayley_conjugate_reposc(m), mu, mup, eps_b)


# ---------------------------------------------------------------------------
# Continuous series: radial 2x2 kernels
# ---------------------------------------------------------------------------

def _hankel_pair(s, z):
    """``H1_{2is}(z + i0)`` and ``H2_{2is}(z - i0)`` for real ``z``."""
    try:
        return (specfun.hankel_imaginary_order(1, s, z, "above"),
                specfun.hankel_imaginary_order(2, s, z, "below"))
    except SmallS:
        return (specfun.hankel_order_zero(1, z, "above"),
                specfun.hankel_order_zero(2, z, "below"))


def h_function(label, sigma, sigmap, z, fast=False):
    """``H^{eps,k}_{sigma,sigma'}(z)``.

    ``H_{++}(z) = i pi (e^{-pi s} H1_{2is}(z + i0) - h e^{pi s} H2_{2is}(z - i0))``,
    ``H_{+-}(z) = 4 (-sign z)^{2 eps} g K_{2is}(|z|)``, ``H_{--} = h H_{++}`` and
    ``H_{-+} = h H_{+-}``.  Both satisfy ``H(z) = h H(-z)``.

    ``fast=True`` interpolates from panel tables in ``|z| >= 1``.
    """
    s, g, h = label.s, label.g, label.h
    z = np.asarray(z, dtype=float)
    if fast:
        sz = np.sign(z)
        out = np.empty(z.shape, dtype=complex)
        for sg in (1.0, -1.0):
            sel = sz == sg
            if np.any(sel):
                out[sel] = specfun.panel_interpolate(
                    lambda x, sg=sg: h_function(label, sigma, sigmap, sg * x), np.abs(z[sel]))
        return out
    if sigma == sigmap:
        h1, h2 = _hankel_pair(s, z)
        val = 1j * math.pi * (math.exp(-math.pi * s) * h1 - h * math.exp(math.pi * s) * h2)
    else:
        parity = -np.sign(z) if label.epsilon else 1.0
        val = 4.0 * parity * g * specfun.macdonald_imaginary_order(s, np.abs(z))
        val = val.astype(complex)
    return val if sigma == 1 else h * val


def cont_radial_kernel(label, m, sigma, r, sigmap, rp, eps_b=EPS_B, fast=False):
    """Block ``(sigma, sigma')`` of the continuous-series radial kernel.

    ``G_{sigma sigma'}(r, r') H_{sigma sigma'}(-r r'/b)`` with
    ``G = sqrt(r r')/(2 pi |b|) exp(i(d sigma r^2 + a sigma' r'^2)/2b)``.
    """
    _check_b(m, eps_b)
    r = np.asarray(r, dtype=float)
    rp = np.asarray(rp, dtype=float)
    a, b, d = m.a, m.b, m.d
    G = (np.sqrt(r * rp) / (2.0 * math.pi * abs(b))
         * np.exp(1j * (d * sigma * r * r + a * sigmap * rp * rp) / (2.0 * b)))
    return KernelValue(G * h_function(label, sigma, sigmap, -r * rp / b, fast))


def cont_radial_kernel_rho(label, m, rho, rhop, eps_b=EPS_B):
    """Confluent form of the continuous-series kernel in signed coordinates.

    With ``sigma = sign rho``, ``sigma' = sign rho'``, ``eta = 1`` on the
    diagonal blocks and ``-i`` off them::

        P exp(i(d sigma rho^2 - 2 eta rho rho' + a sigma' rho'^2)/2b) sqrt|rho rho'|
        * [T(k) + h^{[sigma = sigma']} T(1-k)]
        T(k) = Gamma(1-2k) |rho rho'/2b|^{2k-1} 1F1(2k-1/2; 4k-1; 2i eta rho rho'/b)

    where ``P = (sign b)^{2 eps} h^{(1+sigma')/2} g/(pi |b|)``.
    """
    _check_b(m, eps_b)
    rho = float(rho)
    rhop = float(rhop)
    if rho == 0 or rhop == 0:
        raise ValueError("rho and rho' must be non-zero")
    a, b, d = m.a, m.b, m.d
    k = label.k
    g, h, eps = label.g, label.h, label.epsilon
    sig, sigp = _sign(rho), _sign(rhop)
    same = sig == sigp
    eta = 1.0 if same else -1j
    sb = _sign(b)
    pref = sb ** (2 * eps) * h ** ((1 + sigp) // 2) * g / (math.pi * abs(b))
    prod = rho * rhop
    ex = cmath.exp(1j * (d * sig * rho * rho - 2.0 * eta * prod + a * sigp * rhop * rhop)
                   / (2.0 * b)) * math.sqrt(abs(prod))

    def term(kk):
        return (np.exp(specfun.log_gamma(1.0 - 2.0 * kk)) * abs(prod / (2.0 * b)) ** (2.0 * kk - 1.0)
                * specfun.hyp1f1(2.0 * kk - 0.5, 4.0 * kk - 1.0, 2j * eta * prod / b))

    return KernelValue(complex(pref * ex * (term(k) + (h if same else 1.0) * term(1.0 - k))))


def cont_radial_b0(label, m, sigma, r, eps_b=EPS_B):
    """Limit ``b -> 0`` of the continuous-series kernel.

    Block diagonal: ``(sign a)^{2 eps} / sqrt|a| exp(i sigma c r^2/2a) delta(r' - r/|a|)``.
    """
    if abs(m.a) < eps_b:
        raise DegenerateA("a vanishes together with b")
    r = np.asarray(r, dtype=float)
    sa = 1.0 if (m.a > 0 or label.epsilon == 0) else -1.0
    amp = sa / math.sqrt(abs(m.a)) * np.exp(1j * sigma * m.c * r * r / (2.0 * m.a))
    return KernelValue(form="deltaLine", amplitude=amp, support=r / abs(m.a))


# ---------------------------------------------------------------------------
# Continuous series: oscillator basis
# ---------------------------------------------------------------------------

def transformed_phi0_continuous(label, m, mrow, sigma, r):
    """Closed-form action of ``C_M`` on component ``sigma`` of the oscillator mode ``m``.

    ``e^{2im arg(a - ib)} e^{i sigma r^2 (ac+bd)/(2S)} S^{-1/4} Phi_{m,sigma}(r/sqrt S)``.
    """
    r = np.asarray(r, dtype=float)
    s2 = m.a * m.a + m.b * m.b
    phase = cmath.exp(1j * mrow * elliptic_phase(m))
    comp = phi0_continuous(label, mrow, r / math.sqrt(s2))[0 if sigma == 1 else 1]
    return (phase * np.exp(1j * sigma * r * r * (m.a * m.c + m.b * m.d) / (2.0 * s2))
            * s2 ** -0.25 * comp)


def cont_elliptic_element(label, m, mrow, mcol, strict=False):
    """Matrix element ``C^{eps,k}_{m,m'}(M)`` in the oscillator basis.

    For ``m >= m'``::

        (-1)^{m-m'} 2^{2m'}/(m-m')! sqrt(Gamma(k+m) Gamma(1-k+m) / (Gamma(k+m') Gamma(1-k+m')))
        * [(a-d) + i(b+c)]^{m-m'} / [(a+d) + i(b-c)]^{m+m'}
        * 2F1(k-m', 1-k-m'; 1+m-m'; -(S-2)/4)

    and for ``m <= m'`` the same with ``m <-> m'``, ``(a-d) - i(b+c)`` in
    place of ``(a-d) + i(b+c)`` and no sign factor.  Here
    ``S = a^2+b^2+c^2+d^2``; all powers are integers.
    """
    eps = label.epsilon
    for v in (mrow, mcol):
        if abs((v - eps) - round(v - eps)) > 1e-9:
            raise ValueError("m - epsilon must be an integer")
    if is_elliptic_degenerate(m):
        if strict:
            raise EllipticDegenerate("matrix lies on the elliptic subgroup")
        return elliptic_diagonal_element(mrow, mcol, elliptic_phase(m))
    k = label.k
    a, b, c, d = m.a, m.b, m.c, m.d
    S = _trace_norm(m)
    lg = specfun.log_gamma
    w = complex(a + d, b - c)
    hi, lo = (mrow, mcol) if mrow >= mcol else (mcol, mrow)
    j = int(round(hi - lo))
    tot = int(round(mrow + mcol))
    # |Gamma(k+m) Gamma(1-k+m)| = |Gamma(k+m)|^2 on Re k = 1/2; the product is real
    ratio = np.exp(0.5 * (lg(k + hi) + lg(1.0 - k + hi) - lg(k + lo) - lg(1.0 - k + lo)))
    pref = 2.0 ** (2.0 * lo) / math.factorial(j) * ratio
    if mrow >= mcol:
        pref = pref * (-1) ** j * complex(a - d, b + c) ** j
    else:
        pref = pref * complex(a - d, -(b + c)) ** j
    f = specfun.hyp2f1(k - lo, 1.0 - k - lo, 1.0 + j, -(S - 2.0) / 4.0)
    return complex(pref * w ** (-tot) * f)


# ---------------------------------------------------------------------------
# Continuous series: hyperbolic basis
# ---------------------------------------------------------------------------

def _t_factor(k, m, mu, mup):
    a, b, d = m.a, m.b, m.d
    lg = specfun.log_gamma
    log_t = (lg(1.0 - 2.0 * k) + lg(k - 1j * mu) + lg(k + 1j * mup)
             - (k + 1j * mup) * math.log(abs(a))
             - 1j * (mu - mup) * math.log(abs(b))
             - (k - 1j * mu) * math.log(abs(d)))
    return np.exp(log_t) * specfun.hyp2f1(k - 1j * mu, k + 1j * mup, 2.0 * k, 1.0 / (a * d))


def alpha_beta(k, m, mu, mup):
    """Phase factors ``alpha_k`` and ``beta_k`` of the hyperbolic continuous-series element."""
    sab = _sign(m.a * m.b)
    sbd = _sign(m.b * m.d)
    alpha = cmath.exp(0.5j * math.pi * ((k + 1j * mup) * sab + (k - 1j * mu) * sbd))
    beta = cmath.exp(0.5j * math.pi * (-(k + 1j * mup) * sab + (k - 1j * mu) * sbd))
    return alpha, beta


def cont_hyperbolic_element(label, m, tau, mu, taup, mup, eps_b=EPS_B):
    """Matrix element between two-component Mellin eigenfunctions.

    The basis is ``(1, tau) r^{-1/2 + 2i mu} / sqrt(2 pi)``.  The element is::

        (-sign b)^{2 eps} g 2^{i(mu'-mu)} / (2 pi)^2 [A_k T_k + A_{1-k} T_{1-k}]
        A_k     = alpha_k + tau tau' h / alpha_k + h tau' beta_k + tau / beta_k
        A_{1-k} = h alpha_{1-k} + tau tau' / alpha_{1-k} + h tau' beta_{1-k} + tau / beta_{1-k}
        T_k     = Gamma(1-2k) Gamma(k - i mu) Gamma(k + i mu')
                  / (|a|^{k + i mu'} |b|^{i(mu - mu')} |d|^{k - i mu})
                  * 2F1(k - i mu, k + i mu'; 2k; 1/ad)
        alpha_k = exp(i pi/2 [(k + i mu') sign(ab) + (k - i mu) sign(bd)])
        beta_k  = exp(i pi/2 [-(k + i mu') sign(ab) + (k - i mu) sign(bd)])

    The four terms of each ``A`` are the blocks ``(+,+)``, ``(-,-)``,
    ``(+,-)`` and ``(-,+)`` of the two-component kernel.
    """
    _check_hyperbolic(m, eps_b)
    if tau not in (1, -1) or taup not in (1, -1):
        raise ValueError("tau and tau' must be +1 or -1")
    k = label.k
    g, h, eps = label.g, label.h, label.epsilon
    total = 0j
    for kk, first in ((k, True), (1.0 - k, False)):
        al, be = alpha_beta(kk, m, mu, mup)
        diag = (al + tau * taup * h / al) if first else (h * al + tau * taup / al)
        amp = diag + h * taup * be + tau / be
        total += amp * _t_factor(kk, m, mu, mup)
    scale = cmath.exp(1j * (mup - mu) * math.log(2.0))
    return complex((-_sign(m.b)) ** (2 * eps) * g / (2.0 * math.pi) ** 2 * scale * total)
