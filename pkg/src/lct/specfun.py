"""Special functions with complex parameters, evaluated in double precision.

Everything the kernels and eigenfunctions need is implemented here: the log
Gamma function, Kummer's 1F1, Gauss' 2F1 on the real line, Bessel functions of
complex order, Hankel and Macdonald functions of imaginary order, Whittaker
functions and Laguerre polynomials.

Power series are used only where they are well conditioned.  Elsewhere the
defining differential equation is continued by Taylor stepping: at each step
the local Taylor coefficients follow from a short recurrence and the step is
kept to half the distance to the nearest singular point, so every step
converges geometrically.  This keeps close to full double precision along
the imaginary axis, where a plain Kummer series at ``|z| = 30`` would lose
about thirteen digits to cancellation.

All complex powers use the principal branch with the cut on the negative real
axis.
"""

import math
import warnings

import numpy as np

from .errors import (DegenerateMu, NonConvergence, OnBranchCut, ParameterPole,
                     PoleAtNonPositiveInteger, SmallS, UnderflowWarning)

MAX_TERMS = 1000
TAIL_RTOL = 1e-16
EULER_GAMMA = 0.57721566490153286061

# Coefficients B_{2j} / (2j (2j - 1)) of the Stirling series.
_STIRLING = np.array([
    1.0 / 12.0, -1.0 / 360.0, 1.0 / 1260.0, -1.0 / 1680.0, 1.0 / 1188.0,
    -691.0 / 360360.0, 1.0 / 156.0, -3617.0 / 122400.0, 43867.0 / 244188.0,
    -174611.0 / 125400.0,
])
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)
_STIRLING_MIN = 10.0

# Kummer series is used while |z| - Re z stays below this (after reflection
# to Re z >= 0); the cancellation it costs is about exp of that quantity.
_KUMMER_SERIES_GAP = 6.0
_KUMMER_START = 4.0
_TAYLOR_TERMS = 60
_MAX_STEP = 2.0
_BESSEL_SERIES_MAX = 8.0
_BESSEL_ASYM_MIN = 25.0
_WHITTAKER_SMALL = 2.0
_WHITTAKER_ASYM = 60.0


def _as_complex(z):
    return np.asarray(z, dtype=complex)


def _is_nonpositive_integer(z, tol=0.0):
    z = complex(z)
    if abs(z.imag) > tol:
        return False
    r = round(z.real)
    return r <= 0 and abs(z.real - r) <= tol


def _neumaier_add(total, comp, term):
    t = total + term
    big = np.abs(total) >= np.abs(term)
    comp = comp + np.where(big, (total - t) + term, (term - t) + total)
    return t, comp


# ---------------------------------------------------------------------------
# Gamma
# ---------------------------------------------------------------------------

def log_gamma(z):
    """Principal branch of log Gamma(z).

    The argument is shifted upward until ``Re z >= 10`` and the Stirling
    series is summed there; the shift is undone with principal logarithms,
    which yields the branch that is continuous off the negative real axis.

    Parameters
    ----------
    z : complex or array_like

    Returns
    -------
    complex or ndarray

    Raises
    ------
    PoleAtNonPositiveInteger
        If any ``z`` is 0, -1, -2, ...
    """
    z = _as_complex(z)
    scalar = z.ndim == 0
    z = np.atleast_1d(z)
    poles = (z.imag == 0) & (z.real <= 0) & (z.real == np.round(z.real))
    if np.any(poles):
        raise PoleAtNonPositiveInteger(f"Gamma has a pole at {z[poles][0]}")
    w = z.copy()
    shift = np.zeros_like(z)
    mask = w.real < _STIRLING_MIN
    while np.any(mask):
        shift[mask] += np.log(w[mask])
        w[mask] += 1.0
        mask = w.real < _STIRLING_MIN
    inv = 1.0 / w
    inv2 = inv * inv
    series = np.zeros_like(w)
    for coef in _STIRLING[::-1]:
        series = series * inv2 + coef
    out = (w - 0.5) * np.log(w) - w + _HALF_LOG_2PI + series * inv - shift
    return out[0] if scalar else out


def gamma(z):
    """Gamma function as ``exp(log_gamma(z))``."""
    return np.exp(log_gamma(z))


def rgamma(z):
    """Reciprocal Gamma function, equal to zero at the poles of Gamma."""
    z = _as_complex(z)
    scalar = z.ndim == 0
    z = np.atleast_1d(z)
    poles = (z.imag == 0) & (z.real <= 0) & (z.real == np.round(z.real))
    out = np.zeros_like(z)
    if np.any(~poles):
        out[~poles] = np.exp(-log_gamma(z[~poles]))
    return out[0] if scalar else out


# ---------------------------------------------------------------------------
# Kummer 1F1
# ---------------------------------------------------------------------------

def _hyp1f1_series(a, b, z):
    """Plain Kummer series, vectorized over ``z``; returns value and derivative."""
    total = np.ones_like(z)
    comp = np.zeros_like(z)
    dtotal = np.zeros_like(z)
    dcomp = np.zeros_like(z)
    term = np.ones_like(z)
    done = np.zeros(z.shape, dtype=bool)
    dterm = np.ones_like(z)
    for n in range(MAX_TERMS):
        # dterm is d/dz of the new term, (n + 1) c_{n+1} z^n
        dterm = dterm * (a / b) if n == 0 else dterm * (a + n) / ((b + n) * n) * z
        term = term * (a + n) / ((b + n) * (n + 1)) * z
        total, comp = _neumaier_add(total, comp, term)
        dtotal, dcomp = _neumaier_add(dtotal, dcomp, dterm)
        small = np.abs(term) <= TAIL_RTOL * np.abs(total + comp)
        done = done | (small & (n > np.abs(z)))
        if np.all(done | (term == 0)):
            break
    else:
        raise NonConvergence("Kummer series did not converge")
    return total + comp, dtotal + dcomp


def _kummer_taylor_step(a, b, c, h, w, dw):
    """Advance the Kummer ODE solution from ``c`` to ``c + h``."""
    # z w'' + (b - z) w' - a w = 0 expanded around c, coefficients scaled by h^n
    e_prev = w
    e_cur = dw * h
    val = e_prev + e_cur
    der = e_cur.copy()
    for n in range(0, _TAYLOR_TERMS):
        e_next = -((n + 1) * (n + b - c) * e_cur * h - (n + a) * e_prev * h * h) \
            / (c * (n + 2) * (n + 1))
        val = val + e_next
        der = der + (n + 2) * e_next
        e_prev, e_cur = e_cur, e_next
    return val, der / h


def _hyp1f1_continued(a, b, z):
    """1F1 by continuation of Kummer's ODE along the ray from 0 to ``z``."""
    r = np.abs(z)
    unit = z / r
    z0 = unit * _KUMMER_START
    w, dw = _hyp1f1_series(a, b, z0)
    # solutions grow like e^z, so a Taylor step longer than a few units
    # cancels; steps are also kept inside half the distance to z = 0
    nsteps = max(1, int(math.ceil((r.max() - _KUMMER_START) / _MAX_STEP)))
    h = (z - z0) / nsteps
    c = z0
    for _ in range(nsteps):
        w, dw = _kummer_taylor_step(a, b, c, h, w, dw)
        c = c + h
    return w


def hyp1f1(a, b, z):
    """Confluent hypergeometric function 1F1(a; b; z).

    Parameters
    ----------
    a, b : complex
        Parameters; ``b`` must not be a non-positive integer unless ``a`` is a
        non-positive integer of smaller modulus.
    z : complex or array_like

    Returns
    -------
    complex or ndarray

    Notes
    -----
    Terminating series are summed directly.  Otherwise Kummer's reflection
    ``1F1(a;b;z) = e^z 1F1(b-a;b;-z)`` moves ``z`` into ``Re z >= 0``, the
    power series is used when ``|z| - Re z`` is small, and Taylor
    continuation of the ODE is used for the rest.
    """
    a = complex(a)
    b = complex(b)
    z = _as_complex(z)
    scalar = z.ndim == 0
    z = np.atleast_1d(z)
    a_term = _is_nonpositive_integer(a)
    if _is_nonpositive_integer(b):
        if not (a_term and -a.real <= -b.real):
            raise ParameterPole(f"1F1 lower parameter b = {b} is a pole")
    if a_term:
        n = int(round(-a.real))
        total = np.ones_like(z)
        term = np.ones_like(z)
        for j in range(n):
            term = term * (a + j) / ((b + j) * (j + 1)) * z
            total = total + term
        return total[0] if scalar else total

    out = np.empty_like(z)
    reflect = z.real < 0
    zz = np.where(reflect, -z, z)
    gap = np.abs(zz) - zz.real
    use_series = (gap <= _KUMMER_SERIES_GAP) | (np.abs(zz) <= _KUMMER_START)
    for refl in (False, True):
        sel = reflect == refl
        if not np.any(sel):
            continue
        aa = b - a if refl else a
        if _is_nonpositive_integer(aa):
            vals = hyp1f1(aa, b, zz[sel])
        else:
            vals = np.empty(int(sel.sum()), dtype=complex)
            s_series = use_series[sel]
            if np.any(s_series):
                vals[s_series] = _hyp1f1_series(aa, b, zz[sel][s_series])[0]
            if np.any(~s_series):
                vals[~s_series] = _hyp1f1_continued(aa, b, zz[sel][~s_series])
        if refl:
            vals = np.exp(z[sel]) * vals
        out[sel] = vals
    return out[0] if scalar else out


# ---------------------------------------------------------------------------
# Gauss 2F1 on the real line
# ---------------------------------------------------------------------------

def _hyp2f1_series(a, b, c, z):
    total = np.ones_like(z)
    comp = np.zeros_like(z)
    term = np.ones_like(z)
    for n in range(MAX_TERMS):
        term = term * (a + n) * (b + n) / ((c + n) * (n + 1)) * z
        total, comp = _neumaier_add(total, comp, term)
        if np.all(np.abs(term) <= TAIL_RTOL * np.abs(total + comp)):
            return total + comp
    raise NonConvergence("Gauss series did not converge")


def _hyp2f1_terminating(a, b, c, z, n):
    total = np.ones_like(z)
    term = np.ones_like(z)
    for j in range(n):
        term = term * (a + j) * (b + j) / ((c + j) * (j + 1)) * z
        total = total + term
    return total


def _near_integer(x, tol=1e-9):
    x = complex(x)
    return abs(x.imag) <= tol and abs(x.real - round(x.real)) <= tol


def _hyp2f1_ode(a, b, c, z):
    """Continue the hypergeometric ODE along the real axis from 0 to ``z``."""
    x0 = 0.4 if z > 0 else -0.4
    if abs(z) <= abs(x0):
        return _hyp2f1_series(a, b, c, np.array([complex(z)]))[0]
    w = _hyp2f1_series(a, b, c, np.array([complex(x0)]))[0]
    dw = a * b / c * _hyp2f1_series(a + 1, b + 1, c + 1,
                                    np.array([complex(x0)]))[0]
    x = x0
    for _ in range(10000):
        remaining = z - x
        if remaining == 0:
            return w
        radius = min(abs(x), abs(1.0 - x))
        h = math.copysign(min(0.5 * radius, abs(remaining)), remaining)
        A0, A1, A2 = x * (1.0 - x), 1.0 - 2.0 * x, -1.0
        B0, B1, C = c - (a + b + 1.0) * x, -(a + b + 1.0), -a * b
        e_prev, e_cur = w, dw * h
        val = e_prev + e_cur
        der = e_cur
        for n in range(_TAYLOR_TERMS):
            e_next = -((n + 1) * (A1 * n + B0) * e_cur * h
                       + (A2 * n * (n - 1) + B1 * n + C) * e_prev * h * h) \
                / (A0 * (n + 2) * (n + 1))
            val = val + e_next
            der = der + (n + 2) * e_next
            e_prev, e_cur = e_cur, e_next
        w, dw = val, der / h
        x = x + h
    raise NonConvergence("2F1 continuation did not reach its target")


def _hyp2f1_real(a, b, c, x):
    """2F1 at a single real point ``x < 1`` for non-terminating parameters."""
    if abs(x) <= 0.5:
        return _hyp2f1_series(a, b, c, np.array([complex(x)]))[0]
    if -1.0 <= x < -0.5:
        w = x / (x - 1.0)
        return (1.0 - x) ** (-a) * _hyp2f1_series(a, c - b, c,
                                                  np.array([complex(w)]))[0]
    if 0.5 < x < 1.0:
        if _near_integer(c - a - b):
            return _hyp2f1_ode(a, b, c, x)
        y = 1.0 - x
        t1 = (gamma(c) * gamma(c - a - b) * rgamma(c - a) * rgamma(c - b)
              * _hyp2f1_real(a, b, a + b - c + 1.0, y))
        t2 = (y ** (c - a - b) * gamma(c) * gamma(a + b - c) * rgamma(a) * rgamma(b)
              * _hyp2f1_real(c - a, c - b, c - a - b + 1.0, y))
        return t1 + t2
    # x < -1
    if _near_integer(b - a):
        return _hyp2f1_ode(a, b, c, x)
    y = 1.0 / x
    t1 = (gamma(c) * gamma(b - a) * rgamma(b) * rgamma(c - a)
          * (-x) ** (-a) * _hyp2f1_real(a, a - c + 1.0, a - b + 1.0, y))
    t2 = (gamma(c) * gamma(a - b) * rgamma(a) * rgamma(c - b)
          * (-x) ** (-b) * _hyp2f1_real(b, b - c + 1.0, b - a + 1.0, y))
    return t1 + t2


def hyp2f1(a, b, c, z, cut_tol=1e-12):
    """Gauss hypergeometric function 2F1(a, b; c; z).

    Parameters
    ----------
    a, b, c : complex
    z : float, complex or array_like
        Real arguments are supported on the whole line off the cut
        ``[1, inf)``; complex arguments only inside the unit disc.
    cut_tol : float
        Distance from the cut below which ``OnBranchCut`` is raised.

    Returns
    -------
    complex or ndarray

    Notes
    -----
    Terminating series are summed directly for any ``z``.  Otherwise the
    series is used for ``|z| <= 1/2`` and the Pfaff, ``1 - z`` and ``1/z``
    transformations map the rest of the real line into that disc.  When a
    transformation is degenerate (``c - a - b`` or ``b - a`` an integer) the
    ODE is continued from the origin instead.
    """
    a, b, c = complex(a), complex(b), complex(c)
    z = _as_complex(z)
    scalar = z.ndim == 0
    z = np.atleast_1d(z)
    n_term = None
    for p in (a, b):
        if _is_nonpositive_integer(p):
            n = int(round(-p.real))
            n_term = n if n_term is None else min(n_term, n)
    if _is_nonpositive_integer(c) and (n_term is None or n_term > -c.real):
        raise ParameterPole(f"2F1 lower parameter c = {c} is a pole")
    if n_term is not None:
        out = _hyp2f1_terminating(a, b, c, z, n_term)
        return out[0] if scalar else out
    out = np.empty_like(z)
    for i, zi in enumerate(z):
        if abs(zi.imag) > 0:
            if abs(zi) >= 0.9:
                raise OnBranchCut("complex 2F1 arguments are supported only for |z| < 0.9")
            out[i] = _hyp2f1_series(a, b, c, np.array([zi]))[0]
            continue
        x = zi.real
        if x >= 1.0 - cut_tol:
            raise OnBranchCut(f"2F1 argument {x} lies on the cut [1, inf)")
        out[i] = _hyp2f1_real(a, b, c, x)
    return out[0] if scalar else out


# ---------------------------------------------------------------------------
# Bessel and Hankel functions
# ---------------------------------------------------------------------------

def _bessel_series(nu, x):
    """Ascending series of J_nu(x) for x >= 0 (nu not a negative integer)."""
    q = -0.25 * x * x
    total = np.ones_like(x, dtype=complex)
    comp = np.zeros_like(total)
    term = np.ones_like(total)
    for j in range(MAX_TERMS):
        term = term * q / ((j + 1) * (nu + j + 1))
        total, comp = _neumaier_add(total, comp, term)
        if np.all(np.abs(term) <= TAIL_RTOL * np.abs(total + comp)) and j > 2:
            break
    else:
        raise NonConvergence("Bessel series did not converge")
    with np.errstate(divide="ignore", invalid="ignore"):
        pref = np.where(x > 0, np.exp(nu * np.log(np.where(x > 0, 0.5 * x, 1.0))),
                        1.0 if nu == 0 else 0.0)
    return pref * rgamma(nu + 1) * (total + comp)


def _hankel_asymptotic(nu, x):
    """Large-argument expansions of H1_nu(x) and H2_nu(x) for real x > 0."""
    mu4 = 4.0 * nu * nu
    s1 = np.ones_like(x, dtype=complex)
    s2 = np.ones_like(x, dtype=complex)
    ak = np.ones_like(x, dtype=complex)
    prev = np.full(x.shape, np.inf)
    active = np.ones(x.shape, dtype=bool)
    for k in range(1, 200):
        ak = ak * (mu4 - (2 * k - 1) ** 2) / (k * 8.0 * x)
        size = np.abs(ak)
        # stop each point at its smallest term
        active = active & (size < prev) & (size > 1e-17 * np.abs(s1))
        if not np.any(active):
            break
        s1 = s1 + np.where(active, ak * (1j) ** k, 0.0)
        s2 = s2 + np.where(active, ak * (-1j) ** k, 0.0)
        prev = np.where(active, size, prev)
    omega = x - 0.5 * nu * math.pi - 0.25 * math.pi
    amp = np.sqrt(2.0 / (math.pi * x))
    return amp * np.exp(1j * omega) * s1, amp * np.exp(-1j * omega) * s2


def _bessel_switch(nu):
    return _BESSEL_ASYM_MIN + 0.5 * abs(complex(nu)) ** 2


def _bessel_small(nu, x):
    """J_nu(x) below the asymptotic range.

    The ascending series is used up to ``x = 8``; beyond that it cancels, and
    ``J_nu(x) = (x/2)^nu e^{-ix} 1F1(nu + 1/2; 2nu + 1; 2ix) / Gamma(nu + 1)``
    is used instead.
    """
    out = np.empty(x.shape, dtype=complex)
    low = x <= _BESSEL_SERIES_MAX
    if np.any(low):
        out[low] = _bessel_series(nu, x[low])
    if np.any(~low):
        xs = x[~low]
        if nu == -0.5:
            out[~low] = np.sqrt(2.0 / (math.pi * xs)) * np.cos(xs)
        else:
            out[~low] = (np.exp(nu * np.log(0.5 * xs) - 1j * xs) * rgamma(nu + 1)
                         * hyp1f1(nu + 0.5, 2.0 * nu + 1.0, 2j * xs))
    return out


def bessel_j(nu, x):
    """Bessel function of the first kind J_nu(x) for real x >= 0.

    Parameters
    ----------
    nu : float or complex
        Order.  Real orders give real output.
    x : float or array_like
        Non-negative real argument.

    Returns
    -------
    float, complex or ndarray

    Notes
    -----
    The ascending series is used for ``x <= 8``, the Kummer representation
    up to ``x = 25 + |nu|^2 / 2`` and ``J = (H1 + H2) / 2`` from the Hankel
    asymptotic expansions beyond.
    """
    nu_c = complex(nu)
    real_order = nu_c.imag == 0
    x = np.asarray(x, dtype=float)
    scalar = x.ndim == 0
    x = np.atleast_1d(x)
    if np.any(x < 0):
        raise ValueError("bessel_j needs x >= 0; use the branch relation for x < 0")
    if real_order and _is_nonpositive_integer(nu_c) and nu_c != 0:
        n = int(round(-nu_c.real))
        out = (-1) ** n * bessel_j(float(n), x)
        return out[0] if scalar else out
    out = np.empty(x.shape, dtype=complex)
    big = x > _bessel_switch(nu_c)
    if np.any(~big):
        out[~big] = _bessel_small(nu_c, x[~big])
    if np.any(big):
        h1, h2 = _hankel_asymptotic(nu_c, x[big])
        out[big] = 0.5 * (h1 + h2)
    if real_order:
        out = out.real
    return out[0] if scalar else out


def hankel(kind, nu, x):
    """Hankel function H^(kind)_nu(x) for real x > 0 and non-integer nu.

    Small arguments use ``H1 = (J_{-nu} - e^{-i pi nu} J_nu) / (i sin pi nu)``
    and its conjugate-kind analogue; large ones use the asymptotic
    expansions directly.
    """
    nu = complex(nu)
    x = np.asarray(x, dtype=float)
    scalar = x.ndim == 0
    x = np.atleast_1d(x)
    out = np.empty(x.shape, dtype=complex)
    big = x > _bessel_switch(nu)
    if np.any(big):
        h1, h2 = _hankel_asymptotic(nu, x[big])
        out[big] = h1 if kind == 1 else h2
    if np.any(~big):
        xs = x[~big]
        jp = _bessel_small(nu, xs)
        jm = _bessel_small(-nu, xs)
        sn = np.sin(np.pi * nu)
        if kind == 1:
            out[~big] = (jm - np.exp(-1j * np.pi * nu) * jp) / (1j * sn)
        else:
            out[~big] = (jm - np.exp(1j * np.pi * nu) * jp) / (-1j * sn)
    return out[0] if scalar else out


def hankel_imaginary_order(kind, s, x, side="above"):
    """Hankel function of imaginary order 2is on either side of the cut.

    Parameters
    ----------
    kind : {1, 2}
    s : float
        Half the imaginary order, ``nu = 2is``.
    x : float or array_like
        Real argument.  For ``x > 0`` the value is ``H^(kind)_{2is}(x)``.
        For ``x < 0`` it is the boundary value at ``x + i0`` (``side="above"``)
        or ``x - i0`` (``side="below"``).
    side : {"above", "below"}

    Returns
    -------
    complex or ndarray

    Raises
    ------
    SmallS
        If ``|s| < 1e-6`` and the J-combination is needed.
    """
    if kind not in (1, 2):
        raise ValueError("kind must be 1 or 2")
    if side not in ("above", "below"):
        raise ValueError("side must be 'above' or 'below'")
    nu = 2j * float(s)
    x = np.asarray(x, dtype=float)
    scalar = x.ndim == 0
    x = np.atleast_1d(x)
    ax = np.abs(x)
    if abs(s) < 1e-6 and np.any(ax <= _bessel_switch(nu)):
        raise SmallS("order 2is too close to 0 for the J-combination")
    h1 = hankel(1, nu, ax)
    h2 = hankel(2, nu, ax)
    out = h1 if kind == 1 else h2
    neg = x < 0
    if np.any(neg):
        e = np.exp(1j * np.pi * nu)
        em = np.exp(-1j * np.pi * nu)
        cos2 = 2.0 * np.cos(np.pi * nu)
        if kind == 1 and side == "above":
            cont = -em * h2
        elif kind == 1:
            cont = cos2 * h1 + em * h2
        elif side == "below":
            cont = -e * h1
        else:
            cont = cos2 * h2 + e * h1
        out = np.where(neg, cont, out)
    return out[0] if scalar else out


def hankel_order_zero(kind, x, side="above"):
    """H^(kind)_0 on either side of the cut, the ``s -> 0`` limit of the above."""
    x = np.asarray(x, dtype=float)
    scalar = x.ndim == 0
    x = np.atleast_1d(x)
    ax = np.abs(x)
    j0 = bessel_j(0.0, ax)
    y0 = bessel_y0(ax)
    h1 = j0 + 1j * y0
    h2 = j0 - 1j * y0
    out = h1 if kind == 1 else h2
    neg = x < 0
    if np.any(neg):
        if kind == 1 and side == "above":
            cont = -h2
        elif kind == 1:
            cont = 2.0 * h1 + h2
        elif side == "below":
            cont = -h1
        else:
            cont = 2.0 * h2 + h1
        out = np.where(neg, cont, out)
    return out[0] if scalar else out


def bessel_y0(x):
    """Bessel function of the second kind Y_0(x) for x > 0.

    Uses ``Y_0 = (2/pi) dJ_nu/dnu`` at ``nu = 0``.  On the ascending-series
    range every intermediate is real for real order, so a complex step of
    1e-30 in the order is exact.  Beyond it a step of 1e-3 is combined with
    one of 2e-3 to cancel the leading truncation term.
    """
    x = np.asarray(x, dtype=float)
    scalar = x.ndim == 0
    x = np.atleast_1d(x)
    out = np.empty_like(x)
    low = x <= _BESSEL_SERIES_MAX
    if np.any(low):
        delta = 1e-30
        out[low] = np.imag(bessel_j(1j * delta, x[low])) / delta
    if np.any(~low):
        delta = 1e-3
        f1 = np.imag(bessel_j(1j * delta, x[~low])) / delta
        f2 = np.imag(bessel_j(2j * delta, x[~low])) / (2 * delta)
        out[~low] = (4.0 * f1 - f2) / 3.0
    out *= 2.0 / math.pi
    return out[0] if scalar else out


# ---------------------------------------------------------------------------
# Macdonald function of imaginary order
# ---------------------------------------------------------------------------

_K_UNDERFLOW = 700.0


def _macdonald_rule(s, x, h, method):
    xmin = x.min()
    tmax = math.acosh(max(1.0, 745.0 / xmin)) + 0.5
    if method == "trapezoid":
        n = int(math.ceil(tmax / h))
        t = np.arange(n + 1) * h
        w = np.full(n + 1, h)
        w[0] = 0.5 * h
    else:
        npan = int(math.ceil(tmax / (8 * h)))
        gx, gw = np.polynomial.legendre.leggauss(16)
        edges = np.linspace(0.0, npan * 8 * h, npan + 1)
        t = np.concatenate([0.5 * (hi - lo) * gx + 0.5 * (hi + lo)
                            for lo, hi in zip(edges[:-1], edges[1:])])
        w = np.concatenate([0.5 * (hi - lo) * gw
                            for lo, hi in zip(edges[:-1], edges[1:])])
    # integrand scaled by e^{x} to keep it O(1) near t = 0
    expo = -x[:, None] * (np.cosh(t)[None, :] - 1.0)
    vals = np.exp(expo) * np.cos(2.0 * s * t)[None, :]
    return (vals @ w) * np.exp(-x)


def _macdonald_refined(s, xs, method, tol):
    # the integrand has width ~ 1/sqrt(x) near t = 0
    h = min(0.2, 0.5 / math.sqrt(xs.max()), 0.5 / max(1.0, abs(s)))
    prev = _macdonald_rule(s, xs, h, method)
    for _ in range(6):
        h *= 0.5
        cur = _macdonald_rule(s, xs, h, method)
        if np.all(np.abs(cur - prev) <= tol * np.abs(cur) + 1e-300):
            break
        prev = cur
    return cur


def macdonald_imaginary_order(s, x, method="trapezoid", tol=1e-14):
    """Macdonald function K_{2is}(x) for real s and x > 0.

    Evaluates ``int_0^inf exp(-x cosh t) cos(2 s t) dt``.  The default rule is
    the trapezoid rule with step halving until two successive values agree;
    ``method="gauss"`` uses composite Gauss-Legendre panels instead and serves
    as an independent check.

    Parameters
    ----------
    s : float
    x : float or array_like
        Positive argument.  Values above 700 underflow and return 0 with an
        ``UnderflowWarning``.
    method : {"trapezoid", "gauss"}
    tol : float
        Relative agreement required between successive refinements.

    Returns
    -------
    float or ndarray
    """
    s = float(s)
    x = np.asarray(x, dtype=float)
    scalar = x.ndim == 0
    x = np.atleast_1d(x)
    if np.any(x <= 0):
        raise ValueError("macdonald_imaginary_order needs x > 0")
    out = np.zeros_like(x)
    under = x > _K_UNDERFLOW
    if np.any(under):
        warnings.warn("K_{2is}(x) underflows for x > 700; returning 0",
                      UnderflowWarning, stacklevel=2)
    live = ~under
    if np.any(live):
        xs = x[live]
        # the integrand has width ~ 1/sqrt(x) near t = 0
        vals = np.empty_like(xs)
        order = np.argsort(xs)
        # chunks of similar x share one node set and bound the work array
        for chunk in np.array_split(order, max(1, len(order) // 2048)):
            vals[chunk] = _macdonald_refined(s, xs[chunk], method, tol)
        out[live] = vals
    return out[0] if scalar else out


# ---------------------------------------------------------------------------
# Whittaker functions
# ---------------------------------------------------------------------------

def whittaker_m(kappa, mu, z):
    """Whittaker function ``M_{kappa,mu}(z) = e^{-z/2} z^{mu+1/2} 1F1(mu-kappa+1/2; 1+2mu; z)``.

    Principal branch of ``z^{mu+1/2}``.
    """
    kappa, mu = complex(kappa), complex(mu)
    if _is_nonpositive_integer(1.0 + 2.0 * mu):
        raise ParameterPole("M_{kappa,mu} undefined when 2 mu is a negative integer")
    z = _as_complex(z)
    return (np.exp(-0.5 * z) * np.exp((mu + 0.5) * np.log(z))
            * hyp1f1(mu - kappa + 0.5, 1.0 + 2.0 * mu, z))


def _whittaker_w_asym(kappa, mu, z):
    """Large-z expansion of W and its derivative."""
    a1 = 0.5 + mu - kappa
    a2 = 0.5 - mu - kappa
    total = np.ones_like(z, dtype=complex)
    dsum = np.zeros_like(total)
    term = np.ones_like(total)
    prev = np.full(z.shape, np.inf)
    for n in range(1, 400):
        term = term * (a1 + n - 1) * (a2 + n - 1) / (n * (-z))
        size = np.abs(term)
        if np.all(size <= 1e-17 * np.abs(total)):
            break
        if np.any(size > prev):
            # stop at the smallest term of the divergent expansion
            if np.any(prev > 1e-13 * np.abs(total)):
                raise NonConvergence("Whittaker asymptotic series diverged before converging")
            break
        total = total + term
        dsum = dsum - n * term / z
        prev = size
    base = np.exp(-0.5 * z + kappa * np.log(z))
    w = base * total
    dw = w * (-0.5 + kappa / z) + base * dsum
    return w, dw


def _whittaker_taylor_step(kappa, mu, c, h, w, dw):
    # z^2 W'' = (z^2/4 - kappa z + mu^2 - 1/4) W about z = c, scaled by h^n
    q0 = 0.25 * c * c - kappa * c + mu * mu - 0.25
    q1 = 0.5 * c - kappa
    q2 = 0.25
    e = [w, dw * h]
    val = e[0] + e[1]
    der = e[1]
    for n in range(_TAYLOR_TERMS):
        en = e[n]
        en1 = e[n + 1]
        rhs = q0 * en * h * h
        if n >= 1:
            rhs += q1 * e[n - 1] * h ** 3
        if n >= 2:
            rhs += q2 * e[n - 2] * h ** 4
        nxt = (rhs - 2.0 * c * h * (n + 1) * n * en1 - h * h * n * (n - 1) * en) \
            / (c * c * (n + 2) * (n + 1))
        e.append(nxt)
        val = val + nxt
        der = der + (n + 2) * nxt
    return val, der / h


def whittaker_w(kappa, mu, z):
    """Whittaker function W_{kappa,mu}(z) for real z > 0.

    Parameters
    ----------
    kappa, mu : complex
        ``2 mu`` must not be an integer.
    z : float or array_like

    Returns
    -------
    complex or ndarray

    Notes
    -----
    For ``z <= 2`` the standard combination
    ``Gamma(-2mu)/Gamma(1/2-mu-kappa) M_{kappa,mu} + Gamma(2mu)/Gamma(1/2+mu-kappa) M_{kappa,-mu}``
    is used.  Larger arguments start from the asymptotic expansion at
    ``z >= 60`` and integrate the Whittaker equation inward, the direction in
    which W dominates.
    """
    kappa, mu = complex(kappa), complex(mu)
    if abs(mu.imag) < 1e-6 and _near_integer(2.0 * mu.real, 1e-6):
        raise DegenerateMu(f"W_{{kappa,mu}} combination is singular at mu = {mu}")
    z = np.asarray(z, dtype=float)
    scalar = z.ndim == 0
    z = np.atleast_1d(z)
    if np.any(z <= 0):
        raise ValueError("whittaker_w needs z > 0")
    out = np.empty(z.shape, dtype=complex)
    small = z <= _WHITTAKER_SMALL
    if np.any(small):
        zs = z[small]
        t1 = gamma(-2.0 * mu) * rgamma(0.5 - mu - kappa) * whittaker_m(kappa, mu, zs)
        t2 = gamma(2.0 * mu) * rgamma(0.5 + mu - kappa) * whittaker_m(kappa, -mu, zs)
        out[small] = t1 + t2
    if np.any(~small):
        zl = z[~small]
        z_start = max(_WHITTAKER_ASYM, 8.0 * (abs(kappa) + abs(mu) + 1.0) ** 2)
        far = zl >= z_start
        vals = np.empty(zl.shape, dtype=complex)
        if np.any(far):
            vals[far] = _whittaker_w_asym(kappa, mu, zl[far])[0]
        if np.any(~far):
            # march inward once through anchors, then reach every target with
            # one vectorized step from the nearest anchor above it
            zt = zl[~far]
            w, dw = _whittaker_w_asym(kappa, mu, np.array([z_start]))
            anchors, ws, dws = [z_start], [w[0]], [dw[0]]
            c = z_start
            lowest = zt.min()
            while c > lowest:
                h = -min(0.5 * c, _MAX_STEP, c - lowest)
                wn, dwn = _whittaker_taylor_step(kappa, mu, c, h, ws[-1], dws[-1])
                c = c + h
                anchors.append(c)
                ws.append(wn)
                dws.append(dwn)
            anchors = np.array(anchors)
            ws = np.array(ws)
            dws = np.array(dws)
            # anchors decrease; pick the smallest anchor >= target
            pos = np.searchsorted(-anchors, -zt, side="right") - 1
            base = anchors[pos]
            step = zt - base
            safe = np.where(step == 0, -1.0, step)
            wv, _ = _whittaker_taylor_step(kappa, mu, base, safe, ws[pos], dws[pos])
            vals[~far] = np.where(step == 0, ws[pos], wv)
        out[~small] = vals
    return out[0] if scalar else out


# ---------------------------------------------------------------------------
# Laguerre polynomials
# ---------------------------------------------------------------------------

def laguerre(n, alpha, x):
    """Generalized Laguerre polynomial L_n^(alpha)(x) by the three-term recurrence."""
    if n < 0:
        raise ValueError("n must be non-negative")
    x = np.asarray(x, dtype=float)
    prev = np.ones_like(x)
    if n == 0:
        return prev
    cur = 1.0 + alpha - x
    for j in range(1, n):
        prev, cur = cur, ((2 * j + 1 + alpha - x) * cur - (j + alpha) * prev) / (j + 1)
    return cur


# ---------------------------------------------------------------------------
# Tabulation of smooth one-variable functions
# ---------------------------------------------------------------------------

def panel_interpolate(func, x, lo=1.0, width=1.0, order=20, chunk=100000):
    """Evaluate ``func`` at many points through per-panel Chebyshev interpolation.

    Points below ``lo`` are passed to ``func`` directly.  Above it the axis
    is cut into panels of length ``width``; ``func`` is sampled at ``order``
    Chebyshev points of each occupied panel and the samples are
    interpolated barycentrically.  For functions that oscillate at most
    once per unit length the interpolation error is near rounding level
    with the defaults.

    Parameters
    ----------
    func : callable
        Vectorized function of a real array.
    x : array_like
        Real evaluation points.

    Returns
    -------
    ndarray of complex
    """
    x = np.asarray(x, dtype=float)
    flat = x.ravel()
    out = np.empty(flat.shape, dtype=complex)
    small = flat < lo
    if np.any(small):
        out[small] = func(flat[small])
    big = np.flatnonzero(~small)
    if big.size == 0:
        return out.reshape(x.shape)
    j = np.arange(order)
    t_nodes = np.cos((2 * j + 1) * np.pi / (2 * order))
    bary = (-1.0) ** j * np.sin((2 * j + 1) * np.pi / (2 * order))
    panel = np.floor((flat[big] - lo) / width).astype(np.int64)
    used, inverse = np.unique(panel, return_inverse=True)
    left = lo + used * width
    nodes = left[:, None] + 0.5 * width * (1.0 + t_nodes[None, :])
    table = np.asarray(func(nodes.ravel()), dtype=complex).reshape(nodes.shape)
    for start in range(0, big.size, chunk):
        sl = slice(start, start + chunk)
        idx = inverse[sl]
        t = 2.0 * (flat[big[sl]] - left[idx]) / width - 1.0
        diff = t[:, None] - t_nodes[None, :]
        exact = diff == 0.0
        diff[exact] = 1.0
        q = bary[None, :] / diff
        val = np.sum(q * table[idx], axis=1) / np.sum(q, axis=1)
        hit = exact.any(axis=1)
        if np.any(hit):
            val[hit] = table[idx[hit], np.argmax(exact[hit], axis=1)]
        out[big[sl]] = val
    return out.reshape(x.shape)
