"""Eigenfunctions of the five generators for the discrete and continuous series.

Discrete-series functions are scalar functions of ``r > 0``.  Continuous-series
functions are two-component, indexed by ``sigma = +1, -1``; the two components
are returned as a pair of arrays.

Generators act as

    J0 = (-d^2 + gamma/r^2 + r^2)/4,   J1 = (-d^2 + gamma/r^2 - r^2)/4,
    J2 = -(i/2)(r d + 1/2),

with ``gamma = (2k - 1)^2 - 1/4`` and Casimir ``k(1 - k)``.  For the
continuous series the operator matrices are ``diag(J0, -J0)``,
``diag(J1, -J1)`` and ``diag(J2, J2)``.
"""

from dataclasses import dataclass
from enum import Enum
import math

import numpy as np

from . import specfun
from .symplectic import SubgroupTag

BasisTag = SubgroupTag


class Sign(Enum):
    PLUS = "plus"
    MINUS = "minus"


@dataclass(frozen=True)
class DiscreteLabel:
    """Bargmann index ``k > 0`` of ``D+_k`` (``sign="plus"``) or ``D-_k``."""

    k: float
    sign: Sign = Sign.PLUS

    def __post_init__(self):
        if not (self.k > 0):
            raise ValueError("Bargmann index k must be positive")
        object.__setattr__(self, "k", float(self.k))
        object.__setattr__(self, "sign", Sign(self.sign))

    @property
    def gamma(self):
        """Centripetal coefficient ``(2k - 1)^2 - 1/4``."""
        return (2.0 * self.k - 1.0) ** 2 - 0.25

    @property
    def casimir(self):
        return self.k * (1.0 - self.k)


@dataclass(frozen=True)
class ContinuousLabel:
    """Continuous series ``C^eps_s`` with ``k = 1/2 + i s``.

    ``s >= 0`` for ``eps = 0`` and ``s > 0`` for ``eps = 1/2``.
    """

    epsilon: float
    s: float

    def __post_init__(self):
        eps = float(self.epsilon)
        if eps not in (0.0, 0.5):
            raise ValueError("epsilon must be 0 or 1/2")
        s = float(self.s)
        if s < 0 or (eps == 0.5 and s == 0):
            raise ValueError("s must be >= 0 (eps = 0) or > 0 (eps = 1/2)")
        object.__setattr__(self, "epsilon", eps)
        object.__setattr__(self, "s", s)

    @property
    def k(self):
        return complex(0.5, self.s)

    @property
    def g(self):
        """``cosh(pi s)`` for ``eps = 0``, ``sinh(pi s)`` for ``eps = 1/2``."""
        return math.cosh(math.pi * self.s) if self.epsilon == 0 else math.sinh(math.pi * self.s)

    @property
    def h(self):
        return 1.0 if self.epsilon == 0 else -1.0

    @property
    def gamma(self):
        return (2.0 * self.k - 1.0) ** 2 - 0.25

    @property
    def casimir(self):
        k = self.k
        return (k * (1.0 - k)).real


@dataclass(frozen=True)
class EigenLabel:
    """Generator, eigenvalue and (for two-component functions) component sign."""

    basis: BasisTag
    eigenvalue: float
    component: int = 1

    def __post_init__(self):
        object.__setattr__(self, "basis", BasisTag(self.basis))
        if self.component not in (1, -1):
            raise ValueError("component must be +1 or -1")


def _r(r):
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0):
        raise ValueError("r must be positive")
    return r


def phi0_discrete(label, n, r):
    """Normalized eigenfunction of J0 with eigenvalue ``m = k + n``.

    ``sqrt(2 n! / Gamma(2k + n)) r^{2k - 1/2} exp(-r^2/2) L_n^{(2k-1)}(r^2)``.
    """
    if n < 0 or int(n) != n:
        raise ValueError("n must be a non-negative integer")
    n = int(n)
    k = label.k
    r = _r(r)
    log_norm = 0.5 * (math.log(2.0) + math.lgamma(n + 1) - specfun.log_gamma(2.0 * k + n).real)
    return (np.exp(log_norm + (2.0 * k - 0.5) * np.log(r) - 0.5 * r * r)
            * specfun.laguerre(n, 2.0 * k - 1.0, r * r))


def phi_plus_discrete(label, rho, r):
    """Eigenfunction of J+ with eigenvalue ``rho^2/2``: ``e^{i pi k} sqrt(rho r) J_{2k-1}(rho r)``."""
    r = _r(r)
    x = float(rho) * r
    return np.exp(1j * math.pi * label.k) * np.sqrt(x) * specfun.bessel_j(2.0 * label.k - 1.0, x)


def _phi1_coefficient(k, mu):
    return (np.exp(specfun.log_gamma(k + 1j * mu) - specfun.log_gamma(2.0 * k)
                   + 1j * mu * math.log(2.0)) / math.sqrt(math.pi))


def phi1_discrete(label, mu, r):
    """Eigenfunction of J1 with eigenvalue ``mu``.

    ``e^{i pi (k + mu)/2} 2^{i mu} Gamma(k + i mu) / (Gamma(2k) sqrt(pi))
    r^{2k - 1/2} e^{i r^2/2} 1F1(k - i mu; 2k; -i r^2)``.
    """
    k = label.k
    r = _r(r)
    pref = np.exp(0.5j * math.pi * (k + mu)) * _phi1_coefficient(k, mu)
    return (pref * r ** (2.0 * k - 0.5) * np.exp(0.5j * r * r)
            * specfun.hyp1f1(k - 1j * mu, 2.0 * k, -1j * r * r))


def phi1_discrete_whittaker(label, mu, r):
    """The same eigenfunction through ``M_{i mu, k - 1/2}(-i r^2) / sqrt(r)``."""
    k = label.k
    r = _r(r)
    pref = np.exp(0.5j * math.pi * (2.0 * k + mu)) * _phi1_coefficient(k, mu)
    return pref / np.sqrt(r) * specfun.whittaker_m(1j * mu, k - 0.5, -1j * r * r)


def phi2_discrete(mu, r):
    """Eigenfunction of J2 with eigenvalue ``mu``: ``r^{-1/2 + 2 i mu} / sqrt(pi)``."""
    r = _r(r)
    return np.exp((-0.5 + 2j * mu) * np.log(r)) / math.sqrt(math.pi)


def phi0_continuous(label, m, r):
    """Two-component eigenfunction of ``diag(J0, -J0)`` with eigenvalue ``m``.

    Components, for ``sigma = +1`` and ``-1``::

        g/(pi sqrt r) e^{i pi m} sqrt(2) |Gamma(k - m)| W_{m, is}(r^2)
        g/(pi sqrt r)            sqrt(2) |Gamma(k + m)| W_{-m, is}(r^2)

    Returns
    -------
    tuple of ndarray
        ``(plus, minus)`` components.
    """
    eps = label.epsilon
    if abs((m - eps) - round(m - eps)) > 1e-12:
        raise ValueError("m - epsilon must be an integer")
    k = label.k
    r = _r(r)
    pref = label.g / (math.pi * np.sqrt(r))
    # Gamma(k - m) Gamma(1 - k - m) = |Gamma(k - m)|^2 on the line Re k = 1/2
    cp = np.exp(1j * math.pi * m) * math.sqrt(2.0) * np.exp(specfun.log_gamma(k - m).real)
    cm = math.sqrt(2.0) * np.exp(specfun.log_gamma(k + m).real)
    z = r * r
    plus = pref * cp * specfun.whittaker_w(m, k - 0.5, z)
    minus = pref * cm * specfun.whittaker_w(-m, k - 0.5, z)
    return plus, minus


def phi2_continuous(tau, mu, r):
    """Two-component eigenfunction of ``diag(J2, J2)``: ``(1, tau) r^{-1/2 + 2 i mu} / sqrt(2 pi)``."""
    if tau not in (1, -1):
        raise ValueError("tau must be +1 or -1")
    r = _r(r)
    v = np.exp((-0.5 + 2j * mu) * np.log(r)) / math.sqrt(2.0 * math.pi)
    return v, tau * v


# ---------------------------------------------------------------------------
# Generators as finite-difference operators, for eigenvalue checks
# ---------------------------------------------------------------------------

def _second_derivative(f, h):
    out = np.full_like(f, np.nan)
    out[1:-1] = (f[2:] - 2.0 * f[1:-1] + f[:-2]) / (h * h)
    return out


def _first_derivative(f, h):
    out = np.full_like(f, np.nan)
    out[1:-1] = (f[2:] - f[:-2]) / (2.0 * h)
    return out


def apply_generator(tag, gamma, r, f):
    """Apply J0, J1 or J2 to samples ``f`` on a uniform grid ``r``.

    Central differences; the two end points are returned as NaN.
    """
    tag = BasisTag(tag)
    h = r[1] - r[0]
    if tag is BasisTag.ELLIPTIC:
        return 0.25 * (-_second_derivative(f, h) + gamma / r ** 2 * f + r ** 2 * f)
    if tag is BasisTag.HYPERBOLIC_REPULSIVE:
        return 0.25 * (-_second_derivative(f, h) + gamma / r ** 2 * f - r ** 2 * f)
    if tag is BasisTag.HYPERBOLIC_SCALING:
        return -0.5j * (r * _first_derivative(f, h) + 0.5 * f)
    raise ValueError("only J0, J1 and J2 are differential operators here")
