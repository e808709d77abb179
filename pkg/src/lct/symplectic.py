"""Group-level machinery for SL(2,R) = Sp(2,R).

Elements are real unimodular 2x2 matrices ``((a, b), (c, d))``.  This module
provides composition, the five one-parameter subgroups, the Iwasawa-type
factorizations used to derive kernel actions, the 2:1 map onto SO(2,1) and a
few matrix conjugations that relate different faces of the transforms.
"""

from dataclasses import dataclass
from enum import Enum
import json
import math

import numpy as np

from .errors import DegenerateB

EPS_B = 1e-12
UNIMODULAR_TOL = 1e-12


@dataclass(frozen=True)
class GroupElement:
    """Real 2x2 matrix ``((a, b), (c, d))`` with ``ad - bc = 1``.

    The determinant is checked at construction with a tolerance relative to
    the size of the products ``ad`` and ``bc``.
    """

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            v = float(getattr(self, name))
            if not math.isfinite(v):
                raise ValueError(f"entry {name} is not finite")
            object.__setattr__(self, name, v)
        scale = max(1.0, abs(self.a * self.d), abs(self.b * self.c))
        if abs(self.det() - 1.0) > UNIMODULAR_TOL * scale:
            raise ValueError(
                f"matrix is not unimodular: ad - bc = {self.det():.17g}")

    def det(self):
        return self.a * self.d - self.b * self.c

    @property
    def matrix(self):
        return np.array([[self.a, self.b], [self.c, self.d]])

    @classmethod
    def from_matrix(cls, m):
        m = np.asarray(m, dtype=float)
        return cls(m[0, 0], m[0, 1], m[1, 0], m[1, 1])

    @classmethod
    def from_abc(cls, a, b, c):
        """Complete ``(a, b, c)`` with ``d = (1 + bc)/a``."""
        if a == 0:
            raise ValueError("a must be non-zero to solve for d")
        return cls(a, b, c, (1.0 + b * c) / a)

    @classmethod
    def identity(cls):
        return cls(1.0, 0.0, 0.0, 1.0)

    def __matmul__(self, other):
        return compose(self, other)

    def __neg__(self):
        return GroupElement(-self.a, -self.b, -self.c, -self.d)

    def inverse(self):
        return inverse(self)

    def to_dict(self):
        return {"a": self.a, "b": self.b, "c": self.c, "d": self.d}

    def to_json(self):
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text):
        obj = json.loads(text) if isinstance(text, str) else text
        return cls(obj["a"], obj["b"], obj["c"], obj["d"])

    def allclose(self, other, atol=1e-12):
        return bool(np.allclose(self.matrix, other.matrix, rtol=0, atol=atol))


FOURIER = GroupElement(0.0, 1.0, -1.0, 0.0)


def compose(m1, m2):
    """Matrix product ``m1 @ m2``.

    The product is re-normalized by the square root of its determinant so
    that rounding never pushes it outside the unimodularity tolerance.
    """
    a = m1.a * m2.a + m1.b * m2.c
    b = m1.a * m2.b + m1.b * m2.d
    c = m1.c * m2.a + m1.d * m2.c
    d = m1.c * m2.b + m1.d * m2.d
    det = a * d - b * c
    if det > 0 and det != 1.0:
        s = math.sqrt(det)
        a, b, c, d = a / s, b / s, c / s, d / s
    return GroupElement(a, b, c, d)


def inverse(m):
    return GroupElement(m.d, -m.b, -m.c, m.a)


class SubgroupTag(Enum):
    """One-parameter subgroups, labelled by their generator."""

    ELLIPTIC = "J0"
    HYPERBOLIC_REPULSIVE = "J1"
    HYPERBOLIC_SCALING = "J2"
    PARABOLIC_FREE = "Jplus"
    PARABOLIC_POSITION = "Jminus"


def subgroup_element(tag, t):
    """Matrix image of ``exp(i t J_X)`` for the generator selected by ``tag``.

    Parameters
    ----------
    tag : SubgroupTag
        Which one-parameter subgroup.
    t : float
        Group parameter (phi, zeta, alpha, b or c respectively).

    Returns
    -------
    GroupElement
    """
    t = float(t)
    tag = SubgroupTag(tag)
    if tag is SubgroupTag.ELLIPTIC:
        c, s = math.cos(0.5 * t), math.sin(0.5 * t)
        return GroupElement(c, -s, s, c)
    if tag is SubgroupTag.HYPERBOLIC_REPULSIVE:
        ch, sh = math.cosh(0.5 * t), math.sinh(0.5 * t)
        return GroupElement(ch, -sh, -sh, ch)
    if tag is SubgroupTag.HYPERBOLIC_SCALING:
        return GroupElement(math.exp(-0.5 * t), 0.0, 0.0, math.exp(0.5 * t))
    if tag is SubgroupTag.PARABOLIC_FREE:
        return GroupElement(1.0, -t, 0.0, 1.0)
    return GroupElement(1.0, 0.0, t, 1.0)


# Invariant form of the SO(2,1) image below, found by solving L^T eta L = eta
# on generic elements (see ``determine_lorentz_metric``).  The third
# coordinate is time-like: its diagonal entry is (a^2+b^2+c^2+d^2)/2 >= 1.
LORENTZ_METRIC = np.diag([1.0, 1.0, -1.0])


def lorentz_displayed(m):
    """Quadratic 3x3 matrix of ``m`` in its row-vector arrangement.

    This arrangement reverses products,
    ``lorentz_displayed(M1 @ M2) = lorentz_displayed(M2) @ lorentz_displayed(M1)``;
    ``to_lorentz`` returns its transpose, which is a homomorphism.
    """
    a, b, c, d = m.a, m.b, m.c, m.d
    return np.array([
        [0.5 * (a * a - b * b - c * c + d * d), b * d - a * c,
         0.5 * (a * a - b * b + c * c - d * d)],
        [c * d - a * b, a * d + b * c, -c * d - a * b],
        [0.5 * (a * a + b * b - c * c - d * d), -b * d - a * c,
         0.5 * (a * a + b * b + c * c + d * d)],
    ])


def to_lorentz(m):
    """SO(2,1) image of ``m`` under the 2:1 homomorphism.

    All entries are quadratic in ``(a, b, c, d)`` so ``L(M) = L(-M)``, and
    ``L(M1 @ M2) = L(M1) @ L(M2)``.  The result preserves ``LORENTZ_METRIC``.
    """
    return lorentz_displayed(m).T


def determine_lorentz_metric(samples):
    """Solve ``L^T eta L = eta`` for a diagonal ``eta`` over sample elements.

    Parameters
    ----------
    samples : sequence of GroupElement
        At least two generic elements.

    Returns
    -------
    ndarray
        The diagonal metric normalized so that its last entry is -1.
    """
    rows = []
    for m in samples:
        L = to_lorentz(m)
        # Each entry (i, j) of L^T diag(e) L - diag(e) is linear in e.
        for i in range(3):
            for j in range(3):
                row = [L[k, i] * L[k, j] for k in range(3)]
                row[i] -= 1.0 if i == j else 0.0
                rows.append(row)
    _, _, vt = np.linalg.svd(np.array(rows))
    e = vt[-1]
    e = e / -e[2]
    return np.diag(e)


@dataclass(frozen=True)
class EllipticFactorization:
    """``M = [[a', 0], [c', 1/a']] exp(i alpha J0)``."""

    a_prime: float
    c_prime: float
    alpha: float

    def reassemble(self):
        left = GroupElement(self.a_prime, 0.0, self.c_prime, 1.0 / self.a_prime)
        return compose(left, subgroup_element(SubgroupTag.ELLIPTIC, self.alpha))


def elliptic_factor(m):
    """Factor ``m`` into a lower-triangular matrix times an elliptic element.

    ``a' = sqrt(a^2 + b^2)``, ``a' c' = ac + bd`` and
    ``exp(i alpha) = (a - ib)/(a + ib)``.

    Because ``exp(i alpha J0)`` has period ``4 pi`` and ``a' > 0``, the angle
    is returned as ``2 arg(a - ib)`` in ``(-2 pi, 2 pi]``; it lies in
    ``(-pi, pi]`` exactly when ``a > 0``.
    """
    ap = math.hypot(m.a, m.b)
    cp = (m.a * m.c + m.b * m.d) / ap
    alpha = 2.0 * math.atan2(-m.b, m.a)
    return EllipticFactorization(ap, cp, alpha)


@dataclass(frozen=True)
class ParabolicFactorization:
    """``M = left @ [[1, shear], [0, 1]] @ F`` with ``left`` lower triangular.

    ``F = ((0, 1), (-1, 0))`` is the Fourier matrix; the middle factor is a
    free-propagation shear by ``-a/b``.
    """

    left: GroupElement
    shear: float

    def reassemble(self):
        middle = compose(self.left, GroupElement(1.0, self.shear, 0.0, 1.0))
        return compose(middle, FOURIER)


def parabolic_factor(m, eps_b=EPS_B):
    """Factor ``m`` through the chain ``((b, 0), (d, 1/b)) ((1, -a/b), (0, 1))``.

    The chain equals ``m @ F^{-1}``; it is how the radial kernel is obtained
    from the Hankel-type eigenfunctions.  Raises ``DegenerateB`` when
    ``|b| < eps_b``.
    """
    if abs(m.b) < eps_b:
        raise DegenerateB(f"|b| = {abs(m.b):.3g} below {eps_b:.1g}")
    left = GroupElement(m.b, 0.0, m.d, 1.0 / m.b)
    return ParabolicFactorization(left, -m.a / m.b)


def reflection_conjugate(m):
    """Conjugation by ``diag(1, -1)``: ``((a, -b), (-c, d))``."""
    return GroupElement(m.a, -m.b, -m.c, m.d)


def hankel_conjugate(m):
    """Matrix ``((d, -c), (-b, a))`` relating the J+ and J- bases."""
    return GroupElement(m.d, -m.c, -m.b, m.a)


def cayley_conjugate_reposc(m):
    """Conjugation by the square root of the Fourier matrix.

    Relates the repulsive-oscillator (J1) and scaling (J2) bases.
    """
    a, b, c, d = m.a, m.b, m.c, m.d
    return GroupElement(0.5 * (a + b + c + d), 0.5 * (-a + b - c + d),
                        0.5 * (-a - b + c + d), 0.5 * (a - b - c + d))


def random_element(rng, scale=2.0, min_abs_b=0.0):
    """Draw a random unimodular matrix.

    Entries ``a, b, c`` are uniform in ``[-scale, scale]`` (with ``|a|``
    bounded away from zero) and ``d`` is solved from the determinant.
    """
    while True:
        a = rng.uniform(-scale, scale)
        b = rng.uniform(-scale, scale)
        c = rng.uniform(-scale, scale)
        if abs(a) < 0.2 or abs(b) < min_abs_b:
            continue
        return GroupElement.from_abc(a, b, c)
