"""Exception and warning types raised across the package."""


class LCTError(Exception):
    """Base class for all errors raised by this package."""


class DegenerateB(LCTError):
    """The upper-right entry b is too small for the integral kernel form.

    Callers should switch to the delta-line (b -> 0) form of the kernel.
    """


class DegenerateA(LCTError):
    """An entry that appears as a denominator or power base is zero."""


class EllipticDegenerate(LCTError):
    """Matrix lies on the elliptic subgroup where the generic closed form is singular."""


class BranchCutProximity(LCTError):
    """Argument of a hypergeometric function lies on or near its branch cut."""


class PoleAtNonPositiveInteger(LCTError):
    """Gamma function evaluated at a pole."""


class ParameterPole(LCTError):
    """A hypergeometric lower parameter is a non-positive integer."""


class NonConvergence(LCTError):
    """A series or iterative procedure did not converge within its cap."""


class OnBranchCut(LCTError):
    """Gauss hypergeometric function requested on the cut [1, inf)."""


class SmallS(LCTError):
    """Imaginary order 2is too close to zero for the J-combination."""


class DegenerateMu(LCTError):
    """Whittaker W requested where its M-combination is ill-conditioned."""


class UnsupportedCombination(LCTError):
    """Requested (series, basis) pair is outside the supported table."""


class ParseError(LCTError):
    """Malformed user input (CSV or command-line value)."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class Undetermined(LCTError):
    """Neither composition sign brings the residual under tolerance."""


class UnderflowWarning(RuntimeWarning):
    """A result underflowed and was returned as zero."""


class GridTooCoarse(RuntimeWarning):
    """The sampling grid under-resolves the oscillation of a kernel."""
