"""Exception types shared across the package."""


class MirrorQuinticError(Exception):
    """Base class for all package-specific errors."""


class NonUnitConstantTerm(MirrorQuinticError, ZeroDivisionError):
    """Series inversion needs an invertible constant term."""


class NonzeroConstantTerm(MirrorQuinticError, ValueError):
    """Series exponential needs a vanishing constant term (logarithm: constant term 1)."""


class BadLowOrderTerms(MirrorQuinticError, ValueError):
    """Series reversion needs zero constant term and an invertible linear term."""


class NoConsistentBranch(MirrorQuinticError, ValueError):
    """The seed contradicts the low-order constraint system."""


class SingularOrderSystem(MirrorQuinticError):
    """The linear system determining the order-n coefficients is singular."""

    def __init__(self, order, message=""):
        self.order = order
        super().__init__(message or f"singular coefficient system at order {order}")


class DegenerateBranch(MirrorQuinticError, ValueError):
    """The selected branch makes the order-by-order recursion degenerate."""


class SingularMatrix(MirrorQuinticError, ZeroDivisionError):
    """Matrix inverse requested for a matrix with zero determinant."""


class DivisionByZeroPolynomial(MirrorQuinticError, ZeroDivisionError):
    """A rational function was built with the zero polynomial as denominator."""


class IdentityFails(MirrorQuinticError, AssertionError):
    """An identity check over Q(t) (or on exact series) does not hold."""


class BadPoleStructure(MirrorQuinticError, ValueError):
    """Pole factoring expected a simple zero with unit-coefficient linear term."""


class CacheFormatError(MirrorQuinticError, ValueError):
    """A series cache file is malformed or inconsistent with the request."""
