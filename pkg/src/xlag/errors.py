"""Exception types raised across the package."""


class XlagError(Exception):
    """Base class for all package errors."""


class NonExactDivision(XlagError, ArithmeticError):
    """Polynomial division left a nonzero remainder where none was expected."""


class ZeroDenominator(XlagError, ZeroDivisionError):
    pass


class SingularPotential(XlagError):
    """The denominator polynomial has a zero on the positive half-line."""


class DegenerateStep(XlagError):
    """A recursion step constant vanished, so the step cannot be normalized."""


class GridTooSmall(XlagError):
    pass


class InvalidSeedSpec(XlagError, ValueError):
    pass
