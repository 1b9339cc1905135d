"""Exception types shared across the package."""


class LucasEllipticaError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(LucasEllipticaError, ValueError):
    """An argument lies outside the domain of the function (z = 0, |p| >= 1, ...)."""


class SingularValue(LucasEllipticaError, ArithmeticError):
    """A theta factor in a denominator is numerically zero."""


class EnvDomainError(LucasEllipticaError, ValueError):
    """A weight environment is undefined or zero at a required symbol."""
