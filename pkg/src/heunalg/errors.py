"""Exception types shared across the package."""


class HeunalgError(Exception):
    """Base class for all package-specific errors."""


class IncompatibleBranchError(HeunalgError):
    """Two generalized series have base exponents differing by a non-integer."""


class NotCastableError(HeunalgError):
    """The equation cannot be written in ladder form because a3 != 0."""


class ResonantExponentError(HeunalgError):
    """The diagonal part vanishes on a generated exponent; the inverse iteration stalls."""


class NoIndicialRootError(HeunalgError):
    """The diagonal part is a nonzero constant; no exponent annihilates it."""


class DegenerateDiagonalError(HeunalgError):
    """The diagonal part is identically zero; every exponent is a root."""


class DiagonalFitError(HeunalgError):
    """An operator is not diagonal on monomials, or the eigenvalues are not
    polynomial of the requested degree."""


class SingularPointCollisionError(HeunalgError):
    """A Heun singular point collides with 0 or 1."""


class DegenerateKinkError(HeunalgError):
    """eps^2 = 0 merges singular points of the kink fluctuation equation."""


class SpecFileError(HeunalgError):
    """A coefficient file is malformed (bad key, bad rational, duplicate key)."""
