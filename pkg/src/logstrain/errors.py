"""Exception types shared across the package."""


class LogstrainError(Exception):
    """Base class for all errors raised by this package."""


class NotPositiveDefinite(LogstrainError):
    """A symmetric matrix required to be positive definite is not."""


class NonInvertible(LogstrainError):
    """A deformation gradient (or other matrix) has non-positive or tiny determinant."""


class NoSuchPlane(LogstrainError):
    """The deformation has no plane of no distortion (middle singular value != 1)."""


class LambdaNotZero(LogstrainError):
    """An operation defined only for vanishing second Lame constant got lambda != 0."""


class InvalidModuli(LogstrainError):
    """Elastic constants are inconsistent, over-specified or inadmissible."""


class DegenerateData(LogstrainError):
    """A data set cannot support the requested fit (e.g. all stretches equal 1)."""
