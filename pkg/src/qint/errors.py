"""Exception types shared across the package."""


class QintError(Exception):
    """Base class for all qint errors.

    ``s_param`` carries the path parameter s in [0, 1] at which an
    integration failed, when that context is known.
    """

    def __init__(self, message: str, s_param: float | None = None):
        super().__init__(message)
        self.s_param = s_param


class ZeroDivisorError(QintError):
    """Inversion of a quaternion with zero norm."""


class DegenerateSliceError(QintError):
    """The point sits on the real axis, where the slice direction is undefined."""


class DomainError(QintError):
    """Evaluation outside a function's domain (series radius, log branch cut, pole)."""


class UnsupportedFunctionError(QintError):
    """The requested operation has no implementation for this function kind."""


class MissingReferenceError(QintError):
    """A convergence study needs a closed-form endpoint value that is unavailable."""


class SliceEscapeError(QintError):
    """A path required to stay in one slice left it."""


class StepTooCoarseError(QintError):
    """Branch unwrapping saw a per-step argument change too large to resolve."""
