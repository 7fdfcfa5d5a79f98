"""Package defining the exceptions raised by gflab domain operations."""

from typing import Optional


class GflabError(Exception):
    """Base of all exceptions raised by gflab.

    Attributes
    ----------
    context : Optional[str]
        An optional context (a kernel family, a preset name, an operation...) attached to the
        exception or the exception class. When set, it prefixes the message.

    Examples
    --------
    >>> str(GflabError("something went wrong"))
    'something went wrong'
    >>> str(GflabError("matrix is not positive definite", context="kernel[fbm]"))
    'kernel[fbm]: matrix is not positive definite'

    """

    context: Optional[str] = None

    def __init__(self, message: str, context: Optional[str] = None) -> None:
        """Create the exception with a context and formatted message.

        Parameters
        ----------
        message : str
            The message of the exception. Will be prefixed by the context, if any.
        context : Optional[str]
            What the exception is about.
        """
        if context:
            self.context = context
        if self.context:
            message = f"{self.context}: {message}"
        super().__init__(message)


class DimensionMismatchError(GflabError, ValueError):
    """Exception raised when points or arrays of different dimensions are combined."""


class OutOfDomainError(GflabError, ValueError):
    """Exception raised when a point is evaluated outside a declared domain."""


class RadiusTooSmallError(GflabError, ValueError):
    """Exception raised when a ball is too small to resolve pair distances above the floor."""


class DegenerateKernelError(GflabError, ValueError):
    """Exception raised when every sampled pair has a null incremental variance."""


class DegeneratePathError(GflabError, ValueError):
    """Exception raised when a path has no oscillation to measure."""


class InsufficientDataError(GflabError, ValueError):
    """Exception raised when there are not enough points, radii or scales for an estimation."""


class InvalidEpsilonError(GflabError, ValueError):
    """Exception raised when a sandwich margin is too large for the estimated exponent."""


class NotPositiveDefiniteError(GflabError):
    """Exception raised when a covariance cannot be factorized, even with jitter."""


class BudgetExceededError(GflabError):
    """Exception raised when a computation would exceed a configured size budget."""


class EmptyIntersectionError(GflabError, ValueError):
    """Exception raised when a ball does not contain any grid point."""


class NoValidWindowError(GflabError, ValueError):
    """Exception raised when no scale window qualifies for a box-counting regression."""


class ConfigError(GflabError, ValueError):
    """Exception raised when an experiment configuration is invalid."""


class ExportError(GflabError):
    """Exception raised when a sample path or a report cannot be written, or read back."""
