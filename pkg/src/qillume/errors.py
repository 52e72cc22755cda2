"""Exception hierarchy shared by every qillume module."""


class QillumeError(Exception):
    """Base class for all library errors."""


class DomainError(QillumeError, ValueError):
    """An argument lies outside the domain of the operation."""


class ConvergenceError(QillumeError):
    """A series failed to converge within its term cap.

    Attributes:
        partial: the partial sum accumulated before giving up.
        terms_used: number of terms that were added.
    """

    def __init__(self, message: str, partial: float, terms_used: int):
        super().__init__(message)
        self.partial = partial
        self.terms_used = terms_used


class TruncationError(QillumeError):
    """The truncated Fock expansion drops more weight than allowed."""

    def __init__(self, message: str, required: int | None = None):
        super().__init__(message)
        self.required = required


class ResourceError(QillumeError):
    """Matrix dimensions exceeded the configured cap."""


class NumericalIntegrityError(QillumeError):
    """A matrix violated positivity or finiteness beyond tolerance."""


class NormalizationError(QillumeError, ValueError):
    """Mixture weights do not sum to one."""


class ConfigError(QillumeError, ValueError):
    """A sweep configuration is malformed."""
