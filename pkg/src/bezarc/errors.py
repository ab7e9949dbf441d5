"""Exception types raised across the package."""


class BezarcError(Exception):
    """Base class for all package errors."""


class DomainError(BezarcError, ValueError):
    """An argument lies outside the domain of an operation."""


class UnsupportedCaseError(BezarcError, ValueError):
    """The (degree, smoothness) pair has no scaffold or solver."""


class ConvergenceError(BezarcError, RuntimeError):
    """An iterative solver stopped without meeting its tolerance.

    ``diagnostics`` carries whatever the solver knew when it gave up
    (last residuals, Newton endpoints, brackets).
    """

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class AdmissibilityError(BezarcError, RuntimeError):
    """A solve succeeded but no solution lies in the admissible region."""

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}
