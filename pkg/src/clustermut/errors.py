"""Exception types shared across the package."""


class ClusterMutError(Exception):
    """Base class for all package errors."""


class DimensionMismatchError(ClusterMutError):
    """Operands built over different numbers of variables."""


class ExactDivisionError(ClusterMutError):
    """Polynomial division left a nonzero remainder."""


class DomainError(ClusterMutError):
    """Input outside an operation's domain (zero numerator, V < 2, ...)."""


class MutationError(ClusterMutError):
    """Exact division failed inside mutation; indicates a bug or a
    non-Laurent input, never expected for valid seeds."""


class ResourceLimitError(ClusterMutError):
    """A configured cap (vertices, terms, iterations) was exceeded.

    Carries whatever partial result was completed when the cap was hit.
    """

    def __init__(self, message, partial=None, completed_depth=None):
        super().__init__(message)
        self.partial = partial
        self.completed_depth = completed_depth


class ConvergenceError(ClusterMutError):
    """Iterative numerical routine did not converge within its budget."""
