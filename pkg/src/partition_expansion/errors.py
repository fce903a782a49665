"""Exception hierarchy shared by every module of the package."""


class PartitionError(Exception):
    """Base class for all errors raised by :mod:`partition_expansion`."""


class DomainError(PartitionError, ValueError):
    """An argument lies outside the domain of the operation."""


class ResourceLimitError(PartitionError):
    """A configured size cap would be exceeded."""


class InputTooLargeError(ResourceLimitError):
    """The brute-force oracle was asked for a value above its guard."""


class ConvergenceError(PartitionError, ArithmeticError):
    """A series needed more terms than the context allows."""


class SolverError(PartitionError, ArithmeticError):
    """The saddle-point root finder failed to converge."""
