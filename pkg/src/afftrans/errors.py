"""Exception hierarchy shared by all afftrans modules."""


class AfftransError(Exception):
    """Base class for all afftrans errors."""


class DomainError(AfftransError):
    """A precondition on the mathematical input was violated."""


class InvalidRootSystemError(DomainError):
    """The requested (series, rank) pair is not a valid simple type."""


class DimensionCapError(DomainError):
    """A tensor operation was refused because the dimension product exceeds the cap."""


class DatumInvalidError(DomainError):
    """A translation datum failed validation; the message names the failed condition."""


class InternalInconsistencyError(AfftransError):
    """A self-verification step failed; this indicates a bug, not bad input."""


class IterationLimitError(InternalInconsistencyError):
    """An iteration cap was hit; converts a potential endless loop into an error."""
