"""Exception types shared across the package."""


class DSMTError(ValueError):
    """Base class for all validation and computation errors raised here."""


class FrameError(DSMTError):
    """Invalid frame, frame too large, or operands from different frames."""


class ExprSyntaxError(DSMTError):
    """Malformed proposition expression.

    ``position`` is the 0-based character offset where parsing failed.
    """

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownLabel(ExprSyntaxError):
    pass


class GranuleError(DSMTError):
    """A mass assignment violates its domain constraints."""


class TotalContradiction(DSMTError):
    """Dempster's rule is undefined: the sources are flatly contradictory."""

    def __init__(self, message="sources are in total contradiction (K = 0)", conflict=1.0):
        super().__init__(message)
        self.conflict = conflict


class FullConflict(DSMTError):
    """Bayesian fusion normalizer vanished."""


class ConditioningError(DSMTError):
    pass
