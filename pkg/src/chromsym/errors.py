"""Exception hierarchy shared by all modules.

Each class maps to a distinct CLI exit status (see ``chromsym.cli``).
"""


class ChromsymError(Exception):
    kind = "error"


class DomainError(ChromsymError, ValueError):
    """Argument outside the mathematical domain of an operation."""

    kind = "domain"


class ResourceError(ChromsymError, RuntimeError):
    """An explicit size guard was exceeded; nothing is truncated silently."""

    kind = "resource"


class PreconditionError(ChromsymError, ValueError):
    kind = "precondition"


class InvariantViolation(ChromsymError, AssertionError):
    """A structural guarantee (triangularity, invertibility, ...) failed."""

    kind = "invariant"


class OracleInapplicable(ChromsymError, ValueError):
    kind = "oracle"
