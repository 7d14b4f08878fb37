"""Exception types raised across the toolkit."""


class SRToolError(Exception):
    """Base class for every error raised by srtool."""


class UnknownLabel(SRToolError, ValueError):
    pass


class IsolatedLabel(SRToolError, ValueError):
    pass


class DuplicateLabel(SRToolError, ValueError):
    pass


class UnknownVertex(SRToolError, ValueError):
    pass


class NotAFace(SRToolError, ValueError):
    pass


class EmptyFace(SRToolError, ValueError):
    pass


class NonPrimeModulus(SRToolError, ValueError):
    pass


class OutOfRange(SRToolError, ValueError):
    pass


class OutOfStatedRange(SRToolError, ValueError):
    """An inequality predicate was evaluated outside its hypothesis."""


class LengthMismatch(SRToolError, ValueError):
    pass


class CapTooSmall(SRToolError, ValueError):
    """A degree cap would drop minimal generators of the ideal."""


class TruncatedTable(SRToolError, ValueError):
    """A quantity needing the complete Betti table was asked of a capped one."""


class BudgetExceeded(SRToolError, RuntimeError):
    """The 2^n subset sweep exceeds the configured vertex budget."""


class ConsistencyViolation(SRToolError, AssertionError):
    """Two independent routes disagreed; this indicates a bug."""


class ParseError(SRToolError, ValueError):
    pass


class CheckFailed(SRToolError):
    pass
