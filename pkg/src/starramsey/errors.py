"""Exception hierarchy shared across the package."""


class StarRamseyError(Exception):
    """Base class for every error raised by this package."""


class InvalidParams(StarRamseyError, ValueError):
    """Inputs violate a documented precondition."""


class BelowRamseyNumber(InvalidParams):
    """Host order is smaller than the Ramsey number of the star tuple."""


class ParityInfeasible(StarRamseyError, ValueError):
    """No r-regular graph exists on n vertices because r*n is odd."""


class ConsistencyError(StarRamseyError):
    """An internal cross-check failed; signals a bug, not bad input."""


class WitnessError(ConsistencyError):
    """A constructed coloring failed its own audit."""


class DegenerateBranch(StarRamseyError):
    """The construction's index ranges collapse for these parameters."""


class BudgetExhausted(StarRamseyError):
    """A search ran out of nodes or wall-clock time before deciding."""

    def __init__(self, nodes: int, seconds: float, reason: str):
        super().__init__(f"search budget exhausted ({reason}) after {nodes} nodes, {seconds:.2f}s")
        self.nodes = nodes
        self.seconds = seconds
        self.reason = reason


class NotFound(StarRamseyError):
    """A search finished without meeting its goal inside the allowed range."""


class RefusedScale(StarRamseyError, ValueError):
    """The requested enumeration is beyond the supported desk scale."""
