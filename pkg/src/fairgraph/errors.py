"""Exception hierarchy shared by all fairgraph modules."""


class FairGraphError(Exception):
    """Base class for all library errors."""


class GraphError(FairGraphError, ValueError):
    """Malformed graph input (self-loops, duplicate edges, bad vertex ids)."""


class CapExceeded(FairGraphError):
    """Explicit enumeration produced more members than the configured cap."""

    def __init__(self, cap, count):
        self.cap = cap
        self.count = count
        super().__init__(f"cap exceeded: more than {cap} members (stopped at {count})")


class ModelAssumptionError(FairGraphError):
    """The set system violates a modelling assumption.

    Raised for edgeless graphs where bounds need a maximum degree, for
    restricted families that are empty, and for ground elements that no
    feasible member contains.
    """


class InfeasibleError(FairGraphError):
    """A combinatorial subproblem has no feasible solution."""


class OracleError(FairGraphError):
    """A pricing oracle returned something outside the declared family."""


class SizeLimitError(FairGraphError):
    """Instance is larger than an exact exponential search allows."""
