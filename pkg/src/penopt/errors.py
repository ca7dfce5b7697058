"""Exception types raised across penopt."""


class PenOptError(Exception):
    """Base class for all penopt errors."""


class InvalidSpec(PenOptError, ValueError):
    """A problem specification violates its invariants."""


class UnboundedProblem(PenOptError):
    """Some direction is free of cost, so no finite optimum exists."""


class NotUnbounded(PenOptError):
    """An unboundedness witness was requested for a bounded problem."""


class DidNotConverge(PenOptError, RuntimeError):
    """An iterative solver exhausted its iteration budget."""
