"""Exception types shared across the package."""


class HamsqError(Exception):
    """Base class for all hamsq errors."""


class LoopRejected(HamsqError):
    """An edge with equal endpoints was supplied."""


class VertexOutOfRange(HamsqError):
    """A vertex label is not in 0..n-1."""


class UnknownEdgeId(HamsqError):
    """An edge id does not exist in the host graph."""


class InvalidK(HamsqError):
    """Graph power exponent must be >= 1."""


class Disconnected(HamsqError):
    """Operation requires a connected graph."""


class SameVertex(HamsqError):
    """Operation requires two distinct vertices."""


class NotTwoConnected(HamsqError):
    """Operation requires a 2-connected graph."""


class Acyclic(HamsqError):
    """Operation requires a graph containing at least one cycle."""


class TooSmall(HamsqError):
    """Graph has too few vertices for this operation."""


class NotATree(HamsqError):
    """Operation requires a tree."""


class PreconditionUnmet(HamsqError):
    """A checker's structural precondition does not hold for this input."""


class InvalidInput(HamsqError):
    """A supplied witness or decomposition fails verification."""


class InvalidQuery(HamsqError):
    """An F_k query violates its own invariants."""


class MalformedRecord(HamsqError):
    """A corpus stream line could not be parsed."""

    def __init__(self, line_no, message):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no
