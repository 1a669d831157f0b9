"""Exception hierarchy shared by all modules."""


class RRRGraphError(Exception):
    """Base class for every error raised by this package."""


class GraphError(RRRGraphError, ValueError):
    pass


class LoopEdge(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class VertexOutOfRange(GraphError, IndexError):
    pass


class TooLarge(GraphError):
    pass


class ParseError(RRRGraphError, ValueError):
    """Malformed graph input; ``position`` is a 1-based line or byte offset."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at {position})"
        super().__init__(message)


class UndefinedTerm(RRRGraphError, ArithmeticError):
    """An edge functional has no finite value for some degree pair."""


class NBelowMinimum(RRRGraphError, ValueError):
    pass


class NoPendant(RRRGraphError, ValueError):
    pass


class NotUnicyclic(RRRGraphError, ValueError):
    pass


class EmptyClass(RRRGraphError, ValueError):
    pass


class PrecisionExhausted(RRRGraphError, RuntimeError):
    """Sign determination hit the precision cap. Unreachable for nonzero values."""
