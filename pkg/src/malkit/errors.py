class MalError(Exception):
    """Base class for every error raised by malkit."""


class GraphError(MalError, ValueError):
    """Malformed graph, bad vertex, or an operation that needs a connected graph."""


class DisconnectedError(GraphError):
    pass


class InfeasibleError(MalError):
    """No feasible solution exists (or a produced solution failed verification)."""


class BudgetExceeded(MalError):
    """An exact search ran past its slot, edge, or wall-clock cap."""


class ParseError(MalError, ValueError):
    pass
