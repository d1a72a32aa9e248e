"""Exception hierarchy shared by every fpec module."""


class FpecError(Exception):
    """Base class for all errors raised by fpec."""


class PlaneMapError(FpecError, ValueError):
    """A rotation system is malformed (syntax, ids, loops, non-planar)."""


class NotConnectedError(FpecError, ValueError):
    pass


class NotBridgelessError(FpecError, ValueError):
    """The map has an edge with the same face on both sides."""

    def __init__(self, message, bridges=()):
        super().__init__(message)
        self.bridges = tuple(bridges)


class ContractionError(FpecError, ValueError):
    """Contracting an edge would turn a parallel edge into a loop."""

    def __init__(self, message, edges=()):
        super().__init__(message)
        self.edges = tuple(edges)


class PartialColoringError(FpecError, ValueError):
    pass


class InstanceTooLargeError(FpecError, ValueError):
    pass


class SearchBudgetExceeded(FpecError, RuntimeError):
    pass


class BoundViolation(FpecError, RuntimeError):
    """A proven bound (4 odd colors per dual component, 16 labels) failed."""


class InternalCheckError(FpecError, RuntimeError):
    """A constructed coloring did not pass its own checker."""
