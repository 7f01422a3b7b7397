"""Exception types shared across the toolkit.

Every error is a subclass of IrregwalkError so callers (and the CLI) can
catch the whole family at once.
"""


class IrregwalkError(Exception):
    """Base class for all toolkit errors."""


class GraphConstructionError(IrregwalkError):
    """Base for errors raised while building a graph."""


class SelfLoop(GraphConstructionError):
    pass


class DuplicateEdge(GraphConstructionError):
    pass


class VertexOutOfRange(GraphConstructionError):
    pass


class InvalidWalk(IrregwalkError):
    """Walk uses a vertex pair that is not an edge of the ambient graph."""


class EmptyWalk(IrregwalkError):
    """Operation requires a walk with at least one edge."""


class NotNice(IrregwalkError):
    """Graph is not nice (disconnected, K_2, or fewer than 2 vertices)."""


class NotConnected(IrregwalkError):
    pass


class NotATree(IrregwalkError):
    pass


class BadGuide(IrregwalkError):
    """Guide walk is not closed, not spanning, or starts badly."""


class ImproperColouring(IrregwalkError):
    pass


class ImproperLabelling(IrregwalkError):
    pass


class NoLabellingWithinCap(IrregwalkError):
    """No proper labelling exists within the label cap."""


class OrderTooSmall(IrregwalkError):
    """Closed-form formula asked for a graph below its minimum order."""


class DimensionMismatch(IrregwalkError):
    """Tree-DP tables sized incompatibly for combination."""


class NotCubic(IrregwalkError):
    pass


class NotBipartite(IrregwalkError):
    pass


class ParseError(IrregwalkError):
    """Malformed graph or walk file."""


class MethodInapplicable(IrregwalkError):
    """Requested solve method does not apply to the given graph."""
