"""Exception hierarchy."""


class PseudoforestMinorsError(Exception):
    """Base class for every error raised by this package."""


class GraphError(PseudoforestMinorsError):
    """Invalid graph construction or operation."""


class InvalidGraphError(GraphError):
    """Edge list with loops or endpoints outside [0, n)."""


class VertexRangeError(GraphError, IndexError):
    """A vertex id outside [0, n)."""


class MissingEdgeError(GraphError):
    """An operation named an edge that is not in the graph."""


class GraphSizeError(GraphError):
    """Graph larger than the supported vertex cap."""


class SplitPartitionError(GraphError):
    """Neighbourhood partition violating the split preconditions."""


class CodecError(PseudoforestMinorsError):
    """Malformed graph input."""


class Graph6Error(CodecError):
    pass


class Graph6LengthError(Graph6Error):
    pass


class Graph6ByteRangeError(Graph6Error):
    pass


class Graph6PaddingError(Graph6Error):
    pass


class Graph6SizeError(Graph6Error):
    """Graph needs the extended (n >= 63) header, which is not supported."""


class EdgeListError(CodecError):
    pass


class EdgeListSyntaxError(EdgeListError):
    pass


class DuplicateEdgeError(EdgeListError):
    pass


class LoopEdgeError(EdgeListError):
    pass


class EdgeRangeError(EdgeListError):
    pass


class CanonError(PseudoforestMinorsError):
    """Input too large for canonical labelling."""


class NotMinorClosedError(PseudoforestMinorsError):
    """An obstruction query against a class not flagged minor-closed."""


class EmbeddingError(PseudoforestMinorsError):
    """A minor or topological-minor witness failed revalidation."""


class DecompositionError(PseudoforestMinorsError):
    pass


class CatalogError(PseudoforestMinorsError):
    pass


class UnknownCatalogEntryError(CatalogError, KeyError):
    pass


class EnumerationLimitError(PseudoforestMinorsError):
    """Enumeration requested beyond the supported (or enabled) vertex count."""
