"""Exception types raised by the public API."""


class PolyminError(Exception):
    """Base class for all library errors."""


class InvalidParameter(PolyminError):
    """A numeric parameter is outside its documented domain."""


class DegenerateSegment(PolyminError):
    """Two coincident points where a proper segment is required."""


class DegenerateInput(PolyminError):
    """Input polyline is too small or collapses (e.g. zero-area closed shape)."""


class IndexOutOfRange(PolyminError):
    """Vertex interval indices outside [0, N-1] or reversed."""


class NoSolution(PolyminError):
    """The solver could not connect the candidate sets.

    For orthogonal modes the failing vertex index is stored in
    ``vertex_index`` (None when the failure is not tied to one vertex).
    """

    def __init__(self, message, vertex_index=None):
        super().__init__(message)
        self.vertex_index = vertex_index


class CorruptTable(PolyminError):
    """A back-pointer chain in a DP table does not reach the first vertex."""


class ParseError(PolyminError):
    """Malformed geometry input; carries 1-based line and column."""

    def __init__(self, message, line=None, column=None):
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + loc)
        self.line = line
        self.column = column
