"""Exception types shared across the package."""


class RigidnetError(Exception):
    """Base class for every error raised by this package."""


class IndexOutOfRangeError(RigidnetError, ValueError):
    """An edge endpoint refers to a vertex index outside [0, n)."""


class LoopEdgeError(RigidnetError, ValueError):
    """An edge joins a vertex to itself."""


class UnknownEdgeError(RigidnetError, ValueError):
    """An operation referenced an edge the graph does not contain."""


class DuplicateInsertError(RigidnetError, ValueError):
    """The same edge was fed to an oracle twice."""


class SizeMismatchError(RigidnetError, ValueError):
    """A configuration's point count differs from the graph's vertex count."""


class InvalidSideError(RigidnetError, ValueError):
    """A deployment square was given a nonpositive side length."""


class BadGridError(RigidnetError, ValueError):
    """A sweep grid is empty, unsorted, or leaves [0, 1]."""


class KOutOfRangeError(RigidnetError, ValueError):
    """Requested redundancy order k lies outside 1..(|E| - rank)."""


class ParseError(RigidnetError, ValueError):
    """Malformed input file; carries the 1-based line number."""

    def __init__(self, message: str, lineno: int):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno
