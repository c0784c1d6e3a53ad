"""Exception types raised across the package."""


class MalformedInput(ValueError):
    """Input that is not a permutation, triangulation, or index of the expected shape."""


class InvalidDiagonal(ValueError):
    """A diagonal that is not present in (or not valid for) the triangulation."""


class InvalidFlip(ValueError):
    """A requested flip whose quadrilateral is not present."""


class BoundExceeded(RuntimeError):
    """An exhaustive computation was requested beyond its configured size limit."""
