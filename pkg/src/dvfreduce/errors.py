"""Exception types shared across the package."""


class FormatError(ValueError):
    """Malformed matrix, vector-field or image input.

    ``line`` (1-based) or ``offset`` (byte offset) locate the problem when known.
    """

    def __init__(self, message, *, line=None, offset=None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"byte {offset}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)
        self.line = line
        self.offset = offset


class BoundsError(IndexError):
    """Row or column index outside the matrix."""


class PivotError(ValueError):
    """A vector-field pair cannot be used as an elimination pivot."""

    def __init__(self, message, pair):
        super().__init__(f"{message}: pair {pair}")
        self.pair = pair


class ParameterError(ValueError):
    """Numeric parameter outside its admissible range."""
