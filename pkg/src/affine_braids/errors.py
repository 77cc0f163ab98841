"""Exception hierarchy shared by every module of the package."""


class BraidError(ValueError):
    """Rejected input: malformed words, index violations, mismatched strands."""


class StrandMismatchError(BraidError):
    def __init__(self, a: int, b: int):
        super().__init__(f"strand counts differ: {a} != {b}")
        self.strands = (a, b)


class NotPureError(BraidError):
    def __init__(self, permutation):
        super().__init__(f"braid is not pure; underlying permutation is {tuple(permutation)}")
        self.permutation = tuple(permutation)


class ResourceLimitError(RuntimeError):
    """Raised when a super summit set grows past its configured cap."""


class TraceError(BraidError):
    """A trajectory cannot be turned into a braid word.

    ``frame`` is the offending frame index when one can be named.
    """

    def __init__(self, message: str, frame: int | None = None):
        if frame is not None:
            message = f"frame {frame}: {message}"
        super().__init__(message)
        self.frame = frame


class ParseError(BraidError):
    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class HypothesisWarning(UserWarning):
    """Emitted when k < 5, where P_k/Z_k is not identified with the loop group."""
