"""Exception hierarchy shared by the library and the command line"""

from typing import Optional


class UmodError(Exception):
    """Base class for every error raised by umod."""

    exit_code = 1

    def to_dict(self) -> dict:
        return {"error": type(self).__name__, "message": str(self)}


class PreconditionError(UmodError, ValueError):
    """An operation was called on input outside its domain."""

    exit_code = 3


class OracleBoundError(PreconditionError):
    """A brute-force routine was asked to enumerate a ground set over the cap."""

    def __init__(self, n: int, bound: int):
        super().__init__(f"ground set of size {n} exceeds the oracle bound {bound}")
        self.n = n
        self.bound = bound


class DecompositionError(UmodError):
    """The family met during tree typing is not bipartitive."""


class InputParseError(UmodError):
    """Malformed input text; always carries a 1-based location."""

    exit_code = 2

    def __init__(self, message: str, line: int, column: int = 1,
                 token: Optional[str] = None, source: Optional[str] = None):
        where = f"{source or '<input>'}:{line}:{column}"
        super().__init__(f"{where}: {message}")
        self.reason = message
        self.line = line
        self.column = column
        self.token = token
        self.source = source

    def to_dict(self) -> dict:
        return {
            "error": type(self).__name__,
            "message": self.reason,
            "source": self.source,
            "line": self.line,
            "column": self.column,
            "token": self.token,
        }
