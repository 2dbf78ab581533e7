"""Exception hierarchy shared by every module."""

from __future__ import annotations


class OneElevenError(Exception):
    """Base class for all errors raised by this package."""


class InputError(OneElevenError, ValueError):
    """Malformed or inconsistent user input."""


class PreconditionError(InputError):
    """An operation was called outside its domain."""


class NotPermutationalError(InputError):
    """A word is not a concatenation of permutations of its alphabet."""

    def __init__(self, message: str, block: int | None = None):
        super().__init__(message)
        self.block = block


class GraphSyntaxError(InputError):
    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class InvariantViolation(OneElevenError, AssertionError):
    """A structural guarantee was broken; indicates a bug or a counterexample."""


class ResourceError(OneElevenError, RuntimeError):
    """An exploration or enumeration exceeded its configured budget."""

    def __init__(self, message: str, cap: int, frontier: int | None = None):
        detail = f"{message} (cap={cap}"
        if frontier is not None:
            detail += f", frontier={frontier}"
        super().__init__(detail + ")")
        self.cap = cap
        self.frontier = frontier


class SearchBoundExceeded(OneElevenError, LookupError):
    """Nothing was found within the search bound. This is not a proof of non-existence."""

    def __init__(self, message: str, bound: int):
        super().__init__(message)
        self.bound = bound
