"""Error types shared by all stages of the interpreter pipeline."""

from __future__ import annotations

from dataclasses import dataclass


class CopError(Exception):
    """Base class for all errors raised by the COP toolchain."""


class LexError(CopError):
    """Malformed input at the character level."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(message)
        self.message = message
        self.line = line
        self.col = col

    def render(self) -> str:
        return f"error: LexError at {self.line}:{self.col}: {self.message}"


class ParseError(CopError):
    """Token stream does not match the grammar."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(message)
        self.message = message
        self.line = line
        self.col = col

    def render(self) -> str:
        return f"error: ParseError at {self.line}:{self.col}: {self.message}"


@dataclass(frozen=True)
class StaticError:
    """One collected resolution diagnostic (not an exception; resolve reports all of them)."""

    code: str
    message: str
    line: int
    col: int

    def render(self) -> str:
        return f"error: {self.code} at {self.line}:{self.col}: {self.message}"


class CopRuntimeError(CopError):
    """Dynamic error during program evaluation."""

    def __init__(self, code: str, message: str, line: int = 0, col: int = 0):
        super().__init__(f"{code}: {message}")
        self.code = code
        self.message = message
        self.line = line
        self.col = col

    def at(self, line: int, col: int) -> "CopRuntimeError":
        """Attach a source location if none was recorded yet."""
        if self.line == 0 and self.col == 0:
            self.line = line
            self.col = col
        return self

    def render(self) -> str:
        return f"runtime error: {self.code}: {self.message} at {self.line}:{self.col}"
