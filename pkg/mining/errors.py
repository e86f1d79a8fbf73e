"""
Exceptions raised by the mining engine.
"""
from typing import Optional


class MiningError(Exception):
    """Base class for every error raised by the engine."""


class ContextParseError(MiningError, ValueError):
    """A FIMI stream could not be parsed."""

    def __init__(self, message: str, line_no: Optional[int] = None):
        self.line_no = line_no
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)


class DomainError(MiningError, ValueError):
    """An argument lies outside the domain of an operation."""


class StateError(MiningError, RuntimeError):
    """An object was queried before the stage that fills it has run."""


class OracleRefusal(MiningError):
    """The brute-force oracle refuses a context above its item guard."""
