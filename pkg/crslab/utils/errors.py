# crslab/utils/errors.py
"""
Exception hierarchy shared by the library and the CLI

The CLI maps each class to an exit code; library callers can catch
``CrsLabError`` to handle everything raised here.
"""

from __future__ import annotations

from typing import Optional


class CrsLabError(Exception):
    """Base class for all crslab errors"""


class DomainError(CrsLabError, ValueError):
    """Invalid mathematical input (bad modulus, non-prime, rank mismatch, ...)"""


class UnsupportedParameterError(DomainError):
    """A valid parameter for which no finite computation exists"""


class ParseError(DomainError):
    """Malformed text for a group, word, permutation or descriptor"""

    def __init__(self, message: str, text: Optional[str] = None):
        if text is not None:
            message = f"{message}: {text!r}"
        super().__init__(message)
        self.text = text


class ResourceLimitError(CrsLabError):
    """An enumeration would exceed the configured cap"""

    def __init__(self, what: str, requested: int, cap: int):
        super().__init__(
            f"{what} requires {requested} objects, exceeding the enumeration cap {cap}"
        )
        self.what = what
        self.requested = requested
        self.cap = cap


class InvariantViolation(CrsLabError):
    """An internal self-check failed; indicates a bug, never bad input"""


def check_cap(what: str, requested: int, cap: int) -> None:
    """Raise ResourceLimitError when ``requested`` exceeds ``cap``"""
    if requested > cap:
        raise ResourceLimitError(what, requested, cap)
