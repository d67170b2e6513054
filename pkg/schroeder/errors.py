"""
Exceptions
==========

Every error raised on purpose by the package derives from ``SchroederError``
(itself a ``ValueError``). The CLI maps the subclasses onto exit codes.
"""

from typing import Optional, Sequence


class SchroederError(ValueError):
    """Base class for package errors."""


class SizeLimitError(SchroederError):
    """An enumeration was asked for beyond its configured cap."""

    def __init__(self, what: str, requested: int, cap: int):
        super().__init__(f"{what}: size {requested} exceeds cap {cap}")
        self.requested = requested
        self.cap = cap


class DomainError(SchroederError):
    """An argument violates the operation's precondition."""


class TreeParseError(SchroederError):
    """Malformed tree string."""

    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


class WordParseError(SchroederError):
    """Malformed word (space-separated positive letter ids)."""

    def __init__(self, message: str, text: str, position: Optional[int] = None):
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"{message}{where} in {text!r}")
        self.text = text
        self.position = position


class PartitionParseError(SchroederError):
    """Malformed partition text."""


class OrderError(SchroederError):
    """Partitions are not comparable in reverse refinement order."""


class RankMismatchError(SchroederError):
    """Tensor elements of different rank were combined."""


class DegreeOverflowError(SchroederError):
    """A functional was queried above its degree cap (or caps differ)."""


class MissingMomentError(SchroederError, KeyError):
    """A moment/cumulant table has no entry for a queried word."""

    def __init__(self, word: Sequence[int]):
        self.word = tuple(word)
        key = ' '.join(str(letter) for letter in self.word)
        super().__init__(f"missing table entry for word {key!r}")

    def __str__(self) -> str:
        return self.args[0]


class UnknownMethodError(SchroederError):
    """Method name not available for the requested operation."""

    def __init__(self, operation: str, method: str, known: Sequence[str]):
        super().__init__(
            f"unknown method {method!r} for {operation}; expected one of {', '.join(known)}"
        )
        self.method = method


class DataFormatError(SchroederError):
    """Input file content does not follow the expected JSON schema."""
