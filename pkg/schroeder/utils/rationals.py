"""Exact rational helpers shared by the JSON formats."""

from fractions import Fraction
from typing import Union

from ..errors import DataFormatError


def parse_fraction(text: Union[str, int]) -> Fraction:
    """Parse a ``p/q`` string (or a bare integer) into a Fraction."""
    if isinstance(text, bool):
        raise DataFormatError(f"Not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise DataFormatError(f"Not a rational: {text!r}")
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise DataFormatError(f"Not a rational: {text!r} ({e})") from e


def format_fraction(value: Fraction) -> str:
    """Canonical ``p/q`` text; integers keep the ``/1`` denominator."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def format_coefficient(value: Fraction) -> str:
    """Short human form used by pretty printers (``-1/2``, ``3``)."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
