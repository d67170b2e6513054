"""Utility helpers."""

from .logger import setup_logger
from .rationals import format_fraction, parse_fraction

__all__ = ['setup_logger', 'format_fraction', 'parse_fraction']
