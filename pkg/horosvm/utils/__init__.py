"""Utility components for horosvm."""

from .logging import setup_logging
from .parsing import parse_float_list

__all__ = [
    "setup_logging",
    "parse_float_list",
]
