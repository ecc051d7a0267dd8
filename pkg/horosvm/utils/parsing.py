"""
Parsing helpers for command-line values.

Supports comma-separated grids such as:
- "1,5,10"
- "[1, 5, 10]" or "(0, 0.05, 0.1)"
- "0:0.5:0.05" (start:stop:step, stop inclusive)
"""

import argparse
import re
from typing import List

import numpy as np

# Regex for a bracketed or bare comma-separated list of numbers
CSV_NUMBER_PATTERN = re.compile(r'^[\(\[]?\s*([^\)\]]*?)\s*[\)\]]?$')

# Regex for start:stop:step ranges
RANGE_PATTERN = re.compile(r'^\s*([-+0-9.eE]+)\s*:\s*([-+0-9.eE]+)\s*:\s*([-+0-9.eE]+)\s*$')


def parse_float_list(text: str) -> List[float]:
    """
    Parse a list of floats from a string.

    Args:
        text: "1,5,10", "[1, 5, 10]" or "start:stop:step"

    Returns:
        List of floats in the given order

    Raises:
        ValueError: If the text is empty or contains a non-number

    Examples:
        >>> parse_float_list("1,5,10")
        [1.0, 5.0, 10.0]
        >>> parse_float_list("0:0.1:0.05")
        [0.0, 0.05, 0.1]
    """
    match = RANGE_PATTERN.match(text)
    if match:
        start, stop, step = (float(g) for g in match.groups())
        if step <= 0 or stop < start:
            raise ValueError(f"Invalid range '{text}': need step > 0 and stop >= start")
        count = int(np.floor((stop - start) / step + 1e-9)) + 1
        # 12 decimals: 0.3 rather than 0.30000000000000004
        return [round(start + i * step, 12) for i in range(count)]

    match = CSV_NUMBER_PATTERN.match(text.strip())
    body = match.group(1) if match else text
    parts = [p.strip() for p in body.split(',') if p.strip()]
    if not parts:
        raise ValueError(f"Empty number list: '{text}'")

    values = []
    for part in parts:
        try:
            values.append(float(part))
        except ValueError:
            raise ValueError(f"Not a number: '{part}' in '{text}'") from None
    return values


# --- argparse types ---

def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got '{text}'") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got '{text}'") from None
    if not value > 0 or not np.isfinite(value):
        raise argparse.ArgumentTypeError(f"must be a positive number, got {text}")
    return value


def float_list(text: str) -> List[float]:
    """argparse wrapper around parse_float_list."""
    try:
        return parse_float_list(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None
