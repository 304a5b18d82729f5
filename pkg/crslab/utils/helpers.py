# crslab/utils/helpers.py
"""
General utility functions

Rational formatting and parsing, small list/dict helpers shared by the
library, the CLI output layer and the configuration manager.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List
import re

from .errors import ParseError

_RATIONAL_PATTERN = re.compile(r'^\s*(-?\d+)\s*(?:/\s*(\d+))?\s*$')
_INT_LIST_PATTERN = re.compile(r'^\s*\[\s*(-?\d+(\s*,\s*-?\d+)*)?\s*\]\s*$')


def format_rational(value: Fraction | int) -> str:
    """Format an exact rational as "num/den" in lowest terms

    Integers still carry a denominator ("1/1"), so machine output has a
    single shape.

    Args:
        value: Fraction or int

    Returns:
        "num/den" string
    """
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse "num/den" or a bare integer

    Args:
        text: Rational string

    Returns:
        Fraction in lowest terms
    """
    match = _RATIONAL_PATTERN.match(text)
    if not match:
        raise ParseError("not a rational", text)
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise ParseError("zero denominator", text)
    return Fraction(numerator, denominator)


def parse_int_list(text: str) -> List[int]:
    """Parse a compact integer list such as "[2,4,3]" or "[]"

    Args:
        text: Bracketed, comma-separated integers

    Returns:
        List of ints
    """
    if not _INT_LIST_PATTERN.match(text):
        raise ParseError("not an integer list", text)
    body = text.strip()[1:-1].strip()
    if not body:
        return []
    return [int(part) for part in body.split(',')]


def format_int_list(values: Iterable[int]) -> str:
    """Format integers as "[a,b,c]" without spaces"""
    return "[" + ",".join(str(v) for v in values) + "]"


def merge_dicts(dict1: Dict, dict2: Dict) -> Dict:
    """Deep merge two dictionaries

    Args:
        dict1: First dictionary
        dict2: Second dictionary (takes precedence)

    Returns:
        Merged dictionary
    """
    result = dict1.copy()

    for key, value in dict2.items():
        if key in result and isinstance(result[key], dict) and isinstance(value, dict):
            result[key] = merge_dicts(result[key], value)
        else:
            result[key] = value

    return result


def truncate_string(text: str, max_length: int = 100, suffix: str = "...") -> str:
    """Truncate long user input before echoing it in messages"""
    if len(text) <= max_length:
        return text

    return text[:max_length - len(suffix)] + suffix
