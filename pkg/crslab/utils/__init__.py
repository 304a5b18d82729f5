# crslab/utils/__init__.py
"""
Shared utilities package
"""

from .errors import (
    CrsLabError,
    DomainError,
    UnsupportedParameterError,
    ParseError,
    ResourceLimitError,
    InvariantViolation,
    check_cap,
)

from .helpers import (
    format_rational,
    parse_rational,
    parse_int_list,
    format_int_list,
    merge_dicts,
    truncate_string,
)

from .rng import make_rng, stream_sizes

__all__ = [
    'CrsLabError',
    'DomainError',
    'UnsupportedParameterError',
    'ParseError',
    'ResourceLimitError',
    'InvariantViolation',
    'check_cap',
    'format_rational',
    'parse_rational',
    'parse_int_list',
    'format_int_list',
    'merge_dicts',
    'truncate_string',
    'make_rng',
    'stream_sizes',
]
