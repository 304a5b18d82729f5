# crslab/finab/__init__.py
"""
Canonical finite abelian groups and number-theory utilities
"""

from .numtheory import (
    divisors,
    mobius,
    euler_phi,
    gcd,
    lcm,
    is_prime,
    prime_power,
    require_prime,
    require_prime_power,
    factorize,
)
from .group import (
    FinAbGroup,
    canonicalize,
    parse_group,
    is_over,
    exponent,
    maxorder,
    n_torsion,
    quotient_by_n_torsion,
    lift_over,
    hom_count,
    groups_of_order,
    enumerate_groups,
)

__all__ = [
    'divisors',
    'mobius',
    'euler_phi',
    'gcd',
    'lcm',
    'is_prime',
    'prime_power',
    'require_prime',
    'require_prime_power',
    'factorize',
    'FinAbGroup',
    'canonicalize',
    'parse_group',
    'is_over',
    'exponent',
    'maxorder',
    'n_torsion',
    'quotient_by_n_torsion',
    'lift_over',
    'hom_count',
    'groups_of_order',
    'enumerate_groups',
]
