# crslab/finab/group.py
"""
Finite abelian groups up to isomorphism

A ``FinAbGroup`` is the sorted tuple of its prime-power cyclic summands,
ordered by prime and then by exponent. The empty tuple is the trivial
group, so equality of values is isomorphism of groups.
"""

from __future__ import annotations

import logging
import math
import re
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, List, Tuple

from sympy.utilities.iterables import partitions

from ..utils.errors import DomainError, ParseError
from ..utils.helpers import format_int_list, parse_int_list, truncate_string
from .numtheory import factorize, gcd, lcm, prime_power, valuation

logger = logging.getLogger(__name__)

_TEXT_SUMMAND = re.compile(r'^Z\s*/\s*(\d+)$')
_TRIVIAL_TEXT = {"0", "trivial", "{}", ""}


def _sort_key(order: int) -> Tuple[int, int]:
    p, e = prime_power(order)
    return (p, e)


@dataclass(frozen=True)
class FinAbGroup:
    """Finite abelian group as its canonical prime-power summands"""

    summands: Tuple[int, ...] = ()

    def __post_init__(self):
        for order in self.summands:
            if prime_power(order) is None:
                raise DomainError(f"summand {order} is not a prime power")
        if list(self.summands) != sorted(self.summands, key=_sort_key):
            raise DomainError(f"summands {self.summands} are not in canonical order")

    @classmethod
    def trivial(cls) -> "FinAbGroup":
        return cls(())

    @classmethod
    def cyclic(cls, n: int) -> "FinAbGroup":
        return canonicalize([n])

    @property
    def order(self) -> int:
        return math.prod(self.summands)

    @property
    def is_trivial(self) -> bool:
        return not self.summands

    @property
    def primes(self) -> List[int]:
        return sorted({prime_power(q)[0] for q in self.summands})

    def exponent(self) -> int:
        return lcm(*self.summands)

    def maxorder(self) -> int:
        # Abelian: the exponent is realised by an element
        return self.exponent()

    def sort_key(self) -> Tuple[int, Tuple[Tuple[int, int], ...]]:
        return (self.order, tuple(_sort_key(q) for q in self.summands))

    def p_part(self, p: int) -> "FinAbGroup":
        return FinAbGroup(tuple(q for q in self.summands if q % p == 0))

    def direct_sum(self, other: "FinAbGroup") -> "FinAbGroup":
        return canonicalize(list(self.summands) + list(other.summands))

    def to_compact(self) -> str:
        return format_int_list(self.summands)

    def to_text(self) -> str:
        if self.is_trivial:
            return "0"
        return " + ".join(f"Z/{q}" for q in self.summands)

    def __str__(self) -> str:
        return self.to_text()


def canonicalize(cyclic_orders: Iterable[int]) -> FinAbGroup:
    """Split cyclic factors into prime-power parts and sort

    Args:
        cyclic_orders: Orders d >= 1 of cyclic groups Z/d

    Returns:
        Canonical FinAbGroup of the direct sum
    """
    parts: List[int] = []
    for d in cyclic_orders:
        if d == 0:
            raise DomainError("infinite cyclic summand Z/0 is not a finite group")
        if d < 0:
            raise DomainError(f"cyclic order must be positive, got {d}")
        if d == 1:
            continue
        parts.extend(p ** e for p, e in factorize(d))
    return FinAbGroup(tuple(sorted(parts, key=_sort_key)))


def parse_group(text: str) -> FinAbGroup:
    """Parse "Z/2 + Z/4 + Z/3", "[2,4,3]" or "0"

    Both forms accept any cyclic orders; the result is canonicalized.
    """
    stripped = text.strip()
    if stripped in _TRIVIAL_TEXT:
        return FinAbGroup.trivial()
    if stripped.startswith('['):
        orders = parse_int_list(stripped)
    else:
        orders = []
        for part in stripped.split('+'):
            match = _TEXT_SUMMAND.match(part.strip())
            if not match:
                raise ParseError("not a finite abelian group", truncate_string(text))
            orders.append(int(match.group(1)))
    try:
        return canonicalize(orders)
    except DomainError as e:
        raise ParseError(str(e), truncate_string(text)) from e


def is_over(group: FinAbGroup, m: int) -> bool:
    """No nontrivial canonical summand is killed by m

    Only the trivial group is over 0.
    """
    if group.is_trivial:
        return True
    if m <= 0:
        return False
    return all(m % q != 0 for q in group.summands)


def exponent(group: FinAbGroup) -> int:
    return group.exponent()


def maxorder(group: FinAbGroup) -> int:
    return group.maxorder()


def n_torsion(group: FinAbGroup, n: int) -> FinAbGroup:
    """The subgroup {x : nx = 0}; n = 0 gives the trivial group by convention"""
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    if n == 0:
        return FinAbGroup.trivial()
    return canonicalize(gcd(n, q) for q in group.summands)


def quotient_by_n_torsion(group: FinAbGroup, n: int) -> FinAbGroup:
    """F / F_(n), i.e. the sum of Z/(lcm(n, q)/n) over summands q"""
    if n <= 0:
        raise DomainError(f"quotient by n-torsion requires n >= 1, got {n}")
    return canonicalize(lcm(n, q) // n for q in group.summands)


def lift_over(quotient: FinAbGroup, n: int) -> FinAbGroup:
    """The unique F over n with F / F_(n) isomorphic to ``quotient``

    Each summand p^t becomes p^(t+k) where p^k exactly divides n.
    """
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    if n == 0:
        if not quotient.is_trivial:
            raise DomainError("no group over 0 has a nontrivial quotient by its 0-torsion")
        return FinAbGroup.trivial()
    lifted = []
    for q in quotient.summands:
        p, t = prime_power(q)
        lifted.append(p ** (t + valuation(n, p)))
    return canonicalize(lifted)


def hom_count(source: FinAbGroup, target: FinAbGroup) -> int:
    """|Hom(G, H)| as the product of gcds over summand pairs"""
    return math.prod(gcd(a, b) for a in source.summands for b in target.summands)


def _prime_power_groups(p: int, e: int) -> Iterator[Tuple[int, ...]]:
    """All abelian p-groups of order p^e as ascending summand tuples"""
    if e == 0:
        yield ()
        return
    # partitions() reuses its dict between yields
    for partition in partitions(e):
        parts: List[int] = []
        for size, multiplicity in sorted(dict(partition).items()):
            parts.extend([p ** size] * multiplicity)
        yield tuple(parts)


def groups_of_order(n: int) -> List[FinAbGroup]:
    """Every isomorphism class of abelian groups of order n"""
    if n <= 0:
        raise DomainError(f"group order must be positive, got {n}")
    per_prime = [list(_prime_power_groups(p, e)) for p, e in factorize(n)]
    groups = [FinAbGroup(sum(choice, ())) for choice in product(*per_prime)]
    return sorted(groups, key=FinAbGroup.sort_key)


def enumerate_groups(max_order: int) -> List[FinAbGroup]:
    """Every finite abelian group of order <= max_order, sorted by (order, summands)"""
    groups: List[FinAbGroup] = []
    for n in range(1, max_order + 1):
        groups.extend(groups_of_order(n))
    logger.debug(f"Enumerated {len(groups)} abelian groups of order <= {max_order}")
    return groups
