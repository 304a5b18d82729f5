# crslab/crs/params.py
"""
Ergodic CRS parameters (n, m, F) and their enumeration

``ambient_n`` selects the group: n >= 1 is (Z/n)^∞ and its dual,
n = 0 is the untwisted case Z^∞ / T^∞. A parameter is valid when m
divides n (every m divides 0, and 0 divides only 0), nF = 0, and F is
over m.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional

from ..finab.group import FinAbGroup, enumerate_groups, is_over
from ..finab.numtheory import divisors
from ..utils.errors import DomainError

logger = logging.getLogger(__name__)


def divides(m: int, n: int) -> bool:
    """m | n with m | 0 for every m and 0 | n only for n = 0"""
    if m == 0:
        return n == 0
    return n % m == 0


@dataclass(frozen=True)
class CrsParam:
    """Extreme point of the CRS simplex for ambient n"""

    ambient_n: int
    m: int
    group: FinAbGroup = FinAbGroup()

    def __post_init__(self):
        self.validate()

    def violations(self) -> List[str]:
        problems = []
        if self.ambient_n < 0 or self.m < 0:
            problems.append("n and m must be nonnegative")
            return problems
        if not divides(self.m, self.ambient_n):
            problems.append("m must divide n")
        if self.ambient_n >= 1 and self.ambient_n % self.group.exponent() != 0:
            problems.append("nF must vanish")
        if not is_over(self.group, self.m):
            problems.append("F must be over m")
        return problems

    def validate(self) -> None:
        problems = self.violations()
        if problems:
            raise DomainError(
                f"invalid parameter (n={self.ambient_n}, m={self.m}, F={self.group}): "
                + "; ".join(problems)
            )

    def with_ambient(self, n: int) -> "CrsParam":
        """Same (m, F) read inside a different ambient group"""
        return CrsParam(n, self.m, self.group)

    @property
    def samplable(self) -> bool:
        return self.ambient_n >= 1

    def sort_key(self):
        return (self.m, self.group.sort_key())

    def __str__(self) -> str:
        group = "trivial" if self.group.is_trivial else self.group.to_text()
        return f"({self.m}, {group})"


def enumerate_params(n: int, max_order: int) -> List[CrsParam]:
    """All parameters for ambient n with |F| <= max_order, sorted by (m, F)

    For n = 0 the parameter set is infinite; m is restricted to
    0..max_order.
    """
    if n < 0:
        raise DomainError(f"ambient n must be nonnegative, got {n}")
    if max_order < 1:
        raise DomainError(f"max_order must be positive, got {max_order}")

    groups = enumerate_groups(max_order)
    params: List[CrsParam] = []
    if n >= 1:
        groups = [g for g in groups if n % g.exponent() == 0]
        for m in divisors(n):
            params.extend(CrsParam(n, m, g) for g in groups if is_over(g, m))
    else:
        for m in range(0, max_order + 1):
            params.extend(CrsParam(0, m, g) for g in groups if is_over(g, m))

    params.sort(key=CrsParam.sort_key)
    logger.debug(f"Enumerated {len(params)} parameters for n={n}, max_order={max_order}")
    return params


def char_subgroups(n: int, bound: Optional[int] = None) -> List[int]:
    """Characteristic subgroups of (Z/n)^∞ as multipliers r (subgroup rA_n)

    The leading 0 marks the zero subgroup. For n = 0 the family rA,
    r >= 0, is infinite and is cut at ``bound``.
    """
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    if n >= 1:
        return [0] + divisors(n)
    if bound is None or bound < 0:
        raise DomainError("n = 0 needs a nonnegative bound for the family rA")
    return list(range(0, bound + 1))
