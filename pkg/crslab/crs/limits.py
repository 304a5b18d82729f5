# crslab/crs/limits.py
"""
Weak* limits of untwisted CRS parameter sequences

A sequence (m_i, F_i) of parameters of the dual of Z^∞ is described by
its regime. Limits are returned as untwisted parameters (ambient 0).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Literal, Optional, Sequence, Tuple

from ..finab.group import FinAbGroup, is_over, lift_over, quotient_by_n_torsion
from ..finab.numtheory import gcd, lcm, prime_power
from ..utils.errors import DomainError
from .distribution import tv_distance
from .params import CrsParam
from .samplers import ANNIHILATOR, exact_distribution

logger = logging.getLogger(__name__)

Trend = Literal["diverges", "constant"]
MaxorderTrend = Literal["bounded", "diverges"]


@dataclass(frozen=True)
class SequenceDescriptor:
    """Regime of a parameter sequence

    With ``n_trend == "diverges"`` every other field is ignored.
    """

    n_trend: Trend
    n: int = 0
    stable_part: FinAbGroup = FinAbGroup()
    growing_blocks: Tuple[int, ...] = field(default=())
    maxorder_trend: MaxorderTrend = "bounded"

    def __post_init__(self):
        if self.n_trend not in ("diverges", "constant"):
            raise DomainError(f"n_trend must be 'diverges' or 'constant', got {self.n_trend!r}")
        if self.maxorder_trend not in ("bounded", "diverges"):
            raise DomainError(f"maxorder_trend must be 'bounded' or 'diverges', got {self.maxorder_trend!r}")
        if self.n_trend == "diverges":
            return
        if self.n < 0:
            raise DomainError(f"n must be nonnegative, got {self.n}")
        for block in self.growing_blocks:
            if prime_power(block) is None:
                raise DomainError(f"growing block {block} is not a prime power")


def classify_limit(descriptor: SequenceDescriptor) -> CrsParam:
    """Limit parameter of the described sequence

    Diverging n or diverging maxorder give (0, trivial), the point mass
    at the whole dual. Otherwise the limit is (lcm(n, blocks), F); when F
    is not over that m it is replaced by the unique group over m with the
    same quotient by its m-torsion, which induces the same law.
    """
    if descriptor.n_trend == "diverges" or descriptor.maxorder_trend == "diverges":
        return CrsParam(0, 0, FinAbGroup.trivial())

    m = lcm(descriptor.n, *descriptor.growing_blocks)
    group = descriptor.stable_part
    if m == 0:
        return CrsParam(0, 0, FinAbGroup.trivial())
    if not is_over(group, m):
        reduced = lift_over(quotient_by_n_torsion(group, m), m)
        logger.debug(f"Stable part {group} is not over {m}; using {reduced}")
        group = reduced
    return CrsParam(0, m, group)


def evaluation_zero_probability(k: int, m: int) -> Fraction:
    """P(k·h(g) = 0) for g of order m and Haar-random h, i.e. gcd(k, m)/m"""
    if m < 1:
        raise DomainError(f"m must be positive, got {m}")
    return Fraction(gcd(k, m), m)


def evaluation_zero_probability_bruteforce(k: int, m: int) -> Fraction:
    """Same probability by counting x in Z/m with kx = 0"""
    if m < 1:
        raise DomainError(f"m must be positive, got {m}")
    return Fraction(sum(1 for x in range(m) if (k * x) % m == 0), m)


def tv_to_limit(
        params: Sequence[CrsParam],
        descriptor: SequenceDescriptor,
        ambient: int,
        side: str = ANNIHILATOR,
        coords: int = 2,
        cap: Optional[int] = None,
) -> List[Fraction]:
    """Exact TV distance of each parameter's law to the limit law, read in (Z/ambient)^coords"""
    target = exact_distribution(classify_limit(descriptor).with_ambient(ambient), side, coords, cap)
    distances = []
    for param in params:
        law = exact_distribution(param.with_ambient(ambient), side, coords, cap)
        distances.append(tv_distance(law, target))
    return distances


def elementary_tv_sequence(k_max: int, coords: int = 2, cap: Optional[int] = None) -> List[Fraction]:
    """TV distances of (1, (Z/2)^k), k = 1..k_max, to their limit (2, trivial) over Z/2

    Equals 1 - P(a uniform coords × k matrix over F_2 has full rank), so
    the sequence strictly decreases.
    """
    if k_max < 1:
        raise DomainError(f"k_max must be positive, got {k_max}")
    descriptor = SequenceDescriptor("constant", n=1, growing_blocks=(2,))
    params = [CrsParam(2, 1, FinAbGroup((2,) * k)) for k in range(1, k_max + 1)]
    return tv_to_limit(params, descriptor, ambient=2, coords=coords, cap=cap)
