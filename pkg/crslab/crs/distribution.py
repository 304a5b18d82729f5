# crslab/crs/distribution.py
"""
Exact probability laws on subgroups of (Z/N)^k
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, List, Mapping, Sequence, Tuple

from ..utils.errors import DomainError
from ..utils.helpers import format_rational, parse_rational
from .subgroups import TruncSubgroup, ann_sub, image_under, unit_determinant

Entry = Tuple[TruncSubgroup, Fraction]


@dataclass(frozen=True)
class SubgroupDistribution:
    """Finitely supported rational probability measure on canonical subgroups"""

    modulus: int
    rank: int
    entries: Tuple[Entry, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "entries", tuple(sorted(self.entries, key=lambda entry: entry[0].sort_key()))
        )
        total = Fraction(0)
        seen = set()
        for subgroup, probability in self.entries:
            if subgroup.modulus != self.modulus or subgroup.rank != self.rank:
                raise DomainError(f"subgroup {subgroup} is not in (Z/{self.modulus})^{self.rank}")
            if probability <= 0:
                raise DomainError(f"probabilities must be positive, got {probability}")
            if subgroup in seen:
                raise DomainError(f"duplicate subgroup {subgroup}")
            seen.add(subgroup)
            total += probability
        if total != 1:
            raise DomainError(f"probabilities sum to {total}, not 1")

    @classmethod
    def from_weights(
            cls,
            modulus: int,
            rank: int,
            weights: Mapping[TruncSubgroup, Fraction | int],
    ) -> "SubgroupDistribution":
        """Normalize nonnegative weights; zero weights are dropped"""
        total = sum((Fraction(w) for w in weights.values()), Fraction(0))
        if total <= 0:
            raise DomainError("weights must have positive total mass")
        entries = [
            (subgroup, Fraction(weight) / total)
            for subgroup, weight in weights.items()
            if weight
        ]
        return cls(modulus, rank, tuple(entries))

    @classmethod
    def point_mass(cls, subgroup: TruncSubgroup) -> "SubgroupDistribution":
        return cls(subgroup.modulus, subgroup.rank, ((subgroup, Fraction(1)),))

    def as_dict(self) -> Dict[TruncSubgroup, Fraction]:
        return dict(self.entries)

    def probability(self, subgroup: TruncSubgroup) -> Fraction:
        return self.as_dict().get(subgroup, Fraction(0))

    @property
    def support(self) -> List[TruncSubgroup]:
        return [subgroup for subgroup, _ in self.entries]

    def __len__(self) -> int:
        return len(self.entries)

    def map(self, func: Callable[[TruncSubgroup], TruncSubgroup]) -> "SubgroupDistribution":
        """Pushforward along a map of subgroups, re-aggregated"""
        weights: Dict[TruncSubgroup, Fraction] = defaultdict(Fraction)
        for subgroup, probability in self.entries:
            weights[func(subgroup)] += probability
        return SubgroupDistribution.from_weights(self.modulus, self.rank, weights)


def _require_same_space(d1: SubgroupDistribution, d2: SubgroupDistribution) -> None:
    if d1.modulus != d2.modulus or d1.rank != d2.rank:
        raise DomainError(
            f"distributions live on different groups: (Z/{d1.modulus})^{d1.rank} "
            f"vs (Z/{d2.modulus})^{d2.rank}"
        )


def tv_distance(d1: SubgroupDistribution, d2: SubgroupDistribution) -> Fraction:
    """Total variation distance, exact"""
    _require_same_space(d1, d2)
    p1, p2 = d1.as_dict(), d2.as_dict()
    support = set(p1) | set(p2)
    return sum(
        (abs(p1.get(s, Fraction(0)) - p2.get(s, Fraction(0))) for s in support),
        Fraction(0),
    ) / 2


def pushforward_ann(dist: SubgroupDistribution) -> SubgroupDistribution:
    return dist.map(ann_sub)


def apply_automorphism(dist: SubgroupDistribution, matrix: Sequence[Sequence[int]]) -> SubgroupDistribution:
    """Push the law through x ↦ xU for U invertible mod N"""
    if not unit_determinant(matrix, dist.modulus) or len(matrix) != dist.rank:
        raise DomainError(f"automorphism is not an invertible {dist.rank}x{dist.rank} matrix mod {dist.modulus}")
    return dist.map(lambda subgroup: image_under(subgroup, matrix))


def automorphism_generators(modulus: int, rank: int) -> List[List[List[int]]]:
    """Adjacent coordinate swaps, the transvection x1 <- x1 + x2 and a scaling by the smallest unit > 1"""
    def identity() -> List[List[int]]:
        return [[1 if i == j else 0 for j in range(rank)] for i in range(rank)]

    generators = []
    for i in range(rank - 1):
        swap = identity()
        swap[i][i] = swap[i + 1][i + 1] = 0
        swap[i][i + 1] = swap[i + 1][i] = 1
        generators.append(swap)
    if rank >= 2:
        transvection = identity()
        transvection[1][0] = 1
        generators.append(transvection)
    unit = next((u for u in range(2, modulus) if math.gcd(u, modulus) == 1), None)
    if rank >= 1 and unit is not None:
        scaling = identity()
        scaling[0][0] = unit
        generators.append(scaling)
    return generators


def to_json_dict(dist: SubgroupDistribution) -> Dict[str, Any]:
    return {
        "modulus": dist.modulus,
        "rank": dist.rank,
        "entries": [
            {"gens": [list(row) for row in subgroup.gens], "prob": format_rational(probability)}
            for subgroup, probability in dist.entries
        ],
    }


def from_json_dict(document: Mapping[str, Any]) -> SubgroupDistribution:
    modulus = int(document["modulus"])
    rank = int(document["rank"])
    entries = []
    for entry in document["entries"]:
        subgroup = TruncSubgroup(modulus, rank, tuple(tuple(int(v) for v in row) for row in entry["gens"]))
        entries.append((subgroup, parse_rational(entry["prob"])))
    return SubgroupDistribution(modulus, rank, tuple(entries))


def merge_counts(counts: Iterable[Mapping[TruncSubgroup, int]]) -> Dict[TruncSubgroup, int]:
    """Add per-stream sample counts"""
    merged: Dict[TruncSubgroup, int] = defaultdict(int)
    for chunk in counts:
        for subgroup, count in chunk.items():
            merged[subgroup] += count
    return dict(merged)


MARGINAL_CSV_COLUMNS = ("k", "exact", "empirical", "abs_err")


def marginal_csv_rows(exact: Sequence[Fraction], empirical: Sequence[Fraction]) -> List[List[str]]:
    """Rows ``k, exact, empirical, abs_err`` comparing two marginal vectors

    Index k runs over the common length; abs_err is |exact - empirical|.
    """
    if len(exact) != len(empirical):
        raise DomainError(f"marginal vectors differ in length: {len(exact)} and {len(empirical)}")
    return [
        [str(k), format_rational(x), format_rational(e), format_rational(abs(x - e))]
        for k, (x, e) in enumerate(zip(exact, empirical))
    ]
