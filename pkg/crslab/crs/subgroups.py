# crslab/crs/subgroups.py
"""
Subgroups of (Z/N)^k in canonical form

(Z/N)^k is self-dual under ⟨x, y⟩ = Σ x_i y_i mod N, so the annihilator
and kernel maps coincide and are computed by the same routine.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from itertools import product
from typing import List, Optional, Sequence, Set, Tuple

from sympy import Matrix

from ..config import resolve_cap
from ..utils.errors import DomainError, InvariantViolation, check_cap
from .howell import howell_form, intersect_rows, left_kernel, pivot_column, submodule_order

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TruncSubgroup:
    """Subgroup of (Z/modulus)^rank held by its Howell form"""

    modulus: int
    rank: int
    gens: Tuple[Tuple[int, ...], ...] = ()

    def __post_init__(self):
        if self.modulus < 1:
            raise DomainError(f"modulus must be >= 1, got {self.modulus}")
        if self.rank < 0:
            raise DomainError(f"rank must be nonnegative, got {self.rank}")
        for row in self.gens:
            if len(row) != self.rank:
                raise DomainError(f"generator {row} does not have length {self.rank}")
            if not any(row):
                raise DomainError("generator rows must be nonzero")
        if howell_form(self.gens, self.modulus, self.rank) != self.gens:
            raise DomainError(f"generators {self.gens} are not in Howell form mod {self.modulus}")

    @classmethod
    def span(cls, modulus: int, rank: int, rows: Sequence[Sequence[int]]) -> "TruncSubgroup":
        """Subgroup generated by arbitrary integer rows"""
        for row in rows:
            if len(row) != rank:
                raise DomainError(f"generator {tuple(row)} does not have length {rank}")
        return cls(modulus, rank, howell_form(rows, modulus, rank))

    @classmethod
    def zero(cls, modulus: int, rank: int) -> "TruncSubgroup":
        return cls(modulus, rank, ())

    @classmethod
    def full(cls, modulus: int, rank: int) -> "TruncSubgroup":
        return cls.span(modulus, rank, [[1 if i == j else 0 for j in range(rank)] for i in range(rank)])

    @property
    def order(self) -> int:
        return submodule_order(self.gens, self.modulus)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_full(self) -> bool:
        return self.order == self.modulus ** self.rank

    def sort_key(self) -> Tuple[int, Tuple[Tuple[int, ...], ...]]:
        return (self.order, self.gens)

    def contains(self, vector: Sequence[int]) -> bool:
        return sum_sub(self, TruncSubgroup.span(self.modulus, self.rank, [vector])) == self

    def elements(self) -> Set[Tuple[int, ...]]:
        """All elements; only for small groups"""
        n = self.modulus
        result: Set[Tuple[int, ...]] = set()
        ranges = [range(n // row[pivot_column(row)]) for row in self.gens]
        for coefficients in product(*ranges):
            element = [0] * self.rank
            for c, row in zip(coefficients, self.gens):
                for j, v in enumerate(row):
                    element[j] = (element[j] + c * v) % n
            result.add(tuple(element))
        return result

    def to_rows(self) -> List[List[int]]:
        return [list(row) for row in self.gens]

    def __str__(self) -> str:
        if self.is_zero:
            return f"0 < (Z/{self.modulus})^{self.rank}"
        rows = ", ".join("(" + " ".join(str(v) for v in row) + ")" for row in self.gens)
        return f"<{rows}> mod {self.modulus}"


def _require_compatible(h: TruncSubgroup, k: TruncSubgroup) -> None:
    if h.modulus != k.modulus or h.rank != k.rank:
        raise DomainError(
            f"subgroups live in different groups: (Z/{h.modulus})^{h.rank} vs (Z/{k.modulus})^{k.rank}"
        )


def ann_sub(subgroup: TruncSubgroup) -> TruncSubgroup:
    """{y : ⟨x, y⟩ = 0 for all x in the subgroup}"""
    gens = left_kernel(subgroup.gens, subgroup.modulus, subgroup.rank)
    return TruncSubgroup(subgroup.modulus, subgroup.rank, gens)


# The pairing is symmetric, so Ker of a dual subgroup is the same map
ker_sub = ann_sub


def sum_sub(h: TruncSubgroup, k: TruncSubgroup) -> TruncSubgroup:
    _require_compatible(h, k)
    return TruncSubgroup.span(h.modulus, h.rank, list(h.gens) + list(k.gens))


def intersect_sub(h: TruncSubgroup, k: TruncSubgroup) -> TruncSubgroup:
    _require_compatible(h, k)
    return TruncSubgroup(h.modulus, h.rank, intersect_rows(h.gens, k.gens, h.modulus, h.rank))


def ann_of_multiple(m: int, modulus: int, rank: int) -> TruncSubgroup:
    """Ann(m·(Z/N)^k) = (d·Z/N)^k with d = N / gcd(m, N)"""
    if m < 0:
        raise DomainError(f"m must be nonnegative, got {m}")
    d = modulus // math.gcd(m, modulus)
    return TruncSubgroup.span(modulus, rank, [[d if i == j else 0 for j in range(rank)] for i in range(rank)])


def char_subgroup_truncation(r: int, modulus: int, rank: int) -> TruncSubgroup:
    """r·(Z/N)^k; r = 0 gives the zero subgroup"""
    if r < 0:
        raise DomainError(f"r must be nonnegative, got {r}")
    return TruncSubgroup.span(modulus, rank, [[r if i == j else 0 for j in range(rank)] for i in range(rank)])


def unit_determinant(matrix: Sequence[Sequence[int]], modulus: int) -> bool:
    size = len(matrix)
    if any(len(row) != size for row in matrix):
        return False
    if size == 0:
        return True
    det = int(Matrix(matrix).det())
    return math.gcd(det % modulus, modulus) == 1


def image_under(subgroup: TruncSubgroup, matrix: Sequence[Sequence[int]]) -> TruncSubgroup:
    """The subgroup {x U : x in H}, rows acting on the right"""
    n, k = subgroup.modulus, subgroup.rank
    if len(matrix) != k or any(len(row) != k for row in matrix):
        raise DomainError(f"automorphism must be a {k}x{k} matrix")
    if not unit_determinant(matrix, n):
        raise DomainError(f"matrix is not invertible mod {n}")
    mapped = [
        [sum(row[i] * matrix[i][j] for i in range(k)) % n for j in range(k)]
        for row in subgroup.gens
    ]
    return TruncSubgroup.span(n, k, mapped)


def enumerate_subgroups(modulus: int, rank: int, cap: Optional[int] = None) -> List[TruncSubgroup]:
    """Every subgroup of (Z/N)^k, by closing {0} under adding one element at a time"""
    elements = list(product(range(modulus), repeat=rank))
    check_cap(f"enumerating subgroups of (Z/{modulus})^{rank}", len(elements), resolve_cap(cap))

    zero = TruncSubgroup.zero(modulus, rank)
    seen = {zero}
    frontier = [zero]
    while frontier:
        next_frontier = []
        for subgroup in frontier:
            for element in elements:
                grown = TruncSubgroup.span(modulus, rank, list(subgroup.gens) + [list(element)])
                if grown not in seen:
                    seen.add(grown)
                    next_frontier.append(grown)
        frontier = next_frontier
    result = sorted(seen, key=TruncSubgroup.sort_key)
    logger.debug(f"Enumerated {len(result)} subgroups of (Z/{modulus})^{rank}")
    return result


def check_duality(subgroup: TruncSubgroup) -> None:
    """Raise InvariantViolation when ann(ann(H)) != H or |H||ann H| != N^k"""
    dual = ann_sub(subgroup)
    if ann_sub(dual) != subgroup:
        raise InvariantViolation(f"double annihilator differs for {subgroup}")
    if subgroup.order * dual.order != subgroup.modulus ** subgroup.rank:
        raise InvariantViolation(f"annihilator order mismatch for {subgroup}")
