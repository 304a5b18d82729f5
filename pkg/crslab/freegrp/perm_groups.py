# crslab/freegrp/perm_groups.py
"""
Finite permutation groups, word maps and verbal subgroups

Permutations are sympy ``Permutation`` objects on 0..d-1; text uses
1-indexed cycle notation, "(1 2 3)(4 5)", with "()" for the identity.
Products follow sympy: ``p * q`` applies p first, then q.
"""

from __future__ import annotations

import logging
import math
import re
from itertools import permutations, product
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from sympy.combinatorics import Permutation, PermutationGroup

from ..config import resolve_cap
from ..config.constants import MAX_PERMUTATION_DEGREE, MAX_RELABELING_DEGREE
from ..utils.errors import DomainError, InvariantViolation, ParseError, check_cap
from .words import FreeWord

logger = logging.getLogger(__name__)

_CYCLE = re.compile(r'\(([^()]*)\)')


def _require_degree(degree: int) -> None:
    if not 1 <= degree <= MAX_PERMUTATION_DEGREE:
        raise DomainError(f"degree must be in [1, {MAX_PERMUTATION_DEGREE}], got {degree}")


def _cycles(text: str) -> List[List[int]]:
    stripped = text.replace(" ", "")
    if not stripped:
        raise ParseError("empty permutation", text)
    if _CYCLE.sub("", text).strip():
        raise ParseError("permutations are written as cycles like (1 2 3)(4 5)", text)
    cycles = []
    for body in _CYCLE.findall(text):
        try:
            points = [int(token) for token in body.replace(",", " ").split()]
        except ValueError:
            raise ParseError("cycle entries must be integers", text) from None
        if any(point < 1 for point in points):
            raise ParseError("points are numbered from 1", text)
        if points:
            cycles.append(points)
    seen = [point for cycle in cycles for point in cycle]
    if len(seen) != len(set(seen)):
        raise ParseError("cycles must be disjoint", text)
    return cycles


def permutation_support(text: str) -> int:
    """Largest point mentioned in a cycle string (0 for the identity)"""
    return max((point for cycle in _cycles(text) for point in cycle), default=0)


def parse_permutation(text: str, degree: Optional[int] = None) -> Permutation:
    cycles = _cycles(text)
    needed = max((point for cycle in cycles for point in cycle), default=1)
    degree = needed if degree is None else degree
    if needed > degree:
        raise ParseError(f"point {needed} exceeds degree {degree}", text)
    _require_degree(degree)
    images = list(range(degree))
    for cycle in cycles:
        for source, target in zip(cycle, cycle[1:] + cycle[:1]):
            images[source - 1] = target - 1
    return Permutation(images)


def format_permutation(perm: Permutation) -> str:
    cycles = perm.cyclic_form
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(point + 1) for point in cycle) + ")" for cycle in cycles)


def parse_permutation_list(text: str, degree: Optional[int] = None) -> List[Permutation]:
    """Parse "perm;perm;..." with one common degree"""
    parts = [part.strip() for part in text.split(";")]
    if not parts or any(not part for part in parts):
        raise ParseError("expected permutations separated by ';'", text)
    if degree is None:
        degree = max(1, max(permutation_support(part) for part in parts))
    return [parse_permutation(part, degree) for part in parts]


def _key(perm: Permutation) -> Tuple[int, ...]:
    return tuple(perm.array_form)


class FinGroup:
    """Finite permutation group of degree at most 12 with its element list

    Elements are listed in array-form order. Construction verifies that
    the list is closed under products with the generators and under
    inverses.
    """

    def __init__(self, generators: Sequence[Permutation], degree: Optional[int] = None,
                 cap: Optional[int] = None):
        if degree is None:
            degree = max((g.size for g in generators), default=1)
        _require_degree(degree)
        gens = tuple(Permutation(g.array_form + list(range(g.size, degree))) for g in generators)
        if any(g.size != degree for g in gens):
            raise DomainError(f"generators do not fit in degree {degree}")
        if not gens:
            gens = (Permutation(list(range(degree))),)

        self.degree = degree
        self.generators = gens
        self.group = PermutationGroup(list(gens))
        order = int(self.group.order())
        check_cap(f"permutation group of degree {degree}", order,
                  resolve_cap(cap, key='caps.group_order'))
        self.elements: Tuple[Permutation, ...] = tuple(sorted(self.group.generate(), key=_key))
        self._element_set: FrozenSet[Permutation] = frozenset(self.elements)
        self._verify_closure()

    def _verify_closure(self) -> None:
        for element in self.elements:
            if ~element not in self._element_set:
                raise InvariantViolation(f"inverse of {format_permutation(element)} missing from group")
            for generator in self.generators:
                if element * generator not in self._element_set:
                    raise InvariantViolation("element list is not closed under the generators")

    @classmethod
    def from_text(cls, text: str, degree: Optional[int] = None, cap: Optional[int] = None) -> "FinGroup":
        generators = parse_permutation_list(text, degree)
        return cls(generators, generators[0].size, cap)

    @classmethod
    def symmetric(cls, degree: int) -> "FinGroup":
        if degree == 1:
            return cls([], 1)
        gens = [parse_permutation("(1 2)", degree), parse_permutation(
            "(" + " ".join(str(i) for i in range(1, degree + 1)) + ")", degree)]
        return cls(gens, degree)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Permutation:
        return Permutation(list(range(self.degree)))

    def __contains__(self, perm: Permutation) -> bool:
        return perm in self._element_set

    def element_set(self) -> FrozenSet[Permutation]:
        return self._element_set

    def is_subgroup_of(self, other: "FinGroup") -> bool:
        return self.degree == other.degree and self._element_set <= other.element_set()

    def is_normal_in(self, other: "FinGroup") -> bool:
        if not self.is_subgroup_of(other):
            return False
        return all(
            ~g * h * g in self._element_set
            for g in other.generators
            for h in self.generators
        )

    def is_abelian(self) -> bool:
        return all(a * b == b * a for a in self.generators for b in self.generators)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FinGroup):
            return NotImplemented
        return self.degree == other.degree and self._element_set == other.element_set()

    def __hash__(self) -> int:
        return hash((self.degree, self._element_set))

    def __repr__(self) -> str:
        gens = ";".join(format_permutation(g) for g in self.generators)
        return f"FinGroup(degree={self.degree}, order={self.order}, generators={gens!r})"


def evaluate_word(word: FreeWord, values: Sequence[Permutation], degree: Optional[int] = None) -> Permutation:
    """g_{a_1}^{b_1} ... g_{a_n}^{b_n} for the word x_{a_1}^{b_1} ... x_{a_n}^{b_n}"""
    if len(values) < word.max_index:
        raise DomainError(f"word uses x{word.max_index} but only {len(values)} values were given")
    if degree is None:
        degree = max((v.size for v in values), default=1)
    result = Permutation(list(range(degree)))
    for generator, exponent in word.syllables:
        result = result * values[generator - 1] ** exponent
    return result


def word_map_eval(word: FreeWord, group: FinGroup, values: Sequence[Permutation]) -> Permutation:
    """f_w evaluated on a tuple of elements of ``group``"""
    return evaluate_word(word, values, group.degree)


def verbal_subgroup(group: FinGroup, words: Iterable[FreeWord], cap: Optional[int] = None) -> FinGroup:
    """Subgroup generated by every value of every word map; verified normal"""
    words = list(words)
    variables = max((w.max_index for w in words), default=0)
    check_cap(f"word map tuples over a group of order {group.order}",
              group.order ** variables, resolve_cap(cap))

    images = set()
    for values in product(group.elements, repeat=variables):
        for word in words:
            images.add(word_map_eval(word, group, values))
    images.discard(group.identity)
    subgroup = FinGroup(sorted(images, key=_key), group.degree)
    if not subgroup.is_normal_in(group):
        raise InvariantViolation("verbal subgroup is not normal")
    logger.debug(f"Verbal subgroup of order {subgroup.order} in a group of order {group.order}")
    return subgroup


def relabelings(degree: int) -> List[Permutation]:
    """All of Sym(degree) as relabelings of the points"""
    check_cap(f"relabelings of degree {degree}", math.factorial(degree),
              math.factorial(MAX_RELABELING_DEGREE))
    return [Permutation(list(images)) for images in permutations(range(degree))]


def _conjugate(perm: Permutation, sigma: Permutation) -> Permutation:
    return ~sigma * perm * sigma


def normalizing_relabelings(group: FinGroup) -> List[Permutation]:
    """Relabelings σ with σ^-1 G σ = G"""
    members = group.element_set()
    return [
        sigma for sigma in relabelings(group.degree)
        if all(_conjugate(g, sigma) in members for g in group.generators)
    ]


def is_fully_invariant(group: FinGroup, subgroup: FinGroup) -> bool:
    """True when every relabeling normalizing G maps H onto itself"""
    if not subgroup.is_subgroup_of(group):
        raise DomainError("second group is not a subgroup of the first")
    members = subgroup.element_set()
    return all(
        _conjugate(h, sigma) in members
        for sigma in normalizing_relabelings(group)
        for h in subgroup.generators
    )
