# crslab/freegrp/words.py
"""
Reduced words in the free group F_r on x1..xr

Free reduction is delegated to sympy's FreeGroup; a ``FreeWord`` keeps
only the rank and the reduced syllables so values hash and compare as
group elements.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, List, Sequence, Tuple

from sympy.combinatorics.free_groups import FreeGroupElement, xfree_group

from ..finab.numtheory import require_prime
from ..utils.errors import DomainError, ParseError

Syllable = Tuple[int, int]

_SYLLABLE = re.compile(r'^x(\d+)(?:\^(-?\d+))?$')
_IDENTITY_TEXT = {"", "1", "e"}


@lru_cache(maxsize=64)
def _free_group(rank: int):
    group, generators = xfree_group(", ".join(f"x{i}" for i in range(1, rank + 1)))
    index = {symbol: i + 1 for i, symbol in enumerate(group.symbols)}
    return group, generators, index


def _require_rank(rank: int) -> None:
    if rank < 1:
        raise DomainError(f"rank must be positive, got {rank}")


@dataclass(frozen=True)
class FreeWord:
    """Reduced word: adjacent syllables use distinct generators, no zero exponents"""

    rank: int
    syllables: Tuple[Syllable, ...] = ()

    def __post_init__(self):
        _require_rank(self.rank)
        previous = None
        for generator, exponent in self.syllables:
            if not 1 <= generator <= self.rank:
                raise DomainError(f"generator x{generator} is outside rank {self.rank}")
            if exponent == 0:
                raise DomainError("syllables must have nonzero exponents")
            if generator == previous:
                raise DomainError(f"word is not reduced at x{generator}")
            previous = generator

    @classmethod
    def identity(cls, rank: int) -> "FreeWord":
        return cls(rank)

    @classmethod
    def generator(cls, rank: int, index: int, exponent: int = 1) -> "FreeWord":
        return reduce_word(rank, [(index, exponent)])

    @property
    def length(self) -> int:
        return sum(abs(exponent) for _, exponent in self.syllables)

    @property
    def is_identity(self) -> bool:
        return not self.syllables

    @property
    def max_index(self) -> int:
        return max((generator for generator, _ in self.syllables), default=0)

    def letters(self) -> List[Tuple[int, int]]:
        """Expanded letters as (generator, ±1)"""
        expanded = []
        for generator, exponent in self.syllables:
            step = 1 if exponent > 0 else -1
            expanded.extend([(generator, step)] * abs(exponent))
        return expanded

    def with_rank(self, rank: int) -> "FreeWord":
        """Same word read in a free group of another rank"""
        return FreeWord(rank, self.syllables)

    def to_element(self) -> FreeGroupElement:
        group, generators, _ = _free_group(self.rank)
        element = group.identity
        for generator, exponent in self.syllables:
            element = element * generators[generator - 1] ** exponent
        return element

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return multiply(self, other)

    def __invert__(self) -> "FreeWord":
        return invert(self)

    def __str__(self) -> str:
        return format_word(self)


def _from_element(rank: int, element: FreeGroupElement) -> FreeWord:
    _, _, index = _free_group(rank)
    return FreeWord(rank, tuple((index[symbol], int(exponent)) for symbol, exponent in element.array_form))


def reduce_word(rank: int, syllables: Iterable[Syllable]) -> FreeWord:
    """Freely reduce an arbitrary syllable list"""
    _require_rank(rank)
    group, generators, _ = _free_group(rank)
    element = group.identity
    for generator, exponent in syllables:
        if not 1 <= generator <= rank:
            raise DomainError(f"generator x{generator} is outside rank {rank}")
        element = element * generators[generator - 1] ** int(exponent)
    return _from_element(rank, element)


def _require_same_rank(u: FreeWord, v: FreeWord) -> None:
    if u.rank != v.rank:
        raise DomainError(f"rank mismatch: {u.rank} vs {v.rank}")


def multiply(u: FreeWord, v: FreeWord) -> FreeWord:
    _require_same_rank(u, v)
    return _from_element(u.rank, u.to_element() * v.to_element())


def invert(u: FreeWord) -> FreeWord:
    return FreeWord(u.rank, tuple((g, -e) for g, e in reversed(u.syllables)))


def commutator(u: FreeWord, v: FreeWord) -> FreeWord:
    """u v u^-1 v^-1"""
    _require_same_rank(u, v)
    return multiply(multiply(u, v), multiply(invert(u), invert(v)))


def power(u: FreeWord, n: int) -> FreeWord:
    return _from_element(u.rank, u.to_element() ** n)


def product_of(rank: int, words: Sequence[FreeWord]) -> FreeWord:
    result = FreeWord.identity(rank)
    for word in words:
        result = multiply(result, word)
    return result


def adyan_word(n: int, p: int) -> FreeWord:
    """(x1^np x2^np x1^-np x2^-np)^n in F_2, of length 4n²p"""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    require_prime(p)
    block = n * p
    return reduce_word(2, [(1, block), (2, block), (1, -block), (2, -block)] * n)


def format_word(word: FreeWord) -> str:
    """Space-separated syllables, e.g. "x1^2 x2^-3 x1"; the identity is "1" """
    if word.is_identity:
        return "1"
    return " ".join(
        f"x{generator}" if exponent == 1 else f"x{generator}^{exponent}"
        for generator, exponent in word.syllables
    )


def parse_word(text: str, rank: int | None = None) -> FreeWord:
    """Parse the syllable text format; the rank defaults to the largest index used"""
    tokens = text.replace("*", " ").split()
    if " ".join(tokens) in _IDENTITY_TEXT:
        return FreeWord.identity(rank or 1)
    syllables = []
    for token in tokens:
        match = _SYLLABLE.match(token)
        if not match:
            raise ParseError(f"bad syllable {token!r} in word", text)
        generator = int(match.group(1))
        exponent = int(match.group(2)) if match.group(2) is not None else 1
        if generator < 1:
            raise ParseError("generators are numbered from x1", text)
        syllables.append((generator, exponent))
    needed = max(generator for generator, _ in syllables)
    if rank is None:
        rank = needed
    elif needed > rank:
        raise ParseError(f"word uses x{needed} but the rank is {rank}", text)
    return reduce_word(rank, syllables)
