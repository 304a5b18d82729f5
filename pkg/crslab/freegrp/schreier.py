# crslab/freegrp/schreier.py
"""
Schreier coset graphs of finite-index subgroups of F_r

A list of r permutations defines φ: F_r -> Sym(d) with φ(x_s) = images[s].
In ``regular`` mode the vertices are the elements of ⟨images⟩ and K is
the kernel of φ; in ``points`` mode the vertices are the points 1..d and
K is the preimage of the stabilizer of point 1. Generators act on the
right, so the coset of w·x_s is the coset of w moved by images[s].

Vertices are numbered in breadth-first discovery order from vertex 0,
trying x1, x1^-1, x2, x2^-1, ... in turn; the same order builds the
spanning tree. Each edge v --s--> v·x_s not in the tree gives the free
generator k_e = p_v x_s p_{v·x_s}^-1 of K, and edges are indexed in
(v, s) order.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from sympy.combinatorics import Permutation

from ..config import resolve_cap
from ..finab.numtheory import require_prime
from ..utils.errors import DomainError, check_cap
from .words import FreeWord, multiply, invert, reduce_word

logger = logging.getLogger(__name__)

REGULAR = "regular"
POINTS = "points"

Edge = Tuple[int, int]


@dataclass(frozen=True)
class SchreierGraph:
    """Coset graph with a breadth-first spanning tree rooted at coset 0

    ``transitions[s][v]`` is the coset reached from v along x_{s+1};
    ``tree[v]`` is (parent, generator, ±1) for v > 0, meaning
    v = parent · x_generator^{±1}.
    """

    rank: int
    mode: str
    transitions: Tuple[Tuple[int, ...], ...]
    tree: Tuple[Optional[Tuple[int, int, int]], ...]
    inverse_transitions: Tuple[Tuple[int, ...], ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        inverse = []
        for row in self.transitions:
            back = [0] * len(row)
            for source, target in enumerate(row):
                back[target] = source
            inverse.append(tuple(back))
        object.__setattr__(self, "inverse_transitions", tuple(inverse))

    @property
    def index(self) -> int:
        return len(self.tree)

    def step(self, vertex: int, generator: int, sign: int) -> int:
        """Coset of (coset v)·x_generator^sign"""
        if sign > 0:
            return self.transitions[generator - 1][vertex]
        return self.inverse_transitions[generator - 1][vertex]

    def tree_edges(self) -> List[Edge]:
        """Tree edges as positively oriented (source, generator) pairs"""
        edges = []
        for vertex, entry in enumerate(self.tree):
            if entry is None:
                continue
            parent, generator, sign = entry
            edges.append((parent, generator) if sign > 0 else (vertex, generator))
        return sorted(edges)

    def non_tree_edges(self) -> List[Edge]:
        tree = set(self.tree_edges())
        return [
            (vertex, generator)
            for vertex in range(self.index)
            for generator in range(1, self.rank + 1)
            if (vertex, generator) not in tree
        ]

    def path_word(self, vertex: int) -> FreeWord:
        """Tree path p_v from coset 0 to ``vertex``"""
        syllables = []
        while self.tree[vertex] is not None:
            parent, generator, sign = self.tree[vertex]
            syllables.append((generator, sign))
            vertex = parent
        return reduce_word(self.rank, reversed(syllables))

    def walk(self, word: FreeWord, start: int = 0) -> int:
        if word.rank != self.rank:
            raise DomainError(f"word has rank {word.rank}, graph has rank {self.rank}")
        vertex = start
        for generator, sign in word.letters():
            vertex = self.step(vertex, generator, sign)
        return vertex

    def in_subgroup(self, word: FreeWord) -> bool:
        """Membership in K: the coset walk returns to 0"""
        return self.walk(word) == 0


def _normalize_images(rank: int, images: Sequence[Permutation]) -> List[Permutation]:
    if rank < 1:
        raise DomainError(f"rank must be positive, got {rank}")
    if len(images) != rank:
        raise DomainError(f"expected {rank} images, got {len(images)}")
    degree = max(p.size for p in images)
    return [Permutation(p.array_form + list(range(p.size, degree))) for p in images]


def _bfs(rank: int, start, move, cap: int) -> Tuple[list, Dict, List[Optional[Tuple[int, int, int]]]]:
    """Breadth-first discovery over an implicit graph of hashable states"""
    order = [start]
    number = {start: 0}
    tree: List[Optional[Tuple[int, int, int]]] = [None]
    queue = deque([start])
    while queue:
        state = queue.popleft()
        for generator in range(1, rank + 1):
            for sign in (1, -1):
                target = move(state, generator, sign)
                if target in number:
                    continue
                number[target] = len(order)
                check_cap("Schreier graph vertices", len(order) + 1, cap)
                order.append(target)
                tree.append((number[state], generator, sign))
                queue.append(target)
    return order, number, tree


def schreier_graph(
        rank: int,
        images: Sequence[Permutation],
        mode: str = REGULAR,
        cap: Optional[int] = None,
) -> SchreierGraph:
    """Coset graph of the finite-index subgroup defined by ``images``

    Raises:
        DomainError: points mode with an intransitive action
        ResourceLimitError: more cosets than the group-order cap
    """
    images = _normalize_images(rank, images)
    inverses = [~p for p in images]
    limit = resolve_cap(cap, key='caps.group_order')

    if mode == REGULAR:
        identity = Permutation(list(range(images[0].size)))

        def move(element, generator, sign):
            factor = images[generator - 1] if sign > 0 else inverses[generator - 1]
            return element * factor

        states, number, tree = _bfs(rank, identity, move, limit)
    elif mode == POINTS:
        degree = images[0].size

        def move(point, generator, sign):
            factor = images[generator - 1] if sign > 0 else inverses[generator - 1]
            return factor(point)

        states, number, tree = _bfs(rank, 0, move, limit)
        if len(states) != degree:
            raise DomainError(
                f"action is not transitive: point 1 reaches {len(states)} of {degree} points"
            )
    else:
        raise DomainError(f"mode must be '{REGULAR}' or '{POINTS}', got {mode!r}")

    transitions = tuple(
        tuple(number[move(state, generator, 1)] for state in states)
        for generator in range(1, rank + 1)
    )
    logger.debug(f"Schreier graph ({mode}) of rank {rank} has index {len(states)}")
    return SchreierGraph(rank, mode, transitions, tuple(tree))


def schreier_basis(graph: SchreierGraph) -> List[FreeWord]:
    """Free basis k_e of K, one word per non-tree edge in (v, s) order"""
    paths = [graph.path_word(v) for v in range(graph.index)]
    basis = []
    for vertex, generator in graph.non_tree_edges():
        target = graph.step(vertex, generator, 1)
        word = multiply(
            multiply(paths[vertex], FreeWord.generator(graph.rank, generator)),
            invert(paths[target]),
        )
        basis.append(word)
    return basis


def basis_size(rank: int, index: int) -> int:
    """Rank of a subgroup of index ``index`` in F_rank"""
    return 1 + index * (rank - 1)


def rewrite_in_basis(graph: SchreierGraph, word: FreeWord) -> Tuple[int, ...]:
    """Abelianized coordinates of a word of K in the Schreier basis

    Each crossing of a non-tree edge along the coset walk contributes ±1
    at that edge's position.

    Raises:
        DomainError: the word is not in K
    """
    if word.rank != graph.rank:
        raise DomainError(f"word has rank {word.rank}, graph has rank {graph.rank}")
    position = {edge: i for i, edge in enumerate(graph.non_tree_edges())}
    vector = [0] * len(position)
    vertex = 0
    for generator, sign in word.letters():
        if sign > 0:
            edge = (vertex, generator)
            vertex = graph.step(vertex, generator, 1)
        else:
            vertex = graph.step(vertex, generator, -1)
            edge = (vertex, generator)
        if edge in position:
            vector[position[edge]] += sign
    if vertex != 0:
        raise DomainError(f"word {word} is not in the subgroup: its walk ends at coset {vertex}")
    return tuple(vector)


def in_k_p(graph: SchreierGraph, word: FreeWord, p: int) -> bool:
    """Membership in K_p = [K, K]K^p: in K with rewrite vector ≡ 0 mod p"""
    require_prime(p)
    if not graph.in_subgroup(word):
        return False
    return all(value % p == 0 for value in rewrite_in_basis(graph, word))


def normalize_functional(vector: Sequence[int], p: int) -> Tuple[int, ...]:
    """Scale a nonzero vector mod p so its first nonzero entry is 1"""
    reduced = [int(v) % p for v in vector]
    lead = next((v for v in reduced if v), 0)
    if not lead:
        raise DomainError("the zero functional does not define an index-p subgroup")
    scale = pow(lead, -1, p)
    return tuple(v * scale % p for v in reduced)


def sample_index_p_subgroup(size: int, p: int, rng: np.random.Generator) -> Tuple[int, ...]:
    """Uniform nonzero functional on (Z/p)^size, normalized

    The zero functional is rejected, so every index-p subgroup of
    (Z/p)^size comes out with probability (p - 1)/(p^size - 1).
    """
    if size < 1:
        raise DomainError(f"basis size must be positive, got {size}")
    require_prime(p)
    while True:
        vector = rng.integers(0, p, size=size)
        if vector.any():
            return normalize_functional(vector.tolist(), p)


def enumerate_index_p_functionals(size: int, p: int, cap: Optional[int] = None) -> List[Tuple[int, ...]]:
    """Every normalized nonzero functional, one per index-p subgroup"""
    if size < 1:
        raise DomainError(f"basis size must be positive, got {size}")
    require_prime(p)
    check_cap(f"functionals on (Z/{p})^{size}", p ** size, resolve_cap(cap))
    return sorted(
        {normalize_functional(vector, p) for vector in product(range(p), repeat=size) if any(vector)}
    )


def index_p_subgroup_count(size: int, p: int) -> int:
    """(p^size - 1)/(p - 1)"""
    require_prime(p)
    return (p ** size - 1) // (p - 1)


@dataclass(frozen=True)
class IndexPSubgroup:
    """{w in K : ⟨rewrite(w), X⟩ ≡ 0 mod p} for a nonzero functional X"""

    graph: SchreierGraph
    p: int
    functional: Tuple[int, ...]

    def __post_init__(self):
        require_prime(self.p)
        expected = len(self.graph.non_tree_edges())
        if len(self.functional) != expected:
            raise DomainError(f"functional has {len(self.functional)} entries, basis has {expected}")
        object.__setattr__(self, "functional", normalize_functional(self.functional, self.p))

    @classmethod
    def sample(cls, graph: SchreierGraph, p: int, rng: np.random.Generator) -> "IndexPSubgroup":
        size = len(graph.non_tree_edges())
        return cls(graph, p, sample_index_p_subgroup(size, p, rng))

    def contains(self, word: FreeWord) -> bool:
        if not self.graph.in_subgroup(word):
            return False
        vector = rewrite_in_basis(self.graph, word)
        return sum(a * b for a, b in zip(vector, self.functional)) % self.p == 0
