# crslab/qlinalg/enumeration.py
"""
Exhaustive oracles and the uniform matrix sampler

Every enumerator checks its object count against the enumeration cap
before producing anything.
"""

from __future__ import annotations

import logging
from collections import Counter
from fractions import Fraction
from itertools import combinations, product
from typing import Dict, Iterator, List, Optional

import numpy as np

from ..config import resolve_cap
from ..utils.errors import DomainError, check_cap
from .counting import gaussian_binomial
from .field import FieldSpec
from .matrix import FqMatrix, Subspace, kernel_subspace, matrix_rank

logger = logging.getLogger(__name__)


def _require_shape(kappa: int, n: int) -> None:
    if kappa < 0 or n < 0:
        raise DomainError(f"matrix shape must be nonnegative, got {kappa}x{n}")


def enumerate_matrices(
        kappa: int,
        n: int,
        field: FieldSpec,
        cap: Optional[int] = None,
) -> Iterator[FqMatrix]:
    """Yield every κ × n matrix once, in lexicographic entry order

    Args:
        kappa: Row count
        n: Column count
        field: Entry field
        cap: Enumeration cap (default: configured cap)
    """
    _require_shape(kappa, n)
    total = field.q ** (kappa * n)
    check_cap(f"enumerating {kappa}x{n} matrices over {field}", total, resolve_cap(cap))
    logger.debug(f"Enumerating {total} matrices of shape {kappa}x{n} over {field}")
    return _matrices(kappa, n, field)


def _matrices(kappa: int, n: int, field: FieldSpec) -> Iterator[FqMatrix]:
    for entries in product(range(field.q), repeat=kappa * n):
        yield FqMatrix(field, kappa, n, entries)


def enumerate_subspaces(n: int, k: int, field: FieldSpec, cap: Optional[int] = None) -> List[Subspace]:
    """Every k-dimensional subspace of F_q^n as its RREF basis

    Pivot columns are chosen first; the entries right of each pivot in
    non-pivot columns are free.
    """
    total = gaussian_binomial(n, k, field.q)
    check_cap(f"enumerating {k}-dim subspaces of {field}^{n}", total, resolve_cap(cap))

    subspaces: List[Subspace] = []
    for pivots in combinations(range(n), k):
        pivot_set = set(pivots)
        slots = [
            (i, j)
            for i, c in enumerate(pivots)
            for j in range(c + 1, n)
            if j not in pivot_set
        ]
        for values in product(range(field.q), repeat=len(slots)):
            rows = [[0] * n for _ in range(k)]
            for i, c in enumerate(pivots):
                rows[i][c] = 1
            for (i, j), value in zip(slots, values):
                rows[i][j] = value
            subspaces.append(Subspace(field, n, tuple(tuple(row) for row in rows)))
    logger.debug(f"Enumerated {len(subspaces)} subspaces of dimension {k} in {field}^{n}")
    return subspaces


def sample_uniform_matrix(kappa: int, n: int, field: FieldSpec, rng: np.random.Generator) -> FqMatrix:
    """Haar-uniform κ × n matrix; consumes exactly κ·n draws from rng"""
    _require_shape(kappa, n)
    if kappa == 0 or n == 0:
        return FqMatrix(field, kappa, n, ())
    entries = rng.integers(0, field.q, size=kappa * n)
    return FqMatrix(field, kappa, n, tuple(int(v) for v in entries))


def brute_rank_counts(kappa: int, n: int, field: FieldSpec, cap: Optional[int] = None) -> List[int]:
    """Histogram of ranks over all κ × n matrices, index = rank"""
    counts = Counter(matrix_rank(m) for m in enumerate_matrices(kappa, n, field, cap))
    return [counts.get(r, 0) for r in range(min(kappa, n) + 1)]


def kernel_subspace_distribution(
        field: FieldSpec,
        kappa: int,
        n: int,
        cap: Optional[int] = None,
) -> Dict[Subspace, Fraction]:
    """Exact law of Ker(h) for uniform h: F_q^n -> F_q^κ, by enumeration"""
    counts: Counter = Counter(
        kernel_subspace(m) for m in enumerate_matrices(kappa, n, field, cap)
    )
    total = field.q ** (kappa * n)
    return {space: Fraction(count, total) for space, count in counts.items()}
