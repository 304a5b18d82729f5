# crslab/crs/howell.py
"""
Howell normal form over Z/N

The Howell form of a generating set of a submodule M of (Z/N)^k is the
unique echelon basis in which
  * each pivot divides N,
  * entries above a pivot lie in [0, pivot),
  * for every column c the rows with pivot >= c span the elements of M
    vanishing in columns < c.

Rows are combined with unimodular 2x2 transforms built from the
extended gcd, pivots are normalized by a unit, and after each pivot the
row (N/g)·pivot_row, which vanishes in the pivot column, is fed back
into the remaining rows. That last step gives the spanning property.
"""

from __future__ import annotations

import math
from typing import List, Sequence, Tuple

Row = List[int]


def gcdex(a: int, b: int) -> Tuple[int, int, int]:
    """(g, s, t) with s*a + t*b = g = gcd(a, b)"""
    r0, r1 = a, b
    s0, s1 = 1, 0
    t0, t1 = 0, 1
    while r1 != 0:
        quotient = r0 // r1
        r0, r1 = r1, r0 - quotient * r1
        s0, s1 = s1, s0 - quotient * s1
        t0, t1 = t1, t0 - quotient * t1
    if r0 < 0:
        r0, s0, t0 = -r0, -s0, -t0
    return r0, s0, t0


def unit_normalizer(a: int, modulus: int) -> int:
    """A unit u of Z/modulus with u*a = gcd(a, modulus)"""
    g = math.gcd(a, modulus)
    reduced_modulus = modulus // g
    if reduced_modulus == 1:
        base = 0
    else:
        base = pow((a // g) % reduced_modulus, -1, reduced_modulus)
    # Some lift of base mod N/g is a unit mod N
    for t in range(g):
        u = base + t * reduced_modulus
        if math.gcd(u, modulus) == 1:
            return u % modulus
    return 1


def _combine(x: Row, y: Row, s: int, t: int, modulus: int) -> Row:
    return [(s * a + t * b) % modulus for a, b in zip(x, y)]


def howell_form(rows: Sequence[Sequence[int]], modulus: int, width: int) -> Tuple[Tuple[int, ...], ...]:
    """Howell normal form of the row span of ``rows`` in (Z/modulus)^width

    Args:
        rows: Generators, any integers
        modulus: N >= 1
        width: Row length k

    Returns:
        Canonical tuple of nonzero rows ordered by pivot column
    """
    pool: List[Row] = []
    for row in rows:
        reduced = [int(v) % modulus for v in row]
        if any(reduced):
            pool.append(reduced)

    echelon: List[Tuple[int, Row]] = []
    for c in range(width):
        candidates = [row for row in pool if row[c]]
        rest = [row for row in pool if not row[c]]
        if not candidates:
            pool = rest
            continue

        pivot_row = candidates[0]
        for other in candidates[1:]:
            a, b = pivot_row[c], other[c]
            g, s, t = gcdex(a, b)
            eliminated = _combine(pivot_row, other, -(b // g), a // g, modulus)
            pivot_row = _combine(pivot_row, other, s, t, modulus)
            if any(eliminated):
                rest.append(eliminated)

        u = unit_normalizer(pivot_row[c], modulus)
        pivot_row = [(u * v) % modulus for v in pivot_row]
        g = pivot_row[c]
        annihilated = [((modulus // g) * v) % modulus for v in pivot_row]
        if any(annihilated):
            rest.append(annihilated)

        echelon.append((c, pivot_row))
        pool = rest

    # Reduce above each pivot, left to right
    for i, (c, pivot_row) in enumerate(echelon):
        g = pivot_row[c]
        for j in range(i):
            row = echelon[j][1]
            factor = row[c] // g
            if factor:
                echelon[j] = (
                    echelon[j][0],
                    [(a - factor * b) % modulus for a, b in zip(row, pivot_row)],
                )

    return tuple(tuple(row) for _, row in echelon)


def pivot_column(row: Sequence[int]) -> int:
    return next(j for j, v in enumerate(row) if v)


def submodule_order(form: Sequence[Sequence[int]], modulus: int) -> int:
    """|M| for M given in Howell form: the product of N / pivot"""
    order = 1
    for row in form:
        order *= modulus // row[pivot_column(row)]
    return order


def left_kernel(rows: Sequence[Sequence[int]], modulus: int, width: int) -> Tuple[Tuple[int, ...], ...]:
    """Howell form of {y : y · r = 0 for every r in rows}, pairing Σ y_i r_i mod N

    Uses the Howell form of [Rᵀ | I]: its rows vanishing on the first
    block carry the solutions in the second block.
    """
    m = len(rows)
    augmented = []
    for i in range(width):
        augmented.append([rows[j][i] for j in range(m)] + [1 if t == i else 0 for t in range(width)])
    form = howell_form(augmented, modulus, m + width)
    solutions = [row[m:] for row in form if not any(row[:m])]
    return howell_form(solutions, modulus, width)


def intersect_rows(
        first: Sequence[Sequence[int]],
        second: Sequence[Sequence[int]],
        modulus: int,
        width: int,
) -> Tuple[Tuple[int, ...], ...]:
    """Howell form of span(first) ∩ span(second) by the Zassenhaus block method"""
    stacked = [list(r) + list(r) for r in first] + [list(r) + [0] * width for r in second]
    form = howell_form(stacked, modulus, 2 * width)
    meet = [row[width:] for row in form if not any(row[:width])]
    return howell_form(meet, modulus, width)
