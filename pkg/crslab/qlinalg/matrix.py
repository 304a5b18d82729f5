# crslab/qlinalg/matrix.py
"""
Dense matrices and subspaces over F_q

Matrices are immutable row-major tuples of element codes. Elimination is
plain Gauss-Jordan; subspaces are stored by their reduced row-echelon
basis so equal subspaces compare equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from ..utils.errors import DomainError
from .field import FieldSpec


@dataclass(frozen=True)
class FqMatrix:
    """κ × n matrix over a finite field"""

    field: FieldSpec
    rows: int
    cols: int
    entries: Tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DomainError(f"matrix shape must be nonnegative, got {self.rows}x{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise DomainError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )
        q = self.field.q
        for value in self.entries:
            if not 0 <= value < q:
                raise DomainError(f"entry {value} is not an element code of {self.field}")

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence[int]]) -> "FqMatrix":
        n_rows = len(rows)
        n_cols = len(rows[0]) if rows else 0
        if any(len(row) != n_cols for row in rows):
            raise DomainError("ragged matrix rows")
        return cls(field, n_rows, n_cols, tuple(int(v) for row in rows for v in row))

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> "FqMatrix":
        return cls(field, rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "FqMatrix":
        return cls(field, n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    def get(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> List[List[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "FqMatrix":
        return FqMatrix(
            self.field,
            self.cols,
            self.rows,
            tuple(self.get(i, j) for j in range(self.cols) for i in range(self.rows)),
        )


@dataclass(frozen=True)
class Subspace:
    """Subspace of F_q^n held by its reduced row-echelon basis"""

    field: FieldSpec
    ambient_dim: int
    basis: Tuple[Tuple[int, ...], ...]

    @classmethod
    def span(cls, field: FieldSpec, ambient_dim: int, vectors: Sequence[Sequence[int]]) -> "Subspace":
        for vector in vectors:
            if len(vector) != ambient_dim:
                raise DomainError(f"vector {tuple(vector)} is not in F_{field.q}^{ambient_dim}")
        reduced, _ = rref(field, [list(v) for v in vectors], ambient_dim)
        return cls(field, ambient_dim, tuple(tuple(row) for row in reduced))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def pivots(self) -> Tuple[int, ...]:
        return tuple(next(j for j, v in enumerate(row) if v) for row in self.basis)

    def __str__(self) -> str:
        rows = ", ".join("(" + " ".join(str(v) for v in row) + ")" for row in self.basis)
        return f"<{rows}>" if rows else "<0>"


def rref(field: FieldSpec, rows: List[List[int]], cols: int) -> Tuple[List[List[int]], List[int]]:
    """Reduced row-echelon form of a list of rows

    Args:
        field: Field of the entries
        rows: Rows to reduce (copied)
        cols: Row length

    Returns:
        (nonzero reduced rows, pivot columns)
    """
    work = [list(row) for row in rows]
    pivots: List[int] = []
    rank = 0
    for c in range(cols):
        pivot = next((i for i in range(rank, len(work)) if work[i][c]), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        scale = field.inv(work[rank][c])
        work[rank] = [field.mul(scale, v) for v in work[rank]]
        for i in range(len(work)):
            if i != rank and work[i][c]:
                factor = work[i][c]
                work[i] = [field.sub(a, field.mul(factor, b)) for a, b in zip(work[i], work[rank])]
        pivots.append(c)
        rank += 1
        if rank == len(work):
            break
    return work[:rank], pivots


def matrix_rank(matrix: FqMatrix) -> int:
    """Rank over F_q; 0 for empty matrices"""
    if matrix.rows == 0 or matrix.cols == 0:
        return 0
    _, pivots = rref(matrix.field, matrix.to_rows(), matrix.cols)
    return len(pivots)


def matmul(a: FqMatrix, b: FqMatrix) -> FqMatrix:
    if a.field != b.field:
        raise DomainError(f"field mismatch: {a.field} vs {b.field}")
    if a.cols != b.rows:
        raise DomainError(f"shape mismatch: {a.rows}x{a.cols} times {b.rows}x{b.cols}")
    f = a.field
    entries = []
    for i in range(a.rows):
        for j in range(b.cols):
            total = 0
            for t in range(a.cols):
                total = f.add(total, f.mul(a.get(i, t), b.get(t, j)))
            entries.append(total)
    return FqMatrix(f, a.rows, b.cols, tuple(entries))


def identity(field: FieldSpec, n: int) -> FqMatrix:
    return FqMatrix.identity(field, n)


def is_invertible(matrix: FqMatrix) -> bool:
    return matrix.rows == matrix.cols and matrix_rank(matrix) == matrix.rows


def kernel_subspace(matrix: FqMatrix) -> Subspace:
    """Ker(M) = {x in F_q^n : M x = 0} as a canonical subspace"""
    f = matrix.field
    n = matrix.cols
    if matrix.rows == 0:
        reduced, pivots = [], []
    else:
        reduced, pivots = rref(f, matrix.to_rows(), n)
    free = [j for j in range(n) if j not in pivots]
    vectors = []
    for j in free:
        vector = [0] * n
        vector[j] = 1
        for row, c in zip(reduced, pivots):
            vector[c] = f.neg(row[j])
        vectors.append(vector)
    return Subspace.span(f, n, vectors)
