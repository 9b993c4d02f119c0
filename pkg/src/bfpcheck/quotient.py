"""Partition quotients of symmetric positive integer matrices.

Given a partition of the index set, the quotient matrix holds the average
row sums of each block, kept as exact rationals.  When every block has a
constant row sum the quotient is equitable and its spectrum embeds into the
spectrum of the original matrix; eigenvectors lift through the partition's
characteristic matrix (``lift_eigenvector``).

Equitability is decided by exact integer comparison, never by a floating
tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .spectral import MinMatrix

__all__ = [
    "RowPartition",
    "QuotientMatrix",
    "three_block_partition",
    "quotient",
    "lift_eigenvector",
]


@dataclass(frozen=True)
class RowPartition:
    """Ordered list of disjoint, non-empty index blocks covering range(size)."""

    blocks: tuple[tuple[int, ...], ...]
    size: int

    def __post_init__(self) -> None:
        blocks = tuple(tuple(int(i) for i in block) for block in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        seen: set[int] = set()
        for block in blocks:
            if not block:
                raise ValueError("partition blocks must be non-empty")
            for i in block:
                if i < 0 or i >= self.size:
                    raise ValueError(f"index {i} outside range(0, {self.size})")
                if i in seen:
                    raise ValueError(f"index {i} appears in two blocks")
                seen.add(i)
        if len(seen) != self.size:
            missing = sorted(set(range(self.size)) - seen)
            raise ValueError(f"partition does not cover indices {missing}")

    @classmethod
    def from_blocks(cls, blocks: Sequence[Sequence[int]]) -> "RowPartition":
        size = sum(len(b) for b in blocks)
        return cls(tuple(tuple(b) for b in blocks), size)

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    def block_of(self, index: int) -> int:
        for b, block in enumerate(self.blocks):
            if index in block:
                return b
        raise KeyError(index)

    def characteristic_matrix(self) -> tuple[tuple[int, ...], ...]:
        """0-1 matrix S with S[i][b] = 1 exactly when index i lies in block b."""
        rows = []
        membership = {}
        for b, block in enumerate(self.blocks):
            for i in block:
                membership[i] = b
        for i in range(self.size):
            rows.append(
                tuple(1 if membership[i] == b else 0 for b in range(self.block_count))
            )
        return tuple(rows)


def three_block_partition(p: int) -> RowPartition:
    """The partition {first index} | {middle indices} | {last index} of range(p)."""
    if p < 3:
        raise ValueError(f"three-block partition needs p >= 3, got {p}")
    return RowPartition.from_blocks([(0,), tuple(range(1, p - 1)), (p - 1,)])


@dataclass(frozen=True)
class QuotientMatrix:
    """Block-average matrix with exact rational entries."""

    entries: tuple[tuple[Fraction, ...], ...]
    equitable: bool
    partition: RowPartition

    @property
    def order(self) -> int:
        return len(self.entries)

    def as_integer_entries(self) -> tuple[tuple[int, ...], ...]:
        """Entries as plain ints; raises if any entry is non-integral."""
        for row in self.entries:
            for value in row:
                if value.denominator != 1:
                    raise ValueError(f"quotient entry {value} is not an integer")
        return tuple(tuple(int(v) for v in row) for row in self.entries)


def _as_int_rows(matrix) -> list[list[int]]:
    if isinstance(matrix, MinMatrix):
        matrix = matrix.entries
    rows = [list(row) for row in matrix]
    for row in rows:
        for v in row:
            if int(v) != v:
                raise ValueError(f"matrix entry {v!r} is not an integer")
    return [[int(v) for v in row] for row in rows]


def quotient(matrix, partition: RowPartition) -> QuotientMatrix:
    """Exact block-average quotient of a symmetric positive integer matrix."""
    rows = _as_int_rows(matrix)
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise ValueError("matrix is not square")
    if partition.size != n:
        raise ValueError(
            f"partition covers {partition.size} indices but matrix has order {n}"
        )
    for i in range(n):
        for j in range(i, n):
            if rows[i][j] != rows[j][i]:
                raise ValueError("matrix is not symmetric")
            if rows[i][j] <= 0:
                raise ValueError(
                    f"matrix entry ({i},{j}) = {rows[i][j]} is not positive; "
                    "quotients are defined here for positive symmetric matrices"
                )
    entries = []
    equitable = True
    for block_i in partition.blocks:
        row_out = []
        for block_j in partition.blocks:
            sums = [sum(rows[r][c] for c in block_j) for r in block_i]
            if any(s != sums[0] for s in sums):
                equitable = False
            row_out.append(Fraction(sum(sums), len(block_i)))
        entries.append(tuple(row_out))
    return QuotientMatrix(tuple(entries), equitable, partition)


def lift_eigenvector(partition: RowPartition, vector: Sequence) -> tuple:
    """Expand a per-block vector to a per-index vector (multiply by S).

    Entry i of the result is the vector entry of the block containing i.
    """
    if len(vector) != partition.block_count:
        raise ValueError(
            f"vector has {len(vector)} entries for {partition.block_count} blocks"
        )
    out = [None] * partition.size
    for b, block in enumerate(partition.blocks):
        for i in block:
            out[i] = vector[b]
    return tuple(out)
