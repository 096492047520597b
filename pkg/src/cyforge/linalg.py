"""Exact rational linear algebra on sparse rows.

Vectors are dicts column-index -> Fraction with no explicit zeros.  Small and
deliberately simple: the engine's matrices are graded slices with at most a
few thousand columns.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

SparseRow = dict[int, Fraction]


def _eliminate(row: SparseRow, pivots: dict[int, SparseRow]) -> SparseRow:
    """Reduce ``row`` until its leading column carries no pivot."""
    row = dict(row)
    while row:
        lead = min(row)
        pivot = pivots.get(lead)
        if pivot is None:
            return row
        factor = row[lead]
        for col, val in pivot.items():
            new = row.get(col, Fraction(0)) - factor * val
            if new:
                row[col] = new
            else:
                row.pop(col, None)
    return row


class Echelon:
    """Incremental row-echelon form over the rationals."""

    def __init__(self) -> None:
        self.pivots: dict[int, SparseRow] = {}

    def add(self, row: SparseRow) -> bool:
        """Insert a row; returns True when it enlarged the row space."""
        reduced = _eliminate(row, self.pivots)
        if not reduced:
            return False
        lead = min(reduced)
        inv = Fraction(1) / reduced[lead]
        self.pivots[lead] = {c: v * inv for c, v in reduced.items()}
        return True

    def contains(self, row: SparseRow) -> bool:
        return not _eliminate(row, self.pivots)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def pivot_columns(self) -> set[int]:
        return set(self.pivots)


def rank(rows: Iterable[SparseRow]) -> int:
    ech = Echelon()
    for row in rows:
        ech.add(row)
    return ech.rank


def kernel_dimension(rows: list[SparseRow], ncols: int) -> int:
    """Kernel dimension of the matrix with the given rows and ncols columns."""
    return ncols - rank(rows)
