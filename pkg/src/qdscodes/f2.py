"""Linear algebra over F2 on bit-packed integers.

A vector is a Python int; bit i is coordinate i.  All routines are pure
and operate on arbitrary widths.
"""

from __future__ import annotations

from collections.abc import Iterable


def parity(x: int) -> int:
    return x.bit_count() & 1


class Basis:
    """Incremental row basis kept in row-echelon form (pivot = highest set bit)."""

    def __init__(self, rows: Iterable[int] = ()):
        self._pivots: dict[int, int] = {}
        for r in rows:
            self.add(r)

    def reduce(self, v: int) -> int:
        """Reduce v against the basis; 0 means v is in the span."""
        while v:
            row = self._pivots.get(v.bit_length() - 1)
            if row is None:
                return v
            v ^= row
        return 0

    def add(self, v: int) -> bool:
        """Insert v; returns True if it enlarged the span."""
        v = self.reduce(v)
        if v == 0:
            return False
        self._pivots[v.bit_length() - 1] = v
        return True

    def contains(self, v: int) -> bool:
        return self.reduce(v) == 0

    def __len__(self) -> int:
        return len(self._pivots)


def rank(rows: Iterable[int]) -> int:
    return len(Basis(rows))


def row_reduce(rows: list[int], width: int) -> tuple[list[int], list[int]]:
    """Reduced row-echelon form.

    Returns (reduced nonzero rows, pivot column per row); columns are
    scanned from bit 0 upward so pivots are the lowest available columns.
    """
    rows = list(rows)
    out: list[int] = []
    pivots: list[int] = []
    for col in range(width):
        mask = 1 << col
        pivot_row = None
        for i, r in enumerate(rows):
            if r & mask:
                pivot_row = rows.pop(i)
                break
        if pivot_row is None:
            continue
        rows = [r ^ pivot_row if r & mask else r for r in rows]
        out = [r ^ pivot_row if r & mask else r for r in out]
        out.append(pivot_row)
        pivots.append(col)
        if not rows:
            break
    return out, pivots


def null_space(rows: list[int], width: int) -> list[int]:
    """Basis of {x in F2^width : parity(row & x) = 0 for every row}."""
    reduced, pivots = row_reduce(rows, width)
    pivot_set = set(pivots)
    free_cols = [c for c in range(width) if c not in pivot_set]
    basis = []
    for f in free_cols:
        v = 1 << f
        for r, p in zip(reduced, pivots):
            if (r >> f) & 1:
                v |= 1 << p
        basis.append(v)
    return basis


def bit_reversed(v: int, width: int) -> int:
    """Key making integer order agree with lexicographic order on bit tuples
    (coordinate 0 read first)."""
    out = 0
    for i in range(width):
        if (v >> i) & 1:
            out |= 1 << (width - 1 - i)
    return out
