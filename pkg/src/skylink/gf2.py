"""Linear algebra over the two-element field.

Matrices are immutable.  Rows are word-packed (one Python int bitmask per
row); matrices over the density threshold also advertise a sorted
column-index view, which is what gets serialized or inspected.
Elimination always works on a fresh packed copy, so callers can share
matrices freely between threads.
"""

from __future__ import annotations

from typing import Iterable, List, Sequence, Tuple

from .errors import IntegrityError

DENSE_MIN_DENSITY = 0.05
DENSE_MAX_COLS = 512


class SparseBitMatrix:
    """A row_count x col_count matrix over GF(2)."""

    __slots__ = ("row_count", "col_count", "_bits", "_index_rows", "_nnz")

    def __init__(self, row_count: int, col_count: int, bits: List[int]):
        if row_count < 0 or col_count < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(bits) != row_count:
            raise ValueError("row count mismatch")
        self.row_count = row_count
        self.col_count = col_count
        self._bits = bits
        self._index_rows = None
        self._nnz = None

    @classmethod
    def zeros(cls, row_count: int, col_count: int) -> "SparseBitMatrix":
        return cls(row_count, col_count, [0] * row_count)

    @classmethod
    def identity(cls, n: int) -> "SparseBitMatrix":
        return cls(n, n, [1 << i for i in range(n)])

    @classmethod
    def from_bit_rows(cls, row_count: int, col_count: int,
                      rows: Sequence[int]) -> "SparseBitMatrix":
        rows = list(rows)
        for r in rows:
            if r < 0 or r >> col_count:
                raise ValueError("column index out of range")
        return cls(row_count, col_count, rows)

    @classmethod
    def from_entries(cls, row_count: int, col_count: int,
                     entries: Iterable[Tuple[int, int]]) -> "SparseBitMatrix":
        rows = [0] * row_count
        for r, c in entries:
            if not (0 <= r < row_count and 0 <= c < col_count):
                raise ValueError(f"entry ({r},{c}) out of range")
            rows[r] ^= 1 << c
        return cls(row_count, col_count, rows)

    def bit_rows(self) -> List[int]:
        """Rows as int bitmasks (fresh list; entries are immutable ints)."""
        return list(self._bits)

    def index_rows(self) -> List[Tuple[int, ...]]:
        """Rows as sorted column-index tuples (computed once, then cached)."""
        if self._index_rows is None:
            self._index_rows = [_bits_to_indices(r) for r in self._bits]
        return self._index_rows

    def entry(self, r: int, c: int) -> int:
        return self._bits[r] >> c & 1

    def nnz(self) -> int:
        if self._nnz is None:
            self._nnz = sum(r.bit_count() for r in self._bits)
        return self._nnz

    def is_dense(self) -> bool:
        """Whether the word-packed form is also the representation of
        record (small or dense matrices), rather than the index-list view
        (large sparse ones)."""
        if self.col_count <= DENSE_MAX_COLS:
            return True
        cells = self.row_count * self.col_count
        return cells > 0 and self.nnz() / cells > DENSE_MIN_DENSITY

    def transpose(self) -> "SparseBitMatrix":
        cols = [0] * self.col_count
        for r, idx in enumerate(self.index_rows()):
            for c in idx:
                cols[c] |= 1 << r
        return SparseBitMatrix(self.col_count, self.row_count, cols)

    def __eq__(self, other):
        if not isinstance(other, SparseBitMatrix):
            return NotImplemented
        return (self.row_count == other.row_count
                and self.col_count == other.col_count
                and self._bits == other._bits)

    def __repr__(self):
        kind = "dense" if self.is_dense() else "sparse"
        return f"SparseBitMatrix({self.row_count}x{self.col_count}, {kind}, nnz={self.nnz()})"


def _bits_to_indices(row: int) -> Tuple[int, ...]:
    idx = []
    while row:
        low = row & -row
        idx.append(low.bit_length() - 1)
        row ^= low
    return tuple(idx)


def rank(m: SparseBitMatrix) -> int:
    """Rank over GF(2); Gaussian elimination with word-packed row XOR.

    Destructive only on an internal copy; the input is never mutated."""
    pivots: List[int] = [0] * m.col_count
    r = 0
    for row in m.bit_rows():
        while row:
            idx = (row & -row).bit_length() - 1
            other = pivots[idx]
            if not other:
                pivots[idx] = row
                r += 1
                break
            row ^= other
    return r


def multiply(a: SparseBitMatrix, b: SparseBitMatrix) -> SparseBitMatrix:
    """Matrix product a*b, rows of the product = row-vector images."""
    if a.col_count != b.row_count:
        raise IntegrityError(
            f"cannot compose {a.row_count}x{a.col_count} with {b.row_count}x{b.col_count}")
    rows_b = b._bits
    out = []
    for idx in a.index_rows():
        acc = 0
        for c in idx:
            acc ^= rows_b[c]
        out.append(acc)
    return SparseBitMatrix(a.row_count, b.col_count, out)


def homology_dims(d_in: SparseBitMatrix, d_out: SparseBitMatrix) -> int:
    """dim ker(d_out) - rank(d_in) for a two-step chain C_prev -> C -> C_next.

    d_in maps into the middle group, d_out maps out of it; both are stored
    with rows indexed by their source basis.  Raises IntegrityError when the
    dimensions disagree or the composite map is nonzero.
    """
    if d_in.col_count != d_out.row_count:
        raise IntegrityError(
            f"chain dimension mismatch: d_in has {d_in.col_count} columns, "
            f"d_out has {d_out.row_count} rows")
    if d_in.row_count and d_out.col_count:
        composite = multiply(d_in, d_out)
        if composite.nnz():
            raise IntegrityError("composite differential is nonzero (d*d != 0)")
    h = d_out.row_count - rank(d_out) - rank(d_in)
    if h < 0:
        raise IntegrityError("negative homology dimension; rank bookkeeping broken")
    return h
