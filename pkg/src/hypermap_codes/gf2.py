"""Dense GF(2) linear algebra on bit-packed matrices.

Each matrix row is one Python int; bit ``j`` of a row is the entry in
column ``j``.  Vectors are plain ints under the same convention.  All
arithmetic is mod 2 and everything is immutable: row reduction always
works on an internal copy.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class BitMatrix:
    """A rows x cols matrix over GF(2), one int bitmask per row."""

    rows: int
    cols: int
    bits: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "bits", tuple(self.bits))
        if len(self.bits) != self.rows:
            raise ValueError(f"expected {self.rows} row masks, got {len(self.bits)}")
        mask = (1 << self.cols) - 1
        for i, row in enumerate(self.bits):
            if row < 0 or row & ~mask:
                raise ValueError(f"row {i} has bits outside {self.cols} columns")

    def get(self, i: int, j: int) -> int:
        return (self.bits[i] >> j) & 1


def zeros(rows: int, cols: int) -> BitMatrix:
    return BitMatrix(rows, cols, (0,) * rows)


def identity_matrix(n: int) -> BitMatrix:
    return BitMatrix(n, n, tuple(1 << i for i in range(n)))


def from_rows(rows: Sequence[Sequence[int]], cols: int | None = None) -> BitMatrix:
    """Build from explicit 0/1 entries (row-major)."""
    if cols is None:
        cols = len(rows[0]) if rows else 0
    bits = []
    for row in rows:
        if len(row) != cols:
            raise ValueError("ragged rows")
        bits.append(sum(1 << j for j, x in enumerate(row) if x & 1))
    return BitMatrix(len(bits), cols, tuple(bits))


def from_strings(rows: Sequence[str], cols: int | None = None) -> BitMatrix:
    """Build from '0'/'1' row strings, e.g. ["110", "011"]."""
    if cols is None:
        cols = len(rows[0]) if rows else 0
    bits = []
    for row in rows:
        if len(row) != cols or any(c not in "01" for c in row):
            raise ValueError(f"bad matrix row {row!r}")
        bits.append(sum(1 << j for j, c in enumerate(row) if c == "1"))
    return BitMatrix(len(bits), cols, tuple(bits))


def to_strings(m: BitMatrix) -> list[str]:
    return ["".join("1" if (row >> j) & 1 else "0" for j in range(m.cols)) for row in m.bits]


def render(m: BitMatrix) -> str:
    """Newline-separated '0'/'1' rows; the text format used by the CLI."""
    return "\n".join(to_strings(m))


def is_zero(m: BitMatrix) -> bool:
    return all(row == 0 for row in m.bits)


def transpose(m: BitMatrix) -> BitMatrix:
    bits = [0] * m.cols
    for i, row in enumerate(m.bits):
        while row:
            j = (row & -row).bit_length() - 1
            bits[j] |= 1 << i
            row &= row - 1
    return BitMatrix(m.cols, m.rows, tuple(bits))


def multiply(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """Matrix product mod 2."""
    if a.cols != b.rows:
        raise ValueError(f"dimension mismatch: {a.rows}x{a.cols} times {b.rows}x{b.cols}")
    bt = transpose(b)
    bits = []
    for row in a.bits:
        out = 0
        for j, col in enumerate(bt.bits):
            if (row & col).bit_count() & 1:
                out |= 1 << j
        bits.append(out)
    return BitMatrix(a.rows, b.cols, tuple(bits))


def mat_vec(m: BitMatrix, v: int) -> int:
    """Product m*v with v a column vector packed as an int."""
    if v >> m.cols:
        raise ValueError(f"vector has bits outside {m.cols} columns")
    out = 0
    for i, row in enumerate(m.bits):
        if (row & v).bit_count() & 1:
            out |= 1 << i
    return out


def _echelon(bits: Sequence[int], cols: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form; returns (rows, pivot columns)."""
    work = list(bits)
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot_row = next((i for i in range(r, len(work)) if (work[i] >> c) & 1), None)
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        for i in range(len(work)):
            if i != r and (work[i] >> c) & 1:
                work[i] ^= work[r]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return work, pivots


def echelon_form(m: BitMatrix) -> tuple[BitMatrix, tuple[int, ...]]:
    """Reduced row echelon form of ``m`` and its pivot columns."""
    work, pivots = _echelon(m.bits, m.cols)
    return BitMatrix(m.rows, m.cols, tuple(work)), tuple(pivots)


def row_reduce(m: BitMatrix) -> BitMatrix:
    return echelon_form(m)[0]


def rank(m: BitMatrix) -> int:
    return len(_echelon(m.bits, m.cols)[1])


def kernel_basis(m: BitMatrix) -> BitMatrix:
    """Basis of {v : m*v = 0} as rows of a (cols - rank) x cols matrix.

    Deterministic: one basis vector per free column of the reduced row
    echelon form, in increasing column order.  Each vector has a 1 at its
    own free column and nowhere else among the free columns, so any sum
    of t basis vectors has weight at least t.
    """
    work, pivots = _echelon(m.bits, m.cols)
    pivot_set = set(pivots)
    basis = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        v = 1 << f
        for r, c in enumerate(pivots):
            if (work[r] >> f) & 1:
                v |= 1 << c
        basis.append(v)
    return BitMatrix(len(basis), m.cols, tuple(basis))


def in_row_space(m: BitMatrix, v: int) -> bool:
    """True when v is a GF(2) combination of the rows of m."""
    if v >> m.cols:
        raise ValueError(f"vector has bits outside {m.cols} columns")
    work, pivots = _echelon(m.bits, m.cols)
    for r, c in enumerate(pivots):
        if (v >> c) & 1:
            v ^= work[r]
    return v == 0
