"""Dense linear algebra over GF(2) on bit-packed rows.

A vector of length ``n`` is stored as a Python ``int`` whose bit ``j`` is
coordinate ``j``.  Row reduction always picks the lowest available column as
the next pivot, so results are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np


def _bits_from_seq(values: Iterable[int]) -> tuple[int, int]:
    bits = 0
    n = 0
    for j, v in enumerate(values):
        if int(v) % 2:
            bits |= 1 << j
        n = j + 1
    return bits, n


@dataclass(frozen=True)
class F2Vector:
    bits: int
    length: int

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("length must be nonnegative")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError("bits exceed vector length")

    @classmethod
    def from_list(cls, values: Sequence[int]) -> F2Vector:
        return cls(_bits_from_seq(values)[0], len(values))

    @classmethod
    def zero(cls, length: int) -> F2Vector:
        return cls(0, length)

    @classmethod
    def unit(cls, j: int, length: int) -> F2Vector:
        return cls(1 << j, length)

    def to_list(self) -> list[int]:
        return [(self.bits >> j) & 1 for j in range(self.length)]

    def support(self) -> list[int]:
        return [j for j in range(self.length) if (self.bits >> j) & 1]

    def __getitem__(self, j: int) -> int:
        if not 0 <= j < self.length:
            raise IndexError(j)
        return (self.bits >> j) & 1

    def __len__(self) -> int:
        return self.length

    def __add__(self, other: F2Vector) -> F2Vector:
        if self.length != other.length:
            raise ValueError(f"length mismatch: {self.length} != {other.length}")
        return F2Vector(self.bits ^ other.bits, self.length)

    __sub__ = __add__

    def dot(self, other: F2Vector) -> int:
        if self.length != other.length:
            raise ValueError(f"length mismatch: {self.length} != {other.length}")
        return (self.bits & other.bits).bit_count() & 1

    def is_zero(self) -> bool:
        return self.bits == 0

    def __repr__(self) -> str:
        return "F2Vector([" + ",".join(map(str, self.to_list())) + "])"


@dataclass(frozen=True)
class F2Matrix:
    """Matrix over GF(2) stored as a tuple of packed rows."""

    rows: tuple[int, ...]
    ncols: int

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(int(r) for r in self.rows))
        limit = 1 << self.ncols
        for r in self.rows:
            if r < 0 or r >= limit:
                raise ValueError("row exceeds column count")

    @classmethod
    def from_lists(cls, rows: Sequence[Sequence[int]], ncols: int | None = None) -> F2Matrix:
        if ncols is None:
            if not rows:
                raise ValueError("ncols is required for an empty matrix")
            ncols = len(rows[0])
        packed = []
        for row in rows:
            if len(row) != ncols:
                raise ValueError("ragged rows")
            packed.append(_bits_from_seq(row)[0])
        return cls(tuple(packed), ncols)

    @classmethod
    def from_vectors(cls, vectors: Sequence[F2Vector], ncols: int | None = None) -> F2Matrix:
        if ncols is None:
            if not vectors:
                raise ValueError("ncols is required for an empty matrix")
            ncols = vectors[0].length
        for v in vectors:
            if v.length != ncols:
                raise ValueError("vector length mismatch")
        return cls(tuple(v.bits for v in vectors), ncols)

    @classmethod
    def from_array(cls, a) -> F2Matrix:
        a = np.asarray(a)
        if a.ndim != 2:
            raise ValueError("expected a 2-d array")
        return cls.from_lists((a % 2).astype(int).tolist(), a.shape[1])

    @classmethod
    def identity(cls, n: int) -> F2Matrix:
        return cls(tuple(1 << i for i in range(n)), n)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> F2Matrix:
        return cls((0,) * nrows, ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), self.ncols)

    def row(self, i: int) -> F2Vector:
        return F2Vector(self.rows[i], self.ncols)

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.ncols)] for r in self.rows]

    def to_array(self) -> np.ndarray:
        return np.array(self.to_lists(), dtype=np.uint8).reshape(self.nrows, self.ncols)

    def transpose(self) -> F2Matrix:
        cols = [0] * self.ncols
        for i, r in enumerate(self.rows):
            j = 0
            while r:
                if r & 1:
                    cols[j] |= 1 << i
                r >>= 1
                j += 1
        return F2Matrix(tuple(cols), self.nrows)

    def apply(self, v: F2Vector) -> F2Vector:
        """Matrix-vector product ``M v`` with ``v`` a column vector."""
        if v.length != self.ncols:
            raise ValueError("dimension mismatch")
        out = 0
        for i, r in enumerate(self.rows):
            if (r & v.bits).bit_count() & 1:
                out |= 1 << i
        return F2Vector(out, self.nrows)

    def __matmul__(self, other: F2Matrix) -> F2Matrix:
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch")
        out = []
        for r in self.rows:
            acc = 0
            k = 0
            while r:
                if r & 1:
                    acc ^= other.rows[k]
                r >>= 1
                k += 1
            out.append(acc)
        return F2Matrix(tuple(out), other.ncols)

    def stack(self, other: F2Matrix) -> F2Matrix:
        if self.ncols != other.ncols:
            raise ValueError("column mismatch")
        return F2Matrix(self.rows + other.rows, self.ncols)

    def append_row(self, v: F2Vector) -> F2Matrix:
        if v.length != self.ncols:
            raise ValueError("length mismatch")
        return F2Matrix(self.rows + (v.bits,), self.ncols)

    def is_invertible(self) -> bool:
        return self.nrows == self.ncols and rank(self) == self.ncols


def row_reduce(M: F2Matrix) -> tuple[F2Matrix, list[int]]:
    """Reduced row-echelon form and pivot columns.

    Zero rows are kept at the bottom so the shape of ``M`` is preserved.
    """
    rows = list(M.rows)
    pivots: list[int] = []
    top = 0
    for col in range(M.ncols):
        bit = 1 << col
        hit = next((i for i in range(top, len(rows)) if rows[i] & bit), None)
        if hit is None:
            continue
        rows[top], rows[hit] = rows[hit], rows[top]
        prow = rows[top]
        for i in range(len(rows)):
            if i != top and rows[i] & bit:
                rows[i] ^= prow
        pivots.append(col)
        top += 1
        if top == len(rows):
            break
    return F2Matrix(tuple(rows), M.ncols), pivots


class EchelonBasis:
    """Incremental echelon basis keyed by lowest set bit.

    Used as a scratch accumulator inside a single computation; the finished
    result is exported as an immutable :class:`F2Matrix`.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self._rows: dict[int, int] = {}

    def __len__(self) -> int:
        return len(self._rows)

    def reduce(self, bits: int) -> int:
        while bits:
            low = bits & -bits
            row = self._rows.get(low.bit_length() - 1)
            if row is None:
                return bits
            bits ^= row
        return 0

    def add(self, bits: int) -> bool:
        """Insert a row; return True if it enlarged the span."""
        bits = self.reduce(bits)
        if not bits:
            return False
        self._rows[(bits & -bits).bit_length() - 1] = bits
        return True

    def contains(self, bits: int) -> bool:
        return self.reduce(bits) == 0

    def pivots(self) -> list[int]:
        return sorted(self._rows)

    def to_matrix(self) -> F2Matrix:
        """The span as a matrix in reduced row-echelon form."""
        return row_reduce(F2Matrix(tuple(self._rows[p] for p in sorted(self._rows)), self.ncols))[0]


def rank(M: F2Matrix) -> int:
    basis = EchelonBasis(M.ncols)
    for r in M.rows:
        basis.add(r)
    return len(basis)


def in_span(v: F2Vector, M: F2Matrix) -> bool:
    if v.length != M.ncols:
        raise ValueError(f"length mismatch: vector {v.length}, matrix {M.ncols}")
    basis = EchelonBasis(M.ncols)
    for r in M.rows:
        basis.add(r)
    return basis.contains(v.bits)


def kernel(M: F2Matrix) -> F2Matrix:
    """Basis of ``{x : M x = 0}`` as rows of a matrix."""
    reduced, pivots = row_reduce(M)
    free = [j for j in range(M.ncols) if j not in set(pivots)]
    out = []
    for f in free:
        x = 1 << f
        for i, p in enumerate(pivots):
            if (reduced.rows[i] >> f) & 1:
                x |= 1 << p
        out.append(x)
    return F2Matrix(tuple(out), M.ncols)
