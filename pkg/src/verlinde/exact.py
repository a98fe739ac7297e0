"""Exact rational linear algebra: dense matrices and small rank-3 tensors.

Every scalar is a `fractions.Fraction`; nothing in this module ever
rounds.  Rank and inverse questions are answered by plain Gaussian
elimination pivoting on the first nonzero entry, which is all that is
needed over exact rationals.  All values are immutable after
construction, so they are safe to share freely.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

__all__ = [
    "Rational",
    "rat",
    "Matrix",
    "Tensor3",
    "DimensionMismatchError",
    "SingularMatrixError",
    "mat_mul",
    "rank",
    "invert",
]

Rational = Fraction


def rat(x) -> Fraction:
    """Coerce an int or a 'p/q' string to Fraction; Fractions pass through."""
    return x if isinstance(x, Fraction) else Fraction(x)


class DimensionMismatchError(ValueError):
    """Operand shapes do not line up; the message names both shapes."""


class SingularMatrixError(ValueError):
    """A rank-deficient matrix was asked for its inverse; carries the rank."""

    def __init__(self, rank: int, size: int):
        super().__init__(f"singular {size}x{size} matrix (rank {rank})")
        self.rank = rank
        self.size = size


class Matrix:
    """Immutable dense matrix over Fraction, row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Iterable[Iterable], cols: int | None = None):
        rows = tuple(tuple(rat(x) for x in row) for row in entries)
        if rows:
            ncols = len(rows[0])
            if any(len(r) != ncols for r in rows):
                raise DimensionMismatchError("ragged rows in matrix literal")
            if cols is not None and cols != ncols:
                raise DimensionMismatchError(
                    f"declared {cols} columns, rows have {ncols}")
        else:
            ncols = 0 if cols is None else cols
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", ncols)
        object.__setattr__(self, "entries", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i]

    def transpose(self) -> "Matrix":
        return Matrix(
            [[self.entries[i][j] for i in range(self.rows)]
             for j in range(self.cols)],
            cols=self.rows)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionMismatchError(
                f"cannot multiply {self.rows}x{self.cols} by "
                f"{other.rows}x{other.cols}")
        ot = other.transpose()
        return Matrix(
            [[sum(a * b for a, b in zip(row, col)) for col in ot.entries]
             for row in self.entries],
            cols=other.cols)

    def __add__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape:
            raise DimensionMismatchError(
                f"cannot add {self.shape} and {other.shape}")
        return Matrix([[a + b for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self.entries, other.entries)],
                      cols=self.cols)

    def scale(self, c) -> "Matrix":
        c = rat(c)
        return Matrix([[c * x for x in row] for row in self.entries],
                      cols=self.cols)

    def apply(self, vector: Iterable) -> tuple[Fraction, ...]:
        """Matrix times column vector, returned as a tuple."""
        v = tuple(rat(x) for x in vector)
        if len(v) != self.cols:
            raise DimensionMismatchError(
                f"cannot apply {self.rows}x{self.cols} to vector of "
                f"length {len(v)}")
        return tuple(sum(a * b for a, b in zip(row, v))
                     for row in self.entries)

    def rank(self) -> int:
        m = [list(row) for row in self.entries]
        r = 0
        for c in range(self.cols):
            pivot = next((i for i in range(r, self.rows) if m[i][c] != 0),
                         None)
            if pivot is None:
                continue
            m[r], m[pivot] = m[pivot], m[r]
            lead = m[r][c]
            for i in range(r + 1, self.rows):
                if m[i][c]:
                    f = m[i][c] / lead
                    for j in range(c, self.cols):
                        m[i][j] -= f * m[r][j]
            r += 1
            if r == self.rows:
                break
        return r

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise DimensionMismatchError(
                f"cannot invert non-square {self.rows}x{self.cols} matrix")
        n = self.rows
        aug = [list(row) + [Fraction(int(i == j)) for j in range(n)]
               for i, row in enumerate(self.entries)]
        r = 0
        for c in range(n):
            pivot = next((i for i in range(r, n) if aug[i][c] != 0), None)
            if pivot is None:
                continue
            aug[r], aug[pivot] = aug[pivot], aug[r]
            lead = aug[r][c]
            aug[r] = [x / lead for x in aug[r]]
            for i in range(n):
                if i != r and aug[i][c]:
                    f = aug[i][c]
                    aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
            r += 1
        if r < n:
            raise SingularMatrixError(rank=r, size=n)
        return Matrix([row[n:] for row in aug], cols=n)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Matrix)
                and self.shape == other.shape
                and self.entries == other.entries)

    def __hash__(self) -> int:
        return hash((self.shape, self.entries))

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(x) for x in row) + "]"
                         for row in self.entries)
        return f"Matrix([{body}])"


class Tensor3:
    """Immutable dense rank-3 tensor indexed (i, j, k) over Fraction."""

    __slots__ = ("dims", "entries")

    def __init__(self, entries: Iterable[Iterable[Iterable]],
                 dims: tuple[int, int, int] | None = None):
        data = tuple(tuple(tuple(rat(x) for x in fibre) for fibre in plane)
                     for plane in entries)
        if data:
            d1 = len(data)
            d2 = len(data[0])
            d3 = len(data[0][0]) if d2 else 0
        else:
            d1 = d2 = d3 = 0
        if dims is None:
            dims = (d1, d2, d3)
        if (d1, d2, d3) != dims and data:
            raise DimensionMismatchError(
                f"tensor literal has shape {(d1, d2, d3)}, declared {dims}")
        for plane in data:
            if len(plane) != dims[1] or any(len(f) != dims[2] for f in plane):
                raise DimensionMismatchError("ragged tensor literal")
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "entries", data)

    def __setattr__(self, name, value):
        raise AttributeError("Tensor3 is immutable")

    @classmethod
    def zeros(cls, d1: int, d2: int, d3: int) -> "Tensor3":
        return cls([[[0] * d3 for _ in range(d2)] for _ in range(d1)],
                   dims=(d1, d2, d3))

    @classmethod
    def from_dict(cls, dims: tuple[int, int, int], data: dict) -> "Tensor3":
        d1, d2, d3 = dims
        cube = [[[Fraction(0)] * d3 for _ in range(d2)] for _ in range(d1)]
        for (i, j, k), v in data.items():
            if not (0 <= i < d1 and 0 <= j < d2 and 0 <= k < d3):
                raise IndexError(f"tensor index {(i, j, k)} out of {dims}")
            cube[i][j][k] = rat(v)
        return cls(cube, dims=dims)

    def __getitem__(self, ijk: tuple[int, int, int]) -> Fraction:
        i, j, k = ijk
        return self.entries[i][j][k]

    def nonzero(self):
        """Yield ((i, j, k), value) for every nonzero entry, in index order."""
        for i, plane in enumerate(self.entries):
            for j, fibre in enumerate(plane):
                for k, v in enumerate(fibre):
                    if v:
                        yield (i, j, k), v

    def __eq__(self, other) -> bool:
        return (isinstance(other, Tensor3)
                and self.dims == other.dims
                and self.entries == other.entries)

    def __hash__(self) -> int:
        return hash((self.dims, self.entries))

    def __repr__(self) -> str:
        return f"Tensor3(dims={self.dims}, nonzero={list(self.nonzero())})"


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    """Exact matrix product; rejects mismatched shapes."""
    return a @ b


def rank(m: Matrix) -> int:
    """Exact rank by rational Gaussian elimination."""
    return m.rank()


def invert(m: Matrix) -> Matrix:
    """Exact inverse; raises SingularMatrixError carrying the rank."""
    return m.inverse()
