"""Exact linear algebra over the rationals and prime fields.

Copyright (c) 2026 The nabelian developers
SPDX-License-Identifier: MIT
See LICENSE for details.

All module maps act on row vectors, so a matrix A of shape r x c sends a
row vector x of length r to ``x A``. Kernels are left kernels and ``solve``
finds X with ``X A = B``.
"""

import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple, Union

from .errors import NabelianError, ShapeError

Scalar = Union[int, Fraction]

__all__ = [
    "FieldKind",
    "FieldSpec",
    "ExactMatrix",
    "RrefResult",
    "rref",
    "rank",
    "kernel_basis",
    "solve",
    "inverse",
    "row_space",
    "is_prime",
]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class FieldKind(Enum):
    RATIONALS = "Q"
    PRIME = "F"


@dataclass(frozen=True)
class FieldSpec:
    """The ground field: Q, or F_p for a prime p below 2**31."""

    kind: FieldKind
    characteristic: int = 0

    def __post_init__(self) -> None:
        if self.kind is FieldKind.RATIONALS:
            if self.characteristic != 0:
                raise NabelianError("the rationals have characteristic 0")
        elif not (is_prime(self.characteristic) and self.characteristic < 2**31):
            raise NabelianError(
                f"characteristic {self.characteristic} is not a prime below 2^31"
            )

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(FieldKind.RATIONALS, 0)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(FieldKind.PRIME, p)

    @property
    def label(self) -> str:
        if self.kind is FieldKind.RATIONALS:
            return "Q"
        return f"F{self.characteristic}"

    @property
    def zero(self) -> Scalar:
        return Fraction(0) if self.characteristic == 0 else 0

    @property
    def one(self) -> Scalar:
        return Fraction(1) if self.characteristic == 0 else 1

    def coerce(self, value: Union[int, str, Fraction]) -> Scalar:
        """Bring an int, Fraction or ``num/den`` string into canonical form."""
        if isinstance(value, bool) or isinstance(value, float):
            raise TypeError(f"cannot use {value!r} as an exact scalar")
        if isinstance(value, str):
            value = Fraction(value.strip())
        if self.characteristic == 0:
            return Fraction(value)
        p = self.characteristic
        if isinstance(value, Fraction):
            if value.denominator % p == 0:
                raise NabelianError(f"{value} has no image in F{p}")
            return value.numerator * pow(value.denominator, p - 2, p) % p
        return int(value) % p

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        if self.characteristic:
            return (a + b) % self.characteristic
        return a + b

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        if self.characteristic:
            return (a - b) % self.characteristic
        return a - b

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        if self.characteristic:
            return (a * b) % self.characteristic
        return a * b

    def neg(self, a: Scalar) -> Scalar:
        if self.characteristic:
            return (-a) % self.characteristic
        return -a

    def inv(self, a: Scalar) -> Scalar:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        if self.characteristic:
            # Fermat: a^(p-2) = a^-1 mod p
            return pow(a, self.characteristic - 2, self.characteristic)
        return 1 / Fraction(a)

    def random_element(self, rng: random.Random, spread: int = 2) -> Scalar:
        if self.characteristic:
            return rng.randrange(self.characteristic)
        return Fraction(rng.randint(-spread, spread))

    def format(self, a: Scalar) -> str:
        return str(a)


@dataclass(frozen=True)
class ExactMatrix:
    """Dense immutable matrix with entries stored row-major."""

    field: FieldSpec
    rows: int
    cols: int
    entries: Tuple[Scalar, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ShapeError("negative matrix dimension")
        if len(self.entries) != self.rows * self.cols:
            raise ShapeError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )

    @classmethod
    def from_rows(
        cls,
        field: FieldSpec,
        rows: Sequence[Sequence[Union[int, str, Fraction]]],
        cols: Optional[int] = None,
    ) -> "ExactMatrix":
        if cols is None:
            cols = len(rows[0]) if rows else 0
        entries: List[Scalar] = []
        for row in rows:
            if len(row) != cols:
                raise ShapeError(f"row of length {len(row)} in a matrix with {cols} columns")
            entries.extend(field.coerce(x) for x in row)
        return cls(field, len(rows), cols, tuple(entries))

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> "ExactMatrix":
        return cls(field, rows, cols, (field.zero,) * (rows * cols))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "ExactMatrix":
        entries = [field.zero] * (n * n)
        for i in range(n):
            entries[i * n + i] = field.one
        return cls(field, n, n, tuple(entries))

    @classmethod
    def hstack(cls, field: FieldSpec, rows: int, blocks: Sequence["ExactMatrix"]) -> "ExactMatrix":
        out: List[List[Scalar]] = [[] for _ in range(rows)]
        for block in blocks:
            if block.rows != rows:
                raise ShapeError("hstack blocks must have equal row counts")
            for i, row in enumerate(block.rows_list()):
                out[i].extend(row)
        cols = sum(block.cols for block in blocks)
        return cls.from_rows(field, out, cols)

    @classmethod
    def vstack(cls, field: FieldSpec, cols: int, blocks: Sequence["ExactMatrix"]) -> "ExactMatrix":
        entries: List[Scalar] = []
        rows = 0
        for block in blocks:
            if block.cols != cols:
                raise ShapeError("vstack blocks must have equal column counts")
            entries.extend(block.entries)
            rows += block.rows
        return cls(field, rows, cols, tuple(entries))

    @classmethod
    def block_diagonal(cls, field: FieldSpec, blocks: Sequence["ExactMatrix"]) -> "ExactMatrix":
        rows = sum(b.rows for b in blocks)
        cols = sum(b.cols for b in blocks)
        out = [[field.zero] * cols for _ in range(rows)]
        r0 = c0 = 0
        for b in blocks:
            for i, row in enumerate(b.rows_list()):
                out[r0 + i][c0 : c0 + b.cols] = row
            r0 += b.rows
            c0 += b.cols
        return cls.from_rows(field, out, cols)

    def __getitem__(self, index: Tuple[int, int]) -> Scalar:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Tuple[Scalar, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def rows_list(self) -> List[List[Scalar]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)

    def transpose(self) -> "ExactMatrix":
        entries = tuple(
            self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)
        )
        return ExactMatrix(self.field, self.cols, self.rows, entries)

    def select_rows(self, indices: Iterable[int]) -> "ExactMatrix":
        rows = [self.row(i) for i in indices]
        return ExactMatrix.from_rows(self.field, rows, self.cols)

    def select_cols(self, indices: Iterable[int]) -> "ExactMatrix":
        idx = list(indices)
        rows = [[self[i, j] for j in idx] for i in range(self.rows)]
        return ExactMatrix.from_rows(self.field, rows, len(idx))

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        F = self.field
        out: List[Scalar] = []
        other_cols = [other.entries[j :: other.cols] if other.cols else () for j in range(other.cols)]
        for i in range(self.rows):
            row = self.row(i)
            for col in other_cols:
                acc = F.zero
                for a, b in zip(row, col):
                    if a != 0 and b != 0:
                        acc = F.add(acc, F.mul(a, b))
                out.append(acc)
        return ExactMatrix(F, self.rows, other.cols, tuple(out))

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.shape != other.shape:
            raise ShapeError(f"cannot add {self.shape} and {other.shape}")
        F = self.field
        return ExactMatrix(F, self.rows, self.cols, tuple(F.add(a, b) for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.shape != other.shape:
            raise ShapeError(f"cannot subtract {other.shape} from {self.shape}")
        F = self.field
        return ExactMatrix(F, self.rows, self.cols, tuple(F.sub(a, b) for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "ExactMatrix":
        return self.scale(self.field.neg(self.field.one))

    def scale(self, c: Scalar) -> "ExactMatrix":
        F = self.field
        return ExactMatrix(F, self.rows, self.cols, tuple(F.mul(c, a) for a in self.entries))

    def to_json(self) -> List[List[str]]:
        return [[self.field.format(x) for x in row] for row in self.rows_list()]


class RrefResult(NamedTuple):
    matrix: ExactMatrix
    pivots: Tuple[int, ...]
    rank: int


def _eliminate(field: FieldSpec, rows: List[List[Scalar]], ncols: int) -> List[int]:
    """Gauss-Jordan elimination in place; returns pivot columns."""
    pivots: List[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        pivot = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = field.inv(rows[r][c])
        rows[r] = [field.mul(x, inv) for x in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [
                    field.sub(x, field.mul(factor, y)) if y != 0 else x
                    for x, y in zip(rows[i], prow)
                ]
        pivots.append(c)
        r += 1
    return pivots


def rref(A: ExactMatrix) -> RrefResult:
    rows = A.rows_list()
    pivots = _eliminate(A.field, rows, A.cols)
    R = ExactMatrix.from_rows(A.field, rows, A.cols)
    return RrefResult(R, tuple(pivots), len(pivots))


def rank(A: ExactMatrix) -> int:
    if A.rows == 0 or A.cols == 0:
        return 0
    return rref(A).rank


def row_space(A: ExactMatrix) -> ExactMatrix:
    """Basis of the row space of A in reduced echelon form."""
    R, _, r = rref(A)
    return R.select_rows(range(r))


def kernel_basis(A: ExactMatrix) -> ExactMatrix:
    """Rows form the RREF basis of the left kernel {x : x A = 0}."""
    F = A.field
    n = A.rows
    if A.cols == 0 or A.is_zero():
        return ExactMatrix.identity(F, n)
    T = A.transpose()
    R, pivots, _ = rref(T)
    pivot_set = set(pivots)
    vectors = []
    for free in range(n):
        if free in pivot_set:
            continue
        v = [F.zero] * n
        v[free] = F.one
        for k, p in enumerate(pivots):
            v[p] = F.neg(R[k, free])
        vectors.append(v)
    if not vectors:
        return ExactMatrix.zeros(F, 0, n)
    return row_space(ExactMatrix.from_rows(F, vectors, n))


def solve(A: ExactMatrix, B: ExactMatrix) -> Optional[ExactMatrix]:
    """One X with X A = B, or None; free variables are set to zero."""
    if A.cols != B.cols or A.field != B.field:
        raise ShapeError(f"cannot solve X*{A.shape} = {B.shape}")
    F = A.field
    k, m = A.rows, B.rows
    if m == 0:
        return ExactMatrix.zeros(F, 0, k)
    aug = ExactMatrix.hstack(F, A.cols, [A.transpose(), B.transpose()])
    rows = aug.rows_list()
    pivots = _eliminate(F, rows, k + m)
    if any(p >= k for p in pivots):
        return None
    X = [[F.zero] * k for _ in range(m)]
    for r, p in enumerate(pivots):
        for j in range(m):
            X[j][p] = rows[r][k + j]
    return ExactMatrix.from_rows(F, X, k)


def inverse(A: ExactMatrix) -> Optional[ExactMatrix]:
    if A.rows != A.cols:
        raise ShapeError(f"{A.shape} matrix has no inverse")
    if rank(A) != A.rows:
        return None
    return solve(A, ExactMatrix.identity(A.field, A.rows))
