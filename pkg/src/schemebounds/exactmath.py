"""Exact rational scalars and small dense matrices.

Scalars are :class:`fractions.Fraction`, which already keeps every value in
lowest terms with a positive denominator.  Matrices are immutable and
row-major; all linear algebra is done by exact Gauss-Jordan elimination.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator, Sequence, Union

Rational = Fraction
RationalLike = Union[int, Fraction, str]

__all__ = [
    "Rational",
    "RationalMatrix",
    "ShapeError",
    "SingularMatrixError",
    "RationalFormatError",
    "as_rational",
    "rat_cmp",
    "format_rational",
    "parse_rational",
    "mat_mul",
    "mat_inverse",
]


class ShapeError(ValueError):
    """Matrix dimensions are incompatible with the requested operation."""


class SingularMatrixError(ArithmeticError):
    def __init__(self, rank: int, size: int):
        super().__init__(f"matrix is singular: rank {rank} < {size}")
        self.rank = rank
        self.size = size


class RationalFormatError(ValueError):
    """Text is not a rational in canonical ``a`` / ``a/b`` form."""


def as_rational(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def rat_cmp(a: RationalLike, b: RationalLike) -> int:
    """Three-way comparison: -1, 0 or 1."""
    a, b = as_rational(a), as_rational(b)
    return (a > b) - (a < b)


_CANONICAL = re.compile(r"-?(0|[1-9][0-9]*)(/[1-9][0-9]*)?")


def format_rational(x: RationalLike) -> str:
    x = as_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse the canonical text form, rejecting anything non-canonical.

    ``"3/0"``, ``"2/4"``, ``"3/1"``, ``"-0"``, ``"+1"`` and ``"1/-2"`` are all
    rejected so that text and value are in bijection.
    """
    if not isinstance(text, str) or _CANONICAL.fullmatch(text) is None:
        raise RationalFormatError(f"not a canonical rational: {text!r}")
    if text == "-0" or text.startswith("-0/"):
        raise RationalFormatError(f"negative zero is not canonical: {text!r}")
    num_text, _, den_text = text.partition("/")
    num = int(num_text)
    if not den_text:
        return Fraction(num)
    den = int(den_text)
    if den == 1:
        raise RationalFormatError(f"denominator 1 must be omitted: {text!r}")
    if num == 0 or gcd(abs(num), den) != 1:
        raise RationalFormatError(f"fraction not in lowest terms: {text!r}")
    return Fraction(num, den)


class RationalMatrix:
    """Immutable dense matrix of :class:`Fraction` entries.

    Entries are addressed as ``m[i, j]``; ``m.row(i)`` returns a tuple.
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable[RationalLike]):
        entries = tuple(as_rational(e) for e in entries)
        if rows < 0 or cols < 0 or len(entries) != rows * cols:
            raise ShapeError(
                f"{len(entries)} entries cannot fill a {rows}x{cols} matrix"
            )
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("RationalMatrix is immutable")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[RationalLike]]) -> "RationalMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ShapeError("ragged rows")
        return cls(len(rows), ncols, (e for r in rows for e in r))

    @classmethod
    def identity(cls, size: int) -> "RationalMatrix":
        return cls(size, size, (int(i == j) for i in range(size) for j in range(size)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls(rows, cols, [0] * (rows * cols))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"index {key} out of range for {self.rows}x{self.cols}")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple[Fraction, ...]:
        return self.entries[j::self.cols] if self.cols else ()

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def __iter__(self) -> Iterator[tuple[Fraction, ...]]:
        return (self.row(i) for i in range(self.rows))

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        body = ", ".join(
            "[" + ", ".join(format_rational(e) for e in r) + "]" for r in self
        )
        return f"RationalMatrix([{body}])"

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(
            self.cols, self.rows, (self[i, j] for j in range(self.cols) for i in range(self.rows))
        )

    T = property(transpose)

    def scale(self, c: RationalLike) -> "RationalMatrix":
        c = as_rational(c)
        return RationalMatrix(self.rows, self.cols, (c * e for e in self.entries))

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.shape != other.shape:
            raise ShapeError(f"cannot add {self.shape} and {other.shape}")
        return RationalMatrix(
            self.rows, self.cols, (a + b for a, b in zip(self.entries, other.entries))
        )

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        return self + other.scale(-1)

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        return mat_mul(self, other)

    def vecmul(self, v: Sequence[RationalLike]) -> tuple[Fraction, ...]:
        """Row vector times matrix: ``v @ self``."""
        if len(v) != self.rows:
            raise ShapeError(f"vector of length {len(v)} against {self.rows} rows")
        v = [as_rational(x) for x in v]
        return tuple(
            sum((v[i] * self[i, j] for i in range(self.rows)), Fraction(0))
            for j in range(self.cols)
        )

    def inverse(self) -> "RationalMatrix":
        return mat_inverse(self)


def mat_mul(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    if a.cols != b.rows:
        raise ShapeError(f"cannot multiply {a.shape} by {b.shape}")
    bcols = [b.col(j) for j in range(b.cols)]
    out = []
    for i in range(a.rows):
        r = a.row(i)
        for c in bcols:
            out.append(sum((x * y for x, y in zip(r, c)), Fraction(0)))
    return RationalMatrix(a.rows, b.cols, out)


def mat_inverse(a: RationalMatrix) -> RationalMatrix:
    """Exact Gauss-Jordan inverse, pivoting on the first nonzero entry."""
    if not a.is_square:
        raise ShapeError(f"cannot invert non-square {a.shape} matrix")
    n = a.rows
    work = [list(a.row(i)) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    rank = 0
    for col in range(n):
        pivot = next((r for r in range(rank, n) if work[r][col] != 0), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = 1 / work[rank][col]
        work[rank] = [x * inv for x in work[rank]]
        for r in range(n):
            if r != rank and work[r][col] != 0:
                f = work[r][col]
                work[r] = [x - f * y for x, y in zip(work[r], work[rank])]
        rank += 1
    if rank < n:
        raise SingularMatrixError(rank, n)
    return RationalMatrix(n, n, (x for r in work for x in r[n:]))
