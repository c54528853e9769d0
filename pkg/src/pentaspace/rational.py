"""Exact scalars, plane vectors and a small dense linear solver.

Scalars are :class:`fractions.Fraction` (arbitrary precision, always in
lowest terms with a positive denominator). Nothing in this package touches
floating point.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ParseError, SingularMatrix, ZeroDenominator

Rational = Fraction

_RATIONAL_RE = re.compile(
    r"""
    (?P<sign>[+-]?)
    (?:
        (?P<num>\d+)/(?P<den>\d+)
      | (?P<int>\d*)\.(?P<frac>\d+)
      | (?P<int2>\d+)\.?
    )
    """,
    re.VERBOSE,
)


def rational_from_string(s: str) -> Fraction:
    """Parse ``"p"``, ``"p/q"`` or a terminating decimal such as ``"1.25"``.

    >>> rational_from_string("3/6")
    Fraction(1, 2)
    >>> rational_from_string("1.25")
    Fraction(5, 4)
    """
    m = _RATIONAL_RE.fullmatch(s.strip())
    if m is None:
        raise ParseError(f"not a rational number: {s!r}")
    sign = -1 if m["sign"] == "-" else 1
    if m["num"] is not None:
        den = int(m["den"])
        if den == 0:
            raise ZeroDenominator(f"zero denominator in {s!r}")
        return sign * Fraction(int(m["num"]), den)
    if m["frac"] is not None:
        digits = m["frac"]
        whole = int(m["int"] or "0")
        return sign * (whole + Fraction(int(digits), 10 ** len(digits)))
    return sign * Fraction(int(m["int2"]))


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return rational_from_string(value)
    if isinstance(value, float):
        # the decimal the user typed, not its binary approximation
        return rational_from_string(repr(value))
    return Fraction(value)


def canonical(value) -> Fraction | int:
    """Exact value as a plain ``int`` when integral, else a Fraction.

    Python ints are rationals (they carry ``numerator``/``denominator``) and
    are far cheaper than Fractions in the lattice-heavy loops. Callers must
    never divide two canonical values with ``/`` without a Fraction operand.
    """
    if type(value) is int:
        return value
    q = as_rational(value)
    return q.numerator if q.denominator == 1 else q


def format_rational(q) -> str:
    """Lossless text form: ``"p/q"``, or ``"p"`` when integral."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True, order=True)
class Vec2:
    """A point or direction in the (d1, d2) plane with rational coordinates."""

    x: Fraction | int
    y: Fraction | int

    def __post_init__(self):
        if type(self.x) is not int:
            object.__setattr__(self, "x", canonical(self.x))
        if type(self.y) is not int:
            object.__setattr__(self, "y", canonical(self.y))

    def __add__(self, other: Vec2) -> Vec2:
        return Vec2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Vec2) -> Vec2:
        return Vec2(self.x - other.x, self.y - other.y)

    def __mul__(self, t) -> Vec2:
        return Vec2(self.x * t, self.y * t)

    __rmul__ = __mul__

    def cross(self, other: Vec2) -> Fraction:
        return self.x * other.y - self.y * other.x

    def dot(self, other: Vec2) -> Fraction:
        return self.x * other.x + self.y * other.y

    @property
    def is_integral(self) -> bool:
        return self.x.denominator == 1 and self.y.denominator == 1

    def __iter__(self):
        yield self.x
        yield self.y

    def __repr__(self):
        return f"Vec2({format_rational(self.x)}, {format_rational(self.y)})"


class Matrix:
    """Dense rectangular matrix of Fractions; shape fixed at construction."""

    __slots__ = ("_rows", "shape")

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(as_rational(v) for v in row) for row in rows)
        if not rows or not rows[0]:
            raise ValueError("matrix must have at least one row and column")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        self._rows = rows
        self.shape = (len(rows), ncols)

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @property
    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def __matmul__(self, x: Sequence) -> list[Fraction]:
        if len(x) != self.shape[1]:
            raise ValueError("dimension mismatch")
        return [sum((a * b for a, b in zip(row, x)), Fraction(0)) for row in self._rows]

    def __eq__(self, other):
        return isinstance(other, Matrix) and self._rows == other._rows

    def __repr__(self):
        return f"Matrix({self.shape[0]}x{self.shape[1]})"


def solve_exact(A: Matrix, b: Sequence) -> list[Fraction]:
    """Solve ``A x = b`` exactly by Gaussian elimination and back substitution.

    Any nonzero entry is a safe pivot in exact arithmetic; the first one
    found in the column is used. Raises :class:`SingularMatrix` when a
    column has no nonzero pivot.
    """
    n, m = A.shape
    if n != m:
        raise ValueError(f"matrix must be square, got {n}x{m}")
    if len(b) != n:
        raise ValueError("right-hand side has the wrong length")
    aug = [list(row) + [as_rational(v)] for row, v in zip(A.rows, b)]

    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise SingularMatrix(f"no nonzero pivot in column {col}")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        prow = aug[col]
        p = prow[col]
        for r in range(col + 1, n):
            row = aug[r]
            if row[col] != 0:
                f = row[col] / p
                for j in range(col, n + 1):
                    row[j] -= f * prow[j]

    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        row = aug[i]
        acc = row[n]
        for j in range(i + 1, n):
            if row[j]:
                acc -= row[j] * x[j]
        x[i] = acc / row[i]
    return x


def _integer_row(row: Sequence) -> list[int]:
    q = [as_rational(v) for v in row]
    den = math.lcm(*(v.denominator for v in q))
    return [int(v * den) for v in q]


def independent_rows(rows: Iterable[Sequence], limit: int | None = None) -> list[int]:
    """Indices of a greedy maximal linearly independent subset of ``rows``.

    Rows are taken in order; a row is kept when it is not in the span of the
    rows kept before it. Stops early once ``limit`` rows are kept. Works
    fraction-free on integer-scaled rows.
    """
    basis: list[tuple[int, list[int]]] = []  # (pivot column, echelon row)
    kept: list[int] = []
    for idx, row in enumerate(rows):
        v = _integer_row(row)
        for pcol, brow in basis:
            f = v[pcol]
            if f:
                p = brow[pcol]
                v = [p * x - f * y for x, y in zip(v, brow)]
                g = math.gcd(*v)
                if g > 1:
                    v = [x // g for x in v]
        pcol = next((j for j, x in enumerate(v) if x), None)
        if pcol is None:
            continue
        basis.append((pcol, v))
        kept.append(idx)
        if limit is not None and len(kept) == limit:
            break
    return kept
