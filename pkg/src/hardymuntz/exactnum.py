"""Exact rational scalars and dense rational matrices.

Scalars are :class:`fractions.Fraction`, which already keeps the canonical
form (positive denominator, reduced by gcd) after every operation. Matrices
are small immutable row-major containers; determinants and solves go through
fraction-free (Bareiss) elimination on an integer-scaled copy.
"""

from __future__ import annotations

import math
import re
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


class DimensionError(ValueError):
    pass


class SingularMatrixError(ArithmeticError):
    pass


def make_rational(num: int, den: int = 1) -> Fraction:
    """Return ``num/den`` in canonical form. Raises ZeroDivisionError for ``den == 0``."""
    if den == 0:
        raise ZeroDivisionError(f"zero denominator in {num}/{den}")
    return Fraction(num, den)


def as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def format_rational(r: Fraction) -> str:
    """Serialize as ``"num/den"``; integers keep the ``/1``."""
    r = as_rational(r)
    return f"{r.numerator}/{r.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse ``"num/den"`` or a bare integer. Decimal and float notation is rejected."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"malformed rational {text!r}; expected 'num/den'")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    return make_rational(num, den)


def to_double(r: Fraction) -> float:
    """Nearest binary64 to ``r``.

    Values beyond the binary64 range come back as a signed infinity and a
    RuntimeWarning is emitted; overflow is never silent.
    """
    r = as_rational(r)
    try:
        return r.numerator / r.denominator
    except OverflowError:
        warnings.warn(f"rational with {r.numerator.bit_length()}-bit numerator "
                      "overflows binary64", RuntimeWarning, stacklevel=2)
        return math.inf if r > 0 else -math.inf


@dataclass(frozen=True)
class RatMatrix:
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionError("matrix dimensions must be non-negative")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix")
        object.__setattr__(self, "entries", tuple(as_rational(e) for e in self.entries))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "RatMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionError("ragged rows")
        return cls(len(rows), ncols, tuple(e for r in rows for e in r))

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls(n, n, tuple(Fraction(int(i == j)) for i in range(n) for j in range(n)))

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "RatMatrix":
        return RatMatrix.from_rows([[self[i, j] for i in range(self.rows)]
                                    for j in range(self.cols)]) if self.rows else self

    def matvec(self, x: Sequence) -> list[Fraction]:
        if len(x) != self.cols:
            raise DimensionError(f"vector of length {len(x)} for {self.cols} columns")
        return [sum((a * b for a, b in zip(self.row(i), x)), Fraction(0))
                for i in range(self.rows)]

    def to_numpy(self):
        import numpy as np

        return np.array([[float(e) for e in self.row(i)] for i in range(self.rows)],
                        dtype=np.float64).reshape(self.rows, self.cols)


def _integer_rows(rows: Iterable[Sequence[Fraction]]) -> tuple[list[list[int]], int]:
    """Scale each row by the lcm of its denominators.

    Returns the integer rows and the product of the scale factors.
    """
    out = []
    scale = 1
    for r in rows:
        lcm = 1
        for e in r:
            lcm = lcm * e.denominator // math.gcd(lcm, e.denominator)
        out.append([e.numerator * (lcm // e.denominator) for e in r])
        scale *= lcm
    return out, scale


def _bareiss_forward(m: list[list[int]], ncols_pivot: int) -> tuple[int, bool]:
    """In-place fraction-free forward elimination over the first ``ncols_pivot`` columns.

    Returns ``(sign, full_rank)``. Pivot is the first nonzero entry at or below
    the diagonal; every division is exact.
    """
    n = len(m)
    width = len(m[0]) if n else 0
    sign = 1
    prev = 1
    for k in range(ncols_pivot):
        p = next((i for i in range(k, n) if m[i][k] != 0), None)
        if p is None:
            return sign, False
        if p != k:
            m[k], m[p] = m[p], m[k]
            sign = -sign
        pivot = m[k][k]
        rk = m[k]
        for i in range(k + 1, n):
            ri = m[i]
            lead = ri[k]
            for j in range(k + 1, width):
                ri[j] = (pivot * ri[j] - lead * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    return sign, True


def bareiss_determinant(M: RatMatrix) -> Fraction:
    """Exact determinant by fraction-free elimination. The 0x0 determinant is 1."""
    if not M.is_square:
        raise DimensionError(f"determinant of a non-square {M.rows}x{M.cols} matrix")
    n = M.rows
    if n == 0:
        return Fraction(1)
    m, scale = _integer_rows(M.row(i) for i in range(n))
    sign, full = _bareiss_forward(m, n)
    if not full:
        return Fraction(0)
    return Fraction(sign * m[n - 1][n - 1], scale)


def solve_exact(A: RatMatrix, b: Sequence) -> list[Fraction]:
    """Solve ``A x = b`` exactly for square nonsingular ``A``.

    The solution is checked by exact substitution before it is returned.
    """
    if not A.is_square:
        raise DimensionError(f"solve with a non-square {A.rows}x{A.cols} matrix")
    n = A.rows
    if len(b) != n:
        raise DimensionError(f"right-hand side of length {len(b)} for {n} rows")
    b = [as_rational(v) for v in b]
    m, _ = _integer_rows(list(A.row(i)) + [b[i]] for i in range(n))
    _, full = _bareiss_forward(m, n)
    if not full:
        raise SingularMatrixError("matrix is singular")
    x = [Fraction(0)] * n
    for k in range(n - 1, -1, -1):
        rk = m[k]
        acc = Fraction(rk[n]) - sum((rk[j] * x[j] for j in range(k + 1, n)), Fraction(0))
        x[k] = acc / rk[k]
    if A.matvec(x) != b:
        raise ArithmeticError("exact back-substitution check failed")
    return x
