"""Gram matrices of monomials, Cauchy determinants and distances to monomial spans.

Three independent determinant routes are available for a set of exponents:
fraction-free elimination of the Gram matrix, the product formula obtained
from Cauchy's determinant, and :func:`cauchy_determinant` itself evaluated at
``x_i = a_i + 1/2``, ``y_j = -(a_j + 1/2)``.
"""

from __future__ import annotations

import time
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .exactnum import RatMatrix, as_rational, bareiss_determinant, format_rational
from .l2poly import as_target


class ExponentError(ValueError):
    pass


@dataclass(frozen=True)
class ExponentSet:
    """Distinct rational exponents, each greater than -1/2."""

    exponents: tuple

    def __post_init__(self):
        exps = tuple(as_rational(a) for a in self.exponents)
        if len(set(exps)) != len(exps):
            raise ExponentError(f"duplicate exponents in {[str(a) for a in exps]}")
        bad = [a for a in exps if a <= Fraction(-1, 2)]
        if bad:
            raise ExponentError(f"exponents {[str(a) for a in bad]} are not > -1/2")
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def of(cls, exponents) -> "ExponentSet":
        if isinstance(exponents, ExponentSet):
            return exponents
        return cls(tuple(exponents))

    def __len__(self):
        return len(self.exponents)

    def __iter__(self):
        return iter(self.exponents)

    def __contains__(self, a):
        return as_rational(a) in self.exponents

    @property
    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self.exponents)


def gram_matrix(E) -> RatMatrix:
    """``G[i][j] = 1/(a_i + a_j + 1)``."""
    E = ExponentSet.of(E)
    a = E.exponents
    return RatMatrix.from_rows([[1 / (ai + aj + 1) for aj in a] for ai in a])


def cauchy_matrix(xs: Sequence, ys: Sequence) -> RatMatrix:
    xs = [as_rational(x) for x in xs]
    ys = [as_rational(y) for y in ys]
    if len(xs) != len(ys):
        raise ValueError("xs and ys must have the same length")
    for x in xs:
        if x in ys:
            raise ZeroDivisionError(f"pole: x = y = {x}")
    return RatMatrix.from_rows([[1 / (x - y) for y in ys] for x in xs])


def cauchy_determinant(xs: Sequence, ys: Sequence) -> Fraction:
    """Determinant of ``[1/(x_i - y_j)]`` by Cauchy's product formula."""
    xs = [as_rational(x) for x in xs]
    ys = [as_rational(y) for y in ys]
    n = len(xs)
    if n != len(ys) or n == 0:
        raise ValueError("need equal, nonzero numbers of x and y nodes")
    num = Fraction(1)
    for i in range(n):
        for j in range(i):
            num *= (xs[i] - xs[j]) * (ys[j] - ys[i])
    den = Fraction(1)
    for x in xs:
        for y in ys:
            if x == y:
                raise ZeroDivisionError(f"pole: x = y = {x}")
            den *= x - y
    return num / den


def cauchy_nodes(E) -> tuple[list[Fraction], list[Fraction]]:
    """Nodes turning the Cauchy matrix into the Gram matrix of ``x^a``."""
    E = ExponentSet.of(E)
    half = Fraction(1, 2)
    return [a + half for a in E], [-(a + half) for a in E]


def gram_det_closed_form(E) -> Fraction:
    """``prod_{j<i} (a_i - a_j)^2 / prod_{i,j} (a_i + a_j + 1)``."""
    a = ExponentSet.of(E).exponents
    num = Fraction(1)
    for i in range(len(a)):
        for j in range(i):
            num *= (a[i] - a[j]) ** 2
    den = Fraction(1)
    for ai in a:
        for aj in a:
            den *= ai + aj + 1
    return num / den


def bordered_gram_matrix(t, E) -> RatMatrix:
    """Gram matrix of ``[t, x^a_1, ..., x^a_N]`` with ``t`` first."""
    t = as_target(t)
    E = ExponentSet.of(E)
    border = [t.moment(a, 1) for a in E]
    inner = gram_matrix(E).to_rows() if len(E) else []
    rows = [[t.norm_sq(1)] + border]
    rows += [[border[i]] + inner[i] for i in range(len(E))]
    return RatMatrix.from_rows(rows)


def distance_sq_via_gram(t, E) -> Fraction:
    """Squared L2 distance from ``t`` to ``span{x^a : a in E}`` as a ratio of Gram determinants."""
    t = as_target(t)
    E = ExponentSet.of(E)
    if len(E) == 0:
        return t.norm_sq(1)
    return bareiss_determinant(bordered_gram_matrix(t, E)) / bareiss_determinant(gram_matrix(E))


def monomial_distance_sq_closed_form(alpha0, E) -> Fraction:
    """Squared distance from ``x^alpha0`` to ``span{x^a : a in E}``.

    Equal to ``1/(2 alpha0 + 1) * prod (a - alpha0)^2 / (a + alpha0 + 1)^2``.
    If ``alpha0`` is itself in ``E`` the result is 0 and a RuntimeWarning is emitted.
    """
    alpha0 = as_rational(alpha0)
    if alpha0 <= Fraction(-1, 2):
        raise ExponentError(f"alpha0={alpha0} is not > -1/2")
    E = ExponentSet.of(E)
    if alpha0 in E:
        warnings.warn(f"x^{alpha0} lies in the span; distance is 0", RuntimeWarning, stacklevel=2)
        return Fraction(0)
    out = 1 / (2 * alpha0 + 1)
    for a in E:
        out *= (a - alpha0) ** 2 / (a + alpha0 + 1) ** 2
    return out


def float_determinant(M: RatMatrix) -> float:
    """binary64 determinant via LU with partial pivoting (LAPACK getrf)."""
    if M.rows == 0:
        return 1.0
    return float(np.linalg.det(M.to_numpy()))


@dataclass
class ConditioningReport:
    exponents: tuple
    det_closed: Fraction
    det_bareiss: Fraction
    det_cauchy: Fraction
    det_float: float
    rel_err_float: float
    t_exact_ns: int
    t_float_ns: int

    @property
    def exact_paths_agree(self) -> bool:
        return self.det_closed == self.det_bareiss == self.det_cauchy

    def to_dict(self) -> dict:
        # timing fields are wall-clock and not reproducible
        return {
            "exponents": [format_rational(a) for a in self.exponents],
            "det_closed": format_rational(self.det_closed),
            "det_bareiss": format_rational(self.det_bareiss),
            "det_float": self.det_float,
            "rel_err_float": self.rel_err_float,
            "t_exact_ns": self.t_exact_ns,
            "t_float_ns": self.t_float_ns,
        }


def conditioning_report(E) -> ConditioningReport:
    """Exact versus binary64 determinant of the Gram matrix of ``E``."""
    E = ExponentSet.of(E)
    G = gram_matrix(E)
    det_closed = gram_det_closed_form(E)
    det_cauchy = cauchy_determinant(*cauchy_nodes(E)) if len(E) else Fraction(1)

    t0 = time.perf_counter_ns()
    det_bareiss = bareiss_determinant(G)
    t1 = time.perf_counter_ns()
    det_float = float_determinant(G)
    t2 = time.perf_counter_ns()

    # error measured exactly against the exact determinant
    rel_err = abs(Fraction(det_float) - det_bareiss) / abs(det_bareiss)
    return ConditioningReport(
        exponents=E.exponents,
        det_closed=det_closed,
        det_bareiss=det_bareiss,
        det_cauchy=det_cauchy,
        det_float=det_float,
        rel_err_float=float(rel_err),
        t_exact_ns=t1 - t0,
        t_float_ns=t2 - t1,
    )
