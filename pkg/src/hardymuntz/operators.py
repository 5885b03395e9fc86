"""Monomial operators ``T x^k = c_k x^(k+m)`` acting on polynomials."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .exactnum import to_double
from .l2poly import Polynomial, eval_float, inner_product, random_polynomial


@dataclass(frozen=True)
class MonomialOperator:
    name: str
    order_m: int
    coeff_rule: Callable[[int], Fraction]

    def __post_init__(self):
        if self.order_m < 0:
            raise ValueError(f"operator order must be non-negative, got {self.order_m}")

    def coeff(self, k: int) -> Fraction:
        return Fraction(self.coeff_rule(k))

    def __call__(self, p: Polynomial) -> Polynomial:
        return apply(self, p)


def _reciprocal(k: int) -> Fraction:
    return Fraction(1, k + 1)


def _one(k: int) -> Fraction:
    return Fraction(1)


BUILTIN_OPERATORS = {
    "hardy": MonomialOperator("hardy", 0, _reciprocal),
    # V = M_x H
    "volterra": MonomialOperator("volterra", 1, _reciprocal),
    "mult_x": MonomialOperator("mult_x", 1, _one),
}


def builtin_operator(name: str) -> MonomialOperator:
    try:
        return BUILTIN_OPERATORS[name]
    except KeyError:
        raise KeyError(f"unknown operator {name!r}; choose from "
                       f"{', '.join(BUILTIN_OPERATORS)}") from None


def apply(T: MonomialOperator, p: Polynomial) -> Polynomial:
    return Polynomial({k + T.order_m: a * T.coeff(k) for k, a in p.terms()})


def hardy_identity_terms(p: Polynomial) -> tuple[Fraction, Fraction, Fraction]:
    """The three terms of ``|p|^2 = |(1-H)p|^2 + (int_0^1 p)^2``.

    Returns ``(lhs, contraction_term, integral_sq)``; the caller decides what
    to assert about them.
    """
    residual = p - apply(BUILTIN_OPERATORS["hardy"], p)
    return inner_product(p, p), inner_product(residual, residual), p.integral() ** 2


def rayleigh_quotient(T: MonomialOperator, p: Polynomial) -> Fraction:
    """Exact ``|Tp|^2 / |p|^2``."""
    if p.is_zero:
        raise ZeroDivisionError("Rayleigh quotient of the zero polynomial")
    tp = apply(T, p)
    return inner_product(tp, tp) / inner_product(p, p)


def operator_norm_lower_bound(T: MonomialOperator, max_degree: int, trials: int,
                              seed: int) -> float:
    """Lower bound on ``|T|`` from random polynomial witnesses.

    The constant polynomial is always tried first; each of the ``trials``
    random draws uses its own stream derived from ``(seed, trial)``.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if max_degree < 0:
        raise ValueError("max_degree must be >= 0")
    best = rayleigh_quotient(T, Polynomial.constant(1))
    for t in range(trials):
        p = random_polynomial(random.Random(f"{seed}:{t}"), max_degree)
        best = max(best, rayleigh_quotient(T, p))
    return math.sqrt(to_double(best))


def sup_contraction_check(p: Polynomial, grid_points: int) -> tuple[float, float]:
    """Grid maxima of ``|Hp|`` and ``|p|`` on ``{i/(grid_points-1)}``."""
    if grid_points < 2:
        raise ValueError("grid_points must be >= 2")
    hp = apply(BUILTIN_OPERATORS["hardy"], p)
    xs = [i / (grid_points - 1) for i in range(grid_points)]
    return (max(abs(eval_float(hp, x)) for x in xs),
            max(abs(eval_float(p, x)) for x in xs))
