"""Drifting monomial windows ``{n, ..., n+N_n}`` and the experiments built on them.

A window's span ``M_n`` loses low powers while gaining high ones. With
``rho_n = n / (n + N_n + 1) -> rho`` the distance from a target to ``M_n``
tends to zero exactly for targets supported on ``[rho^2, 1]``; the drivers here
measure that decay, and what a monomial operator does to it, in exact
arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exactnum import SingularMatrixError, as_rational, solve_exact, to_double
from .gram import gram_matrix
from .l2poly import DomainError, Poly, Polynomial, RampTail, IndicatorTail, as_target
from .operators import BUILTIN_OPERATORS, MonomialOperator, apply


@dataclass(frozen=True)
class DriftWindow:
    n: int
    big_n: int

    def __post_init__(self):
        if self.n < 0 or self.big_n < 0:
            raise ValueError(f"window ({self.n}, {self.big_n}) has a negative index")

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(range(self.n, self.n + self.big_n + 1))

    @property
    def rho(self) -> Fraction:
        return rho(self)


def rho(w: DriftWindow) -> Fraction:
    """Density defect ``n / (n + N + 1)``."""
    return Fraction(w.n, w.n + w.big_n + 1)


def _check_rho_target(rho_target) -> Fraction:
    r = as_rational(rho_target)
    if not 0 < r <= 1:
        raise DomainError(f"rho={r} outside (0, 1]")
    return r


def _round_half_away(q: Fraction) -> int:
    # q >= 0 here, so half away from zero is floor(q + 1/2)
    return math.floor(q + Fraction(1, 2)) if q >= 0 else -math.floor(-q + Fraction(1, 2))


def schedule_for_rho(rho_target, n: int) -> DriftWindow:
    """Window whose ``n/(n+N)`` is nearest to ``rho_target``."""
    r = _check_rho_target(rho_target)
    if n < 0:
        raise ValueError("n must be non-negative")
    return DriftWindow(n, _round_half_away(n * (1 - r) / r))


@dataclass(frozen=True)
class WindowSchedule:
    rho_target: Fraction

    def __post_init__(self):
        object.__setattr__(self, "rho_target", _check_rho_target(self.rho_target))

    def rule(self, n: int) -> int:
        return schedule_for_rho(self.rho_target, n).big_n

    def window(self, n: int) -> DriftWindow:
        return schedule_for_rho(self.rho_target, n)


@lru_cache(maxsize=512)
def _project(t, w: DriftWindow) -> tuple[Polynomial, Fraction]:
    exps = w.exponents
    b = [t.moment(k, 1) for k in exps]
    try:
        c = solve_exact(gram_matrix(exps), b)
    except SingularMatrixError as exc:  # pragma: no cover - Gram of distinct monomials
        raise RuntimeError(f"singular Gram matrix for window {w}") from exc
    p = Polynomial(dict(zip(exps, c)))
    dist_sq = t.norm_sq(1) - sum((ci * bi for ci, bi in zip(c, b)), Fraction(0))
    return p, dist_sq


def project(t, w: DriftWindow) -> tuple[Polynomial, Fraction]:
    """Orthogonal projection of ``t`` onto ``span{x^n, ..., x^(n+N)}``.

    Solves the Gram normal equations exactly and returns the projection with
    the squared distance ``|t|^2 - sum c_i <t, x^i>``.
    """
    return _project(as_target(t), w)


def distance_sweep(t, sched: WindowSchedule, n_max: int) -> list[tuple[int, Fraction]]:
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    t = as_target(t)
    return [(n, project(t, sched.window(n))[1]) for n in range(1, n_max + 1)]


def _check_open_rho(r) -> Fraction:
    r = as_rational(r)
    if not 0 < r < 1:
        raise DomainError(f"rho={r} outside (0, 1)")
    return r


def vanishing_preservation_experiment(
    T: MonomialOperator | str, rho_target, n_max: int
) -> list[tuple[int, Fraction, Fraction]]:
    """Project ``chi_[s,1]`` (``s = rho^2``) onto each window, apply ``T`` and
    measure how much of ``T p_n`` lives on ``[0, s]``.

    Returns ``(n, dist_sq, leak_sq)`` per ``n``, where ``leak_sq`` is
    ``int_0^s (T p_n)^2``.
    """
    if isinstance(T, str):
        T = BUILTIN_OPERATORS[T]
    r = _check_open_rho(rho_target)
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    s = r * r
    target = IndicatorTail(s)
    sched = WindowSchedule(r)
    out = []
    for n in range(1, n_max + 1):
        p, dist_sq = project(target, sched.window(n))
        leak_sq = Poly(apply(T, p)).norm_sq(s)
        out.append((n, dist_sq, leak_sq))
    return out


def continuous_case_target(rho_target) -> tuple[Polynomial, Fraction]:
    """``f = ((x - a)^+)^2`` with ``a = rho^2``, as the polynomial ``(x - a)^2`` and ``a``."""
    a = _check_open_rho(rho_target) ** 2
    return Polynomial([-a, 1]) ** 2, a


def grid_sup_error(approx: Polynomial, rho_target, grid_points: int) -> float:
    """``max_i |approx(x_i) - ((x_i - rho^2)^+)^2|`` on the grid ``x_i = i/(grid_points-1)``.

    Each grid value is computed exactly and only the final maximum is rounded,
    so the result does not depend on cancellation between large coefficients.
    """
    if grid_points < 2:
        raise ValueError("grid_points must be >= 2")
    sq, a = continuous_case_target(rho_target)
    d = grid_points - 1
    deg = approx.degree or 0
    # common denominator so Horner runs on integers: L * d^deg * approx(i/d)
    lcm = 1
    for _, c in approx.terms():
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(approx[k] * lcm) for k in range(deg + 1)]
    dpow = [d ** e for e in range(deg + 1)]
    scale = lcm * dpow[deg]
    worst = Fraction(0)
    for i in range(grid_points):
        acc = ints[deg]
        for k in range(deg - 1, -1, -1):
            acc = acc * i + ints[k] * dpow[deg - k]
        x = Fraction(i, d)
        f = sq(x) if x > a else Fraction(0)
        err = abs(Fraction(acc, scale) - f)
        if err > worst:
            worst = err
    return to_double(worst)


def continuous_case_experiment(rho_target, n_max: int,
                               grid_points: int = 1001) -> list[tuple[int, float]]:
    """Approximate ``f = ((x - rho^2)^+)^2`` uniformly by ``V p_n``.

    ``p_n`` is the projection of ``g = f' = 2 (x - rho^2)^+`` onto the window,
    so ``V p_n`` vanishes at 0 and converges to ``f`` in sup norm.
    """
    r = _check_open_rho(rho_target)
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    ramp = RampTail(r * r)
    sched = WindowSchedule(r)
    volterra = BUILTIN_OPERATORS["volterra"]
    out = []
    for n in range(1, n_max + 1):
        p, _ = project(ramp, sched.window(n))
        out.append((n, grid_sup_error(apply(volterra, 2 * p), r, grid_points)))
    return out
