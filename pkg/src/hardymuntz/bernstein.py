"""Bernstein basis polynomials and approximants, expanded exactly in the monomial basis."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .exactnum import as_rational
from .l2poly import DomainError, Polynomial


def binomial(n: int, k: int) -> int:
    """``C(n, k)`` by the multiplicative formula."""
    if not 0 <= k <= n:
        return 0
    k = min(k, n - k)
    out = 1
    for i in range(1, k + 1):
        out = out * (n - k + i) // i
    return out


def bernstein_basis(k: int, n: int) -> Polynomial:
    """``C(n,k) x^k (1-x)^(n-k)`` in monomial form."""
    if not 0 <= k <= n:
        raise DomainError(f"basis index k={k} outside [0, {n}]")
    c = binomial(n, k)
    # (1-x)^(n-k) = sum_j (-1)^j C(n-k, j) x^j
    return Polynomial({k + j: (-1) ** j * c * binomial(n - k, j) for j in range(n - k + 1)})


def bernstein_approximant(samples: Sequence, n: int) -> Polynomial:
    """``sum_k samples[k] * b_{k,n}`` where ``samples[k]`` stands for ``f(k/n)``."""
    if n < 0:
        raise DomainError("n must be non-negative")
    if len(samples) != n + 1:
        raise ValueError(f"expected {n + 1} samples for degree {n}, got {len(samples)}")
    out = Polynomial()
    for k, v in enumerate(samples):
        v = as_rational(v)
        if v:
            out = out + bernstein_basis(k, n) * v
    return out


def sample(f, n: int) -> list[Fraction]:
    """Samples ``f(k/n)`` for ``k = 0..n`` (``[f(0)]`` when ``n == 0``)."""
    if n == 0:
        return [as_rational(f(Fraction(0)))]
    return [as_rational(f(Fraction(k, n))) for k in range(n + 1)]


def min_support_degree(p: Polynomial) -> int | None:
    """Lowest power with a nonzero coefficient, or None for the zero polynomial."""
    return min(p.coeffs) if p else None
