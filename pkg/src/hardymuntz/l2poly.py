"""Polynomials and exactly integrable targets on [0, 1].

Every quantity here is an exact rational: inner products use
``<x^i, x^j> = 1/(i+j+1)`` and restricted integrals over ``[0, u]`` use the
power rule. Only :func:`eval_float` leaves exact arithmetic.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .exactnum import as_rational, format_rational


class DomainError(ValueError):
    pass


class CapabilityError(ValueError):
    """A moment was requested that has no exact closed form."""


class Polynomial:
    """Real polynomial with exact rational coefficients, stored sparsely.

    Zero coefficients are never stored, so two polynomials are equal exactly
    when their coefficient maps are equal.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, coeffs: Mapping[int, object] | Iterable = ()):
        if isinstance(coeffs, Mapping):
            items = coeffs.items()
        else:
            items = enumerate(coeffs)
        terms = {}
        for k, c in items:
            k = int(k)
            if k < 0:
                raise ValueError(f"negative degree {k}")
            c = as_rational(c)
            if c:
                terms[k] = terms.get(k, 0) + c
        self._terms = {k: terms[k] for k in sorted(terms) if terms[k]}
        self._hash = None

    @classmethod
    def monomial(cls, k: int, c=1) -> "Polynomial":
        return cls({k: c})

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls({0: c})

    @property
    def coeffs(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def terms(self):
        return self._terms.items()

    def __getitem__(self, k: int) -> Fraction:
        return self._terms.get(k, Fraction(0))

    @property
    def degree(self) -> int | None:
        return max(self._terms) if self._terms else None

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __repr__(self):
        if not self._terms:
            return "Polynomial(0)"
        parts = [f"{c}*x^{k}" if k else f"{c}" for k, c in self._terms.items()]
        return "Polynomial(" + " + ".join(parts) + ")"

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial({k: c * other for k, c in self._terms.items()})
        other = _coerce(other)
        if other is None:
            return NotImplemented
        out: dict[int, Fraction] = {}
        for i, a in self._terms.items():
            for j, b in other._terms.items():
                out[i + j] = out.get(i + j, 0) + a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        out = Polynomial.constant(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __call__(self, x) -> Fraction:
        """Exact evaluation at a rational point."""
        x = as_rational(x)
        if not self._terms:
            return Fraction(0)
        acc = Fraction(0)
        top = self.degree
        for k in range(top, -1, -1):
            acc = acc * x + self._terms.get(k, 0)
        return acc

    def shift(self, m: int) -> "Polynomial":
        """Multiply by ``x**m``."""
        return Polynomial({k + m: c for k, c in self._terms.items()})

    def integral(self) -> Fraction:
        """Integral over [0, 1]."""
        return sum((c / (k + 1) for k, c in self._terms.items()), Fraction(0))

    def to_pairs(self) -> list[tuple[int, str]]:
        return [(k, format_rational(c)) for k, c in self._terms.items()]


def _coerce(value) -> Polynomial | None:
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, (int, Fraction)):
        return Polynomial.constant(value)
    return None


X = Polynomial.monomial(1)


def random_polynomial(rng: random.Random, max_degree: int) -> Polynomial:
    """Random nonzero polynomial of degree at most ``max_degree``.

    Coefficients have numerators uniform in [-9, 9] and denominators in [1, 9].
    Zero draws are redrawn.
    """
    while True:
        deg = rng.randint(0, max_degree)
        p = Polynomial([Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                        for _ in range(deg + 1)])
        if p:
            return p


def polynomial_corpus(seed: int, count: int, max_degree: int) -> list[Polynomial]:
    # one stream per item so any prefix of the corpus is stable
    return [random_polynomial(random.Random(f"{seed}:{i}"), max_degree)
            for i in range(count)]


# ---------------------------------------------------------------------------
# targets


def _check_u(u) -> Fraction:
    u = as_rational(u)
    if not 0 < u <= 1:
        raise DomainError(f"upper limit {u} outside (0, 1]")
    return u


def _check_exponent(k):
    if isinstance(k, int) and not isinstance(k, bool):
        if k < 0:
            raise DomainError(f"negative exponent {k}")
        return k
    k = as_rational(k)
    if k.denominator == 1 and k >= 0:
        return int(k)
    if k <= Fraction(-1, 2):
        raise DomainError(f"exponent {k} gives a monomial outside L2[0,1]")
    return k


def _check_param(v, name) -> Fraction:
    v = as_rational(v)
    if not 0 <= v < 1:
        raise DomainError(f"{name}={v} outside [0, 1)")
    return v


@dataclass(frozen=True)
class Poly:
    poly: Polynomial

    def moment(self, k, u=1) -> Fraction:
        u = _check_u(u)
        k = _check_exponent(k)
        if not isinstance(k, int):
            if u != 1:
                raise CapabilityError("fractional moments only over [0, 1]")
            return sum((c / (j + k + 1) for j, c in self.poly.terms()), Fraction(0))
        return sum((c * u ** (j + k + 1) / (j + k + 1) for j, c in self.poly.terms()),
                   Fraction(0))

    def norm_sq(self, u=1) -> Fraction:
        u = _check_u(u)
        t = list(self.poly.terms())
        return sum((a * b * u ** (i + j + 1) / (i + j + 1) for i, a in t for j, b in t),
                   Fraction(0))

    def value(self, x: float) -> float:
        return eval_float(self.poly, x)


@dataclass(frozen=True)
class IndicatorTail:
    """Characteristic function of [s, 1]."""

    s: Fraction

    def __post_init__(self):
        object.__setattr__(self, "s", _check_param(self.s, "s"))

    def moment(self, k, u=1) -> Fraction:
        u = _check_u(u)
        k = _check_exponent(k)
        if not isinstance(k, int):
            raise CapabilityError("indicator targets have integer moments only")
        if u <= self.s:
            return Fraction(0)
        return (u ** (k + 1) - self.s ** (k + 1)) / (k + 1)

    def norm_sq(self, u=1) -> Fraction:
        u = _check_u(u)
        return max(u - self.s, Fraction(0))

    def value(self, x: float) -> float:
        return 1.0 if x >= self.s else 0.0


@dataclass(frozen=True)
class RampTail:
    """The ramp ``(x - a)^+``."""

    a: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", _check_param(self.a, "a"))

    def moment(self, k, u=1) -> Fraction:
        u = _check_u(u)
        k = _check_exponent(k)
        if not isinstance(k, int):
            raise CapabilityError("ramp targets have integer moments only")
        a = self.a
        if u <= a:
            return Fraction(0)
        # int_a^u (x - a) x^k dx
        return ((u ** (k + 2) - a ** (k + 2)) / (k + 2)
                - a * (u ** (k + 1) - a ** (k + 1)) / (k + 1))

    def norm_sq(self, u=1) -> Fraction:
        u = _check_u(u)
        return (u - self.a) ** 3 / 3 if u > self.a else Fraction(0)

    def value(self, x: float) -> float:
        return max(x - float(self.a), 0.0)


Target = Union[Poly, IndicatorTail, RampTail]


def as_target(t) -> Target:
    if isinstance(t, (Poly, IndicatorTail, RampTail)):
        return t
    if isinstance(t, Polynomial):
        return Poly(t)
    if isinstance(t, (int, Fraction)):
        return Poly(Polynomial.constant(t))
    raise TypeError(f"not a target: {t!r}")


def inner_product(p: Polynomial, q: Polynomial) -> Fraction:
    """L2[0,1] inner product of two real polynomials."""
    return sum((a * b / (i + j + 1) for i, a in p.terms() for j, b in q.terms()),
               Fraction(0))


def moment(t, k, u=1) -> Fraction:
    """Exact ``int_0^u t(x) x^k dx``."""
    return as_target(t).moment(k, u)


def norm_sq(t, u=1) -> Fraction:
    """Exact ``int_0^u t(x)^2 dx``."""
    return as_target(t).norm_sq(u)


def eval_float(p: Polynomial, x: float) -> float:
    """Horner evaluation in binary64 for ``x`` in [0, 1]."""
    if not 0.0 <= x <= 1.0 or math.isnan(x):
        raise DomainError(f"x={x} outside [0, 1]")
    if p.is_zero:
        return 0.0
    acc = 0.0
    for k in range(p.degree, -1, -1):
        acc = acc * x + float(p[k])
    return acc
