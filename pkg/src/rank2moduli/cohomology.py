"""Invariant cohomology ring of the moduli space M_g.

Classes are polynomials in alpha, beta, gamma (complex degrees 1, 2, 3)
truncated above the top weight ``3g - 3``.  Top-degree classes are
evaluated with Thaddeus' Bernoulli-number formula for the intersection
pairings.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, NamedTuple

from . import numeric
from .numeric import PowerSeries, spread_even

__all__ = [
    "GenusContext",
    "Monomial",
    "CohClass",
    "ContextMismatchError",
    "monomials_of_weight",
    "monomials_up_to",
    "intersection_number",
    "evaluate",
    "pairing",
    "cup",
    "add",
    "scale",
    "is_zero_in_cohomology",
    "gamma_reduce",
    "i_coefficient",
    "i_series",
    "ode_residual",
    "format_class",
]


@dataclass(frozen=True)
class GenusContext:
    g: int
    precision: int = 128

    def __post_init__(self):
        if self.g < 2:
            raise ValueError(f"genus must be at least 2, got {self.g}")
        if self.precision < 64:
            raise ValueError(f"precision must be at least 64 bits, got {self.precision}")

    @property
    def h(self) -> int:
        return self.g - 1

    @property
    def top_weight(self) -> int:
        return 3 * self.g - 3


class Monomial(NamedTuple):
    """alpha**m * beta**n * gamma**p"""

    m: int
    n: int
    p: int

    @property
    def weight(self) -> int:
        return self.m + 2 * self.n + 3 * self.p

    def __mul__(self, other: "Monomial") -> "Monomial":  # type: ignore[override]
        return Monomial(self.m + other.m, self.n + other.n, self.p + other.p)


@lru_cache(maxsize=None)
def monomials_of_weight(w: int) -> tuple[Monomial, ...]:
    out = []
    for p in range(w // 3 + 1):
        for n in range((w - 3 * p) // 2 + 1):
            out.append(Monomial(w - 3 * p - 2 * n, n, p))
    return tuple(out)


def monomials_up_to(w: int) -> Iterator[Monomial]:
    for k in range(w + 1):
        yield from monomials_of_weight(k)


class ContextMismatchError(ValueError):
    pass


class CohClass:
    """Immutable truncated polynomial in alpha, beta, gamma over Q."""

    __slots__ = ("context", "_terms", "_hash")

    def __init__(self, context: GenusContext, terms: Mapping | Iterable = ()):
        top = context.top_weight
        clean: dict[Monomial, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, c in items:
            mono = Monomial(*mono)
            if min(mono) < 0:
                raise ValueError(f"negative exponent in {mono}")
            if mono.weight > top:
                continue
            c = clean.get(mono, Fraction(0)) + Fraction(c)
            if c:
                clean[mono] = c
            else:
                clean.pop(mono, None)
        self.context = context
        self._terms = MappingProxyType(clean)
        self._hash = None

    @classmethod
    def scalar(cls, ctx: GenusContext, r) -> "CohClass":
        return cls(ctx, {Monomial(0, 0, 0): r})

    @classmethod
    def monomial(cls, ctx: GenusContext, m: int, n: int = 0, p: int = 0, coeff=1) -> "CohClass":
        return cls(ctx, {Monomial(m, n, p): coeff})

    @classmethod
    def alpha(cls, ctx):
        return cls.monomial(ctx, 1, 0, 0)

    @classmethod
    def beta(cls, ctx):
        return cls.monomial(ctx, 0, 1, 0)

    @classmethod
    def gamma(cls, ctx):
        return cls.monomial(ctx, 0, 0, 1)

    @classmethod
    def from_beta_series(cls, ctx: GenusContext, series: PowerSeries, scale=1) -> "CohClass":
        """Substitute ``x = scale * beta`` into a series indexed by x."""
        scale = Fraction(scale)
        return cls(ctx, {Monomial(0, j, 0): c * scale**j for j, c in enumerate(series.coeffs)})

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return self._terms

    def coefficient(self, m: int, n: int = 0, p: int = 0) -> Fraction:
        return self._terms.get(Monomial(m, n, p), Fraction(0))

    def component(self, w: int) -> "CohClass":
        """Homogeneous part of weight ``w``."""
        return CohClass(self.context, {k: c for k, c in self._terms.items() if k.weight == w})

    def weights(self) -> list[int]:
        return sorted({k.weight for k in self._terms})

    def is_zero(self) -> bool:
        return not self._terms

    def _check(self, other: "CohClass"):
        if self.context.g != other.context.g:
            raise ContextMismatchError(
                f"classes live in different genera ({self.context.g} vs {other.context.g})"
            )

    def _lift(self, other) -> "CohClass":
        if isinstance(other, CohClass):
            self._check(other)
            return other
        return CohClass.scalar(self.context, other)

    def __add__(self, other):
        other = self._lift(other)
        merged = dict(self._terms)
        for k, c in other._terms.items():
            merged[k] = merged.get(k, Fraction(0)) + c
        return CohClass(self.context, merged)

    __radd__ = __add__

    def __neg__(self):
        return CohClass(self.context, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, CohClass):
            r = Fraction(other)
            return CohClass(self.context, {k: r * c for k, c in self._terms.items()})
        self._check(other)
        top = self.context.top_weight
        out: dict[Monomial, Fraction] = {}
        for ka, ca in self._terms.items():
            wa = ka.weight
            for kb, cb in other._terms.items():
                if wa + kb.weight > top:
                    continue
                k = Monomial(ka.m + kb.m, ka.n + kb.n, ka.p + kb.p)
                out[k] = out.get(k, Fraction(0)) + ca * cb
        return CohClass(self.context, out)

    __rmul__ = __mul__

    def __truediv__(self, r):
        return self * (1 / Fraction(r))

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not defined")
        result = CohClass.scalar(self.context, 1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, CohClass):
            return self.context.g == other.context.g and dict(self._terms) == dict(other._terms)
        if isinstance(other, (int, Fraction)):
            return self == CohClass.scalar(self.context, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.context.g, frozenset(self._terms.items())))
        return self._hash

    def map_weights(self, f) -> "CohClass":
        """Multiply each weight-k component by ``f(k)``."""
        return CohClass(self.context, {k: f(k.weight) * c for k, c in self._terms.items()})

    def dual(self) -> "CohClass":
        """Character of the dual bundle: weight-k part times (-1)^k."""
        return self.map_weights(lambda k: -1 if k % 2 else 1)

    def exp(self) -> "CohClass":
        """exp of a class with zero constant term (nilpotent, so the sum is finite)."""
        if self.coefficient(0, 0, 0):
            raise ValueError("exp needs a class with zero constant term")
        result = CohClass.scalar(self.context, 1)
        power = result
        for k in range(1, self.context.top_weight + 1):
            power = power * self * Fraction(1, k)
            if power.is_zero():
                break
            result = result + power
        return result

    def __repr__(self) -> str:
        return f"CohClass(g={self.context.g}, {format_class(self)})"

    def __str__(self) -> str:
        return format_class(self)


_SUP = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def _mono_str(mono: Monomial) -> str:
    parts = []
    for sym, e in zip("αβγ", mono):
        if e == 1:
            parts.append(sym)
        elif e > 1:
            parts.append(sym + str(e).translate(_SUP))
    return "".join(parts)


def _signed_join(pieces: list[tuple[bool, str]]) -> str:
    out = ""
    for i, (neg, s) in enumerate(pieces):
        if i == 0:
            out = ("−" if neg else "") + s
        else:
            out += (" − " if neg else " + ") + s
    return out


def _component_str(terms: list[tuple[Monomial, Fraction]]) -> tuple[bool, str]:
    d = math.lcm(*(c.denominator for _, c in terms))
    nums = [(mono, int(c * d)) for mono, c in terms]
    if all(k < 0 for _, k in nums):
        neg, nums = True, [(mono, -k) for mono, k in nums]
    else:
        neg = False
    inner = ""
    for i, (mono, k) in enumerate(nums):
        ms = _mono_str(mono)
        mag = abs(k)
        body = ms if (mag == 1 and ms) else f"{mag}{ms}"
        if i == 0:
            inner = ("−" if k < 0 else "") + body
        else:
            inner += ("−" if k < 0 else "+") + body
    if d == 1:
        return neg, inner
    if len(nums) > 1:
        inner = f"({inner})"
    return neg, f"{inner}/{d}"


def format_class(x: CohClass) -> str:
    """Human-readable form grouped by weight, e.g. ``1 + α − β/2 + (αβ+2γ)/6``."""
    if x.is_zero():
        return "0"
    pieces = []
    for w in x.weights():
        terms = sorted(
            ((k, c) for k, c in x.terms.items() if k.weight == w),
            key=lambda kc: (-kc[0].m, -kc[0].n),
        )
        pieces.append(_component_str(terms))
    return _signed_join(pieces)


@lru_cache(maxsize=None)
def _pairing(g: int, m: int, n: int, p: int) -> Fraction:
    # g = 1 is the one-point space M_1 with <1> = 1, which the formula reproduces
    if min(m, n, p) < 0:
        raise ValueError(f"negative exponent in ({m}, {n}, {p})")
    if m + 2 * n + 3 * p != 3 * g - 3:
        raise ValueError(f"not top degree: weight {m + 2 * n + 3 * p} != {3 * g - 3}")
    q = m + p - g + 1
    if p > g or q < 0:
        return Fraction(0)
    coeff = Fraction(math.factorial(g) * math.factorial(m), math.factorial(g - p) * math.factorial(q))
    sign = -1 if (p - g) % 2 else 1
    return sign * coeff * Fraction(2) ** (2 * g - 2 - p) * (2**q - 2) * numeric.bernoulli(q)


def intersection_number(ctx: GenusContext | int, m: int, n: int, p: int) -> Fraction:
    """<alpha^m beta^n gamma^p, [M_g]> for ``m + 2n + 3p = 3g - 3``."""
    g = ctx if isinstance(ctx, int) else ctx.g
    return _pairing(g, m, n, p)


def evaluate(x: CohClass) -> Fraction:
    top = x.context.top_weight
    g = x.context.g
    return sum(
        (c * _pairing(g, *k) for k, c in x.terms.items() if k.weight == top),
        Fraction(0),
    )


def pairing(a: CohClass, b: CohClass) -> Fraction:
    """``evaluate(a * b)`` without forming the lower-degree part of the product."""
    a._check(b)
    g = a.context.g
    top = a.context.top_weight
    by_weight: dict[int, list[tuple[Monomial, Fraction]]] = {}
    for k, c in b.terms.items():
        by_weight.setdefault(k.weight, []).append((k, c))
    total = Fraction(0)
    for ka, ca in a.terms.items():
        for kb, cb in by_weight.get(top - ka.weight, ()):
            total += ca * cb * _pairing(g, ka.m + kb.m, ka.n + kb.n, ka.p + kb.p)
    return total


def cup(a: CohClass, b: CohClass) -> CohClass:
    return a * b


def add(a: CohClass, b: CohClass) -> CohClass:
    return a + b


def scale(r, a: CohClass) -> CohClass:
    return a * Fraction(r)


def is_zero_in_cohomology(x: CohClass) -> bool:
    """Test each homogeneous part against every complementary monomial."""
    g = x.context.g
    top = x.context.top_weight
    for w in x.weights():
        part = [(k, c) for k, c in x.terms.items() if k.weight == w]
        for mu in monomials_of_weight(top - w):
            s = sum((c * _pairing(g, *(k * mu)) for k, c in part), Fraction(0))
            if s:
                return False
    return True


def gamma_reduce(ctx: GenusContext, m: int, n: int, p: int) -> Fraction:
    """Pairing computed as ``2g`` copies of M_{g-1} (gamma's Poincare dual)."""
    if p < 1:
        raise ValueError("gamma reduction needs p >= 1")
    if m + 2 * n + 3 * p != ctx.top_weight:
        raise ValueError(f"not top degree: weight {m + 2 * n + 3 * p} != {ctx.top_weight}")
    return 2 * ctx.g * _pairing(ctx.g - 1, m, n, p - 1)


def i_coefficient(ctx: GenusContext, k: int) -> Fraction:
    g = ctx.g
    if not 0 <= k <= g - 1:
        raise ValueError(f"k must lie in 0..{g - 1}, got {k}")
    m = g - 1 + 2 * k
    return _pairing(g, m, g - 1 - k, 0) / math.factorial(m)


def _i_series_g(g: int) -> PowerSeries:
    coeffs = []
    for k in range(g):
        m = g - 1 + 2 * k
        coeffs.append(_pairing(g, m, g - 1 - k, 0) / math.factorial(m))
    return PowerSeries(coeffs, "t^2")


def i_series(ctx: GenusContext) -> PowerSeries:
    """sum_k I_k t^(2k), indexed by t^2 (order g - 1)."""
    return _i_series_g(ctx.g)


def ode_residual(ctx: GenusContext) -> PowerSeries:
    """``t^2 d/dt[I_g sinh t / t] - g (t - sinh t)(I_g + 4 I_{g-1})`` mod t^(2g).

    Returned as an ordinary t-series of order ``2g - 1``; the identity
    holds when every coefficient vanishes.
    """
    g = ctx.g
    n = 2 * g + 1
    i_g = _shift(spread_even(_i_series_g(g), "t"), 0, n)
    i_prev = _shift(spread_even(_i_series_g(g - 1), "t"), 0, n)
    sinh_over_t = spread_even(numeric.named_series("sinh_ku_over_u", n + 1, 1), "t").truncate(n)
    # t - sinh t = -t * (sinh t / t - 1)
    t_minus_sinh = -_shift(sinh_over_t - 1, 1, n)
    lhs = _shift(numeric.ps_derivative(i_g * sinh_over_t), 2, n)
    rhs = g * (t_minus_sinh * (i_g + 4 * i_prev))
    return (lhs - rhs).truncate(2 * g - 1)


def _shift(a: PowerSeries, k: int, order: int) -> PowerSeries:
    # multiply by t^k, then truncate or zero-pad to the given order
    s = numeric.ps_shift(a, k)
    if s.order >= order:
        return s.truncate(order)
    return PowerSeries(list(s.coeffs) + [0] * (order - s.order), s.var)

