"""Chern characters and multiplicative classes on M_g.

Everything is stored as ``ch_k`` (not ``s_k = k! ch_k``) so that products
are plain cup products.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .cohomology import CohClass, GenusContext, Monomial, evaluate
from .numeric import named_series

__all__ = [
    "CharClass",
    "ch_T",
    "ch_Q",
    "ch_W",
    "adams",
    "ahat",
    "todd",
    "chern_Q_recurrence",
    "chern_Q_series",
    "chern_from_character",
    "total_chern",
    "ch_sym_U",
    "exp_alpha",
]


@dataclass(frozen=True)
class CharClass:
    """A Chern character: a cohomology class whose weight-0 part is the virtual rank."""

    value: CohClass
    rank: Fraction

    def __post_init__(self):
        object.__setattr__(self, "rank", Fraction(self.rank))
        if self.value.coefficient(0, 0, 0) != self.rank:
            raise ValueError(
                f"weight-0 coefficient {self.value.coefficient(0, 0, 0)} != declared rank {self.rank}"
            )

    @classmethod
    def of(cls, value: CohClass) -> "CharClass":
        return cls(value, value.coefficient(0, 0, 0))

    @property
    def context(self) -> GenusContext:
        return self.value.context

    def part(self, k: int) -> CohClass:
        """``ch_k``, the weight-k component."""
        return self.value.component(k)

    def dual(self) -> "CharClass":
        return CharClass(self.value.dual(), self.rank)

    def __add__(self, other):
        if isinstance(other, CharClass):
            return CharClass.of(self.value + other.value)
        return CharClass.of(self.value + other)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, CharClass):
            return CharClass.of(self.value - other.value)
        return CharClass.of(self.value - other)

    def __neg__(self):
        return CharClass(-self.value, -self.rank)

    def __mul__(self, other):
        if isinstance(other, CharClass):
            return CharClass.of(self.value * other.value)
        return CharClass.of(self.value * other)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, CharClass):
            return self.value == other.value
        if isinstance(other, CohClass):
            return self.value == other
        if isinstance(other, (int, Fraction)):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __str__(self) -> str:
        return str(self.value)


def _terms_from_s(ctx: GenusContext, rank, s_of_k) -> CharClass:
    # s_of_k(k) gives s_k as a {Monomial: coeff} dict for k >= 1
    terms: dict[Monomial, Fraction] = {Monomial(0, 0, 0): Fraction(rank)}
    for k in range(1, ctx.top_weight + 1):
        for mono, c in s_of_k(k).items():
            terms[mono] = terms.get(mono, Fraction(0)) + Fraction(c, math.factorial(k))
    return CharClass(CohClass(ctx, terms), rank)


def ch_T(ctx: GenusContext) -> CharClass:
    """Newstead's Chern character of the holomorphic tangent bundle."""
    g = ctx.g

    def s(k):
        if k % 2 == 0:
            return {Monomial(0, k // 2, 0): 2 * (g - 1)}
        j = (k + 1) // 2
        out = {Monomial(1, j - 1, 0): 2}
        if j >= 2:
            out[Monomial(0, j - 2, 1)] = -8 * (j - 1)
        return out

    return _terms_from_s(ctx, 3 * g - 3, s)


def ch_Q(ctx: GenusContext) -> CharClass:
    """Chern character of the rank g-1 tautological bundle Q."""

    def s(k):
        if k % 2 == 0:
            return {Monomial(0, k // 2, 0): -1}
        j = (k + 1) // 2
        out = {Monomial(1, j - 1, 0): 1}
        if j >= 2:  # s'_1 = alpha alone
            out[Monomial(0, j - 2, 1)] = 2
        return out

    return _terms_from_s(ctx, ctx.g - 1, s)


def ch_W(ctx: GenusContext) -> CharClass:
    """``2 + 2 cosh(sqrt beta)``."""
    series = named_series("two_cosh_sqrt", ctx.top_weight)
    return CharClass(CohClass.from_beta_series(ctx, series) + 2, 4)


def adams(r: int, x: CharClass) -> CharClass:
    """psi^r: scale ch_k by r^k.  Negative r is psi^|r| of the dual; r = 0 keeps the rank."""
    if r == 0:
        return CharClass(CohClass.scalar(x.context, x.rank), x.rank)
    return CharClass(x.value.map_weights(lambda k: r**k), x.rank)


def exp_alpha(ctx: GenusContext, c=1) -> CohClass:
    """e^{c alpha}, i.e. ch of the line bundle L^c."""
    c = Fraction(c)
    return CohClass(ctx, {Monomial(k, 0, 0): c**k / math.factorial(k) for k in range(ctx.top_weight + 1)})


def ahat(ctx: GenusContext) -> CharClass:
    """``((sqrt(beta)/2) / sinh(sqrt(beta)/2))^(2g-2)``, a polynomial in beta."""
    series = named_series("u_over_sinh_u_power", ctx.top_weight, 2 * ctx.g - 2)
    return CharClass(CohClass.from_beta_series(ctx, series, Fraction(1, 4)), 1)


def todd(ctx: GenusContext) -> CharClass:
    """Todd class as ``e^alpha * Ahat`` (c_1 = 2 alpha)."""
    return CharClass(exp_alpha(ctx) * ahat(ctx).value, 1)


def chern_Q_recurrence(ctx: GenusContext, upto: int) -> list[CohClass]:
    """c_0..c_upto of Q from ``(k+1) c_{k+1} = a c_k + k b c_{k-1} + 2 g c_{k-2}``."""
    if upto < 0:
        raise ValueError("upto must be non-negative")
    a, b, gm = CohClass.alpha(ctx), CohClass.beta(ctx), CohClass.gamma(ctx)
    zero = CohClass(ctx)
    c = [CohClass.scalar(ctx, 1), a]
    for k in range(1, upto):
        prev2 = c[k - 2] if k >= 2 else zero
        c.append((a * c[k] + k * (b * c[k - 1]) + 2 * (gm * prev2)) * Fraction(1, k + 1))
    return c[: upto + 1]


def chern_Q_series(ctx: GenusContext, upto: int) -> list[CohClass]:
    """c_0..c_upto of Q read off the explicit exponential generating function.

    Each t^k coefficient of the exponent has weight k, so setting t = 1 and
    taking the weight-k part of the exponential recovers c_k.
    """
    if upto < 0:
        raise ValueError("upto must be non-negative")
    top = ctx.top_weight
    exponent: dict[Monomial, Fraction] = {Monomial(1, 0, 0): Fraction(1)}
    n = 2
    while 2 * n - 1 <= top:
        d = Fraction(1, 2 * n - 1)
        exponent[Monomial(1, n - 1, 0)] = d
        exponent[Monomial(0, n - 2, 1)] = 2 * d
        n += 1
    n = 1
    while 2 * n <= top:
        exponent[Monomial(0, n, 0)] = Fraction(1, 2 * n)
        n += 1
    total = CohClass(ctx, exponent).exp()
    return [total.component(k) for k in range(upto + 1)]


def chern_from_character(x: CharClass, upto: int) -> list[CohClass]:
    """Chern classes from a Chern character via Newton's identities.

    With power sums ``s_k = k! ch_k``: ``k c_k = sum_{i=1}^k (-1)^(i-1) s_i c_{k-i}``.
    """
    ctx = x.context
    s = [None] + [x.part(i) * math.factorial(i) for i in range(1, upto + 1)]
    c = [CohClass.scalar(ctx, 1)]
    for k in range(1, upto + 1):
        acc = CohClass(ctx)
        for i in range(1, k + 1):
            term = s[i] * c[k - i]
            acc = acc + (term if i % 2 else -term)
        c.append(acc * Fraction(1, k))
    return c


def total_chern(classes: list[CohClass]) -> CohClass:
    out = CohClass(classes[0].context)
    for c in classes:
        out = out + c
    return out


def ch_sym_U(ctx: GenusContext, k: int) -> CharClass:
    """ch(Sym^k U_x) = e^{k alpha/2} sinh((k+1)u)/sinh(u) with u^2 = beta/4."""
    if k < 0:
        raise ValueError("k must be non-negative")
    top = ctx.top_weight
    ratio = named_series("sinh_ku_over_u", top, k + 1) / named_series("sinh_ku_over_u", top, 1)
    body = CohClass.from_beta_series(ctx, ratio, Fraction(1, 4))
    return CharClass(exp_alpha(ctx, Fraction(k, 2)) * body, k + 1)


def todd_genus(ctx: GenusContext) -> Fraction:
    return evaluate(todd(ctx).value)
