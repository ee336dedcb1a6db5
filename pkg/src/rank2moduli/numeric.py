"""Exact arithmetic kernel: rationals, binomials, Bernoulli numbers,
truncated power series, and a multi-precision trigonometric-sum evaluator.

Even functions such as ``t/sinh t`` are returned indexed by the *squared*
variable, so index ``j`` holds the coefficient of ``t**(2*j)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import mpmath

__all__ = [
    "Rational",
    "PowerSeries",
    "NonUnitDivisorError",
    "TrigTerm",
    "binomial",
    "bernoulli",
    "ps_add",
    "ps_sub",
    "ps_scale",
    "ps_mul",
    "ps_div",
    "ps_pow",
    "ps_exp",
    "ps_log",
    "ps_derivative",
    "ps_shift",
    "spread_even",
    "named_series",
    "trig_sum",
    "INTEGER_TOLERANCE",
]

Rational = Fraction

# Distance from the nearest integer accepted by ``trig_sum``.
INTEGER_TOLERANCE = mpmath.mpf(2) ** -20


class NonUnitDivisorError(ZeroDivisionError):
    """Raised when dividing by a power series with zero constant term."""


def binomial(n: int, k: int) -> Fraction:
    """Generalized binomial coefficient.

    ``C(n, k) = 0`` for ``k < 0``; otherwise ``n(n-1)...(n-k+1)/k!``, which
    covers negative ``n`` and gives 0 for ``0 <= n < k``.

    >>> binomial(5, 3), binomial(0, -1), binomial(-1, 1)
    (Fraction(10, 1), Fraction(0, 1), Fraction(-1, 1))
    """
    if k < 0:
        return Fraction(0)
    if n >= 0:
        return Fraction(math.comb(n, k))
    num = 1
    for i in range(k):
        num *= n - i
    return Fraction(num, math.factorial(k))


@lru_cache(maxsize=None)
def _bernoulli_table(n: int) -> tuple[Fraction, ...]:
    # sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1, i.e. the x/(e^x - 1) convention
    table = [Fraction(1)]
    for m in range(1, n + 1):
        s = sum(math.comb(m + 1, j) * table[j] for j in range(m))
        table.append(-s / (m + 1))
    return tuple(table)


def bernoulli(q: int) -> Fraction:
    """B_q from ``x/(e^x - 1) = sum B_q x^q / q!``, so ``B_1 = -1/2``."""
    if q < 0:
        raise ValueError(f"Bernoulli index must be non-negative, got {q}")
    if q > 1 and q % 2:
        return Fraction(0)
    return _bernoulli_table(q)[q]


@dataclass(frozen=True)
class PowerSeries:
    """Truncated series ``sum_{i<=order} coeffs[i] * var**i`` over Q."""

    coeffs: tuple[Fraction, ...]
    var: str = "t"

    def __init__(self, coeffs: Iterable, var: str = "t"):
        c = tuple(Fraction(x) for x in coeffs)
        if not c:
            raise ValueError("a power series needs at least one coefficient")
        object.__setattr__(self, "coeffs", c)
        object.__setattr__(self, "var", var)

    @classmethod
    def zero(cls, order: int, var: str = "t") -> "PowerSeries":
        return cls([0] * (order + 1), var)

    @classmethod
    def one(cls, order: int, var: str = "t") -> "PowerSeries":
        return cls([1] + [0] * order, var)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> Fraction:
        if i < 0:
            raise IndexError(i)
        return self.coeffs[i] if i <= self.order else Fraction(0)

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise ValueError(f"cannot extend series of order {self.order} to {order}")
        return PowerSeries(self.coeffs[: order + 1], self.var)

    def __add__(self, other):
        return ps_add(self, _coerce(other, self))

    __radd__ = __add__

    def __sub__(self, other):
        return ps_sub(self, _coerce(other, self))

    def __rsub__(self, other):
        return ps_sub(_coerce(other, self), self)

    def __neg__(self):
        return ps_scale(-1, self)

    def __mul__(self, other):
        if isinstance(other, PowerSeries):
            return ps_mul(self, other)
        return ps_scale(other, self)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, PowerSeries):
            return ps_div(self, other)
        return ps_scale(Fraction(1) / Fraction(other), self)

    def __pow__(self, m: int):
        return ps_pow(self, m)

    def __repr__(self) -> str:
        terms = ", ".join(str(c) for c in self.coeffs)
        return f"PowerSeries([{terms}], var={self.var!r})"


def _coerce(x, like: PowerSeries) -> PowerSeries:
    if isinstance(x, PowerSeries):
        return x
    return PowerSeries([x] + [0] * like.order, like.var)


def _shared_order(a: PowerSeries, b: PowerSeries) -> int:
    return min(a.order, b.order)


def ps_add(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    n = _shared_order(a, b)
    return PowerSeries([a.coeffs[i] + b.coeffs[i] for i in range(n + 1)], a.var)


def ps_sub(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    n = _shared_order(a, b)
    return PowerSeries([a.coeffs[i] - b.coeffs[i] for i in range(n + 1)], a.var)


def ps_scale(r, a: PowerSeries) -> PowerSeries:
    r = Fraction(r)
    return PowerSeries([r * c for c in a.coeffs], a.var)


def ps_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    n = _shared_order(a, b)
    ac, bc = a.coeffs, b.coeffs
    out = []
    for k in range(n + 1):
        out.append(sum((ac[i] * bc[k - i] for i in range(k + 1)), Fraction(0)))
    return PowerSeries(out, a.var)


def ps_div(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Long division ``a / b``; ``b`` must have a nonzero constant term."""
    if b.coeffs[0] == 0:
        raise NonUnitDivisorError("non-unit divisor: constant term is zero")
    n = _shared_order(a, b)
    inv0 = 1 / b.coeffs[0]
    out: list[Fraction] = []
    for k in range(n + 1):
        s = a.coeffs[k] - sum((out[i] * b.coeffs[k - i] for i in range(k)), Fraction(0))
        out.append(s * inv0)
    return PowerSeries(out, a.var)


def ps_pow(a: PowerSeries, m: int) -> PowerSeries:
    if m < 0:
        return ps_div(PowerSeries.one(a.order, a.var), ps_pow(a, -m))
    result = PowerSeries.one(a.order, a.var)
    base = a
    while m:
        if m & 1:
            result = ps_mul(result, base)
        m >>= 1
        if m:
            base = ps_mul(base, base)
    return result


def ps_exp(a: PowerSeries) -> PowerSeries:
    if a.coeffs[0] != 0:
        raise ValueError("exp requires a series with zero constant term")
    n = a.order
    e = [Fraction(1)]
    for k in range(1, n + 1):
        s = sum((i * a.coeffs[i] * e[k - i] for i in range(1, k + 1)), Fraction(0))
        e.append(s / k)
    return PowerSeries(e, a.var)


def ps_log(a: PowerSeries) -> PowerSeries:
    if a.coeffs[0] != 1:
        raise ValueError("log requires a series with constant term 1")
    n = a.order
    b = [Fraction(0)]
    for k in range(1, n + 1):
        s = k * a.coeffs[k] - sum((i * b[i] * a.coeffs[k - i] for i in range(1, k)), Fraction(0))
        b.append(s / k)
    return PowerSeries(b, a.var)


def ps_derivative(a: PowerSeries) -> PowerSeries:
    """Formal derivative; the result has order ``a.order - 1`` (at least 0)."""
    if a.order == 0:
        return PowerSeries([0], a.var)
    return PowerSeries([i * a.coeffs[i] for i in range(1, a.order + 1)], a.var)


def ps_shift(a: PowerSeries, k: int) -> PowerSeries:
    """Multiply by ``var**k``, raising the order by ``k``."""
    return PowerSeries([0] * k + list(a.coeffs), a.var)


def spread_even(a: PowerSeries, var: str | None = None) -> PowerSeries:
    """Re-index a squared-variable series ``f(t^2)`` as an ordinary series in t."""
    out = [Fraction(0)] * (2 * a.order + 1)
    for j, c in enumerate(a.coeffs):
        out[2 * j] = c
    return PowerSeries(out, var or a.var)


def _sinh_ku_over_u(k, n: int) -> PowerSeries:
    # sinh(k u)/u = sum_j k^(2j+1) u^(2j) / (2j+1)!
    k = Fraction(k)
    return PowerSeries([k ** (2 * j + 1) / math.factorial(2 * j + 1) for j in range(n + 1)], "u^2")


def named_series(kind: str, order: int, param: int | None = None) -> PowerSeries:
    """Exact expansions of the even functions used throughout.

    ``order`` is the degree in the original variable; the result is indexed
    by its square and has ``order // 2 + 1`` coefficients.

    kinds:
      * ``t_over_sinh_t``        t / sinh t
      * ``u_over_sinh_u_power``  (u / sinh u) ** param
      * ``sinh_ku_over_u``       sinh(param * u) / u
      * ``two_cosh_sqrt``        2 cosh(sqrt x), already in x = t^2
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    n = order // 2
    if kind == "t_over_sinh_t":
        one = PowerSeries.one(n, "t^2")
        return PowerSeries(ps_div(one, _sinh_ku_over_u(1, n)).coeffs, "t^2")
    if kind == "u_over_sinh_u_power":
        if param is None:
            raise ValueError("u_over_sinh_u_power needs an exponent")
        return ps_pow(_sinh_ku_over_u(1, n), -param)
    if kind == "sinh_ku_over_u":
        if param is None:
            raise ValueError("sinh_ku_over_u needs k")
        return _sinh_ku_over_u(param, n)
    if kind == "two_cosh_sqrt":
        return PowerSeries([Fraction(2, math.factorial(2 * j)) for j in range(n + 1)], "x")
    raise ValueError(f"unknown series kind {kind!r}")


@dataclass(frozen=True)
class TrigTerm:
    """One summand ``sign * weight * (base / d(angle*pi)) ** power``.

    ``d`` is ``sin^2`` for kind ``"sin2"`` and ``1 - cos`` for kind
    ``"one_minus_cos"``; ``angle`` is a rational multiple of pi.
    """

    sign: int
    weight: Fraction
    base: Fraction
    angle: Fraction
    power: int
    kind: str = "sin2"

    def has_pole(self) -> bool:
        a = Fraction(self.angle)
        if self.kind == "sin2":
            return a.denominator == 1
        if self.kind == "one_minus_cos":
            return a.denominator == 1 and a.numerator % 2 == 0
        raise ValueError(f"unknown trig kind {self.kind!r}")


def _to_mpf(ctx, r) -> "mpmath.mpf":
    r = Fraction(r)
    return ctx.mpf(r.numerator) / r.denominator


def _evaluate(terms: Sequence[TrigTerm], precision: int):
    ctx = mpmath.MPContext()
    ctx.prec = precision
    total = ctx.mpf(0)
    for t in terms:
        x = ctx.pi * _to_mpf(ctx, t.angle)
        d = ctx.sin(x) ** 2 if t.kind == "sin2" else 1 - ctx.cos(x)
        total += t.sign * _to_mpf(ctx, t.weight) * (_to_mpf(ctx, t.base) / d) ** t.power
    return ctx, total


def _recognize(ctx, value) -> int | None:
    nearest = int(ctx.nint(value))
    if abs(value - nearest) <= INTEGER_TOLERANCE:
        return nearest
    return None


def trig_sum(terms: Sequence[TrigTerm], precision: int = 128):
    """Evaluate a trigonometric sum in floating point and recognise an integer.

    The sum is evaluated at ``precision`` and again at twice that; an
    integer is returned only when both evaluations round to it within
    ``INTEGER_TOLERANCE``.  Returns ``(value, integer_or_None)``.
    """
    if precision < 64:
        raise ValueError(f"precision must be at least 64 bits, got {precision}")
    for t in terms:
        if t.has_pole():
            raise ZeroDivisionError(f"pole in summand at angle {t.angle}*pi")
    ctx, value = _evaluate(terms, precision)
    first = _recognize(ctx, value)
    ctx2, value2 = _evaluate(terms, 2 * precision)
    second = _recognize(ctx2, value2)
    if first is None or first != second:
        return value, None
    return value, first
