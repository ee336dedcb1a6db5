"""Generalized Verlinde numbers V_h(p, q) and related dimension formulas.

Three independent routes compute V_h(p, q) = chi(M_{h+1}, psi^{p-q} Q (x) L^{q-1}):

* ``v_gen``   -- the F(w, p) / F(w, q)^2 generating-function closed form (exact)
* ``v_hrr``   -- Hirzebruch-Riemann-Roch against the intersection pairing (exact)
* ``v_trig``  -- the trigonometric sum along the rays p = c q (floating point)
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .characteristic import adams, ch_Q, ch_sym_U, ch_T, exp_alpha, todd
from .cohomology import CohClass, GenusContext, pairing
from .numeric import PowerSeries, TrigTerm, binomial, ps_div, ps_mul, trig_sum

__all__ = [
    "VerlindeQuery",
    "VerlindeTable",
    "Audit",
    "TrigRouteError",
    "f_series",
    "g_coefficient",
    "v_gen",
    "v_hrr",
    "v_trig",
    "v_trig_valid",
    "twisted_dim",
    "untwisted_dim_trig",
    "untwisted_dim_pairing",
    "saturation",
    "quat_volume",
    "quat_volume_hp",
    "build_table",
]


class TrigRouteError(ArithmeticError):
    """The floating-point route failed to settle on an integer."""


@dataclass(frozen=True)
class VerlindeQuery:
    h: int
    p: int
    q: int


@dataclass(frozen=True)
class Audit:
    name: str
    passed: bool
    detail: str = ""

    def as_dict(self) -> dict:
        return {"name": self.name, "pass": self.passed, "detail": self.detail}


def f_series(p: int, order: int) -> PowerSeries:
    """F(w, p) = sum_h [4 C(p+h, 2h+1) + C(p+h-1, 2h-1)] w^h."""
    if order < 0:
        raise ValueError("order must be non-negative")
    return PowerSeries(
        [4 * binomial(p + h, 2 * h + 1) + binomial(p + h - 1, 2 * h - 1) for h in range(order + 1)],
        "w",
    )


@lru_cache(maxsize=None)
def g_coefficient(p: int, q: int, k: int) -> Fraction:
    """Coefficient of w^k in F(w, p) / F(w, q)^2."""
    if q == 0:
        raise ZeroDivisionError("G undefined at q=0")
    if k < 0:
        raise ValueError("k must be non-negative")
    fq = f_series(q, k)
    return ps_div(f_series(p, k), ps_mul(fq, fq))[k]


def v_gen(h: int, p: int, q: int) -> Fraction:
    """Closed form ``4(-4q)^h (p(h+1) G_h(q,q) - q G_h(p,q))``, extended to all p, q."""
    if h < 1:
        raise ValueError(f"h must be at least 1, got {h}")
    if p == 0:
        return Fraction(0)
    if q == 0:
        # Q = L when h = 1, so V_1(p, q) does not depend on q
        return v_gen(h, p, p) if h == 1 else Fraction(0)
    if p < 0:
        return -v_gen(h, -p, q)
    if q < 0:
        return (-1) ** h * v_gen(h, -p, -q)
    return 4 * Fraction(-4 * q) ** h * (p * (h + 1) * g_coefficient(q, q, h) - q * g_coefficient(p, q, h))


@lru_cache(maxsize=None)
def _twist(g: int, q: int) -> CohClass:
    # ch(L^{q-1}) td(M)
    ctx = GenusContext(g)
    return exp_alpha(ctx, q - 1) * todd(ctx).value


def v_hrr(ctx: GenusContext, p: int, q: int) -> Fraction:
    """<ch(psi^{p-q} Q) e^{(q-1) alpha} td(M), [M]> by Riemann-Roch."""
    return pairing(adams(p - q, ch_Q(ctx)).value, _twist(ctx.g, q))


def v_trig_valid(h: int, c: int, q: int) -> bool:
    """0 <= c <= 2 + (g - 2)/q with g = h + 1."""
    g = h + 1
    return q >= 1 and 0 <= c and c * q <= 2 * q + g - 2


def _recognized(terms, precision: int, what: str) -> int:
    _, value = trig_sum(terms, precision)
    if value is None:
        _, value = trig_sum(terms, 2 * precision)
    if value is None:
        raise TrigRouteError(f"trig route unstable for {what}")
    return value


def v_trig(h: int, c: int, q: int, precision: int = 128) -> int:
    """V_h(cq, q) as ``c sum_j (-1)^(j+1) (h+1-(-1)^(j(c+1))) (q / sin^2(j pi / 2q))^h``.

    The sum runs over j = 1 .. 2q-1.
    """
    if not v_trig_valid(h, c, q):
        raise ValueError(f"(h={h}, c={c}, q={q}) outside 0 <= c <= 2 + (g-2)/q")
    if c == 0:
        return 0
    terms = []
    for j in range(1, 2 * q):
        sign = 1 if j % 2 else -1
        weight = c * (h + 1 - (-1) ** (j * (c + 1)))
        if weight:
            terms.append(TrigTerm(sign, Fraction(weight), Fraction(q), Fraction(j, 2 * q), h))
    return _recognized(terms, precision, f"V_{h}({c * q},{q})")


def twisted_dim(ctx: GenusContext, level: int) -> int:
    """dim H^0(M_g, L^level) = V_h(q, q) / h with q = level + 1."""
    if level < 0:
        raise ValueError("level must be non-negative")
    q = level + 1
    value = v_gen(ctx.h, q, q) / ctx.h
    if value.denominator != 1:
        raise ArithmeticError(f"V_h({q},{q})/h = {value} is not an integer")
    return int(value)


def untwisted_dim_trig(g: int, k: int, precision: int = 128) -> int:
    """dim H^0(N_g, L_0^{k-2}) = sum_{j=1}^{k-1} (k / (1 - cos(2 j pi / k)))^(g-1)."""
    if k < 2:
        raise ValueError("k must be at least 2")
    terms = [
        TrigTerm(1, Fraction(1), Fraction(k), Fraction(2 * j, k), g - 1, kind="one_minus_cos")
        for j in range(1, k)
    ]
    return _recognized(terms, precision, f"untwisted g={g}, k={k}")


def untwisted_dim_pairing(ctx: GenusContext, k: int) -> Fraction:
    """chi(M_g, Sym^k U_x) = <ch(Sym^k U_x) td(M), [M]>."""
    return pairing(ch_sym_U(ctx, k).value, todd(ctx).value)


def saturation(ctx: GenusContext, which: str, j: int) -> Fraction:
    """<ch(X) e^alpha beta^j, [M]> for X = Q* (``"Qstar"``) or T* - g + 1 (``"Ttilde"``)."""
    if j < 0:
        raise ValueError("j must be non-negative")
    if which == "Qstar":
        ch = ch_Q(ctx).dual().value
    elif which == "Ttilde":
        ch = ch_T(ctx).dual().value - (ctx.g - 1)
    else:
        raise ValueError(f"unknown saturation family {which!r}")
    return pairing(ch, exp_alpha(ctx) * CohClass.beta(ctx) ** j)


def quat_volume(g: int) -> Fraction:
    """Quaternionic volume (2/g) C(4g-3, 2g-1) of the real Grassmannian G_g."""
    if g < 2:
        raise ValueError("g must be at least 2")
    return Fraction(2, g) * binomial(4 * g - 3, 2 * g - 1)


def quat_volume_hp(g: int) -> int:
    """Comparison value for quaternionic projective space HP^{2g-2}."""
    return 4 ** (2 * g - 2)


@dataclass
class VerlindeTable:
    """V_h(p, q) on a rectangle, plus the outcome of the symmetry audit."""

    context: GenusContext
    p_range: range
    q_range: range
    values: dict[tuple[int, int], Fraction] = field(default_factory=dict)
    audits: list[Audit] = field(default_factory=list)

    @property
    def h(self) -> int:
        return self.context.h

    def __getitem__(self, pq: tuple[int, int]) -> Fraction:
        return self.values[pq]

    @property
    def passed(self) -> bool:
        return all(a.passed for a in self.audits)

    def cells(self):
        for p in self.p_range:
            for q in self.q_range:
                yield p, q, self.values[p, q]


def _audit(name: str, pairs) -> Audit:
    failures = [f"{cell}: {lhs} != {rhs}" for cell, lhs, rhs in pairs if lhs != rhs]
    return Audit(name, not failures, "; ".join(failures[:5]) if failures else "ok")


def audit_table(table: VerlindeTable) -> list[Audit]:
    vals, h = table.values, table.h
    inside = lambda p, q: (p, q) in vals  # noqa: E731
    audits = [
        _audit("integrality", [((p, q), v.denominator, 1) for (p, q), v in vals.items()]),
        _audit(
            "odd in p",
            [((p, q), v, -vals[-p, q]) for (p, q), v in vals.items() if inside(-p, q)],
        ),
        _audit(
            "Serre duality",
            [((p, q), v, (-1) ** h * vals[-p, -q]) for (p, q), v in vals.items() if inside(-p, -q)],
        ),
        _audit("V(0,q) = 0", [((p, q), v, 0) for (p, q), v in vals.items() if p == 0]),
    ]
    if h >= 2:
        audits.insert(3, _audit("V(p,0) = 0", [((p, q), v, 0) for (p, q), v in vals.items() if q == 0]))
    if h == 1:
        audits.append(
            _audit(
                "h=1: V(p,q) = V(p,p)",
                [((p, q), v, vals[p, p]) for (p, q), v in vals.items() if inside(p, p)],
            )
        )
    return audits


def build_table(ctx: GenusContext, p_range: range, q_range: range, route: str = "gen") -> VerlindeTable:
    """Fill the grid with ``v_gen`` (or ``v_hrr``) and run the symmetry audit."""
    if route == "gen":
        compute = lambda p, q: v_gen(ctx.h, p, q)  # noqa: E731
    elif route == "hrr":
        compute = lambda p, q: v_hrr(ctx, p, q)  # noqa: E731
    else:
        raise ValueError(f"unknown route {route!r}")
    table = VerlindeTable(ctx, p_range, q_range)
    for p in p_range:
        for q in q_range:
            table.values[p, q] = compute(p, q)
    table.audits = audit_table(table)
    return table
