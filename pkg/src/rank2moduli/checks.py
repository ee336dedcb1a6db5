"""Named identity checks grouped into suites, shared by the CLI ``check`` command."""
from __future__ import annotations

from fractions import Fraction
from typing import Callable

from . import characteristic as chc
from .cohomology import (
    CohClass,
    GenusContext,
    evaluate,
    gamma_reduce,
    i_series,
    intersection_number,
    is_zero_in_cohomology,
    monomials_of_weight,
    ode_residual,
)
from .numeric import named_series
from .verlinde import (
    Audit,
    build_table,
    saturation,
    twisted_dim,
    untwisted_dim_pairing,
    untwisted_dim_trig,
    v_gen,
    v_hrr,
    v_trig,
    v_trig_valid,
)

__all__ = ["SUITES", "run_suite", "run_checks"]

GRID = range(-6, 7)


def _check(name: str, ok: bool, detail: str = "") -> Audit:
    return Audit(name, bool(ok), detail or ("ok" if ok else "failed"))


def _first_failures(items, limit=3) -> str:
    items = list(items)
    return "; ".join(str(x) for x in items[:limit])


def cohomology_checks(ctx: GenusContext) -> list[Audit]:
    g = ctx.g
    top = ctx.top_weight
    monos = monomials_of_weight(top)
    values = {m: intersection_number(ctx, *m) for m in monos}
    bad_int = [m for m, v in values.items() if v.denominator != 1]
    out = [_check("intersection numbers integral", not bad_int, _first_failures(bad_int))]

    bad_gamma = [m for m in monos if m.p >= 1 and gamma_reduce(ctx, *m) != values[m]]
    out.append(_check("gamma reduction", not bad_gamma, _first_failures(bad_gamma)))

    closed = named_series("t_over_sinh_t", 2 * g - 2) * Fraction(-4) ** (g - 1)
    out.append(_check("I(t) = (-4)^(g-1) t/sinh t", i_series(ctx).coeffs == closed.coeffs))

    residual = ode_residual(ctx)
    out.append(_check("ODE residual mod t^2g", not any(residual.coeffs)))

    zero_targets = {"beta^g": CohClass.beta(ctx) ** g}
    cs = chc.chern_Q_recurrence(ctx, g + 2)
    for k in (g, g + 1, g + 2):
        zero_targets[f"c_{k}(Q)"] = cs[k]
    for name, x in zero_targets.items():
        out.append(_check(f"{name} = 0 in cohomology", is_zero_in_cohomology(x)))
    for name, x in (("alpha", CohClass.alpha(ctx)), ("beta", CohClass.beta(ctx)), ("gamma", CohClass.gamma(ctx))):
        out.append(_check(f"{name} != 0 in cohomology", not is_zero_in_cohomology(x)))
    return out


def characteristic_checks(ctx: GenusContext) -> list[Audit]:
    g = ctx.g
    chq, chw, cht = chc.ch_Q(ctx), chc.ch_W(ctx), chc.ch_T(ctx)
    td = chc.todd(ctx)
    out = [
        _check("T = QW - psi^2 Q", cht == chq * chw - chc.adams(2, chq)),
        _check("Q* + Q + W = 2g+2", chq + chq.dual() + chw == 2 * g + 2),
    ]
    even = chq + chq.dual()
    out.append(_check("ch(Q + Q*) even", all(w % 2 == 0 for w in even.value.weights())))

    upto = g + 2
    rec = chc.chern_Q_recurrence(ctx, upto)
    ser = chc.chern_Q_series(ctx, upto)
    newton = chc.chern_from_character(chq, upto)
    out.append(_check("Chern classes of Q: three routes agree", rec == ser == newton))

    top = ctx.top_weight
    c_sym = chc.total_chern(chc.chern_from_character(even, top))
    c_w = chc.total_chern(chc.chern_from_character(chw, top))
    out.append(_check("c(Q + Q*) c(W) = 1", c_sym * c_w == 1))

    genus = evaluate(td.value)
    out.append(_check("Todd genus = 1", genus == 1, f"got {genus}"))
    chi = evaluate((cht.dual() * td).value)
    out.append(_check("chi(M, T*) = g - 1", chi == g - 1, f"got {chi}"))
    return out


def verlinde_checks(ctx: GenusContext, precision: int = 128) -> list[Audit]:
    h = ctx.h
    mism = [(p, q) for p in GRID for q in GRID if v_gen(h, p, q) != v_hrr(ctx, p, q)]
    out = [_check("v_gen = v_hrr on |p|,|q| <= 6", not mism, _first_failures(mism))]

    trig_bad = []
    for q in range(1, 5):
        c = 0
        while v_trig_valid(h, c, q):
            if v_trig(h, c, q, precision) != v_gen(h, c * q, q):
                trig_bad.append((c, q))
            c += 1
    out.append(_check("v_trig = v_gen on valid rays, q <= 4", not trig_bad, _first_failures(trig_bad)))

    table = build_table(ctx, GRID, GRID)
    out.extend(Audit(f"table: {a.name}", a.passed, a.detail) for a in table.audits)

    for level in range(3):
        q = level + 1
        try:
            dim = twisted_dim(ctx, level)
            ok = h * dim == v_trig(h, 1, q, precision)
        except ArithmeticError as exc:
            ok, dim = False, exc
        out.append(_check(f"twisted dim level {level}", ok, f"{dim}"))

    untw = [k for k in range(7) if untwisted_dim_pairing(ctx, k) != untwisted_dim_trig(ctx.g, k + 2, precision)]
    out.append(_check("untwisted dims: pairing = trig, k <= 6", not untw, _first_failures(untw)))
    return out


def saturation_checks(ctx: GenusContext) -> list[Audit]:
    out = []
    for which in ("Qstar", "Ttilde"):
        bad = [j for j in range(ctx.top_weight // 2 + 2) if saturation(ctx, which, j) != 0]
        out.append(_check(f"{which} e^alpha saturated", not bad, _first_failures(bad)))
    return out


SUITES: dict[str, Callable[[GenusContext], list[Audit]]] = {
    "cohomology": cohomology_checks,
    "characteristic": characteristic_checks,
    "verlinde": verlinde_checks,
    "saturation": saturation_checks,
}


def run_suite(suite: str, ctx: GenusContext) -> list[Audit]:
    if suite == "all":
        return [a for name in SUITES for a in run_suite(name, ctx)]
    if suite == "verlinde":
        return verlinde_checks(ctx, ctx.precision)
    return SUITES[suite](ctx)


def run_checks(suite: str, genera, precision: int = 128) -> dict[int, list[Audit]]:
    return {g: run_suite(suite, GenusContext(g, precision)) for g in genera}
