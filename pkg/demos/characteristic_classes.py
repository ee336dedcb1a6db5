"""Chern characters of the tautological bundles and what they integrate to."""
from __future__ import annotations

from rank2moduli.characteristic import (
    adams,
    ch_Q,
    ch_T,
    ch_W,
    chern_from_character,
    chern_Q_recurrence,
    todd,
)
from rank2moduli.cohomology import CohClass, GenusContext, evaluate, is_zero_in_cohomology

ctx = GenusContext(3)
q, w = ch_Q(ctx), ch_W(ctx)
print("ch(Q) =", q.value)
print("ch(W) =", w.value)
print("td    =", todd(ctx).value)

# the tangent bundle splits as Q*W minus the second Adams power of Q
print(ch_T(ctx) == q * w - adams(2, q))
print(q + q.dual() + w == 2 * ctx.g + 2)

# Riemann-Roch sanity: the Todd genus is 1 and chi(T*) is g - 1
print(evaluate(todd(ctx).value), evaluate((ch_T(ctx).dual() * todd(ctx)).value))

# c_k(Q) for k >= g vanish in cohomology even though they are nonzero polynomials
cs = chern_Q_recurrence(ctx, ctx.g + 2)
for k, c in enumerate(cs):
    print(f"c_{k} = {c}   zero: {is_zero_in_cohomology(c)}")
print(cs == chern_from_character(q, ctx.g + 2))

a, b = CohClass.alpha(ctx), CohClass.beta(ctx)
print(is_zero_in_cohomology(a**4 + 2 * a * a * b - 3 * b * b))
