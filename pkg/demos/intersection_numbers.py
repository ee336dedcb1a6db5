"""Intersection numbers on M_g, computed exactly, and the generating function they satisfy."""
from __future__ import annotations

from fractions import Fraction

from rank2moduli.cohomology import (
    GenusContext,
    gamma_reduce,
    i_series,
    intersection_number,
    monomials_of_weight,
)
from rank2moduli.numeric import named_series

ctx = GenusContext(3)
print(f"genus {ctx.g}: top weight {ctx.top_weight}")
for mono in sorted(monomials_of_weight(ctx.top_weight), reverse=True):
    print(f"  <a^{mono.m} b^{mono.n} c^{mono.p}> = {intersection_number(ctx, *mono)}")

# gamma contributes 2g copies of the genus g-1 answer
print(gamma_reduce(ctx, 1, 1, 1), intersection_number(ctx, 1, 1, 1))

# gamma-free numbers, packaged as a series in t^2, have a closed form
for g in range(2, 7):
    ctx = GenusContext(g)
    closed = named_series("t_over_sinh_t", 2 * g - 2) * Fraction(-4) ** (g - 1)
    print(g, [str(c) for c in i_series(ctx).coeffs], i_series(ctx) == closed)
