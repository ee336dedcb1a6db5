"""Generalized Verlinde numbers V_h(p, q): three routes and the symmetries of the table."""
from __future__ import annotations

from rank2moduli.cohomology import GenusContext
from rank2moduli.verlinde import build_table, v_gen, v_hrr, v_trig, v_trig_valid

ctx = GenusContext(4)
h = ctx.h
table = build_table(ctx, range(-4, 5), range(-4, 5))
for p in range(-4, 5):
    print(" ".join(f"{int(table[p, q]):>8}" for q in range(-4, 5)))
for audit in table.audits:
    print(audit.name, audit.passed)

# generating function against Riemann-Roch against the finite trigonometric sum
print(v_gen(h, 3, 2), v_hrr(ctx, 3, 2))
for q in range(1, 4):
    c = 0
    while v_trig_valid(h, c, q):
        print(f"c={c} q={q}: {v_trig(h, c, q)} {v_gen(h, c * q, q)}")
        c += 1

# genus 2 is special: Q is a line bundle, so V_1(p, 0) repeats V_1(p, p)
print([int(v_gen(1, p, 0)) for p in range(-3, 4)])
print([int(v_hrr(GenusContext(2), p, 0)) for p in range(-3, 4)])
