"""Dimensions of spaces of sections, by exact pairing and by trigonometric sums."""
from __future__ import annotations

from rank2moduli.cohomology import GenusContext
from rank2moduli.verlinde import (
    quat_volume,
    saturation,
    twisted_dim,
    untwisted_dim_pairing,
    untwisted_dim_trig,
    v_trig,
)

for g in range(2, 5):
    ctx = GenusContext(g)
    twisted = [twisted_dim(ctx, level) for level in range(5)]
    trig = [v_trig(ctx.h, 1, level + 1) // ctx.h for level in range(5)]
    print(f"g={g} twisted {twisted} {twisted == trig}")

    untwisted = [untwisted_dim_pairing(ctx, k) for k in range(5)]
    print(f"g={g} untwisted {[int(x) for x in untwisted]}",
          untwisted == [untwisted_dim_trig(g, k + 2) for k in range(5)])

    print("saturated:", all(saturation(ctx, w, j) == 0 for w in ("Qstar", "Ttilde") for j in range(g)))

print([int(quat_volume(g)) for g in range(2, 8)])
