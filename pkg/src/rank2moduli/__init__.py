"""Exact intersection theory and generalized Verlinde numbers for the moduli
space M_g of rank-2, odd-degree, fixed-determinant stable bundles."""
from .cohomology import (
    CohClass,
    GenusContext,
    Monomial,
    evaluate,
    intersection_number,
    is_zero_in_cohomology,
)
from .characteristic import CharClass, ch_Q, ch_T, ch_W, todd
from .verlinde import v_gen, v_hrr, v_trig

__version__ = "0.1.0"


def clear_caches() -> None:
    """Drop memoised pairings and series coefficients (e.g. after patching ``numeric.bernoulli``)."""
    from . import cohomology, numeric, verlinde

    cohomology._pairing.cache_clear()
    numeric._bernoulli_table.cache_clear()
    verlinde.g_coefficient.cache_clear()
    verlinde._twist.cache_clear()
