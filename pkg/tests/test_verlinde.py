from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rank2moduli.cohomology import GenusContext
from rank2moduli.verlinde import (
    TrigRouteError,
    build_table,
    f_series,
    g_coefficient,
    quat_volume,
    quat_volume_hp,
    saturation,
    twisted_dim,
    untwisted_dim_pairing,
    untwisted_dim_trig,
    v_gen,
    v_hrr,
    v_trig,
    v_trig_valid,
)

from oracles import f_series_oracle

F = Fraction


def test_f_series_small():
    assert f_series(1, 4).coeffs == (4, 1, 0, 0, 0)
    assert f_series(2, 3).coeffs == (8, 6, 1, 0)


@pytest.mark.parametrize("p", [-4, -1, 1, 2, 3, 5, 7])
def test_f_series_matches_rational_function(p):
    n = abs(p) + 2
    assert list(f_series(p, n - 1).coeffs) == f_series_oracle(p, n)


@pytest.mark.parametrize("p", range(-6, 7))
def test_f_series_constant_term(p):
    assert f_series(p, 0)[0] == 4 * p


@pytest.mark.parametrize("p, q", [(1, 1), (3, 2), (5, 7), (-2, 3)])
def test_g0(p, q):
    assert g_coefficient(p, q, 0) == F(p, 4 * q * q)


@pytest.mark.parametrize("q", range(1, 9))
def test_g1_diagonal(q):
    assert g_coefficient(q, q, 1) == -F(2 * q * q + 1, 48 * q)


def test_g2_values():
    assert g_coefficient(4, 2, 2) == F(-9, 64)
    assert g_coefficient(2, 2, 2) == F(7, 128)
    assert g_coefficient(1, 2, 2) == F(17, 256)
    assert g_coefficient(1, 1, 1) == F(-1, 16)
    assert g_coefficient(2, 1, 1) == F(1, 8)


def test_g_undefined_at_zero():
    with pytest.raises(ZeroDivisionError, match="q=0"):
        g_coefficient(1, 0, 1)


def test_v_gen_examples():
    assert v_gen(1, 2, 1) == 6
    assert v_gen(1, 2, 2) == 6
    assert v_gen(2, 1, 2) == 8
    assert v_gen(2, 4, 2) == 240
    with pytest.raises(ValueError):
        v_gen(0, 1, 1)


@pytest.mark.parametrize("h", range(2, 7))
def test_v_gen_axes(h):
    for p in range(-8, 9):
        assert v_gen(h, p, 0) == 0
        assert v_gen(h, 0, p) == 0


def test_genus_two_q_axis_follows_line_bundle():
    # Q = L in genus 2: V_1(p, 0) = V_1(p, p), agreeing with Riemann-Roch
    ctx = GenusContext(2)
    for p in range(-5, 6):
        assert v_gen(1, p, 0) == v_gen(1, p, p) == v_hrr(ctx, p, 0)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 6), st.integers(-10, 10), st.integers(-10, 10))
def test_v_gen_symmetries(h, p, q):
    v = v_gen(h, p, q)
    assert v.denominator == 1
    assert v == -v_gen(h, -p, q)
    assert v == (-1) ** h * v_gen(h, -p, -q)
    if h == 1:
        assert v == v_gen(1, p, p)


@pytest.mark.parametrize("g", [2, 3, 4])
def test_v_hrr_equals_v_gen(g):
    ctx = GenusContext(g)
    for p in range(-4, 5):
        for q in range(-4, 5):
            assert v_hrr(ctx, p, q) == v_gen(g - 1, p, q), (p, q)


def test_v_hrr_examples():
    g3 = GenusContext(3)
    assert all(v_hrr(g3, p, 0) == 0 for p in range(-4, 5))
    g2 = GenusContext(2)
    assert v_hrr(g2, 2, 1) == 6
    assert v_hrr(g2, 2, 2) / g2.h == 6


def test_v_trig_examples():
    assert v_trig(1, 1, 1) == 1
    assert v_trig(1, 1, 2) == 6
    assert v_trig(2, 2, 2) == 240
    assert v_trig(3, 0, 2) == 0


def test_v_trig_domain():
    assert v_trig_valid(2, 2, 2)
    assert not v_trig_valid(2, 3, 2)
    assert v_trig_valid(4, 5, 1)
    with pytest.raises(ValueError):
        v_trig(2, 3, 2)


def test_v_trig_printed_range_would_be_wrong():
    # summing only j = 1..q gives 2 for (h, c, q) = (1, 1, 2); the full range gives 6
    q, h = 2, 1
    partial = sum((-1) ** (j + 1) * h * (q / mpmath.sin(j * mpmath.pi / (2 * q)) ** 2) ** h for j in range(1, q + 1))
    assert mpmath.nint(partial) == 2
    assert v_trig(h, 1, q) == 6


def _verlinde_float(g, q):
    mpmath.mp.dps = 50
    s = sum((-1) ** (j + 1) / mpmath.sin(j * mpmath.pi / (2 * q)) ** (2 * g - 2) for j in range(1, 2 * q))
    return int(mpmath.nint(q ** (g - 1) * s))


@pytest.mark.parametrize("level", range(6))
def test_twisted_dim_genus_two(level):
    q = level + 1
    ctx = GenusContext(2)
    assert twisted_dim(ctx, level) == q * (2 * q * q + 1) // 3 == _verlinde_float(2, q)


@pytest.mark.parametrize("g, level, expected", [(2, 0, 1), (2, 1, 6), (2, 2, 19), (3, 1, 28)])
def test_twisted_dim_examples(g, level, expected):
    assert twisted_dim(GenusContext(g), level) == expected


@pytest.mark.parametrize("g", [3, 4, 5])
def test_twisted_dim_against_float_verlinde(g):
    ctx = GenusContext(g)
    for level in range(4):
        assert twisted_dim(ctx, level) == _verlinde_float(g, level + 1)


def test_untwisted_examples():
    assert untwisted_dim_trig(2, 2) == 1
    assert untwisted_dim_trig(2, 3) == 4
    assert untwisted_dim_trig(2, 4) == 10
    g2 = GenusContext(2)
    assert [untwisted_dim_pairing(g2, k) for k in range(3)] == [1, 4, 10]
    with pytest.raises(ValueError):
        untwisted_dim_trig(2, 1)


def test_trig_route_instability_raises(monkeypatch):
    import rank2moduli.verlinde as vl

    monkeypatch.setattr(vl, "trig_sum", lambda terms, precision: (None, None))
    with pytest.raises(TrigRouteError, match="unstable"):
        vl.v_trig(1, 1, 2)


@pytest.mark.parametrize("g", range(2, 5))
def test_saturation(g):
    ctx = GenusContext(g)
    for which in ("Qstar", "Ttilde"):
        for j in range(ctx.top_weight // 2 + 3):
            assert saturation(ctx, which, j) == 0
    with pytest.raises(ValueError):
        saturation(ctx, "T", 0)


def test_quaternionic_volume():
    assert quat_volume(2) == 10
    assert quat_volume(3) == 84
    assert quat_volume_hp(2) == 16
    assert all(quat_volume(g).denominator == 1 for g in range(2, 15))


def test_table_audit():
    t = build_table(GenusContext(3), range(-3, 4), range(-3, 4))
    assert len(t.values) == 49
    assert t[1, 2] == 8
    assert t.passed
    names = {a.name for a in t.audits}
    assert {"odd in p", "Serre duality", "V(p,0) = 0", "V(0,q) = 0"} <= names


def test_table_audit_detects_corruption():
    from rank2moduli.verlinde import audit_table

    t = build_table(GenusContext(3), range(-2, 3), range(-2, 3))
    t.values[1, 1] += 1
    failed = {a.name for a in audit_table(t) if not a.passed}
    assert "odd in p" in failed and "Serre duality" in failed


def test_table_via_hrr_route():
    t = build_table(GenusContext(2), range(-2, 3), range(-2, 3), route="hrr")
    assert t.passed
    assert t[2, 0] == 6
