from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rank2moduli.numeric import (
    NonUnitDivisorError,
    PowerSeries,
    TrigTerm,
    bernoulli,
    binomial,
    named_series,
    ps_add,
    ps_derivative,
    ps_div,
    ps_exp,
    ps_log,
    ps_mul,
    ps_pow,
    ps_scale,
    spread_even,
    trig_sum,
)

from oracles import bernoulli_by_series, even_series, naive_poly_mul, u_over_sinh_power

F = Fraction


@pytest.mark.parametrize(
    "n, k, expected",
    [(5, 3, 10), (0, -1, 0), (5, 3, 10), (3, 5, 0), (-1, 1, -1), (-3, 2, 6), (0, 0, 1)],
)
def test_binomial_values(n, k, expected):
    assert binomial(n, k) == expected


def test_binomial_pascal_rule():
    for n in range(-50, 51):
        for k in range(-50, 51):
            assert binomial(n, k) == binomial(n - 1, k) + binomial(n - 1, k - 1), (n, k)


def test_binomial_negative_upper_index():
    # C(-n, k) = (-1)^k C(n+k-1, k)
    for n in range(1, 12):
        for k in range(12):
            assert binomial(-n, k) == (-1) ** k * binomial(n + k - 1, k)


def test_bernoulli_small():
    assert bernoulli(0) == 1
    assert bernoulli(1) == F(-1, 2)
    assert bernoulli(2) == F(1, 6)
    assert bernoulli(3) == 0
    assert bernoulli(12) == F(-691, 2730)


def test_bernoulli_matches_generating_function():
    expected = bernoulli_by_series(24)
    assert [bernoulli(q) for q in range(25)] == expected


def test_bernoulli_rejects_negative():
    with pytest.raises(ValueError):
        bernoulli(-1)


def test_bernoulli_defining_identity_via_series_division():
    # x / (e^x - 1) = 1 / ((e^x - 1)/x)
    import math

    n = 24
    denom = PowerSeries([F(1, math.factorial(k + 1)) for k in range(n + 1)])
    quotient = ps_div(PowerSeries.one(n), denom)
    assert [bernoulli(q) / math.factorial(q) for q in range(n + 1)] == list(quotient.coeffs)


def test_mul_and_div_examples():
    a = PowerSeries([1, 1, 0])
    b = PowerSeries([1, -1, 0])
    assert ps_mul(a, b).coeffs == (1, 0, -1)
    assert ps_div(PowerSeries([1, 0, 0]), PowerSeries([1, 1, 0])).coeffs == (1, -1, 1)


def test_shared_order_is_minimum():
    a = PowerSeries([1, 2, 3, 4])
    b = PowerSeries([1, 1])
    assert ps_add(a, b).order == 1
    assert ps_mul(a, b).order == 1


def test_verlinde_generating_ratio_order_one():
    f1 = PowerSeries([4, 1])
    f2 = PowerSeries([8, 6])
    got = ps_div(f2, ps_mul(f1, f1))
    assert got.coeffs == (F(1, 2), F(1, 8))
    # naive polynomial check: got * (4+w)^2 - (8+6w+w^2) vanishes through w^1
    resid = naive_poly_mul(got.coeffs, naive_poly_mul([4, 1], [4, 1]))
    target = [8, 6, 1]
    assert [resid[i] - target[i] for i in range(2)] == [0, 0]


def test_division_by_non_unit():
    with pytest.raises(NonUnitDivisorError, match="non-unit divisor"):
        ps_div(PowerSeries([1, 1]), PowerSeries([0, 1]))


def test_exp_log_examples():
    assert ps_exp(PowerSeries([0, 1, 0, 0])).coeffs == (1, 1, F(1, 2), F(1, 6))
    assert ps_log(ps_exp(PowerSeries([0, 1, 0, 0, 0, 0]))).coeffs == (0, 1, 0, 0, 0, 0)


def test_exp_log_preconditions():
    with pytest.raises(ValueError):
        ps_exp(PowerSeries([1, 1]))
    with pytest.raises(ValueError):
        ps_log(PowerSeries([2, 1]))


def test_exp_reproduces_second_chern_coefficient():
    # exp(a t + b t^2/2): t^2 coefficient (a^2 + b)/2, checked at a=3, b=5
    s = ps_exp(PowerSeries([0, 3, F(5, 2)]))
    assert s[2] == F(9 + 5, 2)


def test_power_and_derivative():
    a = PowerSeries([1, 1, 0, 0])
    assert ps_pow(a, 3).coeffs == (1, 3, 3, 1)
    assert ps_pow(a, -1).coeffs == (1, -1, 1, -1)
    assert ps_derivative(PowerSeries([5, 1, 1, 1])).coeffs == (1, 2, 3)
    assert spread_even(PowerSeries([1, 2])).coeffs == (1, 0, 2)


small = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def series_st(order=6, unit=False, zero_const=False):
    def build(cs):
        cs = list(cs)
        if unit and cs[0] == 0:
            cs[0] = F(1)
        if zero_const:
            cs[0] = F(0)
        return PowerSeries(cs)

    return st.lists(small, min_size=order + 1, max_size=order + 1).map(build)


@settings(max_examples=60, deadline=None)
@given(series_st(), series_st(), series_st())
def test_ring_laws(a, b, c):
    assert ps_mul(a, b) == ps_mul(b, a)
    assert ps_mul(ps_mul(a, b), c) == ps_mul(a, ps_mul(b, c))
    assert ps_mul(a, ps_add(b, c)) == ps_add(ps_mul(a, b), ps_mul(a, c))


@settings(max_examples=60, deadline=None)
@given(series_st(), series_st(unit=True))
def test_division_inverts_multiplication(a, b):
    assert ps_div(ps_mul(a, b), b) == a
    assert ps_mul(ps_div(a, b), b) == a


@settings(max_examples=60, deadline=None)
@given(series_st(zero_const=True))
def test_log_exp_inverse(a):
    assert ps_log(ps_exp(a)) == a
    one_plus = ps_add(PowerSeries.one(a.order), a)
    assert ps_exp(ps_log(one_plus)) == one_plus


@settings(max_examples=30, deadline=None)
@given(series_st(zero_const=True), series_st(zero_const=True))
def test_exp_is_a_homomorphism(a, b):
    assert ps_exp(ps_add(a, b)) == ps_mul(ps_exp(a), ps_exp(b))


@settings(max_examples=30, deadline=None)
@given(st.lists(small, min_size=3, max_size=3), st.lists(small, min_size=3, max_size=3))
def test_mul_matches_naive_convolution(p, q):
    full = naive_poly_mul(p, q)
    got = ps_mul(PowerSeries(p + [0] * 4), PowerSeries(q + [0] * 4))
    assert list(got.coeffs) == full + [0] * (7 - len(full))


def test_named_series_t_over_sinh():
    assert named_series("t_over_sinh_t", 4).coeffs == (1, F(-1, 6), F(7, 360))
    assert named_series("t_over_sinh_t", 20).coeffs == even_series("t/sinh", 11)


def test_named_series_sinh_and_cosh():
    s = named_series("sinh_ku_over_u", 4, 2)
    assert s.coeffs[:2] == (2, F(4, 3))
    # after u^2 = beta/4 the linear coefficient is 1/3
    assert s[1] / 4 == F(1, 3)
    assert named_series("two_cosh_sqrt", 4).coeffs == (2, 1, F(1, 12))
    assert named_series("two_cosh_sqrt", 16).coeffs == tuple(2 * c for c in even_series("cosh", 9))


@pytest.mark.parametrize("m", [1, 2, 4, 7, 14])
def test_named_series_u_over_sinh_power(m):
    assert list(named_series("u_over_sinh_u_power", 12, m).coeffs) == u_over_sinh_power(m, 7)


def test_named_series_errors():
    with pytest.raises(ValueError):
        named_series("cosec", 4)
    with pytest.raises(ValueError):
        named_series("sinh_ku_over_u", 4)


def test_trig_sum_single_term():
    val, n = trig_sum([TrigTerm(1, F(1), F(1), F(1, 2), 1)])
    assert n == 1


def test_trig_sum_one_minus_cos():
    # 2 * 3/(1 - cos(2pi/3)) ... two symmetric terms, each 3/(3/2) = 2
    terms = [TrigTerm(1, F(1), F(3), F(2 * j, 3), 1, "one_minus_cos") for j in (1, 2)]
    assert trig_sum(terms)[1] == 4
    terms = [TrigTerm(1, F(1), F(4), F(2 * j, 4), 1, "one_minus_cos") for j in (1, 2, 3)]
    assert trig_sum(terms)[1] == 10


def test_trig_sum_non_integer_is_rejected():
    # 1/sin^2(pi/3) = 4/3
    val, n = trig_sum([TrigTerm(1, F(1), F(1), F(1, 3), 1)])
    assert n is None
    assert abs(float(val) - 4 / 3) < 1e-15


def test_trig_sum_errors():
    with pytest.raises(ZeroDivisionError, match="pole"):
        trig_sum([TrigTerm(1, F(1), F(1), F(1), 1)])
    with pytest.raises(ZeroDivisionError, match="pole"):
        trig_sum([TrigTerm(1, F(1), F(1), F(2), 1, "one_minus_cos")])
    with pytest.raises(ValueError):
        trig_sum([], precision=32)


def test_scale_and_operators():
    a = PowerSeries([1, 2, 3])
    assert ps_scale(F(1, 2), a) == a / 2
    assert (a - a).coeffs == (0, 0, 0)
    assert (1 + a).coeffs == (2, 2, 3)
