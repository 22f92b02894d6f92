from fractions import Fraction
from math import factorial

import pytest

import oracles
from volkenborn.series import (
    TruncatedSeries,
    binom_pow,
    exp_series,
    expm1_series,
    log1p_series,
    std_series,
)
from volkenborn.families.triangles import S2


def T(cs, K):
    return TruncatedSeries(cs, K)


def test_product_of_one_plus_minus_t():
    assert T([1, 1], 3) * T([1, -1], 3) == T([1, 0, -1], 3)


def test_exp_times_exp_negated_is_one():
    assert exp_series(4) * exp_series(4, -1) == TruncatedSeries.constant(1, 4)


def test_mismatched_orders_raise():
    with pytest.raises(ValueError):
        T([1, 1], 3) + T([1, 1], 4)
    with pytest.raises(ValueError):
        T([1, 1], 3) * T([1, 1], 4)


def test_inverse_of_one_minus_t_is_geometric():
    assert T([1, -1], 3).inverse() == T([1, 1, 1, 1], 3)


def test_inverse_needs_nonzero_constant():
    with pytest.raises(ZeroDivisionError):
        T([0, 1], 3).inverse()


def test_bernoulli_from_inverse():
    K = 12
    q = (exp_series(K + 1) - 1).shift_down().with_order(K)
    vals = q.inverse().egf_values()
    assert vals[2] == Fraction(1, 6)
    assert vals == [oracles.bernoulli(n) for n in range(K + 1)]


def test_fubini_from_inverse():
    s = T([2], 6) - exp_series(6)
    assert s.inverse()[4] * factorial(4) == 75 == oracles.ordered_set_partitions(4)
    # halving the series doubles its inverse
    assert (s / 2).inverse()[4] * factorial(4) == 150


def test_log_after_expm1_is_identity():
    for K in (5, 8):
        t = TruncatedSeries.variable(K)
        assert log1p_series(K).compose(expm1_series(K)) == t
        assert expm1_series(K).compose(log1p_series(K)) == t


def test_stirling2_from_composition():
    K = 6
    s = expm1_series(K) ** 2 / 2
    assert s.egf_values()[4] == 7 == S2(4, 2)
    for k in range(4):
        sk = expm1_series(K) ** k / factorial(k)
        assert sk.egf_values() == [Fraction(oracles.stirling2_count(n, k)) for n in range(K + 1)]


def test_compose_rejects_nonzero_constant():
    with pytest.raises(ValueError):
        exp_series(4).compose(T([1, 1], 4))


def test_binom_pow_examples():
    assert binom_pow(2, 4) == T([1, 2, 1], 4)
    assert binom_pow(-1, 3) == T([1, -1, 1, -1], 3)
    assert binom_pow(Fraction(1, 2), 4)[2] == Fraction(-1, 8)


def test_std_series_examples():
    assert list(std_series("log1p", 4)) == [0, 1, Fraction(-1, 2), Fraction(1, 3), Fraction(-1, 4)]
    assert list(std_series("exp", 3)) == [1, 1, Fraction(1, 2), Fraction(1, 6)]
    b2 = std_series("t_over_log1p", 6).egf_values()
    # b_n(0) is the integral of u_(n) over [0, 1]
    for n in range(7):
        cs = oracles.falling_coeffs(n)
        assert b2[n] == sum(Fraction(c) / (i + 1) for i, c in enumerate(cs))
    assert b2[2] == Fraction(-1, 6)


def test_truncation_never_leaks():
    a = T([1] * 6, 5)
    assert len((a * a).coeffs) == 6
    assert (a * a)[5] == 6
