"""Property-based checks of the structural invariants."""

from fractions import Fraction

from hypothesis import given, settings, strategies as st

import oracles
from volkenborn.arith import INFINITY, format_rational, ord_p, p_norm, parse_rational
from volkenborn.integrate import fermionic, fermionic_value, volkenborn, volkenborn_value
from volkenborn.poly import Basis, Polynomial, central
from volkenborn.series import TruncatedSeries

PRIMES = st.sampled_from([2, 3, 5, 7, 11, 13])
small_int = st.integers(min_value=-100, max_value=100)
rationals = st.builds(Fraction, small_int, st.integers(min_value=1, max_value=100))
nonzero = rationals.filter(lambda q: q != 0)


def polys(max_degree=12):
    return st.builds(
        Polynomial,
        st.lists(rationals, min_size=0, max_size=max_degree + 1),
        st.sampled_from(list(Basis)),
    )


@given(rationals)
def test_canonical_form(x):
    from math import gcd

    assert gcd(abs(x.numerator), x.denominator) == 1 and x.denominator >= 1
    assert parse_rational(format_rational(x)) == x


@given(rationals, rationals, PRIMES)
def test_ultrametric(x, y, p):
    nx, ny, ns = p_norm(x, p), p_norm(y, p), p_norm(x + y, p)
    assert ns <= max(nx, ny)
    if nx != ny:
        assert ns == max(nx, ny)


@given(rationals, rationals, PRIMES)
def test_norm_is_multiplicative(x, y, p):
    assert p_norm(x * y, p) == p_norm(x, p) * p_norm(y, p)


@given(nonzero, PRIMES)
def test_valuation_of_inverse(x, p):
    assert ord_p(1 / x, p) == -ord_p(x, p)
    assert ord_p(0, p) is INFINITY


@settings(max_examples=50)
@given(nonzero, st.lists(rationals, min_size=0, max_size=10))
def test_series_inverse_is_two_sided(c0, rest):
    K = 10
    a = TruncatedSeries([c0] + rest, K)
    assert a * a.inverse() == TruncatedSeries.constant(1, K)
    assert a.inverse() * a == TruncatedSeries.constant(1, K)


@settings(max_examples=40)
@given(st.lists(rationals, min_size=0, max_size=8))
def test_log_exp_composition(cs):
    from volkenborn.series import expm1_series, log1p_series

    K = 8
    inner = TruncatedSeries([0] + cs, K)
    assert log1p_series(K).compose(expm1_series(K).compose(inner)) == inner


@settings(max_examples=100)
@given(polys(), st.sampled_from(list(Basis)))
def test_basis_round_trip(p, target):
    assert p.convert(target).convert(p.basis) == p


@settings(max_examples=60)
@given(polys(), st.sampled_from(list(Basis)), st.lists(rationals, min_size=1, max_size=20))
def test_evaluate_commutes_with_convert(p, target, points):
    q = p.convert(target)
    for a in points:
        assert q.evaluate(a) == p.evaluate(a)


@settings(max_examples=200, deadline=None)
@given(polys())
def test_dual_routes_agree(p):
    # a disagreement raises RouteDisagreement
    assert volkenborn(p).agrees and fermionic(p).agrees


@settings(max_examples=40, deadline=None)
@given(polys(max_degree=6))
def test_integrals_match_interpolation_oracle(p):
    cs = p.to_monomial().coeffs
    assert volkenborn_value(p) == oracles.volkenborn(cs)
    assert fermionic_value(p) == oracles.fermionic(cs)


@settings(max_examples=60, deadline=None)
@given(polys(8), polys(8), rationals, rationals)
def test_linearity(p, q, a, b):
    combo = p.scale(a) + q.scale(b)
    assert volkenborn_value(combo) == a * volkenborn_value(p) + b * volkenborn_value(q)
    assert fermionic_value(combo) == a * fermionic_value(p) + b * fermionic_value(q)


@settings(max_examples=60, deadline=None)
@given(st.lists(rationals, min_size=0, max_size=7))
def test_odd_polynomials_follow_derivative_rule(cs):
    odd = Polynomial([c if i % 2 else 0 for i, c in enumerate(cs)])
    assert volkenborn_value(odd) == -odd.derivative()(0) / 2


@given(st.integers(min_value=1, max_value=8), nonzero)
def test_even_central_factorials_vanish_fermionically(n, c):
    assert fermionic_value(central(2 * n).scale(c)) == 0
