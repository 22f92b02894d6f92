from fractions import Fraction

import pytest

from volkenborn.arith import INFINITY, Q, binom, falling, format_rational, is_prime, ord_p, p_norm, parse_rational, rising


def test_field_ops_are_exact():
    assert Fraction(1, 6) + Fraction(-1, 2) == Fraction(-1, 3)
    assert Fraction(-691, 2730) * 2730 == -691
    z = Q(Fraction(0, 7))
    assert (z.numerator, z.denominator) == (0, 1)


def test_division_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        Fraction(1, 3) / Fraction(0)


@pytest.mark.parametrize("x, p, v", [(50, 5, 2), (Fraction(1, 9), 3, -2), (Fraction(-691, 2730), 7, -1), (1, 2, 0)])
def test_ord_p_values(x, p, v):
    assert ord_p(x, p) == v


def test_ord_of_zero_is_infinity():
    assert ord_p(0, 7) is INFINITY
    assert INFINITY > 10**9
    assert not INFINITY < 3


@pytest.mark.parametrize("bad", [1, 4, 9, 0, -3])
def test_non_prime_rejected(bad):
    with pytest.raises(ValueError):
        ord_p(5, bad)
    with pytest.raises(ValueError):
        p_norm(5, bad)


def test_p_norm_values():
    assert p_norm(Fraction(1, 6), 2) == 2
    assert p_norm(50, 5) == Fraction(1, 25)
    assert p_norm(0, 11) == 0


def test_product_formula():
    for x in (Fraction(-691, 2730), Fraction(1, 6)):
        primes = [p for p in range(2, 3000) if is_prime(p) and (x.numerator * x.denominator) % p == 0]
        prod = abs(x)
        for p in primes:
            prod *= p_norm(x, p)
        assert prod == 1


def test_serialization_round_trip():
    assert format_rational(Fraction(-691, 2730)) == "-691/2730"
    assert format_rational(Fraction(4, 2)) == "2"
    for s in ("-691/2730", "0", "7", "-1/2"):
        assert format_rational(parse_rational(s)) == s
    with pytest.raises(ValueError):
        parse_rational("1/x")


def test_generalized_factorials():
    assert falling(5, 3) == 60
    assert rising(Fraction(1, 2), 2) == Fraction(3, 4)
    assert binom(Fraction(1, 2), 2) == Fraction(-1, 8)
    assert binom(-1, 3) == -1
    assert binom(4, -1) == 0
