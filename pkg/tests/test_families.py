import threading
from fractions import Fraction
from math import factorial

import pytest

import oracles
from volkenborn.families import apostol, bernoulli, bernoulli_poly, euler, euler_poly, euler_star, peters
from volkenborn.families.numbers import ParamFamily, ParamFamilyQuery, apostol_euler_poly, y2, y_family, y1
from volkenborn.families.sequences import SequenceFamily, oracle_values, sequence, y_sequences
from volkenborn.families.triangles import (
    TriangleFamily,
    C,
    S1,
    S2,
    cf_T,
    cf_t,
    even_central,
    lah,
    lah_unsigned,
    triangle,
    triangle_row,
)
from volkenborn.poly import Polynomial


# triangles

def test_stirling1_matches_expanded_falling_factorial():
    for n in range(10):
        assert list(triangle_row("S1", n)) == oracles.stirling1_row(n)
    assert S1(4, 2) == 11


def test_stirling2_matches_partition_count():
    for n in range(8):
        for k in range(n + 1):
            assert S2(n, k) == oracles.stirling2_count(n, k)


def test_lah_matches_ordered_block_count():
    for n in range(7):
        for k in range(n + 1):
            assert lah_unsigned(n, k) == oracles.lah_unsigned(n, k)
    assert lah_unsigned(4, 2) == 36


def test_out_of_range_entries_are_zero():
    assert S1(3, 5) == 0 and S2(2, 4) == 0 and triangle("LAH", 3, -1) == 0
    with pytest.raises(ValueError):
        triangle("S2", -1, 0)


def test_central_factorial_small_t_from_expansion():
    for n in range(12):
        assert [cf_t(n, k) for k in range(n + 1)] == oracles.central_coeffs(n) + [Fraction(0)] * (n + 1 - len(oracles.central_coeffs(n)))
    assert cf_t(6, 4) == -5


def test_central_factorial_tables_are_inverse():
    for n in range(12):
        for m in range(12):
            s = sum((cf_T(n, k) * cf_t(k, m) for k in range(13)), Fraction(0))
            assert s == (1 if n == m else 0)


def test_t10_4_is_minus_820():
    # x^[10] = x^2 (x^2-1)(x^2-4)(x^2-9)(x^2-16), the x^4 coefficient
    assert oracles.central_coeffs(10)[4] == -820
    assert even_central(5, 2)[0] == -820


def test_even_central_rows():
    assert [even_central(4, j)[1] for j in range(5)] == [0, 1, 21, 14, 1]
    assert [even_central(5, j)[0] for j in range(6)] == [0, 576, -820, 273, -30, 1]


def test_triangle_inverse_pair():
    for n in range(13):
        for m in range(13):
            assert sum((S1(n, k) * S2(k, m) for k in range(13)), Fraction(0)) == (1 if n == m else 0)


def test_lah_composition():
    for n in range(11):
        for k in range(n + 1):
            assert lah(n, k) == sum(((-1) ** j * S1(n, j) * S2(j, k) for j in range(n + 1)), Fraction(0))


def test_unsigned_first_kind():
    assert C(5, 2) == 50


def test_lambda_stirling_at_one_is_stirling2():
    for n in range(7):
        for k in range(n + 1):
            assert triangle("LAMBDA_S2", n, k, 1) == S2(n, k)
    with pytest.raises(ValueError):
        triangle("LAMBDA_S2", 3, 1)


def test_concurrent_row_growth():
    out = []

    def work():
        out.append(triangle_row(TriangleFamily.S2, 40))

    threads = [threading.Thread(target=work) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(r == out[0] for r in out)


# Bernoulli and Euler

def test_bernoulli_and_euler_against_recurrences():
    for n in range(30):
        assert bernoulli(n) == oracles.bernoulli(n)
        assert euler(n) == oracles.euler(n)


def test_value_list():
    assert bernoulli(12) == Fraction(-691, 2730)
    assert bernoulli(20) == Fraction(-174611, 330)
    assert euler(3) == Fraction(1, 4)
    assert euler_star(10) == -50521
    assert bernoulli(0) == 1


def test_odd_vanishing():
    assert all(bernoulli(2 * n + 1) == 0 for n in range(1, 15))
    assert all(euler(2 * n) == 0 for n in range(1, 15))
    assert all(euler_star(2 * n + 1) == 0 for n in range(15))


def test_appell_polynomials():
    assert bernoulli_poly(2) == Polynomial([Fraction(1, 6), -1, 1])
    assert euler_poly(3) == Polynomial([Fraction(1, 4), 0, Fraction(-3, 2), 1])
    assert bernoulli_poly(0) == Polynomial([1])


# parametric families

def test_apostol_examples():
    assert apostol("APOSTOL_B", 2, 2) == -4
    assert apostol("FROBENIUS", 2, 2) == 3
    for n in range(10):
        assert apostol("APOSTOL_E", n, 1) == euler(n)
        assert apostol("FROBENIUS", n, -1) == euler(n)


@pytest.mark.parametrize("lam", [2, 3, Fraction(1, 2)])
def test_apostol_euler_bernoulli_relation(lam):
    for n in range(11):
        assert apostol("APOSTOL_E", n, lam) == -Fraction(2, n + 1) * apostol("APOSTOL_B", n + 1, -lam)


def test_apostol_excluded_parameters():
    with pytest.raises(ValueError):
        apostol("APOSTOL_B", 2, 1)
    with pytest.raises(ValueError):
        apostol("APOSTOL_E", 2, -1)
    with pytest.raises(ValueError):
        apostol("FROBENIUS", 2, 1)


def test_apostol_euler_poly_at_zero():
    assert apostol_euler_poly(4, 3).evaluate(0) == apostol("APOSTOL_E", 4, 3)


def test_peters_examples():
    # 1/(2+t) is half the Changhee series, so s_2(0;1,1) = Ch_2/2
    assert peters(2, 0, 1, 1) == Fraction(1, 4)
    assert peters(2, 3, 1, 0) == 6
    assert peters(0, None, 1, 2) == Fraction(1, 4)
    for n in range(9):
        assert 2 * peters(n, 0, 1, 1) == sequence("CHANGHEE1", n)


def test_y_families():
    for k in range(6):
        assert y1(0, k, 1) == Fraction(2**k, factorial(k))
    assert y2(0, 2) == 1
    q = ParamFamilyQuery(ParamFamily.Y2_POLY, 0, lam=Fraction(3), x=Fraction(5))
    assert y_family(q) == y2(0, 3)
    with pytest.raises(ValueError):
        y2(2, 1)


# sequences

def test_sequence_examples():
    assert sequence("DAEHEE1", 3) == Fraction(-3, 2)
    assert sequence("HARMONIC", 2) == Fraction(11, 6)
    assert sequence("FUBINI", 4) == 75 == oracles.ordered_set_partitions(4)
    assert y_sequences(2, "B") == Fraction(-1, 5)
    assert y_sequences(1, "E") == 0
    assert y_sequences(0, "B") == 1


def test_closed_forms_up_to_20():
    for n in range(21):
        assert sequence("DAEHEE1", n) == Fraction((-1) ** n * factorial(n), n + 1)
        assert sequence("CHANGHEE1", n) == Fraction((-1) ** n * factorial(n), 2**n)


@pytest.mark.parametrize("fam", [f for f in SequenceFamily if f.value not in ("Y_OF_B", "Y_OF_E")])
def test_every_family_matches_its_series_oracle(fam):
    vals = oracle_values(fam, 16)
    assert [sequence(fam, n) for n in range(17)] == vals


def test_changhee_through_euler():
    for n in range(13):
        assert sequence("CHANGHEE1", n) == sum((S1(n, k) * euler(k) for k in range(n + 1)), Fraction(0))


def test_rising_factorial_integrals():
    for n in range(8):
        assert sequence("DAEHEE2", n) == oracles.volkenborn(oracles.rising_coeffs(n))
        assert sequence("CHANGHEE2", n) == oracles.fermionic(oracles.rising_coeffs(n))


def test_y_of_e_vanishes():
    assert all(y_sequences(n, "E") == 0 for n in range(1, 9))


def test_y_sequences_against_oracle_integral():
    for n in range(7):
        integrand = oracles.poly_mul(oracles.falling_coeffs(n), oracles.rising_coeffs(n))
        assert y_sequences(n, "B") == oracles.volkenborn(integrand)
        assert y_sequences(n, "E") == oracles.fermionic(integrand)


def test_negative_index_rejected():
    with pytest.raises(ValueError):
        sequence("BERNOULLI", -1)
