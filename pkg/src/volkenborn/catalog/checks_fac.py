"""Factorial, binomial and central-factorial identities, checked as
polynomial identities in x (or in x and y)."""

from __future__ import annotations

from ..families.triangles import S1, S2, cf_T, cf_t, lah, lah_unsigned
from ..poly import Basis, bi_multiply, substitute_product, substitute_sum
from ._common import (
    BiPolynomial,
    Fraction,
    Polynomial,
    X,
    bx,
    central,
    comb,
    fact,
    ff,
    ff_x,
    ff_y,
    pm,
    psum,
    rf,
    rsum,
    sbinom,
    x_pow,
)
from .registry import check


@check("ro")
def ro(R):
    for n in R.ns():
        yield {"n": n}, X * ff(n), ff(n + 1) + ff(n).scale(n)


@check("idd1")
def idd1(R):
    for n in R.ns():
        rhs = X * psum(ff(k).scale(pm(n - k) * fact(n) // fact(k)) for k in range(n + 1))
        yield {"n": n}, ff(n + 1), rhs


@check("ab6")
def ab6(R):
    for n in R.ns():
        yield {"n": n}, ff(n + 1, 1), X * ff(n) + ff(n)


@check("ab6a")
def ab6a(R):
    for n in R.ns(1):
        yield {"n": n}, ff(n, 1), ff(n) + ff(n - 1).scale(n)


@check("lf1c")
def lf1c(R):
    for m in R.ms():
        for n in R.ns():
            rhs = psum(ff(m + n - k).scale(comb(m, k) * comb(n, k) * fact(k)) for k in range(m + 1))
            yield {"m": m, "n": n}, ff(m) * ff(n), rhs


@check("chu_vandermonde")
def chu_vandermonde(R):
    for n in R.ns():
        lhs = BiPolynomial()
        for k in range(n + 1):
            lhs = lhs + bi_multiply(BiPolynomial.in_x(bx(k)), BiPolynomial.in_y(bx(n - k)))
        yield {"n": n}, lhs, substitute_sum(bx(n))
        for m in R.ms():
            rhs = bx(n, m)
            yield {"n": n, "m": m}, psum(bx(k).scale(comb(m, n - k)) for k in range(n + 1)), rhs


@check("v1a")
def v1a(R):
    for n in R.ns():
        yield {"n": n}, bx(n, 1), bx(n) + bx(n - 1)


@check("gould_x_binom")
def gould_x_binom(R):
    for n in R.ns(1):
        rhs = psum(bx(k).scale(pm(k - n) * k) for k in range(1, n + 1))
        yield {"n": n}, X * bx(n - 1, -2), rhs


@check("gg2_printed")
def gg2_printed(R):
    for n in R.ns():
        yield {"n": n}, bx(n, n, -1), psum(bx(k).scale(pm(k - n)) for k in range(n + 1))


@check("gg2_corrected")
def gg2_corrected(R):
    for n in R.ns():
        yield {"n": n}, bx(n, n, -1), psum(bx(k).scale(pm(k)) for k in range(n + 1))


def _binom_mx(m: int, n: int) -> Polynomial:
    return bx(n).compose(Polynomial([0, m]))


@check("id7")
def id7(R):
    for m in range(0, min(R.m_max, 4) + 1):
        for n in R.ns():
            rhs = psum(
                bx(k).scale(rsum(pm(j) * comb(k, j) * sbinom(m * k - m * j, n) for j in range(k + 1)))
                for k in range(n + 1)
            )
            yield {"m": m, "n": n}, _binom_mx(m, n), rhs


@check("id5")
def id5(R):
    for r in R.rs():
        for n in range(R.n_min, min(R.n_max, 8) + 1):
            rhs = psum(
                bx(k).scale(rsum(pm(j) * comb(k, j) * sbinom(k - j, n) ** r for j in range(k + 1)))
                for k in range(n * r + 1)
            )
            yield {"n": n, "r": r}, bx(n) ** r, rhs


def _k2_sum(n: int) -> Polynomial:
    return psum(bx(k).scale(pm(k) * k * k) for k in range(n + 1))


@check("id6_printed")
def id6_printed(R):
    for n in R.ns(2):
        lhs = X * bx(n - 1, -2) + (X * ff(1, -1)).scale(sbinom(n - 3, n - 2))
        yield {"n": n}, lhs, _k2_sum(n)


@check("id6_corrected")
def id6_corrected(R):
    for n in R.ns(2):
        lhs = (X * bx(n - 1, -2) + X * ff(1, -1) * bx(n - 2, -3)).scale(pm(n))
        yield {"n": n}, lhs, _k2_sum(n)


@check("id1a")
def id1a(R):
    for n in R.ns():
        rhs = psum(
            bx(k).scale(rsum(pm(j) * comb(k, j) * comb(k - j + n, n) for j in range(k + 1)))
            for k in range(n + 1)
        )
        yield {"n": n}, bx(n, n), rhs


@check("id2b")
def id2b(R):
    for n in R.ns():
        rhs = psum(
            x_pow(k).scale(rsum(comb(n, j) * S1(j, k) / fact(j) for j in range(n + 1)))
            for k in range(n + 1)
        )
        yield {"n": n}, bx(n, n), rhs


def biaa_coeff(n: int, k: int) -> Fraction:
    return (
        (2 * n + 1)
        * comb(2 * n, n)
        * comb(n, k)
        * Fraction(2) ** (2 * k - 2 * n)
        / ((2 * k + 1) * comb(2 * k, k))
    )


@check("biaa")
def biaa(R):
    for n in R.ns():
        rhs = psum(bx(k).scale(biaa_coeff(n, k)) for k in range(n + 1))
        yield {"n": n}, bx(n, n + Fraction(1, 2)), rhs


@check("bi1b4_printed")
def bi1b4_printed(R):
    for n in R.ns():
        rhs = psum(bx(k).scale(pm(k)) for k in range(1, n + 1))
        yield {"n": n}, bx(n, n, -1).scale(pm(n)), rhs


@check("bi1b4_corrected")
def bi1b4_corrected(R):
    for n in R.ns():
        rhs = psum(bx(k).scale(pm(k)) for k in range(1, n + 1))
        yield {"n": n}, bx(n, n, -1) - 1, rhs


@check("schlomilch")
def schlomilch(R):
    for n in R.ns():
        for k in range(n + 1):
            rhs = rsum(
                pm(j) * sbinom(n + j - 1, k - 1) * comb(2 * n - k, n - k - j) * S2(n - k + j, j)
                for j in range(n - k + 1)
            )
            yield {"n": n, "k": k}, S1(n, k), rhs


def osgood_c(k: int, l: int, m: int, signed: bool) -> Fraction:
    return rsum(
        (1 if signed else pm(k - j)) * S1(k, j) * S2(j, l) * S2(j, m) for j in range(0 if signed else 1, k + 1)
    )


def _osgood(R, signed: bool, second_y: bool, lo: int):
    kmax = min(R.n_max, 6)
    for k in range(max(R.n_min, lo), kmax + 1):
        lhs = substitute_product(ff(k))
        rhs = BiPolynomial()
        for l in range(lo, k + 1):
            for m in range(lo, k + 1):
                c = osgood_c(k, l, m, signed) if k else Fraction(1)
                if c:
                    second = ff_y(m) if second_y else ff_x(m)
                    rhs = rhs + bi_multiply(ff_x(l), second).scale(c)
        yield {"k": k}, lhs, rhs


@check("osgood_printed")
def osgood_printed(R):
    # stated constants first, then the expansion with both factors in x
    for k, l, m, v in ((1, 1, 1, 1), (2, 1, 1, 0), (3, 1, 2, 0), (3, 2, 1, 0)):
        yield {"C": f"({k};{l},{m})"}, osgood_c(k, l, m, signed=False), Fraction(v)
    yield from _osgood(R, signed=False, second_y=False, lo=1)


@check("osgood_corrected")
def osgood_corrected(R):
    for k, l, m, v in ((1, 1, 1, 1), (2, 1, 1, 0), (3, 1, 2, 0), (3, 2, 1, 0)):
        yield {"C": f"({k};{l},{m})"}, osgood_c(k, l, m, signed=True), Fraction(v)
    yield from _osgood(R, signed=True, second_y=True, lo=0)
    for k in R.ns():
        rhs = BiPolynomial.from_dict({(m, m): S1(k, m) for m in range(k + 1)})
        yield {"k": k, "form": "monomial"}, substitute_product(ff(k)), rhs


@check("lah")
def lah_def(R):
    for n in R.ns(1):
        lhs = ff(n).reflect()
        yield {"n": n, "form": "(-x)_(n)"}, lhs, psum(ff(k).scale(lah(n, k)) for k in range(1, n + 1))
        yield {"n": n, "form": "x_(n)"}, ff(n), psum(ff(k).reflect().scale(lah(n, k)) for k in range(1, n + 1))
        yield {"n": n, "form": "x^(n)"}, rf(n), psum(ff(k).scale(lah_unsigned(n, k)) for k in range(1, n + 1))
        for k in range(0, n + 2):
            closed = Fraction(pm(n) * fact(n), fact(k)) * sbinom(n - 1, k - 1) if k >= 1 else Fraction(0)
            yield {"n": n, "k": k, "form": "closed"}, lah(n, k), closed
            yield {"n": n, "k": k, "form": "recurrence"}, lah(n + 1, k), -(n + k) * lah(n, k) - lah(n, k - 1)
            yield {"n": n, "k": k, "form": "stirling"}, lah(n, k), rsum(pm(j) * S1(n, j) * S2(j, k) for j in range(n + 1))


@check("cf_round_trip")
def cf_round_trip(R):
    for n in R.ns():
        prod = Polynomial.term(n, 1, Basis.CENTRAL)
        yield {"n": n, "form": "t"}, prod, psum(x_pow(k).scale(cf_t(n, k)) for k in range(n + 1))
        yield {"n": n, "form": "T"}, x_pow(n), psum(central(k).scale(cf_T(n, k)) for k in range(n + 1))
        for j in range(n + 1):
            yield {"n": n, "j": j}, rsum(cf_t(n, k) * cf_T(k, j) for k in range(n + 1)), Fraction(int(n == j))
    yield {"n": 0, "form": "boundary"}, (cf_t(0, 0), cf_T(0, 0)), (1, 1)


def _linear_product_poly(factors) -> Polynomial:
    out = Polynomial.constant(1)
    for f in factors:
        out = out * f
    return out


def butzer_even_poly(n: int) -> Polynomial:
    return _linear_product_poly([X * X] + [X * X - k * k for k in range(1, n)])


def butzer_odd_poly(n: int) -> Polynomial:
    return _linear_product_poly([X] + [X * X - Fraction((2 * k - 1) ** 2, 4) for k in range(1, n + 1)])


@check("butzer_even")
def butzer_even(R):
    for n in R.ns(1):
        yield {"n": n}, central(2 * n), butzer_even_poly(n)


@check("butzer_odd")
def butzer_odd(R):
    for n in R.ns():
        yield {"n": n}, central(2 * n + 1), butzer_odd_poly(n)


@check("butzer_rec")
def butzer_rec(R):
    for n in R.ns(2):
        yield {"n": n}, central(n), (X * X - Fraction(n - 2, 2) ** 2) * central(n - 2)


def _iterate(p: Polynomial, op, j: int) -> Polynomial:
    for _ in range(j):
        p = op(p)
    return p


@check("delta_t")
def delta_t(R):
    for n in R.ns():
        for j in range(n + 1):
            dn = _iterate(x_pow(n), Polynomial.central_diff, j)
            yield {"n": n, "j": j, "form": "delta at 0"}, dn(0), fact(j) * cf_T(n, j)
            exp = psum(central(k - j).scale(fact(j) * comb(k, j) * cf_T(n, k)) for k in range(j, n + 1))
            yield {"n": n, "j": j, "form": "delta"}, dn, exp
            dc = _iterate(central(n), Polynomial.derivative, j)
            yield {"n": n, "j": j, "form": "D at 0"}, dc(0), fact(j) * cf_t(n, j)
            exp = psum(x_pow(k - j).scale(fact(j) * comb(k, j) * cf_t(n, k)) for k in range(j, n + 1))
            yield {"n": n, "j": j, "form": "D"}, dc, exp
