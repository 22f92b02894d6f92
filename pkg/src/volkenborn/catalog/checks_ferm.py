"""Fermionic-integral formulas, each compared against the exact integral of
the stated integrand."""

from __future__ import annotations

from ..arith import falling
from ..families.numbers import B_count, changhee, euler, harmonic_binomial, peters_number, peters_poly
from ..families.triangles import S1, S2, cf_t, lah_unsigned
from ..poly import substitute_product
from . import checks_fac as fac
from ._common import (
    Fm,
    Fraction,
    X,
    bernstein,
    bx,
    central,
    comb,
    fact,
    ff,
    pm,
    rf,
    rsum,
    sbinom,
    x_pow,
)
from .checks_volk import harm_product
from .registry import check

E = euler


def _two(k: int) -> Fraction:
    return Fraction(1, 2**k)


@check("est3")
def est3(R):
    for n in R.ns():
        val = Fm(bx(n))
        yield {"n": n}, val, pm(n) * _two(n)
        yield {"n": n, "route": "Witt"}, val, rsum(S1(n, k) * E(k) for k in range(n + 1)) / fact(n)


@check("ak2")
def ak2(R):
    for n in R.ns():
        val = Fm(ff(n))
        yield {"n": n}, val, pm(n) * fact(n) * _two(n)
        yield {"n": n, "form": "Ch_n"}, val, changhee(n)


@check("ca1")
def ca1(R):
    for n in R.ns(1):
        val = Fm(bx(n, n - 1))
        yield {"n": n, "form": "expansion"}, val, rsum(sbinom(n - 1, n - m) * Fm(bx(m)) for m in range(n + 1))
        yield {"n": n, "form": "sum from 1"}, val, rsum(pm(m) * comb(n - 1, m - 1) * _two(m) for m in range(1, n + 1))
        yield {"n": n, "form": "sum from 0"}, val, rsum(pm(m) * sbinom(n - 1, n - m) * _two(m) for m in range(n + 1))


@check("fi1")
def fi1(R):
    for n in R.ns():
        rhs = fact(n) * rsum(pm(m) * sbinom(n - 1, n - m) * _two(m) for m in range(n + 1))
        yield {"n": n}, Fm(ff(n, n - 1)), rhs


@check("ab7")
def ab7(R):
    for n in R.ns(1):
        yield {"n": n}, Fm(X * ff(n)), pm(n) * (n - 1) * fact(n) * _two(n + 1)


def _ab7a(R, lo: int):
    for n in R.ns(lo):
        val = Fm(X * rf(n))
        yield {"n": n, "form": "Lah"}, val, rsum(lah_unsigned(n, k) * Fm(X * ff(k)) for k in range(n + 1))
        rhs = rsum(pm(k) * comb(n - 1, k - 1) * (k - 1) * fact(n) * _two(k + 1) for k in range(1, n + 1))
        yield {"n": n}, val, rhs


@check("ab7a_printed")
def ab7a_printed(R):
    yield from _ab7a(R, 0)


@check("ab7a_positive_n")
def ab7a_positive_n(R):
    yield from _ab7a(R, 1)


def _v1b_f(R, lo: int):
    for n in R.ns(lo):
        yield {"n": n}, Fm(ff(n, 1)), pm(n + 1) * fact(n) * _two(n)


@check("v1b_f_printed")
def v1b_f_printed(R):
    yield from _v1b_f(R, 0)


@check("v1b_f_positive_n")
def v1b_f_positive_n(R):
    yield from _v1b_f(R, 1)


@check("xratio_f")
def xratio_f(R):
    for n in R.ns():
        rhs = rsum(pm(n) * (fact(n) // fact(k)) * fact(k) * _two(k) for k in range(n + 1))
        yield {"n": n}, Fm(ff(n, -1)), rhs


def _lf1y(R, printed: bool):
    start = 1 if printed else 0
    for k in range(R.n_min, min(R.n_max, 6) + 1):
        val = Fm(substitute_product(ff(k)).integrate_out("x", Fm))
        rhs = rsum(
            pm(l + m) * _two(l + m) * fact(l) * fact(m) * fac.osgood_c(k, l, m, not printed)
            for l in range(start, k + 1)
            for m in range(start, k + 1)
        )
        yield {"k": k}, val, rhs


@check("lf1y_printed")
def lf1y_printed(R):
    yield from _lf1y(R, True)


@check("lf1y_corrected")
def lf1y_corrected(R):
    yield from _lf1y(R, False)


@check("lf1z")
def lf1z(R):
    for k in range(R.n_min, min(R.n_max, 8) + 1):
        val = Fm(substitute_product(ff(k)).integrate_out("x", Fm))
        yield {"k": k}, val, rsum(S1(k, m) * E(m) ** 2 for m in range(k + 1))


def _k2_over_2k(n: int) -> Fraction:
    return rsum(k * k * _two(k) for k in range(n + 1))


@check("id6_f_printed")
def id6_f_printed(R):
    for n in R.ns(2):
        integrand = X * bx(n - 1, -2) + (X * ff(1, -1)).scale(sbinom(n - 3, n - 2))
        yield {"n": n}, Fm(integrand), pm(n) * _k2_over_2k(n)


@check("id6_f_corrected")
def id6_f_corrected(R):
    for n in R.ns(2):
        integrand = X * bx(n - 1, -2) + X * ff(1, -1) * bx(n - 2, -3)
        yield {"n": n}, Fm(integrand), pm(n) * _k2_over_2k(n)


@check("id3_id4")
def id3_id4(R):
    for n in R.ns():
        val = Fm(bx(n, n))
        r3 = rsum(
            pm(k) * _two(k) * rsum(pm(j) * comb(k, j) * comb(k - j + n, n) for j in range(k + 1))
            for k in range(n + 1)
        )
        r4 = rsum(E(k) * rsum(comb(n, j) * S1(j, k) / fact(j) for j in range(n + 1)) for k in range(n + 1))
        yield {"n": n, "form": "Mahler"}, val, r3
        yield {"n": n, "form": "Stirling"}, val, r4


@check("id7_f")
def id7_f(R):
    for m in range(max(1, R.m_min), min(R.m_max, 4) + 1):
        for n in R.ns():
            rhs = rsum(
                pm(k) * _two(k) * rsum(pm(j) * comb(k, j) * sbinom(m * k - m * j, n) for j in range(k + 1))
                for k in range(n + 1)
            )
            yield {"m": m, "n": n}, Fm(fac._binom_mx(m, n)), rhs


@check("ir1")
def ir1(R):
    for r in range(0, R.r_max + 1):
        for n in range(R.n_min, min(R.n_max, 8) + 1):
            rhs = rsum(
                pm(k) * _two(k) * rsum(pm(j) * comb(k, j) * sbinom(k - j, n) ** r for j in range(k + 1))
                for k in range(n * r + 1)
            )
            yield {"n": n, "r": r}, Fm(bx(n) ** r), rhs


@check("harm_f_printed")
def harm_f_printed(R):
    for n in R.ns():
        yield {"n": n}, Fm(bx(n, n, -1)), pm(n) * rsum(_two(k) for k in range(1, n + 1))


@check("harm_f_corrected")
def harm_f_corrected(R):
    for n in R.ns():
        yield {"n": n}, Fm(bx(n, n, -1)), rsum(_two(k) for k in range(n + 1))


@check("biaa_f")
def biaa_f(R):
    for n in R.ns():
        rhs = (2 * n + 1) * comb(2 * n, n) * rsum(
            pm(k) * comb(n, k) * Fraction(2) ** (k - 2 * n) / ((2 * k + 1) * comb(2 * k, k)) for k in range(n + 1)
        )
        yield {"n": n}, Fm(bx(n, n + Fraction(1, 2))), rhs


def _bernstein_f(R, lo: int):
    one_minus_x = X.scale(-1) + 1
    for n in R.ns(lo):
        yield {"n": n, "form": "reflection"}, Fm(one_minus_x**n), 2 + Fm(x_pow(n))
        yield {"n": n, "k": 0}, Fm(bernstein(0, n)), 2 + E(n)
        for k in range(1, n + 1):
            rhs = comb(n, k) * rsum(pm(n - k - j) * comb(n - k, j) * E(n - j) for j in range(n - k + 1))
            yield {"n": n, "k": k}, Fm(bernstein(k, n)), rhs


@check("bernstein_f_printed")
def bernstein_f_printed(R):
    yield from _bernstein_f(R, 0)


@check("bernstein_f_positive_n")
def bernstein_f_positive_n(R):
    yield from _bernstein_f(R, 1)
    for n in R.ns():
        yield {"n": n, "form": "all n"}, Fm((X.scale(-1) + 1) ** n), 2 - pm(n) * E(n)


@check("as11a")
def as11a(R):
    for m in R.ms():
        for n in R.ns():
            yield {"m": m, "n": n}, Fm(x_pow(m) * ff(n)), rsum(S1(n, k) * E(k + m) for k in range(n + 1))


@check("cft_f")
def cft_f(R):
    for n in R.ns():
        yield {"n": n}, Fm(central(n)), rsum(cf_t(n, k) * E(k) for k in range(n + 1))


@check("cf2_f")
def cf2_f(R):
    for n in R.ns(2):
        rhs = rsum(cf_t(n, k) * E(k) for k in range(n + 1)) + Fraction(n - 2, 2) ** 2 * rsum(
            cf_t(n - 2, k) * E(k) for k in range(n - 1)
        )
        yield {"n": n}, Fm(X * X * central(n - 2)), rhs


@check("cf_even_f")
def cf_even_f(R):
    for n in R.ns(1):
        val = Fm(fac.butzer_even_poly(n))
        yield {"n": n}, val, rsum(cf_t(2 * n, k) * E(2 * k) for k in range(2 * n + 1))
        yield {"n": n, "form": "t(2n,2k)"}, val, rsum(cf_t(2 * n, 2 * k) * E(2 * k) for k in range(n + 1))


@check("biac")
def biac(R):
    for m in R.ms():
        for n in R.ns():
            val = Fm(ff(m) * ff(n, -m))
            yield {"m": m, "n": n}, val, pm(m + n) * fact(m + n) * _two(m + n)
            yield {"m": m, "n": n, "form": "Ch"}, val, changhee(m + n)
            yield {"m": m, "n": n, "form": "Stirling"}, val, rsum(S1(m + n, k) * E(k) for k in range(m + n + 1))


@check("lah_f")
def lah_f(R):
    for m in R.ms():
        for n in R.ns():
            rhs = rsum(
                pm(m + n - k) * comb(m, k) * comb(n, k) * fact(k) * fact(m + n - k) * _two(m + n - k)
                for k in range(m + 1)
            )
            yield {"m": m, "n": n}, Fm(ff(n) * ff(m)), rhs


@check("xvbinr_f")
def xvbinr_f(R):
    for v in range(0, 4):
        for r in range(0, R.r_max + 1):
            for n in range(R.n_min, min(R.n_max, 6) + 1):
                rhs = rsum(
                    rsum(pm(j) * comb(k, j) * sbinom(k - j, n) ** r for j in range(k + 1))
                    * rsum(S1(k, l) * E(v + l) for l in range(k + 1))
                    / fact(k)
                    for k in range(n * r + 1)
                )
                yield {"v": v, "r": r, "n": n}, Fm(x_pow(v) * bx(n) ** r), rhs


@check("bern_sum_f")
def bern_sum_f(R):
    for n in R.ns():
        lhs = rsum(pm(k) * Fm(bernstein(k, n)) for k in range(n + 1))
        p = {"n": n}
        yield {**p, "form": "Euler"}, lhs, rsum(comb(n, j) * Fraction(-2) ** (n - j) * E(n - j) for j in range(n + 1))
        yield {**p, "form": "1-2x"}, lhs, Fm((X.scale(-2) + 1) ** n)
        pairs = [(j, m) for j in range(n + 1) for m in range(n - j + 1)]
        yield {**p, "form": "closed"}, lhs, rsum(
            comb(n, j) * pm(m + n - j) * Fraction(2) ** (n - j - m) * S2(n - j, m) * fact(m) for j, m in pairs
        )
        yield {**p, "form": "Changhee"}, lhs, rsum(
            comb(n, j) * Fraction(-2) ** (n - j) * S2(n - j, m) * changhee(m) for j, m in pairs
        )


@check("peters_f")
def peters_f(R):
    for lam in R.lambdas:
        for mu in R.mus():
            for n in range(R.n_min, min(R.n_max, 8) + 1):
                val = Fm(peters_poly(n, lam, mu))
                s = [peters_number(v, lam, mu) for v in range(n + 1)]
                p = {"n": n, "lambda": lam, "mu": mu}
                yield {**p, "form": "Changhee"}, val, rsum(comb(n, v) * s[v] * changhee(n - v) for v in range(n + 1))
                yield {**p, "form": "factorial"}, val, rsum(
                    pm(n - v) * comb(n, v) * s[v] * fact(n - v) * _two(n - v) for v in range(n + 1)
                )
                ints = [Fm(peters_poly(n - v, lam, mu)) for v in range(n + 1)]
                inverse = rsum(
                    comb(mu, j) * comb(n, v) * falling(lam * j, v) * ints[v]
                    for v in range(n + 1)
                    for j in range(mu + 1)
                )
                yield {**p, "form": "inverse"}, inverse, Fm(ff(n))
                yield {**p, "form": "inverse closed"}, inverse, pm(n) * fact(n) * _two(n)
                stirling = rsum(
                    comb(n, v) * lam**k * B_count(k, mu) * S1(v, k) * ints[v]
                    for v in range(n + 1)
                    for k in range(v + 1)
                )
                yield {**p, "form": "Stirling"}, stirling, changhee(n)
                yield {**p, "form": "Stirling closed"}, stirling, pm(n) * fact(n) * _two(n)


@check("harmprod_f")
def harmprod_f(R):
    for k in R.ns(1):
        rhs = rsum(fact(k) * harmonic_binomial(k, k - n) * E(n) for n in range(k + 1))
        yield {"k": k}, Fm(harm_product(k)), rhs
