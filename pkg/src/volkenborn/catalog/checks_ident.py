"""Identities among Bernoulli, Euler, Daehee, Changhee and Peters numbers,
checked as scalar equalities (integrated forms are evaluated exactly)."""

from __future__ import annotations

from ..arith import falling
from ..families.numbers import (
    B_count,
    bernoulli,
    bernoulli_poly,
    changhee,
    daehee,
    euler,
    euler_poly,
    peters_number,
    y2,
    y2_poly,
)
from ..families.triangles import S1, S2, cf_T, cf_t
from ._common import Fm, Fraction, Polynomial, V, X, bernstein, comb, fact, pm, psum, rsum, x_pow
from .registry import check

B = bernoulli
E = euler


def _af7c_lhs(n: int, l: int) -> Polynomial:
    return psum(x_pow(j + l).scale(Fraction(comb(n, j), j + l)) for j in range(n + 1))


def _af7c_rhs(n: int, l: int) -> Polynomial:
    return psum(
        ((X + 1) ** (n + k) - 1).scale(Fraction(pm(l - k) * comb(l - 1, l - k), n + k)) for k in range(1, l + 1)
    )


def _af(R, numbers, poly, corollary_only: bool):
    for l in ([1] if corollary_only else range(1, 5)):
        for n in R.ns():
            p = {"n": n, "l": l}
            if not corollary_only:
                yield {**p, "form": "polynomial"}, _af7c_lhs(n, l), _af7c_rhs(n, l)
            lhs = rsum(comb(n, j) * numbers(j + l) / (j + l) for j in range(n + 1))
            rhs = rsum(
                Fraction(pm(l - k) * comb(l - 1, l - k), n + k) * (poly(n + k)(1) - numbers(0)) for k in range(1, l + 1)
            )
            yield p, lhs, rhs


@check("af6b")
def af6b(R):
    yield from _af(R, B, bernoulli_poly, False)


@check("af6b_corollary")
def af6b_corollary(R):
    yield from _af(R, B, bernoulli_poly, True)


@check("af8e")
def af8e(R):
    yield from _af(R, E, euler_poly, False)


@check("af8e_corollary")
def af8e_corollary(R):
    yield from _af(R, E, euler_poly, True)


def _cf_inverse(R, numbers, printed: bool):
    for n in R.ns():
        if printed:
            rhs = rsum(cf_T(n, k) * cf_t(j, k) * numbers(j) for k in range(n + 1) for j in range(k + 1))
        else:
            rhs = rsum(cf_T(n, k) * cf_t(k, j) * numbers(j) for k in range(n + 1) for j in range(k + 1))
        yield {"n": n}, numbers(n), rhs


@check("cf_tb_printed")
def cf_tb_printed(R):
    yield from _cf_inverse(R, B, True)


@check("cf_tb_corrected")
def cf_tb_corrected(R):
    yield from _cf_inverse(R, B, False)


@check("cf_te_printed")
def cf_te_printed(R):
    yield from _cf_inverse(R, E, True)


@check("cf_te_corrected")
def cf_te_corrected(R):
    yield from _cf_inverse(R, E, False)


def _bernstein_tail(n: int) -> Fraction:
    return rsum(
        pm(k) * comb(n, k) * rsum(pm(n - k - j) * comb(n - k, j) * E(n - j) for j in range(n - k + 1))
        for k in range(1, n + 1)
    )


def _euler_bernstein(R, printed: bool):
    for n in R.ns(0 if printed else 1):
        weight = (lambda j: 1) if printed else (lambda j: comb(n, j))
        head = rsum(weight(j) * Fraction(-2) ** (n - j) * E(n - j) for j in range(n + 1))
        yield {"n": n}, E(n), head - _bernstein_tail(n) - 2
        if not printed:
            split = Fm(bernstein(0, n)) + rsum(pm(k) * Fm(bernstein(k, n)) for k in range(1, n + 1))
            yield {"n": n, "form": "integrals"}, split, head


@check("euler_bernstein_rel_printed")
def euler_bernstein_rel_printed(R):
    yield from _euler_bernstein(R, True)


@check("euler_bernstein_rel_corrected")
def euler_bernstein_rel_corrected(R):
    yield from _euler_bernstein(R, False)


@check("bernstein_zero_sum")
def bernstein_zero_sum(R):
    for n in R.ns():
        lhs = rsum(
            comb(n, j) * Fraction(-2) ** (n - j) * (E(n - j) - rsum(S2(n - j, m) * changhee(m) for m in range(n - j + 1)))
            for j in range(n + 1)
        )
        yield {"n": n}, lhs, Fraction(0)


@check("stirling_bern_double")
def stirling_bern_double(R):
    for n in R.ns():
        pairs = [(j, m) for j in range(n + 1) for m in range(n - j + 1)]
        lhs = rsum(
            comb(n, j) * pm(n + m - j) * Fraction(2 ** (n - j) * S2(n - j, m) * fact(m), m + 1) for j, m in pairs
        )
        rhs = rsum(
            comb(n, j) * Fraction(-2) ** (n - j) * S2(n - j, m) * S1(m, l) * B(l) for j, m in pairs for l in range(m + 1)
        )
        yield {"n": n}, lhs, rhs


def _peters_cases(R, n_cap: int = 7):
    for lam in R.lambdas:
        for mu in R.mus():
            for n in range(R.n_min, min(R.n_max, n_cap) + 1):
                s = [peters_number(v, lam, mu) for v in range(n + 1)]
                yield {"n": n, "lambda": lam, "mu": mu}, lam, mu, n, s


def _ay1c_weight(n: int, v: int, lam, mu: int) -> Fraction:
    return comb(n, v) * rsum(lam**k * B_count(k, mu) * S1(v, k) for k in range(v + 1))


def _stirling_b(r: int) -> Fraction:
    return rsum(S1(r, l) * B(l) for l in range(r + 1))


@check("daehee_peters")
def daehee_peters(R):
    for p, lam, mu, n, s in _peters_cases(R):
        lhs = rsum(
            _ay1c_weight(n, v, lam, mu)
            * rsum(comb(n - v, m) * s[m] * _stirling_b(n - v - m) for m in range(n - v + 1))
            for v in range(n + 1)
        )
        yield {**p, "form": "D_n"}, daehee(n), lhs
        yield {**p, "form": "closed"}, lhs, Fraction(pm(n) * fact(n), n + 1)
        yield {**p, "form": "Stirling"}, lhs, rsum(S1(n, v) * B(v) for v in range(n + 1))


def _inverse_sum(n: int, lam, mu: int, inner) -> Fraction:
    return rsum(
        comb(mu, j) * comb(n, v) * falling(lam * j, v) * inner(n - v)
        for v in range(n + 1)
        for j in range(mu + 1)
    )


def _peters_fact(R, printed: bool):
    for p, lam, mu, n, s in _peters_cases(R):
        target = Fraction(pm(n) * fact(n), n + 1)
        with_d = _inverse_sum(n, lam, mu, lambda r: rsum(comb(r, l) * s[l] * daehee(r - l) for l in range(r + 1)))
        yield {**p, "form": "Daehee"}, with_d, target
        if printed:
            def doubled(r):
                return rsum(
                    comb(r, l) * s[l] * rsum(comb(r - l, m) * s[m] * _stirling_b(m) for m in range(r - l + 1))
                    for l in range(r + 1)
                )
        else:
            def doubled(r):
                return rsum(comb(r, l) * s[l] * _stirling_b(r - l) for l in range(r + 1))
        yield {**p, "form": "Stirling"}, _inverse_sum(n, lam, mu, doubled), target
        top = (lambda r, l: fact(r)) if printed else (lambda r, l: fact(r - l))
        factorial = _inverse_sum(
            n, lam, mu, lambda r: rsum(pm(r - l) * comb(r, l) * s[l] * Fraction(top(r, l), r - l + 1) for l in range(r + 1))
        )
        yield {**p, "form": "factorial"}, factorial, target


@check("peters_fact_printed")
def peters_fact_printed(R):
    yield from _peters_fact(R, True)


@check("peters_fact_corrected")
def peters_fact_corrected(R):
    yield from _peters_fact(R, False)


@check("changhee_peters")
def changhee_peters(R):
    for p, lam, mu, n, s in _peters_cases(R):
        yy3 = rsum(
            _ay1c_weight(n, v, lam, mu) * rsum(comb(n - v, m) * s[m] * changhee(n - v - m) for m in range(n - v + 1))
            for v in range(n + 1)
        )
        yield {**p, "form": "Ch_n"}, changhee(n), yy3
        cor = rsum(
            _ay1c_weight(n, v, lam, mu)
            * rsum(
                pm(n - v - m) * comb(n - v, m) * s[m] * fact(n - v - m) * Fraction(1, 2 ** (n - v - m))
                for m in range(n - v + 1)
            )
            for v in range(n + 1)
        )
        yield {**p, "form": "corollary"}, cor, pm(n) * fact(n) * Fraction(1, 2**n)


def _changhee_inverse(R, printed: bool):
    for p, lam, mu, n, s in _peters_cases(R):
        target = pm(n) * fact(n) * Fraction(1, 2**n)
        with_ch = _inverse_sum(n, lam, mu, lambda r: rsum(comb(r, l) * s[l] * changhee(r - l) for l in range(r + 1)))
        yield {**p, "form": "Changhee"}, with_ch, target
        top = (lambda r, l: 1) if printed else (lambda r, l: fact(r - l))
        yy2 = _inverse_sum(
            n, lam, mu, lambda r: rsum(pm(r - l) * comb(r, l) * s[l] * Fraction(top(r, l), 2 ** (r - l)) for l in range(r + 1))
        )
        yield {**p, "form": "Ch_n"}, changhee(n), yy2
        yield {**p, "form": "corollary"}, yy2, target


@check("changhee_peters_inverse_printed")
def changhee_peters_inverse_printed(R):
    yield from _changhee_inverse(R, True)


@check("changhee_peters_inverse_corrected")
def changhee_peters_inverse_corrected(R):
    yield from _changhee_inverse(R, False)


def _y2_lambdas(R):
    return [lam for lam in R.lambdas if lam != 1]


@check("changhee_y2")
def changhee_y2(R):
    for lam in _y2_lambdas(R):
        for n in R.ns():
            p = {"n": n, "lambda": lam}
            lhs = rsum(comb(n, j) * lam ** (n - j) * y2(j, lam) * changhee(n - j) for j in range(n + 1))
            rhs = rsum(
                pm(n) * fact(j) * fact(n - j) * comb(n, j) * lam ** (n + j) / (2**n * (lam - 1) ** (j + 1))
                for j in range(n + 1)
            )
            yield p, lhs, rhs
            yield {**p, "form": "integral"}, Fm(y2_poly(n, lam)), lhs


@check("daehee_y2")
def daehee_y2(R):
    for lam in _y2_lambdas(R):
        for n in R.ns():
            p = {"n": n, "lambda": lam}
            lhs = rsum(comb(n, j) * lam ** (n - j) * y2(j, lam) * daehee(n - j) for j in range(n + 1))
            rhs = 2 * rsum(
                pm(j) * fact(j) * comb(n, j) * lam ** (n + j) * S1(n - j, l) * B(l) / (2 * lam - 2) ** (j + 1)
                for j in range(n + 1)
                for l in range(n - j + 1)
            )
            yield p, lhs, rhs
            yield {**p, "form": "integral"}, V(y2_poly(n, lam)), lhs
