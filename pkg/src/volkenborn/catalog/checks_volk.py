"""Volkenborn-integral formulas, each compared against the exact integral of
the stated integrand."""

from __future__ import annotations

from ..arith import falling, ord_p
from ..families.numbers import bernoulli, daehee, harmonic, harmonic_binomial, peters_number, peters_poly
from ..families.triangles import C, S1, S2, cf_t, lah
from ..integrate import riemann_sum
from ..poly import BiPolynomial, bi_multiply, substitute_product, substitute_sum
from ..series import log1p_series
from . import checks_fac as fac
from ._common import (
    Fraction,
    Polynomial,
    V,
    X,
    bernstein,
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

B = bernoulli


def _double_v(p: BiPolynomial) -> Fraction:
    return V(p.integrate_out("x", V))


@check("c7")
def c7(R):
    logs = log1p_series(R.n_max + 2).coeffs
    for n in R.ns():
        val = V(bx(n))
        yield {"n": n}, val, Fraction(pm(n), n + 1)
        witt = rsum(S1(n, k) * B(k) for k in range(n + 1)) / fact(n)
        yield {"n": n, "route": "Witt"}, val, witt
        yield {"n": n, "route": "log series"}, val, logs[n + 1]
    for p in (3, 5):
        for n in range(1, 4):
            vals = [ord_p(riemann_sum(bx(n), p, N) - Fraction(pm(n), n + 1), p) for N in (2, 3, 4)]
            converging = vals[0] < vals[1] < vals[2]
            yield {"n": n, "p": p, "form": "finite sums"}, converging, True


@check("ak1")
def ak1(R):
    for n in R.ns():
        val = V(ff(n))
        yield {"n": n, "form": "closed"}, val, Fraction(pm(n) * fact(n), n + 1)
        yield {"n": n, "form": "Stirling"}, val, rsum(S1(n, l) * B(l) for l in range(n + 1))
        yield {"n": n, "form": "D_n"}, val, daehee(n)


@check("c0")
def c0(R):
    for n in R.ns(1):
        val = V(bx(n, n - 1))
        f1 = rsum(sbinom(n - 1, n - m) * V(bx(m)) for m in range(n + 1))
        f2 = rsum(Fraction(pm(m) * comb(n - 1, m - 1), m + 1) for m in range(1, n + 1))
        f3 = rsum(pm(m) * sbinom(n - 1, n - m) / (m + 1) for m in range(n + 1))
        yield {"n": n, "form": "expansion"}, val, f1
        yield {"n": n, "form": "sum from 1"}, val, f2
        yield {"n": n, "form": "sum from 0"}, val, f3


@check("bi1")
def bi1(R):
    for n in R.ns():
        rhs = fact(n) * rsum(pm(m) * sbinom(n - 1, n - m) / (m + 1) for m in range(n + 1))
        yield {"n": n}, V(ff(n, n - 1)), rhs


@check("l1")
def l1(R):
    for n in R.ns():
        yield {"n": n}, V(X * ff(n)), Fraction(pm(n + 1) * fact(n), n * n + 3 * n + 2)


@check("l1a")
def l1a(R):
    for n in R.ns():
        rhs = rsum(S1(n, k - 1) * B(k) for k in range(1, n + 1)) + B(n + 1)
        yield {"n": n}, V(X * ff(n)), rhs


@check("ll1a")
def ll1a(R):
    for n in R.ns(1):
        rhs = rsum(Fraction(pm(k + 1) * comb(n - 1, k - 1) * fact(n), k * k + 3 * k + 2) for k in range(1, n + 1))
        yield {"n": n}, V(X * rf(n)), rhs


def _ll1b(R, lo):
    for n in R.ns(lo):
        expansion = psum(x_pow(k + 1).scale(C(n, k)) for k in range(1, n + 1))
        yield {"n": n, "form": "expansion"}, X * rf(n), expansion
        yield {"n": n}, V(X * rf(n)), rsum(C(n, k) * B(k + 1) for k in range(1, n + 1))


@check("ll1b_printed")
def ll1b_printed(R):
    yield from _ll1b(R, 0)


@check("ll1b_positive_n")
def ll1b_positive_n(R):
    yield from _ll1b(R, 1)


def _falling_int(n: int, k: int) -> int:
    return fact(n) // fact(k)


@check("xratio")
def xratio(R):
    for n in R.ns():
        quotient = ff(n, -1)  # x_(n+1) / x
        yield {"n": n, "form": "quotient"}, X * quotient, ff(n + 1)
        rhs = rsum(pm(n) * _falling_int(n, k) * Fraction(fact(k), k + 1) for k in range(n + 1))
        yield {"n": n}, V(quotient), rhs


@check("combsum")
def combsum(R):
    for n in R.ns():
        lhs = rsum(_falling_int(n, k) * Fraction(fact(k), k * k + 3 * k + 2) for k in range(n + 1))
        yield {"n": n}, lhs, Fraction(fact(n + 1), n + 2)
        via = rsum(pm(n - k) * _falling_int(n, k) * V(X * ff(k)) for k in range(n + 1))
        yield {"n": n, "form": "integral"}, V(ff(n + 1)), via


@check("x1n1")
def x1n1(R):
    for n in R.ns():
        yield {"n": n}, V(ff(n + 1, 1)), Fraction(pm(n) * fact(n), n + 2)


@check("ai0a3")
def ai0a3(R):
    for m in R.ms():
        for n in R.ns():
            rhs = rsum(Fraction(pm(k), k + 1) * sbinom(m, n - k) for k in range(n + 1))
            yield {"m": m, "n": n}, V(bx(n, m)), rhs


@check("lf1a")
def lf1a(R):
    for n in range(R.n_min, min(R.n_max, 8) + 1):
        val = _double_v(substitute_sum(bx(n)))
        yield {"n": n}, val, rsum(Fraction(pm(n), (k + 1) * (n - k + 1)) for k in range(n + 1))
        split = BiPolynomial()
        for k in range(n + 1):
            split = split + bi_multiply(ff_x(k), ff_y(n - k)).scale(comb(n, k))
        yield {"n": n, "form": "expansion"}, substitute_sum(ff(n)), split


@check("lf1b")
def lf1b(R):
    for n in range(R.n_min, min(R.n_max, 8) + 1):
        rhs = rsum(
            comb(k, j) * S1(n, k) * B(j) * B(k - j) for k in range(n + 1) for j in range(k + 1)
        ) / fact(n)
        yield {"n": n}, _double_v(substitute_sum(bx(n))), rhs


@check("v1a_int")
def v1a_int(R):
    for n in R.ns(1):
        val = V(bx(n, 1))
        yield {"n": n}, val, Fraction(pm(n + 1), n * n + n)
        yield {"n": n, "form": "shift"}, val, Fraction(pm(n), n + 1) + Fraction(pm(n - 1), n)
        yield {"n": n, "form": "derivative at 0"}, bx(n).derivative()(0), Fraction(pm(n - 1), n)


@check("x1n")
def x1n(R):
    for n in R.ns(1):
        yield {"n": n}, V(ff(n, 1)), Fraction(pm(n + 1) * fact(n), n * n + n)


@check("delta_int")
def delta_int(R):
    for n in R.ns(1):
        yield {"n": n}, V(ff(n).forward_diff()), pm(n + 1) * fact(n - 1)


@check("negx")
def negx(R):
    for n in R.ns():
        val = V(ff(n).reflect())
        yield {"n": n, "form": "Lah"}, val, rsum(lah(n, k) * V(ff(k)) for k in range(n + 1))
        yield {"n": n, "form": "Lah closed"}, val, rsum(Fraction(pm(k) * fact(k), k + 1) * lah(n, k) for k in range(n + 1))
        if n >= 1:
            rhs = rsum(Fraction(pm(k + n) * comb(n - 1, k - 1) * fact(n), k + 1) for k in range(1, n + 1))
            yield {"n": n}, val, rhs


@check("v1b")
def v1b(R):
    for n in R.ns():
        yield {"n": n}, V(bx(n + 1, 1)), Fraction(pm(n), n * n + 3 * n + 2)


def _lf1s(R, printed: bool):
    for k in range(R.n_min, min(R.n_max, 6) + 1):
        val = _double_v(substitute_product(ff(k)))
        start = 1 if printed else 0
        c = {(l, m): fac.osgood_c(k, l, m, not printed) for l in range(start, k + 1) for m in range(start, k + 1)}
        f1 = rsum(daehee(l) * daehee(m) * c[l, m] for (l, m) in c)
        f2 = rsum(Fraction(pm(l + m) * fact(l) * fact(m), (l + 1) * (m + 1)) * c[l, m] for (l, m) in c)
        yield {"k": k, "form": "Daehee"}, val, f1
        yield {"k": k, "form": "closed"}, val, f2


@check("lf1s_printed")
def lf1s_printed(R):
    yield from _lf1s(R, printed=True)


@check("lf1s_corrected")
def lf1s_corrected(R):
    yield from _lf1s(R, printed=False)


@check("lf1u")
def lf1u(R):
    for k in range(R.n_min, min(R.n_max, 8) + 1):
        yield {"k": k}, _double_v(substitute_product(ff(k))), rsum(S1(k, m) * B(m) ** 2 for m in range(k + 1))


@check("gg1_int")
def gg1_int(R):
    for n in R.ns():
        val = V(X * bx(n - 1, -2))
        s = rsum(Fraction(k, k + 1) for k in range(1, n + 1))
        yield {"n": n, "form": "(-1)^n"}, val, pm(n) * s
        if n >= 1:
            yield {"n": n, "form": "(-1)^(-n)"}, val, pm(-n) * s


@check("harm_int_printed")
def harm_int_printed(R):
    for n in R.ns():
        val = V(bx(n, n, -1))
        yield {"n": n}, val, pm(n) * harmonic(n)
        yield {"n": n, "form": "sum from 1"}, val, pm(n) * rsum(Fraction(1, k + 1) for k in range(1, n + 1))
        yield {"n": n, "form": "H_n - H_0"}, val, pm(n) * (harmonic(n) - harmonic(0))


@check("harm_int_corrected")
def harm_int_corrected(R):
    for n in R.ns():
        yield {"n": n}, V(bx(n, n, -1)), harmonic(n)
    for n in range(6):
        yield {"n": n, "form": "H_n"}, harmonic(n), rsum(Fraction(1, k + 1) for k in range(n + 1))


@check("id7_int")
def id7_int(R):
    for m in range(max(1, R.m_min), min(R.m_max, 4) + 1):
        for n in R.ns():
            rhs = rsum(
                Fraction(pm(k), k + 1) * rsum(pm(j) * comb(k, j) * sbinom(m * k - m * j, n) for j in range(k + 1))
                for k in range(n + 1)
            )
            yield {"m": m, "n": n}, V(fac._binom_mx(m, n)), rhs


def _ir2_rhs(n: int, r: int, weight) -> Fraction:
    return rsum(
        weight(k) * rsum(pm(j) * comb(k, j) * sbinom(k - j, n) ** r for j in range(k + 1))
        for k in range(n * r + 1)
    )


@check("ir2")
def ir2(R):
    for r in range(0, R.r_max + 1):
        for n in range(R.n_min, min(R.n_max, 8) + 1):
            yield {"n": n, "r": r}, V(bx(n) ** r), _ir2_rhs(n, r, lambda k: Fraction(pm(k), k + 1))


@check("id6_int_printed")
def id6_int_printed(R):
    for n in R.ns(2):
        integrand = X * bx(n - 1, -2) + (X * ff(1, -1)).scale(sbinom(n - 3, n - 2))
        yield {"n": n}, V(integrand), pm(n) * rsum(Fraction(k * k, k + 1) for k in range(n + 1))


@check("id6_int_corrected")
def id6_int_corrected(R):
    for n in R.ns(2):
        integrand = X * bx(n - 1, -2) + X * ff(1, -1) * bx(n - 2, -3)
        yield {"n": n}, V(integrand), pm(n) * rsum(Fraction(k * k, k + 1) for k in range(n + 1))


@check("id1_id2")
def id1_id2(R):
    for n in R.ns():
        val = V(bx(n, n))
        r1 = rsum(
            Fraction(pm(k), k + 1) * rsum(pm(j) * comb(k, j) * comb(k - j + n, n) for j in range(k + 1))
            for k in range(n + 1)
        )
        r2 = rsum(B(k) * rsum(comb(n, j) * S1(j, k) / fact(j) for j in range(n + 1)) for k in range(n + 1))
        yield {"n": n, "form": "Mahler"}, val, r1
        yield {"n": n, "form": "Stirling"}, val, r2


@check("biaa_int")
def biaa_int(R):
    for n in R.ns():
        rhs = comb(2 * n, n) * rsum(
            pm(k) * comb(n, k) * Fraction(2) ** (2 * k - 2 * n) * (2 * n + 1) / ((k + 1) * (2 * k + 1) * comb(2 * k, k))
            for k in range(n + 1)
        )
        yield {"n": n}, V(bx(n, n + Fraction(1, 2))), rhs


@check("as1b")
def as1b(R):
    for m in R.ms():
        for n in R.ns():
            yield {"m": m, "n": n}, V(x_pow(m) * ff(n)), rsum(S1(n, k) * B(k + m) for k in range(n + 1))


@check("lf1h")
def lf1h(R):
    for m in R.ms():
        for n in R.ns():
            rhs = rsum(S1(n, j) * S1(m, l) * B(j + l) for j in range(n + 1) for l in range(m + 1))
            yield {"m": m, "n": n}, V(ff(n) * ff(m)), rhs


@check("lahv")
def lahv(R):
    for m in R.ms():
        for n in R.ns():
            rhs = rsum(
                Fraction(pm(m + n - k) * comb(m, k) * comb(n, k) * fact(k) * fact(m + n - k), m + n - k + 1)
                for k in range(m + 1)
            )
            yield {"m": m, "n": n}, V(ff(n) * ff(m)), rhs


@check("lf1i")
def lf1i(R):
    for m in R.ms():
        for n in R.ns():
            rhs = rsum(
                comb(m, k) * comb(n, k) * fact(k) * rsum(S1(m + n - k, l) * B(l) for l in range(m + n - k + 1))
                for k in range(m + 1)
            )
            yield {"m": m, "n": n}, V(ff(n) * ff(m)), rhs


@check("biab")
def biab(R):
    for m in R.ms(1):
        for n in R.ns(1):
            val = V(ff(m) * ff(n, -m))
            yield {"m": m, "n": n, "form": "product"}, ff(m) * ff(n, -m), ff(m + n)
            yield {"m": m, "n": n}, val, Fraction(pm(m + n) * fact(m + n), m + n + 1)
            yield {"m": m, "n": n, "form": "D"}, val, daehee(m + n)
            yield {"m": m, "n": n, "form": "Stirling"}, val, rsum(S1(m + n, k) * B(k) for k in range(m + n + 1))


@check("cft_int")
def cft_int(R):
    for n in R.ns():
        yield {"n": n}, V(central(n)), rsum(cf_t(n, k) * B(k) for k in range(n + 1))


@check("cf2_int")
def cf2_int(R):
    for n in R.ns(2):
        rhs = rsum(cf_t(n, k) * B(k) for k in range(n + 1)) + Fraction(n - 2, 2) ** 2 * rsum(
            cf_t(n - 2, k) * B(k) for k in range(n - 1)
        )
        yield {"n": n}, V(X * X * central(n - 2)), rhs


@check("cf_even_int_printed")
def cf_even_int_printed(R):
    for n in R.ns(1):
        rhs = rsum(cf_t(2 * n, k) * B(2 * k) for k in range(2 * n + 1))
        yield {"n": n}, V(fac.butzer_even_poly(n)), rhs


@check("cf_even_int_corrected")
def cf_even_int_corrected(R):
    for n in R.ns(1):
        rhs = rsum(cf_t(2 * n, 2 * k) * B(2 * k) for k in range(n + 1))
        yield {"n": n}, V(fac.butzer_even_poly(n)), rhs


@check("cf_odd_int")
def cf_odd_int(R):
    for n in R.ns():
        p = fac.butzer_odd_poly(n)
        yield {"n": n}, V(p), -central(2 * n + 1).derivative()(0) / 2


@check("xvbinr_v")
def xvbinr_v(R):
    for v in range(0, 4):
        for r in range(0, R.r_max + 1):
            for n in range(R.n_min, min(R.n_max, 6) + 1):
                rhs = rsum(
                    rsum(pm(j) * comb(k, j) * sbinom(k - j, n) ** r for j in range(k + 1))
                    * rsum(S1(k, l) * B(v + l) for l in range(k + 1))
                    / fact(k)
                    for k in range(n * r + 1)
                )
                yield {"v": v, "r": r, "n": n}, V(x_pow(v) * bx(n) ** r), rhs


def _bern_sum(n: int, sign_shift: int, integral) -> Fraction:
    return rsum(pm(k - sign_shift) * integral(bernstein(k, n)) for k in range(n + 1))


def _bern_sum_v(R, sign_shift: int):
    for n in R.ns():
        yield {"n": n, "form": "Bernstein sum"}, psum(bernstein(k, n).scale(pm(k)) for k in range(n + 1)), Polynomial([1, -2]) ** n
        lhs = _bern_sum(n, sign_shift * n, V)
        yield {"n": n}, lhs, rsum(comb(n, j) * Fraction(-2) ** (n - j) * B(n - j) for j in range(n + 1))
        lhs = _bern_sum(n, 0, V)
        yield {"n": n, "form": "Stirling"}, lhs, rsum(
            comb(n, j) * Fraction(-2) ** (n - j) * S2(n - j, m) * V(ff(m)) for j in range(n + 1) for m in range(n - j + 1)
        )
        yield {"n": n, "form": "closed"}, lhs, rsum(
            comb(n, j) * pm(n + m - j) * 2 ** (n - j) * S2(n - j, m) * Fraction(fact(m), m + 1)
            for j in range(n + 1)
            for m in range(n - j + 1)
        )
        yield {"n": n, "form": "Daehee"}, lhs, rsum(
            comb(n, j) * Fraction(-2) ** (n - j) * S2(n - j, m) * daehee(m) for j in range(n + 1) for m in range(n - j + 1)
        )


@check("bern_sum_v_printed")
def bern_sum_v_printed(R):
    yield from _bern_sum_v(R, 1)


@check("bern_sum_v_corrected")
def bern_sum_v_corrected(R):
    yield from _bern_sum_v(R, 0)


def _peters_v(R, printed: bool):
    for lam in R.lambdas:
        for mu in R.mus():
            for n in range(R.n_min, min(R.n_max, 8) + 1):
                val = V(peters_poly(n, lam, mu))
                s = [peters_number(v, lam, mu) for v in range(n + 1)]
                p = {"n": n, "lambda": lam, "mu": mu}
                yield {**p, "form": "Daehee"}, val, rsum(comb(n, v) * s[v] * daehee(n - v) for v in range(n + 1))
                fac_term = (lambda v: fact(n - v + 1)) if printed else (lambda v: fact(n - v))
                yield {**p, "form": "factorial"}, val, rsum(
                    pm(n - v) * comb(n, v) * s[v] * Fraction(fac_term(v), n - v + 1) for v in range(n + 1)
                )
                yield {**p, "form": "Stirling"}, val, rsum(
                    comb(n, v) * s[v] * rsum(S1(n - v, l) * B(l) for l in range(n - v + 1)) for v in range(n + 1)
                )
                lhs = rsum(
                    comb(mu, j) * comb(n, v) * falling(lam * j, v) * V(peters_poly(n - v, lam, mu))
                    for v in range(n + 1)
                    for j in range(mu + 1)
                )
                yield {**p, "form": "inverse"}, lhs, daehee(n)


@check("peters_v_printed")
def peters_v_printed(R):
    yield from _peters_v(R, True)


@check("peters_v_corrected")
def peters_v_corrected(R):
    yield from _peters_v(R, False)


def harm_product(k: int) -> Polynomial:
    out = Polynomial.constant(1)
    for j in range(1, k + 1):
        out = out * Polynomial([1, j])
    return out


@check("harmprod_v")
def harmprod_v(R):
    for k in R.ns(1):
        expansion = psum(x_pow(n).scale(fact(k) * harmonic_binomial(k, k - n)) for n in range(k + 1))
        yield {"k": k, "form": "expansion"}, harm_product(k), expansion
        rhs = rsum(fact(k) * harmonic_binomial(k, k - n) * B(n) for n in range(k + 1))
        yield {"k": k}, V(harm_product(k)), rhs
