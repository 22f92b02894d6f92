"""Generating-function facts: printed value lists, parameter relations and
series identities for the Apostol, Frobenius, Peters and y-families."""

from __future__ import annotations

from ..arith import ord_p
from ..families.numbers import (
    B_count,
    apostol,
    apostol_bernoulli_poly,
    apostol_euler_poly,
    bernoulli,
    bernoulli_poly,
    changhee,
    euler,
    euler_poly,
    euler_star,
    peters_number,
    peters_poly,
    y2,
    y2_poly,
)
from ..families.sequences import fubini_torsion
from ..families.triangles import S1
from ..integrate import twisted_alternating_sum, twisted_fermionic_monomial
from ..series import TruncatedSeries, binom_pow, exp_series, std_series
from ._common import Fraction, Polynomial, comb, ff, psum, rsum
from .registry import check

ORDER = 14


def _apb_printed(n: int, lam: Fraction) -> Fraction:
    """The closed forms listed for n = 1..7, with the stray t read as lambda."""
    l = lam
    d = l - 1
    table = {
        1: 1 / d,
        2: -2 * l / d**2,
        3: 3 * l * (l + 1) / d**3,
        4: -4 * l * (l**2 + 4 * l + 1) / d**4,
        5: 5 * l * (l**3 + 11 * l**2 + 11 * l + 1) / d**5,
        6: -6 * l * (l**4 + 26 * l**3 + 66 * l**2 + 26 * l + 1) / d**6,
        7: 7 * l * (l**5 + 57 * l**4 + 302 * l**3 + 302 * l**2 + 57 * l + 1) / d**7,
    }
    return table[n]


def _apostol_b_series(lam: Fraction) -> list[Fraction]:
    # t / (lam e^t - 1)
    t = TruncatedSeries.variable(ORDER)
    return (t / (exp_series(ORDER) * lam - 1)).egf_values()


def _apostol_e_series(lam: Fraction) -> list[Fraction]:
    return (2 / (exp_series(ORDER) * lam + 1)).egf_values()


def _frobenius_series(u: Fraction) -> list[Fraction]:
    return ((1 - u) / (exp_series(ORDER) - u)).egf_values()


@check("apb_values")
def apb_values(R):
    for lam in R.lambdas:
        ser = _apostol_b_series(lam)
        for n in range(0, min(R.n_max, ORDER) + 1):
            yield {"n": n, "lambda": lam, "route": "series"}, apostol("APOSTOL_B", n, lam), ser[n]
        yield {"n": 0, "lambda": lam}, apostol("APOSTOL_B", 0, lam), Fraction(0)
        for n in range(1, 8):
            yield {"n": n, "lambda": lam, "route": "list"}, apostol("APOSTOL_B", n, lam), _apb_printed(n, lam)


def _apb_poly_printed(n: int, lam: Fraction, second_coeff: int) -> Polynomial:
    l, d = lam, lam - 1
    rows = {
        0: [0],
        1: [1 / d],
        2: [-2 * l / d**2, Fraction(second_coeff) / d],
        3: [3 * l * (l + 1) / d**3, -6 * l / d**2, 3 / d],
        4: [-4 * l * (l**2 + 4 * l + 1) / d**4, 12 * l * (l + 1) / d**3, -12 * l / d**2, 4 / d],
        5: [
            5 * l * (l**3 + 11 * l**2 + 11 * l + 1) / d**5,
            -20 * l * (l**2 + 4 * l + 1) / d**4,
            30 * l * (l + 1) / d**3,
            -20 * l / d**2,
            5 / d,
        ],
    }
    return Polynomial(rows[n])


def _apb_poly_cases(R, second_coeff: int):
    for lam in R.lambdas:
        for n in range(0, 6):
            yield {"n": n, "lambda": lam}, apostol_bernoulli_poly(n, lam), _apb_poly_printed(n, lam, second_coeff)


@check("apb_poly_printed")
def apb_poly_printed(R):
    yield from _apb_poly_cases(R, 1)


@check("apb_poly_corrected")
def apb_poly_corrected(R):
    yield from _apb_poly_cases(R, 2)


@check("apb_initial")
def apb_initial(R):
    for lam in R.lambdas:
        yield {"n": 1, "lambda": lam}, lam * apostol_bernoulli_poly(1, lam)(1), 1 + apostol("APOSTOL_B", 1, lam)
        for n in R.ns(2):
            yield {"n": n, "lambda": lam}, lam * apostol_bernoulli_poly(n, lam)(1), apostol("APOSTOL_B", n, lam)


def _ape_printed(n: int, lam: Fraction) -> Fraction:
    l = lam
    return {
        0: 2 / (l + 1),
        1: -2 * l / (l + 1) ** 2,
        2: 2 * l * (l - 1) / (l + 1) ** 3,
        3: -2 * l * (l**2 - 4 * l + 1) / (l + 1) ** 4,
    }[n]


@check("ape_values")
def ape_values(R):
    for lam in R.lambdas + (Fraction(1),):
        ser = _apostol_e_series(lam)
        for n in range(0, min(R.n_max, ORDER) + 1):
            yield {"n": n, "lambda": lam, "route": "series"}, apostol("APOSTOL_E", n, lam), ser[n]
        for n in range(4):
            yield {"n": n, "lambda": lam, "route": "list"}, apostol("APOSTOL_E", n, lam), _ape_printed(n, lam)
    for n in R.ns():
        yield {"n": n, "lambda": 1}, apostol("APOSTOL_E", n, 1), euler(n)


@check("rel_apostol_eb")
def rel_apostol_eb(R):
    for lam in R.lambdas:
        if lam == -1:
            continue
        for n in R.ns():
            yield {"n": n, "lambda": lam}, apostol_euler_poly(n, lam), apostol_bernoulli_poly(n + 1, -lam).scale(
                Fraction(-2, n + 1)
            )


def _frob_printed(n: int, u: Fraction) -> Fraction:
    return {
        0: Fraction(1),
        1: 1 / (u - 1),
        2: (u + 1) / (u - 1) ** 2,
        3: (u**2 + 4 * u + 1) / (u - 1) ** 3,
        4: (u**3 + 11 * u**2 + 11 * u + 1) / (u - 1) ** 4,
    }[n]


@check("frob_values")
def frob_values(R):
    for u in R.lambdas:
        ser = _frobenius_series(u)
        for n in range(0, min(R.n_max, ORDER) + 1):
            yield {"n": n, "u": u, "route": "series"}, apostol("FROBENIUS", n, u), ser[n]
        for n in range(5):
            yield {"n": n, "u": u, "route": "list"}, apostol("FROBENIUS", n, u), _frob_printed(n, u)


@check("frob_euler")
def frob_euler(R):
    for n in R.ns():
        yield {"n": n}, apostol("FROBENIUS", n, -1), euler(n)


@check("apb_frob")
def apb_frob(R):
    for lam in R.lambdas:
        for n in R.ns(1):
            rhs = n * apostol("FROBENIUS", n - 1, 1 / lam) / (lam - 1)
            yield {"n": n, "lambda": lam}, apostol("APOSTOL_B", n, lam), rhs


_BERN_LIST = {
    0: [1],
    1: [Fraction(-1, 2), 1],
    2: [Fraction(1, 6), -1, 1],
    3: [0, Fraction(1, 2), Fraction(-3, 2), 1],
    4: [Fraction(-1, 30), 0, 1, -2, 1],
    5: [0, Fraction(-1, 6), 0, Fraction(5, 3), Fraction(-5, 2), 1],
    6: [Fraction(1, 42), 0, Fraction(-1, 2), 0, Fraction(5, 2), -3, 1],
}
_B_VALUES = {
    0: 1, 1: Fraction(-1, 2), 2: Fraction(1, 6), 3: 0, 4: Fraction(-1, 30), 6: Fraction(1, 42),
    8: Fraction(-1, 30), 10: Fraction(5, 66), 12: Fraction(-691, 2730), 14: Fraction(7, 6),
    16: Fraction(-3617, 510), 18: Fraction(43867, 798), 20: Fraction(-174611, 330),
}
_EULER_LIST = {
    0: [1],
    1: [Fraction(-1, 2), 1],
    2: [0, -1, 1],
    3: [Fraction(1, 4), 0, Fraction(-3, 2), 1],
    4: [0, 1, 0, -2, 1],
    5: [Fraction(-1, 2), 0, Fraction(5, 2), 0, Fraction(-5, 2), 1],
}
_E_VALUES = {0: 1, 1: Fraction(-1, 2), 2: 0, 3: Fraction(1, 4), 5: Fraction(-1, 2), 7: Fraction(17, 8), 9: Fraction(-31, 2)}
_ESTAR_VALUES = {0: 1, 2: -1, 4: 5, 6: -61, 8: 1385, 10: -50521, 12: 2702765, 14: -199360981, 16: 19391512145}


@check("bernoulli_euler_lists")
def bernoulli_euler_lists(R):
    for n, cs in _BERN_LIST.items():
        yield {"n": n, "list": "B_n(x)"}, bernoulli_poly(n), Polynomial(cs)
    for n, v in _B_VALUES.items():
        yield {"n": n, "list": "B_n"}, bernoulli(n), Fraction(v)
    for n in range(1, 11):
        yield {"n": 2 * n + 1, "list": "B odd"}, bernoulli(2 * n + 1), Fraction(0)
    for n, cs in _EULER_LIST.items():
        yield {"n": n, "list": "E_n(x)"}, euler_poly(n), Polynomial(cs)
    for n, v in _E_VALUES.items():
        yield {"n": n, "list": "E_n"}, euler(n), Fraction(v)
    for n in range(1, 11):
        yield {"n": 2 * n, "list": "E even"}, euler(2 * n), Fraction(0)
    for n, v in _ESTAR_VALUES.items():
        yield {"n": n, "list": "E*_n"}, euler_star(n), Fraction(v)
        yield {"n": n, "list": "E*_n = 2^n E_n(1/2)"}, euler_star(n), 2**n * euler_poly(n)(Fraction(1, 2))
    for n in range(0, 9):
        yield {"n": 2 * n + 1, "list": "E* odd"}, euler_star(2 * n + 1), Fraction(0)


@check("cauchy_b2")
def cauchy_b2(R):
    egf = std_series("t_over_log1p", ORDER).egf_values()
    for n in range(0, min(R.n_max, ORDER) + 1):
        yield {"n": n}, ff(n).definite_integral_01(), egf[n]


@check("fubini_w")
def fubini_w(R):
    for w in (1, 2, 3):
        for y in (1, 2):
            g = (exp_series(ORDER) - 1) ** w * Fraction(y) ** w
            series = (2 / (1 - g)).egf_values()
            for n in range(0, min(R.n_max, ORDER) + 1):
                yield {"w": w, "y": y, "n": n}, series[n], fubini_torsion(n, w, y)
    # the integrand a^x integrates to 2/(1+a); checked exactly and by its finite sums
    for a in (Fraction(4), Fraction(-2), Fraction(1, 2), Fraction(6)):
        yield {"a": a}, twisted_fermionic_monomial(0, a), 2 / (1 + a)
    for p, a in ((3, Fraction(4)), (5, Fraction(6))):
        vals = [ord_p(twisted_alternating_sum(0, a, p, N) - 2 / (1 + a), p) for N in range(1, 4)]
        yield {"p": p, "a": a, "form": "valuations increase"}, all(x < y for x, y in zip(vals, vals[1:])), True


@check("changhee_stirling")
def changhee_stirling(R):
    for n in range(0, max(R.n_max, 12) + 1):
        yield {"n": n}, changhee(n), rsum(S1(n, k) * euler(k) for k in range(n + 1))


@check("peters_special")
def peters_special(R):
    for n in R.ns():
        yield {"n": n, "form": "Changhee"}, 2 * peters_number(n, 1, 1), changhee(n)
        ch_poly = psum(ff(n - v).scale(comb(n, v) * changhee(v)) for v in range(n + 1))
        yield {"n": n, "form": "Changhee polynomial"}, peters_poly(n, 1, 1).scale(2), ch_poly
        for th in R.thetas:
            rhs = (th - 1) ** (n + 1) / (2 * th ** (2 * n)) * y2(n, th)
            yield {"n": n, "theta": th}, peters_number(n, 1, 1), rhs


@check("peters_theta")
def peters_theta(R):
    for lam in (Fraction(1), Fraction(2), Fraction(1, 2)):
        for mu in R.mus():
            for th in R.thetas:
                for n in R.ns(1):
                    rhs = Polynomial.zero()
                    for j in range(n):
                        rhs = rhs + y2_poly(n - 1 - j, th).scale(
                            Fraction(n, 2) * comb(n - 1, j) * th ** (j + 2 - n) * peters_number(j, lam, mu)
                        )
                    for j in range(n + 1):
                        rhs = rhs + y2_poly(n - j, th).scale(
                            (th - 1) * comb(n, j) * th ** (j - n) * peters_number(j, lam, mu)
                        )
                    yield {"n": n, "lambda": lam, "mu": mu, "theta": th}, peters_poly(n, lam, mu), rhs


def _falling_rational(a: Fraction, v: int) -> Fraction:
    out = Fraction(1)
    for i in range(v):
        out *= a - i
    return out


@check("ay1b")
def ay1b(R):
    for lam in R.lambdas:
        for mu in R.mus():
            for n in range(R.n_min, min(R.n_max, 8) + 1):
                rhs = Polynomial.zero()
                for v in range(n + 1):
                    c = rsum(comb(mu, j) * comb(n, v) * _falling_rational(lam * j, v) for j in range(mu + 1))
                    rhs = rhs + peters_poly(n - v, lam, mu).scale(c)
                yield {"n": n, "lambda": lam, "mu": mu}, ff(n), rhs


@check("ay1c")
def ay1c(R):
    for lam in R.lambdas:
        for mu in R.mus():
            for n in range(R.n_min, min(R.n_max, 8) + 1):
                rhs = Polynomial.zero()
                for v in range(n + 1):
                    c = rsum(comb(n, v) * lam**k * B_count(k, mu) * S1(v, k) for k in range(v + 1))
                    rhs = rhs + peters_poly(n - v, lam, mu).scale(c)
                yield {"n": n, "lambda": lam, "mu": mu}, ff(n), rhs


def _y2_series_values(lam: Fraction, x: int) -> list[Fraction]:
    # 2 (1 + lam t)^x / (lam^2 t + 2(lam - 1))
    t = TruncatedSeries.variable(ORDER)
    num = binom_pow(x, ORDER).compose(t * lam) * 2
    return (num / (t * lam**2 + 2 * (lam - 1))).egf_values()


@check("a1_a3")
def a1_a3(R):
    for lam in R.lambdas:
        if lam == 1:
            continue
        for n in R.ns():
            a1 = psum(ff(n - j).scale(comb(n, j) * lam ** (n - j) * y2(j, lam)) for j in range(n + 1))
            yield {"n": n, "lambda": lam, "form": "A1 = A3"}, a1, y2_poly(n, lam)
        for x in (0, 1, 3):
            ser = _y2_series_values(lam, x)
            for n in range(0, min(R.n_max, ORDER) + 1):
                yield {"n": n, "lambda": lam, "x": x, "form": "series"}, y2_poly(n, lam)(x), ser[n]
