"""The sequences Y(n,B) and Y(n,E), integrals of x_(n) x^(n), plus the mixed
integrals of x_(n) x^(m) and the unit-group monomial integrals."""

from __future__ import annotations

from ..families.numbers import bernoulli, euler
from ..families.triangles import S1, cf_T, cf_t, lah_unsigned
from ..integrate import unit_integral_divided_variant, unit_integral_monomial
from ._common import Fm, Fraction, Polynomial, V, comb, fact, ff, pm, psum, rf, rsum, x_pow
from .registry import check

B = bernoulli
E = euler

# Printed expansions: coefficients of B_{2n}, B_{2n-2}, ..., B_2 (B_0 alone for n = 0).
PRINTED_Y_COEFFS: dict[int, tuple[int, ...]] = {
    0: (1,),
    1: (1,),
    2: (1, -1),
    3: (1, -5, 4),
    4: (1, -14, 49, -36),
    5: (1, -30, 273, -870, 576),
    6: (1, -55, 1023, -7645, 21076, -14400),
}


def corrected_y_coeffs() -> dict[int, tuple[int, ...]]:
    """The same table with the n = 5 entry replaced by t(10, 4) = -820."""
    out = dict(PRINTED_Y_COEFFS)
    row = list(out[5])
    row[3] = int(cf_t(10, 4))
    out[5] = tuple(row)
    return out


def y_integrand(n: int) -> Polynomial:
    return ff(n) * rf(n)


def _expansion(n: int, coeffs: tuple[int, ...]) -> Polynomial:
    if n == 0:
        return Polynomial.constant(coeffs[0])
    return psum(x_pow(2 * (n - i)).scale(c) for i, c in enumerate(coeffs))


def _y_values(R, coeffs: dict[int, tuple[int, ...]], integral, numbers):
    for n in sorted(coeffs):
        if n > R.n_max:
            continue
        integrand = y_integrand(n)
        yield {"n": n, "form": "coefficients"}, integrand, _expansion(n, coeffs[n])
        if n == 0:
            value = coeffs[0][0] * numbers(0)
        else:
            value = rsum(c * numbers(2 * (n - i)) for i, c in enumerate(coeffs[n]))
        yield {"n": n}, integral(integrand), value


@check("yb_values_printed")
def yb_values_printed(R):
    yield from _y_values(R, PRINTED_Y_COEFFS, V, B)


@check("yb_values_corrected")
def yb_values_corrected(R):
    yield from _y_values(R, corrected_y_coeffs(), V, B)


@check("ye_values_printed")
def ye_values_printed(R):
    yield from _y_values(R, PRINTED_Y_COEFFS, Fm, E)


@check("ye_values_corrected")
def ye_values_corrected(R):
    yield from _y_values(R, corrected_y_coeffs(), Fm, E)


def _yb_cf(R, lo: int):
    for n in R.ns(lo):
        expansion = psum(x_pow(2 * k).scale(cf_t(2 * n, 2 * k)) for k in range(1, n + 1))
        yield {"n": n, "form": "polynomial"}, y_integrand(n), expansion
        yield {"n": n}, V(y_integrand(n)), rsum(cf_t(2 * n, 2 * k) * B(2 * k) for k in range(1, n + 1))


@check("yb_cf_printed")
def yb_cf_printed(R):
    yield from _yb_cf(R, 0)


@check("yb_cf_positive_n")
def yb_cf_positive_n(R):
    yield from _yb_cf(R, 1)
    for n in R.ns():
        yield {"n": n, "form": "from k=0"}, V(y_integrand(n)), rsum(cf_t(2 * n, 2 * k) * B(2 * k) for k in range(n + 1))


@check("ye_zero")
def ye_zero(R):
    for n in R.ns(1):
        val = Fm(y_integrand(n))
        yield {"n": n, "form": "central"}, val, rsum(cf_t(2 * n, 2 * k) * E(2 * k) for k in range(1, 2 * n + 1))
        yield {"n": n}, val, Fraction(0)


def _even_rec(R, integral, numbers):
    for n in R.ns():
        expansion = psum(y_integrand(k).scale(cf_T(2 * n, 2 * k)) for k in range(n + 1))
        yield {"n": n, "form": "polynomial"}, x_pow(2 * n), expansion
        yield {"n": n}, numbers(2 * n), rsum(cf_T(2 * n, 2 * k) * integral(y_integrand(k)) for k in range(n + 1))


@check("b2n_rec")
def b2n_rec(R):
    yield from _even_rec(R, V, B)


@check("e2n_rec")
def e2n_rec(R):
    yield from _even_rec(R, Fm, E)


def _stirlah(R, integral, numbers, lo_k: int):
    for n in R.ns():
        val = integral(y_integrand(n))
        ks = range(lo_k, n + 1)
        via = rsum(S1(n, j) * lah_unsigned(n, k) * integral(x_pow(j) * ff(k)) for j in range(n + 1) for k in ks)
        yield {"n": n, "form": "integrals"}, val, via
        closed = rsum(
            S1(n, j) * S1(k, m) * numbers(j + m) * lah_unsigned(n, k)
            for j in range(n + 1)
            for k in ks
            for m in range(k + 1)
        )
        yield {"n": n}, val, closed


@check("yb_stirlah_printed")
def yb_stirlah_printed(R):
    yield from _stirlah(R, V, B, 1)


@check("yb_stirlah_corrected")
def yb_stirlah_corrected(R):
    yield from _stirlah(R, V, B, 0)


@check("ye_stirlah_printed")
def ye_stirlah_printed(R):
    yield from _stirlah(R, Fm, E, 1)


@check("ye_stirlah_corrected")
def ye_stirlah_corrected(R):
    yield from _stirlah(R, Fm, E, 0)


def _xnxm(R, integral, term, lo_k: int):
    for m in R.ms():
        for n in R.ns():
            val = integral(ff(n) * rf(m))
            ks = range(lo_k, m + 1)
            via = rsum(lah_unsigned(m, k) * integral(ff(k) * ff(n)) for k in ks)
            yield {"m": m, "n": n, "form": "Lah"}, val, via
            rhs = rsum(term(n, m, k, j) * lah_unsigned(m, k) for k in ks for j in range(n + 1))
            yield {"m": m, "n": n}, val, rhs


def _xnxm_v_printed_term(n, m, k, j):
    if j > k:
        return Fraction(0)  # C(k, j) vanishes; the printed denominator may too
    return Fraction(pm(k + n - j) * comb(m, j) * comb(k, j) * fact(j) * fact(n + k - j), m + k - j + 1)


def _xnxm_v_term(n, m, k, j):
    return Fraction(pm(k + n - j) * comb(n, j) * comb(k, j) * fact(j) * fact(n + k - j), n + k - j + 1)


def _xnxm_f_term(n, m, k, j):
    return Fraction(pm(n + k - j) * comb(n, j) * comb(k, j) * fact(j) * fact(n + k - j), 2 ** (n + k - j))


@check("xnxm_v_printed")
def xnxm_v_printed(R):
    yield from _xnxm(R, V, _xnxm_v_printed_term, 1)


@check("xnxm_v_corrected")
def xnxm_v_corrected(R):
    yield from _xnxm(R, V, _xnxm_v_term, 0)


@check("xnxm_f_printed")
def xnxm_f_printed(R):
    yield from _xnxm(R, Fm, _xnxm_f_term, 1)


@check("xnxm_f_corrected")
def xnxm_f_corrected(R):
    yield from _xnxm(R, Fm, _xnxm_f_term, 0)


UNIT_PRIMES = (2, 3, 5)


def _unit_cases(R):
    for p in UNIT_PRIMES:
        for n in range(1, 5):
            for j in range(0, max(p - 1, 1)):
                m = j + n * (p - 1)
                if m <= max(R.n_max, 4):
                    yield {"p": p, "n": n, "j": j, "m": m}, p, m


@check("unit_t_printed")
def unit_t_printed(R):
    for params, p, m in _unit_cases(R):
        yield params, unit_integral_monomial(m, p), unit_integral_divided_variant(m, p)


@check("unit_t_corrected")
def unit_t_corrected(R):
    for params, p, m in _unit_cases(R):
        yield params, unit_integral_monomial(m, p), (1 - Fraction(p) ** (m - 1)) * B(m)
