"""Small builders shared by the check modules."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable

from ..arith import binom as sbinom
from ..integrate import fermionic_value, volkenborn_value
from ..poly import BiPolynomial, Polynomial, binom_poly, central, ff, rf

fact = math.factorial
comb = math.comb
F0 = Fraction(0)


def psum(items: Iterable[Polynomial]) -> Polynomial:
    total = Polynomial.zero()
    for p in items:
        total = total + p
    return total.to_monomial()


def rsum(items: Iterable) -> Fraction:
    return sum(items, F0)


def bx(n: int, shift=0, sign: int = 1) -> Polynomial:
    """binom(sign*x + shift, n); zero for n < 0."""
    return binom_poly(n, shift, sign)


def x_pow(n: int) -> Polynomial:
    return Polynomial.term(n)


X = Polynomial.x()
V = volkenborn_value
Fm = fermionic_value


def pm(k: int) -> int:
    """(-1)^k for any integer k."""
    return -1 if k % 2 else 1


def bernstein(k: int, n: int) -> Polynomial:
    """B_k^n(x) = C(n,k) x^k (1-x)^(n-k)."""
    if k < 0 or k > n:
        return Polynomial.zero()
    return (X**k * Polynomial([1, -1]) ** (n - k)).scale(comb(n, k))


def ff_y(n: int) -> BiPolynomial:
    """y_(n) as a bivariate polynomial."""
    return BiPolynomial.in_y(ff(n))


def ff_x(n: int) -> BiPolynomial:
    return BiPolynomial.in_x(ff(n))


__all__ = [
    "BiPolynomial",
    "F0",
    "Fm",
    "Fraction",
    "Polynomial",
    "V",
    "X",
    "bernstein",
    "binom_poly",
    "bx",
    "central",
    "comb",
    "fact",
    "ff",
    "ff_x",
    "ff_y",
    "pm",
    "psum",
    "rf",
    "rsum",
    "sbinom",
    "x_pow",
]
