"""Exact rational scalars, p-adic valuation and p-adic norm.

The rational type is :class:`fractions.Fraction`, which is reduced on
construction and hashable, so values can key memo tables directly.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Union

Rational = Fraction
RationalLike = Union[int, Fraction, str]


class _Infinity:
    """Valuation of zero.  Compares greater than every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    __str__ = __repr__

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("volkenborn.INFINITY")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True


INFINITY = _Infinity()


def Q(value: RationalLike, den: int = 1) -> Fraction:
    """Coerce ``value`` (int, Fraction or "a/b" string) to a canonical Fraction."""
    if isinstance(value, Fraction) and den == 1:
        return value
    if isinstance(value, str):
        if den != 1:
            raise TypeError("denominator argument not allowed with string input")
        return parse_rational(value)
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass an int, Fraction or 'a/b'")
    return Fraction(value, den)


@lru_cache(maxsize=None)
def is_prime(p: int) -> bool:
    """Deterministic trial division.  Intended for desk-scale p < 10**6."""
    if not isinstance(p, int) or p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    for d in range(3, math.isqrt(p) + 1, 2):
        if p % d == 0:
            return False
    return True


def require_prime(p: int) -> int:
    if not is_prime(p):
        raise ValueError(f"{p!r} is not a prime")
    return p


def _int_ord(n: int, p: int) -> int:
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def ord_p(x: RationalLike, p: int):
    """p-adic valuation of a rational; ``INFINITY`` for zero."""
    require_prime(p)
    x = Q(x)
    if x == 0:
        return INFINITY
    return _int_ord(abs(x.numerator), p) - _int_ord(x.denominator, p)


def p_norm(x: RationalLike, p: int) -> Fraction:
    """|x|_p = p**(-ord_p(x)), with |0|_p = 0."""
    v = ord_p(x, p)
    if v is INFINITY:
        return Fraction(0)
    return Fraction(p) ** (-v)


def format_rational(x: RationalLike) -> str:
    """Serialize as "num/den", dropping the denominator when it is 1."""
    x = Q(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not text:
        raise ValueError("empty rational")
    num, sep, den = text.partition("/")
    try:
        if sep:
            return Fraction(int(num), int(den))
        return Fraction(int(num))
    except ValueError:
        raise ValueError(f"not a rational: {text!r}") from None


def falling(a: RationalLike, n: int) -> Fraction:
    """Falling factorial a(a-1)...(a-n+1) of a rational a."""
    a = Q(a)
    out = Fraction(1)
    for i in range(n):
        out *= a - i
    return out


def rising(a: RationalLike, n: int) -> Fraction:
    a = Q(a)
    out = Fraction(1)
    for i in range(n):
        out *= a + i
    return out


def binom(a: RationalLike, n: int) -> Fraction:
    """Generalized binomial coefficient a_(n)/n!; zero for negative n."""
    if n < 0:
        return Fraction(0)
    if isinstance(a, int) and a >= 0:
        return Fraction(math.comb(a, n))
    return falling(a, n) / math.factorial(n)
