"""Independent brute-force oracles for the tests.

Nothing here imports the package.  Every value is rebuilt from a definition
that the library does not use on its primary path: integer polynomial
products, set-partition counting, plain recurrences and interpolation of
finite sums.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial


def poly_mul(a: list, b: list) -> list:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def linear_product(roots) -> list:
    """Coefficients (ascending) of prod (x - r)."""
    cs = [Fraction(1)]
    for r in roots:
        cs = poly_mul(cs, [Fraction(-r), Fraction(1)])
    return cs


def falling_coeffs(n: int) -> list:
    return linear_product(range(n))


def rising_coeffs(n: int) -> list:
    return linear_product(-k for k in range(n))


def central_coeffs(n: int) -> list:
    """x^[n] = x prod_{k=1}^{n-1} (x + n/2 - k), expanded by direct multiplication."""
    if n == 0:
        return [Fraction(1)]
    return poly_mul([Fraction(0), Fraction(1)], linear_product(Fraction(k) - Fraction(n, 2) for k in range(1, n)))


def evaluate(cs, x) -> Fraction:
    return sum((Fraction(c) * Fraction(x) ** i for i, c in enumerate(cs)), Fraction(0))


def trim(cs) -> list:
    cs = [Fraction(c) for c in cs]
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def stirling1_row(n: int) -> list:
    """Signed S1(n, k), k = 0..n, read off the expanded falling factorial."""
    return falling_coeffs(n)


def stirling2_count(n: int, k: int) -> int:
    """Number of partitions of {0..n-1} into k non-empty blocks, by enumeration."""
    if n == 0:
        return 1 if k == 0 else 0
    count = 0
    for labels in itertools.product(range(k), repeat=n):
        # canonical labelling: first occurrences appear in increasing order
        seen = []
        for lab in labels:
            if lab not in seen:
                seen.append(lab)
        if len(seen) == k and seen == list(range(k)):
            count += 1
    return count


def lah_unsigned(n: int, k: int) -> int:
    """Partitions of an n-set into k non-empty linearly ordered blocks, by enumeration."""
    if n == 0 or k == 0:
        return 1 if n == k else 0
    total = 0
    for labels in itertools.product(range(k), repeat=n):
        sizes = [labels.count(b) for b in range(k)]
        if 0 in sizes:
            continue
        ordered = 1
        for s in sizes:
            ordered *= factorial(s)
        total += ordered
    return total // factorial(k)


def ordered_set_partitions(n: int) -> int:
    return sum(factorial(k) * stirling2_count(n, k) for k in range(n + 1))


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """From sum_{k<=n} C(n+1,k) B_k = 0 (n >= 1), B_0 = 1; gives B_1 = -1/2."""
    if n == 0:
        return Fraction(1)
    return -sum((comb(n + 1, k) * bernoulli(k) for k in range(n)), Fraction(0)) / (n + 1)


@lru_cache(maxsize=None)
def euler(n: int) -> Fraction:
    """From (e^t + 1) G(t) = 2: E_n + sum_k C(n,k) E_k = 2 [n = 0]."""
    rhs = Fraction(2 if n == 0 else 0)
    return (rhs - sum((comb(n, k) * euler(k) for k in range(n)), Fraction(0))) / 2


def interpolate_at(points: list[tuple[Fraction, Fraction]], x0) -> Fraction:
    """Lagrange value at x0 of the polynomial through the points."""
    x0 = Fraction(x0)
    total = Fraction(0)
    for i, (xi, yi) in enumerate(points):
        term = Fraction(yi)
        for j, (xj, _) in enumerate(points):
            if i != j:
                term *= (x0 - xj) / (xi - xj)
        total += term
    return total


def volkenborn(cs) -> Fraction:
    """Volkenborn integral of a monomial-basis polynomial.

    S(N) = sum_{x<N} f(x) is a polynomial in N with S(0) = 0, and the integral is
    lim S(p^k)/p^k = S'(0).  S'(0) is the N-coefficient of S, which we recover by
    interpolating the exact partial sums.
    """
    cs = trim(cs)
    d = len(cs)  # deg S = deg f + 1
    pts = []
    acc = Fraction(0)
    for N in range(0, d + 1):
        pts.append((Fraction(N), acc))
        acc += evaluate(cs, N)
    # S'(0) = lim_{h->0} S(h)/h; with S(0)=0 that is the linear coefficient.
    # Recover it from divided differences: interpolate S(N)/N at N = 0.
    ratio = [(x, y / x) for x, y in pts if x != 0]
    return interpolate_at(ratio, 0) if ratio else Fraction(0)


def fermionic(cs) -> Fraction:
    """Fermionic integral: A(N) = sum_{x<N} (-1)^x f(x) for odd N is a polynomial
    in N, and the p-adic limit N = p^k -> 0 through odd N is A(0)."""
    cs = trim(cs)
    d = len(cs)
    pts = []
    for M in range(0, d + 1):
        N = 2 * M + 1
        pts.append((Fraction(N), sum(((-1) ** x * evaluate(cs, x) for x in range(N)), Fraction(0))))
    return interpolate_at(pts, 0)
