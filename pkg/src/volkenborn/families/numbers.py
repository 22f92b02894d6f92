"""Scalar number families: Bernoulli, Euler, Apostol, Frobenius, Peters, y-families.

Parametric families are evaluated at explicit rational parameters; nothing is
kept symbolic.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache

from ..arith import Q, RationalLike, falling
from ..poly import Basis, Polynomial
from ..series import TruncatedSeries, binom_pow, exp_series


class _EgfCache:
    """Numbers n! [t^n] f(t), regrown by doubling the truncation order."""

    def __init__(self, make):
        self._make = make
        self._values: list[Fraction] = []
        self._lock = threading.Lock()

    def __call__(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError("index must be non-negative")
        vals = self._values
        if n < len(vals):
            return vals[n]
        with self._lock:
            if n >= len(self._values):
                order = max(32, 1 << n.bit_length())
                self._values = self._make(order).egf_values()
            return self._values[n]


def _bernoulli_egf(order: int) -> TruncatedSeries:
    # t/(e^t - 1) = 1 / ((e^t - 1)/t)
    return (exp_series(order + 1) - 1).shift_down().with_order(order).inverse()


def _euler_egf(order: int) -> TruncatedSeries:
    return 2 / (exp_series(order) + 1)


def _euler_star_egf(order: int) -> TruncatedSeries:
    return 2 / (exp_series(order) + exp_series(order, -1))


bernoulli = _EgfCache(_bernoulli_egf)
bernoulli.__doc__ = "B_n from t/(e^t - 1); B_1 = -1/2."
euler = _EgfCache(_euler_egf)
euler.__doc__ = "E_n from 2/(e^t + 1); E_1 = -1/2, E_3 = 1/4."
euler_star = _EgfCache(_euler_star_egf)
euler_star.__doc__ = "E*_n from 2/(e^t + e^-t) = sech t."


def bernoulli_poly(n: int) -> Polynomial:
    return Polynomial([math.comb(n, j) * bernoulli(j) for j in range(n + 1)][::-1])


def euler_poly(n: int) -> Polynomial:
    return Polynomial([math.comb(n, j) * euler(j) for j in range(n + 1)][::-1])


class ApostolFamily(Enum):
    APOSTOL_B = "APOSTOL_B"
    APOSTOL_E = "APOSTOL_E"
    FROBENIUS = "FROBENIUS"


@lru_cache(maxsize=None)
def _apostol_b(n: int, lam: Fraction) -> Fraction:
    if n == 0:
        return Fraction(0)
    if n == 1:
        return 1 / (lam - 1)
    s = sum((math.comb(n, j) * _apostol_b(j, lam) for j in range(n)), Fraction(0))
    return lam / (1 - lam) * s


@lru_cache(maxsize=None)
def _apostol_e(n: int, lam: Fraction) -> Fraction:
    if n == 0:
        return 2 / (lam + 1)
    s = sum((math.comb(n, j) * _apostol_e(j, lam) for j in range(n)), Fraction(0))
    return -lam / (1 + lam) * s


@lru_cache(maxsize=None)
def _frobenius(n: int, u: Fraction) -> Fraction:
    if n == 0:
        return Fraction(1)
    s = sum((math.comb(n, j) * _frobenius(j, u) for j in range(n)), Fraction(0))
    return s / (u - 1)


def apostol(family: ApostolFamily | str, n: int, param: RationalLike) -> Fraction:
    """Apostol-Bernoulli B_n(lam), Apostol-Euler E_n(lam) or Frobenius-Euler H_n(u).

    Generating functions t/(lam e^t - 1), 2/(lam e^t + 1) and (1-u)/(e^t - u).
    """
    fam = ApostolFamily(family)
    if n < 0:
        raise ValueError("n must be non-negative")
    x = Q(param)
    if fam is ApostolFamily.APOSTOL_B:
        if x == 1:
            raise ValueError("Apostol-Bernoulli recurrence needs lambda != 1")
        return _apostol_b(n, x)
    if fam is ApostolFamily.APOSTOL_E:
        if x == -1:
            raise ValueError("Apostol-Euler numbers need lambda != -1")
        return _apostol_e(n, x)
    if x == 1:
        raise ValueError("Frobenius-Euler numbers need u != 1")
    return _frobenius(n, x)


def apostol_bernoulli_poly(n: int, lam: RationalLike) -> Polynomial:
    """B_n(x; lam) = sum_j C(n,j) x^(n-j) B_j(lam)."""
    return Polynomial([math.comb(n, j) * apostol("APOSTOL_B", j, lam) for j in range(n + 1)][::-1])


def apostol_euler_poly(n: int, lam: RationalLike) -> Polynomial:
    return Polynomial([math.comb(n, j) * apostol("APOSTOL_E", j, lam) for j in range(n + 1)][::-1])


def array_poly(n: int, k: int, lam: RationalLike) -> Polynomial:
    """S_k^n(x; lam) = (1/k!) sum_j (-1)^(k-j) C(k,j) lam^j (x+j)^n."""
    lam = Q(lam)
    total = Polynomial.zero()
    for j in range(k + 1):
        w = (-1) ** (k - j) * math.comb(k, j) * lam**j / math.factorial(k)
        if w:
            total = total + Polynomial([math.comb(n, i) * Fraction(j) ** (n - i) for i in range(n + 1)]).scale(w)
    return total


# Peters numbers s_n(lam, mu): (1 + (1+t)^lam)^(-mu) = sum s_n t^n/n!

@lru_cache(maxsize=None)
def _peters_values(lam: Fraction, mu: int, order: int) -> tuple[Fraction, ...]:
    base = (binom_pow(lam, order) + 1).inverse()
    return tuple((base**mu).egf_values())


def peters_number(n: int, lam: RationalLike, mu: int) -> Fraction:
    if mu < 0 or int(mu) != mu:
        raise ValueError("mu must be a non-negative integer")
    order = max(16, 1 << n.bit_length())
    return _peters_values(Q(lam), int(mu), order)[n]


def peters_poly(n: int, lam: RationalLike, mu: int) -> Polynomial:
    """s_n(x; lam, mu) = sum_v C(n,v) s_v(lam,mu) x_(n-v), returned in the falling basis."""
    cs = [Fraction(0)] * (n + 1)
    for v in range(n + 1):
        cs[n - v] = math.comb(n, v) * peters_number(v, lam, mu)
    return Polynomial(cs, Basis.FALLING)


def peters(n: int, x: RationalLike | None = None, lam: RationalLike = 1, mu: int = 1) -> Fraction:
    """s_n(lam, mu) when x is None, else s_n(x; lam, mu)."""
    if x is None:
        return peters_number(n, lam, mu)
    x = Q(x)
    return sum((math.comb(n, v) * peters_number(v, lam, mu) * falling(x, n - v) for v in range(n + 1)), Fraction(0))


# y-families

def y1(n: int, k: int, lam: RationalLike) -> Fraction:
    """y_1(n,k;lam) = (1/k!) sum_j C(k,j) j^n lam^j."""
    lam = Q(lam)
    s = sum((math.comb(k, j) * Fraction(j) ** n * lam**j for j in range(k + 1)), Fraction(0))
    return s / math.factorial(k)


def B_count(n: int, k: int) -> Fraction:
    """B(n,k) = k! y_1(n,k;1) = sum_j C(k,j) j^n."""
    return Fraction(sum(math.comb(k, j) * j**n for j in range(k + 1)))


def _need_lambda_not_one(lam: Fraction) -> None:
    if lam == 1:
        raise ValueError("Y_{n,2} needs lambda != 1")


def y2(n: int, lam: RationalLike) -> Fraction:
    """Y_{n,2}(lam) = 2 (-1)^n n! lam^(2n) / (2 lam - 2)^(n+1)."""
    lam = Q(lam)
    _need_lambda_not_one(lam)
    return 2 * (-1) ** n * math.factorial(n) * lam ** (2 * n) / (2 * lam - 2) ** (n + 1)


def y2_poly(n: int, lam: RationalLike) -> Polynomial:
    """Y_{n,2}(x; lam) in the falling basis:
    2 sum_j (-1)^j j! C(n,j) lam^(n+j) / (2 lam - 2)^(j+1) x_(n-j)."""
    lam = Q(lam)
    _need_lambda_not_one(lam)
    cs = [Fraction(0)] * (n + 1)
    for j in range(n + 1):
        cs[n - j] = 2 * (-1) ** j * math.factorial(j) * math.comb(n, j) * lam ** (n + j) / (2 * lam - 2) ** (j + 1)
    return Polynomial(cs, Basis.FALLING)


class ParamFamily(Enum):
    APOSTOL_B = "APOSTOL_B"
    APOSTOL_E = "APOSTOL_E"
    FROBENIUS = "FROBENIUS"
    ARRAY_POLY = "ARRAY_POLY"
    PETERS_NUM = "PETERS_NUM"
    PETERS_POLY = "PETERS_POLY"
    Y1_NUM = "Y1_NUM"
    Y2_NUM = "Y2_NUM"
    Y2_POLY = "Y2_POLY"


@dataclass(frozen=True)
class ParamFamilyQuery:
    family: ParamFamily
    n: int
    k: int | None = None
    lam: Fraction = Fraction(1)
    mu: int = 1
    x: Fraction | None = None


def y_family(q: ParamFamilyQuery) -> Fraction:
    """Evaluate one member of a parametric family at rational arguments."""
    fam = ParamFamily(q.family)
    lam = Q(q.lam)
    if fam in (ParamFamily.APOSTOL_B, ParamFamily.APOSTOL_E, ParamFamily.FROBENIUS):
        if q.x is None:
            return apostol(fam.value, q.n, lam)
        poly = apostol_bernoulli_poly if fam is ParamFamily.APOSTOL_B else apostol_euler_poly
        if fam is ParamFamily.FROBENIUS:
            raise ValueError("Frobenius-Euler polynomials are not provided")
        return poly(q.n, lam).evaluate(q.x)
    if fam is ParamFamily.ARRAY_POLY:
        return array_poly(q.n, q.k or 0, lam).evaluate(q.x or 0)
    if fam is ParamFamily.PETERS_NUM:
        return peters_number(q.n, lam, q.mu)
    if fam is ParamFamily.PETERS_POLY:
        return peters(q.n, q.x or 0, lam, q.mu)
    if fam is ParamFamily.Y1_NUM:
        return y1(q.n, q.k or 0, lam)
    if fam is ParamFamily.Y2_NUM:
        return y2(q.n, lam)
    return y2_poly(q.n, lam).evaluate(q.x or 0)


def daehee(n: int) -> Fraction:
    """D_n = (-1)^n n!/(n+1)."""
    return Fraction((-1) ** n * math.factorial(n), n + 1)


def changhee(n: int) -> Fraction:
    """Ch_n = (-1)^n n!/2^n."""
    return Fraction((-1) ** n * math.factorial(n), 2**n)


def harmonic(n: int) -> Fraction:
    """sum_{k=0}^{n} 1/(k+1); note the shifted indexing, harmonic(2) = 11/6."""
    return sum((Fraction(1, k + 1) for k in range(n + 1)), Fraction(0))


def harmonic_binomial(k: int, n: int) -> Fraction:
    """binom(H_k, n)_H = (1/k!) [k+1, n+1] with unsigned Stirling numbers of the first kind."""
    from .triangles import C

    return C(k + 1, n + 1) / math.factorial(k)


__all__ = [
    "ApostolFamily",
    "B_count",
    "ParamFamily",
    "ParamFamilyQuery",
    "apostol",
    "apostol_bernoulli_poly",
    "apostol_euler_poly",
    "array_poly",
    "bernoulli",
    "bernoulli_poly",
    "changhee",
    "daehee",
    "euler",
    "euler_poly",
    "euler_star",
    "harmonic",
    "harmonic_binomial",
    "peters",
    "peters_number",
    "peters_poly",
    "y1",
    "y2",
    "y2_poly",
    "y_family",
]
