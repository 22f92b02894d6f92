"""Two-index number triangles: Stirling, Lah, central factorial, lambda-Stirling.

Rows are memoized and grow monotonically.  Growth happens under a lock so
concurrent readers see each row built exactly once.
"""

from __future__ import annotations

import math
import threading
from enum import Enum
from fractions import Fraction
from typing import Callable

from ..arith import Q, RationalLike


class TriangleFamily(Enum):
    S1 = "S1"
    S2 = "S2"
    C_UNSIGNED = "C_UNSIGNED"
    LAH = "LAH"
    LAH_UNSIGNED = "LAH_UNSIGNED"
    CF_T_SMALL = "CF_T_SMALL"
    CF_T_BIG = "CF_T_BIG"
    LAMBDA_S2 = "LAMBDA_S2"


class _RowTable:
    def __init__(self, build: Callable[[int, list], list]):
        self._build = build
        self._rows: list[tuple[Fraction, ...]] = []
        self._lock = threading.RLock()

    def row(self, n: int) -> tuple[Fraction, ...]:
        if n < 0:
            raise ValueError("row index must be non-negative")
        rows = self._rows
        if n < len(rows):
            return rows[n]
        with self._lock:
            while len(self._rows) <= n:
                m = len(self._rows)
                self._rows.append(tuple(self._build(m, self._rows)))
            return self._rows[n]


def _s1_row(n, rows):
    if n == 0:
        return [Fraction(1)]
    prev = rows[n - 1]
    m = n - 1
    out = [Fraction(0)] * (n + 1)
    for k in range(1, n + 1):
        a = prev[k] if k <= m else 0
        out[k] = -m * a + prev[k - 1]
    return out


def _s2_row(n, rows):
    out = []
    for k in range(n + 1):
        s = sum((-1) ** (k - j) * math.comb(k, j) * j**n for j in range(k + 1))
        out.append(Fraction(s, math.factorial(k)))
    return out


def _lah_row(n, rows):
    if n == 0:
        return [Fraction(1)]
    out = [Fraction(0)]
    sign = (-1) ** n
    for k in range(1, n + 1):
        out.append(Fraction(sign * math.factorial(n) * math.comb(n - 1, k - 1), math.factorial(k)))
    return out


def central_factorial_coeffs(n: int) -> list[Fraction]:
    """Monomial coefficients of x^[n] = x * prod_{j=1}^{n-1} (x + n/2 - j)."""
    if n == 0:
        return [Fraction(1)]
    coeffs = [Fraction(0), Fraction(1)]
    half = Fraction(n, 2)
    for j in range(1, n):
        a = half - j
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] += c
            nxt[i] += a * c
        coeffs = nxt
    return coeffs


def _cf_small_row(n, rows):
    return central_factorial_coeffs(n)


def _cf_big_row(n, rows):
    # x^n = sum_k T(n,k) x^[k]; t is unit lower triangular, so back-substitute.
    small = [_CF_SMALL.row(j) for j in range(n + 1)]
    T = [Fraction(0)] * (n + 1)
    T[n] = Fraction(1)
    for k in range(n - 1, -1, -1):
        T[k] = -sum((T[j] * small[j][k] for j in range(k + 1, n + 1)), Fraction(0))
    return T


_S1 = _RowTable(_s1_row)
_S2 = _RowTable(_s2_row)
_LAH = _RowTable(_lah_row)
_CF_SMALL = _RowTable(_cf_small_row)
_CF_BIG = _RowTable(_cf_big_row)

_lambda_lock = threading.Lock()
_lambda_cache: dict[tuple[Fraction, int, int], Fraction] = {}


def lambda_stirling2(n: int, k: int, lam: RationalLike) -> Fraction:
    """S2(n,k;lam) = (1/k!) sum_j (-1)^(k-j) C(k,j) lam^j j^n.

    Unlike the ordinary triangle this is generally nonzero for k > n.
    """
    lam = Q(lam)
    key = (lam, n, k)
    hit = _lambda_cache.get(key)
    if hit is not None:
        return hit
    s = sum(
        ((-1) ** (k - j) * math.comb(k, j) * lam**j * Fraction(j) ** n for j in range(k + 1)),
        Fraction(0),
    )
    val = s / math.factorial(k)
    with _lambda_lock:
        _lambda_cache[key] = val
    return val


def triangle_row(family: TriangleFamily | str, n: int, param: RationalLike | None = None) -> tuple[Fraction, ...]:
    """Row n, entries k = 0..n."""
    fam = TriangleFamily(family)
    if fam is TriangleFamily.S1:
        return _S1.row(n)
    if fam is TriangleFamily.S2:
        return _S2.row(n)
    if fam is TriangleFamily.C_UNSIGNED:
        return tuple(abs(c) for c in _S1.row(n))
    if fam is TriangleFamily.LAH:
        return _LAH.row(n)
    if fam is TriangleFamily.LAH_UNSIGNED:
        return tuple(abs(c) for c in _LAH.row(n))
    if fam is TriangleFamily.CF_T_SMALL:
        return _CF_SMALL.row(n)
    if fam is TriangleFamily.CF_T_BIG:
        return _CF_BIG.row(n)
    if param is None:
        raise ValueError("LAMBDA_S2 needs a lambda parameter")
    return tuple(lambda_stirling2(n, k, param) for k in range(n + 1))


def triangle(family: TriangleFamily | str, n: int, k: int, param: RationalLike | None = None) -> Fraction:
    """Entry (n, k).  Out-of-range k (k < 0 or k > n) gives 0, except LAMBDA_S2
    which is evaluated from its defining sum for every k >= 0."""
    fam = TriangleFamily(family)
    if n < 0:
        raise ValueError("n must be non-negative")
    if fam is TriangleFamily.LAMBDA_S2:
        if param is None:
            raise ValueError("LAMBDA_S2 needs a lambda parameter")
        return lambda_stirling2(n, k, param) if k >= 0 else Fraction(0)
    if k < 0 or k > n:
        return Fraction(0)
    return triangle_row(fam, n)[k]


def S1(n: int, k: int) -> Fraction:
    return triangle(TriangleFamily.S1, n, k)


def S2(n: int, k: int) -> Fraction:
    return triangle(TriangleFamily.S2, n, k)


def C(n: int, k: int) -> Fraction:
    """Unsigned Stirling numbers of the first kind."""
    return abs(S1(n, k))


def lah(n: int, k: int) -> Fraction:
    return triangle(TriangleFamily.LAH, n, k)


def lah_unsigned(n: int, k: int) -> Fraction:
    return abs(lah(n, k))


def cf_t(n: int, k: int) -> Fraction:
    return triangle(TriangleFamily.CF_T_SMALL, n, k)


def cf_T(n: int, k: int) -> Fraction:
    return triangle(TriangleFamily.CF_T_BIG, n, k)


def even_central(i: int, j: int) -> tuple[Fraction, Fraction]:
    """(t(2i,2j), T(2i,2j)), the entries of the 7x7 even-index matrices."""
    return cf_t(2 * i, 2 * j), cf_T(2 * i, 2 * j)
