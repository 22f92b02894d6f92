"""One-index sequences, each with a primary route and an independent oracle.

``sequence`` gives the primary value.  ``egf_oracle`` gives a generating
series whose coefficients (times n! for exponential ones) must agree.
"""

from __future__ import annotations

import math
from enum import Enum
from fractions import Fraction

from ..poly import Basis, Polynomial, ff, rf
from ..series import TruncatedSeries, exp_series, log1p_series, std_series
from .numbers import bernoulli, changhee, daehee, euler, euler_star, harmonic
from .triangles import S2


class SequenceFamily(Enum):
    BERNOULLI = "BERNOULLI"
    EULER = "EULER"
    EULER_STAR = "EULER_STAR"
    DAEHEE1 = "DAEHEE1"
    DAEHEE2 = "DAEHEE2"
    CHANGHEE1 = "CHANGHEE1"
    CHANGHEE2 = "CHANGHEE2"
    HARMONIC = "HARMONIC"
    FUBINI = "FUBINI"
    CAUCHY_B2 = "CAUCHY_B2"
    Y_OF_B = "Y_OF_B"
    Y_OF_E = "Y_OF_E"


def fubini_torsion(n: int, w: int = 1, y: Fraction | int = 1) -> Fraction:
    """n-th coefficient (times n!) of 2/(1 - y^w (e^t - 1)^w), via Stirling numbers:
    2 sum_k y^(wk) (wk)! S2(n, wk)."""
    y = Fraction(y)
    total = Fraction(0)
    k = 0
    while w * k <= n:
        total += y ** (w * k) * math.factorial(w * k) * S2(n, w * k)
        k += 1
    return 2 * total


def y_sequences(n: int, kind: str) -> Fraction:
    """The integral of x_(n) x^(n) against mu_1 (kind "B") or mu_-1 (kind "E")."""
    from ..integrate import fermionic_value, volkenborn_value

    prod = ff(n) * rf(n)
    if kind.upper() == "B":
        return volkenborn_value(prod)
    if kind.upper() == "E":
        return fermionic_value(prod)
    raise ValueError("kind must be 'B' or 'E'")


def sequence(family: SequenceFamily | str, n: int) -> Fraction:
    fam = SequenceFamily(family)
    if n < 0:
        raise ValueError("n must be non-negative")
    if fam is SequenceFamily.BERNOULLI:
        return bernoulli(n)
    if fam is SequenceFamily.EULER:
        return euler(n)
    if fam is SequenceFamily.EULER_STAR:
        return euler_star(n)
    if fam is SequenceFamily.DAEHEE1:
        return daehee(n)
    if fam is SequenceFamily.CHANGHEE1:
        return changhee(n)
    if fam is SequenceFamily.HARMONIC:
        return harmonic(n)
    if fam is SequenceFamily.FUBINI:
        # w = y = 1 specialisation of the torsion family, which carries a factor 2
        return fubini_torsion(n) / 2
    if fam is SequenceFamily.CAUCHY_B2:
        return Polynomial.term(n, 1, Basis.FALLING).definite_integral_01()
    if fam is SequenceFamily.Y_OF_B:
        return y_sequences(n, "B")
    if fam is SequenceFamily.Y_OF_E:
        return y_sequences(n, "E")

    from ..integrate import fermionic_value, volkenborn_value

    if fam is SequenceFamily.DAEHEE2:
        return volkenborn_value(rf(n))
    return fermionic_value(rf(n))


def egf_oracle(family: SequenceFamily | str, order: int = 16) -> TruncatedSeries:
    """Generating series for the family, built only from series arithmetic.

    Exponential for every family except HARMONIC, whose natural oracle is the
    ordinary series -log(1-t)/(t(1-t)).  Y_OF_B and Y_OF_E have no closed
    generating function and raise.
    """
    fam = SequenceFamily(family)
    K = order
    t = TruncatedSeries.variable(K)
    if fam is SequenceFamily.BERNOULLI:
        return (exp_series(K + 1) - 1).shift_down().with_order(K).inverse()
    if fam is SequenceFamily.EULER:
        return 2 / (exp_series(K) + 1)
    if fam is SequenceFamily.EULER_STAR:
        return 2 / (exp_series(K) + exp_series(K, -1))
    if fam is SequenceFamily.DAEHEE1:
        return log1p_series(K + 1).shift_down().with_order(K)
    if fam is SequenceFamily.DAEHEE2:
        # int x^(n) dmu_1 = (-1)^n int (-x)_(n) dmu_1, whose series is (1+t)log(1+t)/t at -t
        g = (1 + t) * log1p_series(K + 1).shift_down().with_order(K)
        return g.compose(-t)
    if fam is SequenceFamily.CHANGHEE1:
        return 2 / (2 + t)
    if fam is SequenceFamily.CHANGHEE2:
        g = 2 * (1 + t) / (2 + t)
        return g.compose(-t)
    if fam is SequenceFamily.HARMONIC:
        # -log(1-t)/t * 1/(1-t)
        q = -log1p_series(K + 1).compose(-TruncatedSeries.variable(K + 1))
        return q.shift_down().with_order(K) / (1 - t)
    if fam is SequenceFamily.FUBINI:
        return 1 / (2 - exp_series(K))
    if fam is SequenceFamily.CAUCHY_B2:
        return std_series("t_over_log1p", K)
    raise ValueError(f"no generating-function oracle for {fam.value}")


def oracle_values(family: SequenceFamily | str, order: int = 16) -> list[Fraction]:
    """Coefficients of the oracle series scaled the same way as ``sequence``."""
    fam = SequenceFamily(family)
    s = egf_oracle(fam, order)
    if fam is SequenceFamily.HARMONIC:
        return list(s.coeffs)
    return s.egf_values()
