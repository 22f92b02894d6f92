"""Distributions on Z_p, evaluated on cosets a + p^N Z_p with 0 <= a < p^N."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .arith import INFINITY, Q, ord_p, require_prime
from .families.numbers import bernoulli_poly, euler_poly


class MeasureKind(Enum):
    HAAR = "HAAR"
    MINUS_ONE = "MINUS_ONE"
    DIRAC = "DIRAC"
    MAZUR = "MAZUR"
    BERNOULLI_K = "BERNOULLI_K"
    EULER_K = "EULER_K"


@dataclass(frozen=True)
class Measure:
    """A distribution on Z_p.

    ``param`` is the point alpha for DIRAC and the index k for BERNOULLI_K and
    EULER_K; it is ignored otherwise.
    """

    kind: MeasureKind
    p: int
    param: Fraction | int | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", MeasureKind(self.kind))
        require_prime(self.p)
        if self.kind is MeasureKind.MINUS_ONE and self.p == 2:
            raise ValueError("the signed measure mu_-1 needs an odd prime")
        if self.kind in (MeasureKind.BERNOULLI_K, MeasureKind.EULER_K):
            if not isinstance(self.param, int) or self.param < 0:
                raise ValueError(f"{self.kind.value} needs a non-negative integer k")
        if self.kind is MeasureKind.DIRAC:
            if self.param is None:
                raise ValueError("DIRAC needs a point alpha")
            alpha = Q(self.param)
            if alpha.denominator % self.p == 0:
                raise ValueError("Dirac point must lie in Z_p")
            object.__setattr__(self, "param", alpha)


def measure_value(m: Measure, a: int, N: int) -> Fraction:
    """mu(a + p^N Z_p)."""
    if N < 0:
        raise ValueError("level must be non-negative")
    q = m.p**N
    if not 0 <= a < q:
        raise ValueError(f"coset representative {a} outside [0, {q})")
    kind = m.kind
    if kind is MeasureKind.HAAR:
        return Fraction(1, q)
    if kind is MeasureKind.MINUS_ONE:
        return Fraction((-1) ** a)
    if kind is MeasureKind.DIRAC:
        v = ord_p(m.param - a, m.p)
        return Fraction(1) if v is INFINITY or v >= N else Fraction(0)
    if kind is MeasureKind.MAZUR:
        return Fraction(a, q) - Fraction(1, 2)
    k = m.param
    if kind is MeasureKind.BERNOULLI_K:
        return Fraction(q) ** (k - 1) * bernoulli_poly(k)(Fraction(a, q))
    return (-1) ** a * Fraction(q) ** k * euler_poly(k)(Fraction(a, q))


def additivity_residual(m: Measure, a: int, N: int) -> Fraction:
    """mu(a + p^N Z_p) - sum_{j<p} mu(a + j p^N + p^(N+1) Z_p); zero for a distribution."""
    q = m.p**N
    parts = sum((measure_value(m, a + j * q, N + 1) for j in range(m.p)), Fraction(0))
    return measure_value(m, a, N) - parts
