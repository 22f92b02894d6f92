"""Truncated formal power series with exact rational coefficients."""

from __future__ import annotations

import math
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

from .arith import Q, RationalLike, binom

DEFAULT_ORDER = 16


class SeriesKind(Enum):
    EXP = "exp"
    LOG1P = "log1p"
    T_OVER_LOG1P = "t_over_log1p"


class TruncatedSeries:
    """c_0 + c_1 t + ... + c_K t^K, everything above t^K discarded.

    Binary operations require equal orders; mixing orders is almost always a
    caller bug, so it raises instead of silently truncating.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable[RationalLike], order: int | None = None):
        cs = [Q(c) for c in coeffs]
        if order is None:
            order = max(len(cs) - 1, 0)
        if order < 0:
            raise ValueError("order must be non-negative")
        cs = cs[: order + 1]
        cs += [Fraction(0)] * (order + 1 - len(cs))
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, c: RationalLike, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        return cls([c], order)

    @classmethod
    def variable(cls, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        return cls([0, 1], order)

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def __len__(self):
        return self.order + 1

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return f"TruncatedSeries({[str(c) for c in self.coeffs]}, order={self.order})"

    def _check(self, other: "TruncatedSeries") -> None:
        if self.order != other.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def _lift(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            self._check(other)
            return other
        return TruncatedSeries.constant(Q(other), self.order)

    def __add__(self, other):
        other = self._lift(other)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            c = Q(other)
            return TruncatedSeries([c * a for a in self.coeffs], self.order)
        self._check(other)
        K = self.order
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (K + 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j in range(K + 1 - i):
                if b[j]:
                    out[i + j] += ai * b[j]
        return TruncatedSeries(out, K)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return self * other.inverse()
        return self * (1 / Q(other))

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            raise TypeError("only integer powers; use binom_pow for rational exponents")
        if e < 0:
            return self.inverse() ** (-e)
        result = TruncatedSeries.constant(1, self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse; requires a nonzero constant term."""
        a = self.coeffs
        if a[0] == 0:
            raise ZeroDivisionError("series with zero constant term has no inverse")
        K = self.order
        inv0 = 1 / a[0]
        b = [inv0] + [Fraction(0)] * K
        for n in range(1, K + 1):
            s = sum((a[k] * b[n - k] for k in range(1, n + 1) if a[k]), Fraction(0))
            b[n] = -s * inv0
        return TruncatedSeries(b, K)

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """self(inner(t)); inner must have zero constant term."""
        self._check(inner)
        if inner.coeffs[0] != 0:
            raise ValueError("inner series must have zero constant term")
        K = self.order
        # Horner from the top coefficient down.
        out = TruncatedSeries.constant(self.coeffs[K], K)
        for c in reversed(self.coeffs[:K]):
            out = out * inner + c
        return out

    def __call__(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        return self.compose(inner)

    def derivative(self) -> "TruncatedSeries":
        cs = [n * c for n, c in enumerate(self.coeffs)][1:]
        return TruncatedSeries(cs, self.order)

    def shift_down(self, k: int = 1) -> "TruncatedSeries":
        """Divide by t^k.  The low coefficients must vanish; the top k slots become 0."""
        if any(self.coeffs[:k]):
            raise ValueError(f"series is not divisible by t^{k}")
        return TruncatedSeries(self.coeffs[k:], self.order)

    def with_order(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coeffs, order)

    def egf_values(self) -> list[Fraction]:
        """n! c_n for n = 0..K, the numbers this series generates exponentially."""
        return [c * math.factorial(n) for n, c in enumerate(self.coeffs)]


def exp_series(order: int = DEFAULT_ORDER, scale: RationalLike = 1) -> TruncatedSeries:
    """e^{scale*t}."""
    s = Q(scale)
    return TruncatedSeries([s**n / math.factorial(n) for n in range(order + 1)], order)


def expm1_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    return exp_series(order) - 1


def log1p_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    cs = [Fraction(0)] + [Fraction((-1) ** (n + 1), n) for n in range(1, order + 1)]
    return TruncatedSeries(cs, order)


def binom_pow(alpha: RationalLike, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """(1+t)^alpha for rational alpha."""
    alpha = Q(alpha)
    return TruncatedSeries([binom(alpha, n) for n in range(order + 1)], order)


def std_series(kind: SeriesKind | str, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    kind = SeriesKind(kind) if not isinstance(kind, SeriesKind) else kind
    if kind is SeriesKind.EXP:
        return exp_series(order)
    if kind is SeriesKind.LOG1P:
        return log1p_series(order)
    # t/log(1+t): divide log(1+t) by t one order up, then invert.
    q = log1p_series(order + 1).shift_down().with_order(order)
    return q.inverse()


def from_sequence(values: Sequence[RationalLike], order: int | None = None) -> TruncatedSeries:
    """EGF sum v_n t^n / n!."""
    return TruncatedSeries(
        [Q(v) / math.factorial(n) for n, v in enumerate(values)],
        order if order is not None else len(values) - 1,
    )
