"""Check registry and the parameter ranges handed to each check.

A check is a generator of ``(params, lhs, rhs)`` triples.  Sides may be
Rationals, Polynomials (compared as functions), BiPolynomials or truncated
series; the runner compares them exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Any, Callable, Iterable

Case = tuple[dict[str, Any], Any, Any]
CheckFn = Callable[["Ranges"], Iterable[Case]]

CHECKS: dict[str, CheckFn] = {}

DEFAULT_LAMBDAS = (Fraction(2), Fraction(3), Fraction(-2), Fraction(1, 2))
DEFAULT_THETAS = (Fraction(2), Fraction(3))


def check(name: str) -> Callable[[CheckFn], CheckFn]:
    def deco(fn: CheckFn) -> CheckFn:
        if name in CHECKS:
            raise ValueError(f"duplicate check name {name!r}")
        CHECKS[name] = fn
        return fn

    return deco


@dataclass(frozen=True)
class Ranges:
    """Parameter bounds for one catalog entry.

    ``n_min``/``m_min`` come from the entry's stated domain; ``n_max`` is
    the global bound capped by the entry's own ``n_cap`` if it has one.
    """

    n_max: int = 10
    n_min: int = 0
    m_max: int = 6
    m_min: int = 0
    r_max: int = 3
    mu_max: int = 3
    lambdas: tuple[Fraction, ...] = DEFAULT_LAMBDAS
    thetas: tuple[Fraction, ...] = DEFAULT_THETAS
    extra: dict[str, Any] = field(default_factory=dict)

    def ns(self, lo: int | None = None) -> range:
        return range(self.n_min if lo is None else max(lo, self.n_min), self.n_max + 1)

    def ms(self, lo: int | None = None) -> range:
        return range(self.m_min if lo is None else max(lo, self.m_min), self.m_max + 1)

    def rs(self) -> range:
        return range(1, self.r_max + 1)

    def mus(self) -> range:
        return range(1, self.mu_max + 1)

    def with_(self, **kw) -> "Ranges":
        return replace(self, **kw)

