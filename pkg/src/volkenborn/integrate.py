"""Volkenborn and fermionic p-adic integrals of polynomials.

On polynomials both integrals are linear functionals, so they are computed
exactly, twice:

* MAHLER route (reference): expand in binom(x, n) and use
  int binom(x,n) dmu_1 = (-1)^n/(n+1),  int binom(x,n) dmu_-1 = (-1)^n/2^n.
* WITT route (cross-check): expand in x^j and use B_j or E_j.

The Mahler route is pure combinatorics and does not touch the Bernoulli or
Euler tables, so a disagreement points at the triangle tables first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .arith import Q, RationalLike, ord_p, require_prime
from .families.numbers import apostol, bernoulli, bernoulli_poly, euler
from .poly import Basis, Polynomial


class Route(Enum):
    MAHLER = "MAHLER"
    WITT = "WITT"


class RouteDisagreement(RuntimeError):
    """The two evaluation routes gave different values.  Always a bug."""


@dataclass(frozen=True)
class IntegralResult:
    value: Fraction
    route: Route
    agrees: bool


def _mahler_route(p: Polynomial, weight) -> Fraction:
    cs = p.convert(Basis.MAHLER).coeffs
    return sum((c * weight(n) for n, c in enumerate(cs) if c), Fraction(0))


def _witt_route(p: Polynomial, moment) -> Fraction:
    cs = p.to_monomial().coeffs
    return sum((c * moment(j) for j, c in enumerate(cs) if c), Fraction(0))


def _haar_mahler(n: int) -> Fraction:
    return Fraction((-1) ** n, n + 1)


def _ferm_mahler(n: int) -> Fraction:
    return Fraction((-1) ** n, 2**n)


def _dual(p: Polynomial, weight, moment, label: str) -> IntegralResult:
    a = _mahler_route(p, weight)
    b = _witt_route(p, moment)
    if a != b:
        raise RouteDisagreement(f"{label}: Mahler route {a} != Witt route {b} for {p}")
    return IntegralResult(a, Route.MAHLER, True)


def volkenborn(p: Polynomial) -> IntegralResult:
    """int p(x) dmu_1(x)."""
    return _dual(p, _haar_mahler, bernoulli, "volkenborn")


def fermionic(p: Polynomial) -> IntegralResult:
    """int p(x) dmu_-1(x)."""
    return _dual(p, _ferm_mahler, euler, "fermionic")


def volkenborn_value(p: Polynomial) -> Fraction:
    return volkenborn(p).value


def fermionic_value(p: Polynomial) -> Fraction:
    return fermionic(p).value


def _integer_form(p: Polynomial) -> tuple[list[int], int]:
    cs = p.to_monomial().coeffs
    den = 1
    for c in cs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    return [int(c * den) for c in cs], den


def _int_eval(cs: list[int], x: int) -> int:
    acc = 0
    for c in reversed(cs):
        acc = acc * x + c
    return acc


def riemann_sum(p: Polynomial, prime: int, N: int) -> Fraction:
    """(1/p^N) sum_{x < p^N} p(x), exactly.  p = 2 is allowed."""
    require_prime(prime)
    if N < 1:
        raise ValueError("level N must be >= 1")
    M = prime**N
    cs, den = _integer_form(p)
    total = sum(_int_eval(cs, x) for x in range(M))
    return Fraction(total, den * M)


def alternating_sum(p: Polynomial, prime: int, N: int) -> Fraction:
    """sum_{x < p^N} (-1)^x p(x), exactly; p must be odd."""
    require_prime(prime)
    if prime == 2:
        raise ValueError("the fermionic approximation needs an odd prime")
    if N < 1:
        raise ValueError("level N must be >= 1")
    M = prime**N
    cs, den = _integer_form(p)
    total = sum((_int_eval(cs, x) if x % 2 == 0 else -_int_eval(cs, x)) for x in range(M))
    return Fraction(total, den)


def approximation_valuation(p: Polynomial, prime: int, N: int, measure: str = "HAAR"):
    """ord_p(finite-level sum - exact integral)."""
    if measure.upper() in ("HAAR", "VOLKENBORN"):
        diff = riemann_sum(p, prime, N) - volkenborn_value(p)
    else:
        diff = alternating_sum(p, prime, N) - fermionic_value(p)
    return ord_p(diff, prime)


def shift_equation_residual(p: Polynomial, m: int, kind: str = "HAAR") -> Fraction:
    """LHS - RHS of the shift equation; zero by theorem.

    HAAR:      I(f(x+m)) - I(f) - sum_{j<m} f'(j)
    MINUS_ONE: I(f(x+m)) + (-1)^(m+1) I(f) - 2 sum_{j<m} (-1)^(m-1-j) f(j)
    """
    if m < 1:
        raise ValueError("m must be a positive integer")
    shifted = p.shift(m)
    if kind.upper() in ("HAAR", "VOLKENBORN"):
        d = p.derivative()
        return volkenborn_value(shifted) - volkenborn_value(p) - sum((d(j) for j in range(m)), Fraction(0))
    if kind.upper() in ("MINUS_ONE", "FERMIONIC"):
        rhs = 2 * sum(((-1) ** (m - 1 - j) * p(j) for j in range(m)), Fraction(0))
        return fermionic_value(shifted) + (-1) ** (m + 1) * fermionic_value(p) - rhs
    raise ValueError(f"unknown measure kind {kind!r}")


def odd_rule(p: Polynomial) -> Fraction:
    """-p'(0)/2 for an odd polynomial, checked against the Volkenborn integral."""
    even, _ = p.parity_split()
    if not even.is_zero():
        raise ValueError("odd_rule needs an odd polynomial")
    val = -p.derivative()(0) / 2
    direct = volkenborn_value(p)
    if val != direct:
        raise RouteDisagreement(f"odd rule {val} != integral {direct}")
    return val


def coset_integral(p: Polynomial, j: int, n: int, prime: int) -> Fraction:
    """Volkenborn integral of p over j + p^n Z_p, i.e. (1/p^n) int p(j + p^n x) dmu_1."""
    require_prime(prime)
    q = prime**n
    if not 0 <= j < q:
        raise ValueError(f"coset representative {j} outside [0, {q})")
    value = volkenborn_value(p.affine(j, q)) / q
    mono = p.to_monomial()
    nz = [k for k, c in enumerate(mono.coeffs) if c]
    if len(nz) == 1:
        m = nz[0]
        closed = mono.coeffs[m] * Fraction(prime) ** (n * (m - 1)) * bernoulli_poly(m)(Fraction(j, q))
        if closed != value:
            raise RouteDisagreement(f"coset closed form {closed} != {value}")
    return value


def unit_integral_monomial(m: int, prime: int) -> Fraction:
    """int over Z_p^* of x^m dmu_1 = (1 - p^(m-1)) B_m, by removing the coset pZ_p."""
    if m < 1:
        raise ValueError("m must be >= 1")
    xm = Polynomial.term(m)
    return volkenborn_value(xm) - coset_integral(xm, 0, 1, prime)


def unit_integral_divided_variant(m: int, prime: int) -> Fraction:
    """(1 - p^(m-1)) B_m / m.  Reported next to the plain integral, never equated with it."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return (1 - Fraction(prime) ** (m - 1)) * bernoulli(m) / m


def twisted_fermionic_monomial(n: int, lam: RationalLike) -> Fraction:
    """int lam^x x^n dmu_-1 = Apostol-Euler number E_n(lam)."""
    lam = Q(lam)
    if lam == -1:
        raise ValueError("lambda = -1 is excluded")
    return apostol("APOSTOL_E", n, lam)


def twisted_alternating_sum(n: int, lam: RationalLike, prime: int, N: int) -> Fraction:
    """sum_{x < p^N} (-1)^x lam^x x^n, the finite-level approximation of the above."""
    require_prime(prime)
    if prime == 2:
        raise ValueError("the fermionic approximation needs an odd prime")
    lam = Q(lam)
    total = Fraction(0)
    w = Fraction(1)
    for x in range(prime**N):
        total += w * x**n
        w *= -lam
    return total


def dirac_integral(p: Polynomial, alpha: RationalLike) -> Fraction:
    """Integral against the Dirac distribution at alpha is evaluation."""
    return p(alpha)


__all__ = [
    "IntegralResult",
    "Route",
    "RouteDisagreement",
    "alternating_sum",
    "approximation_valuation",
    "coset_integral",
    "dirac_integral",
    "fermionic",
    "fermionic_value",
    "odd_rule",
    "riemann_sum",
    "shift_equation_residual",
    "twisted_alternating_sum",
    "twisted_fermionic_monomial",
    "unit_integral_divided_variant",
    "unit_integral_monomial",
    "volkenborn",
    "volkenborn_value",
]
