"""Univariate polynomials over Q in five bases, plus a small bivariate type.

Bases and what coefficient c_n multiplies:

    MONOMIAL  x^n
    FALLING   x_(n) = x(x-1)...(x-n+1)
    RISING    x^(n) = x(x+1)...(x+n-1)
    MAHLER    binom(x, n) = x_(n)/n!
    CENTRAL   x^[n] = x (x+n/2-1)(x+n/2-2)...(x-n/2+1)

Every conversion goes through the monomial basis, and so does every product.
"""

from __future__ import annotations

import math
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

from .arith import Q, RationalLike
from .families.triangles import C, S1, S2, cf_T, cf_t


class Basis(Enum):
    MONOMIAL = "MONOMIAL"
    FALLING = "FALLING"
    RISING = "RISING"
    MAHLER = "MAHLER"
    CENTRAL = "CENTRAL"


def _strip(cs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def _mul_coeffs(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            if bj:
                out[i + j] += ai * bj
    return out


def _to_monomial(basis: Basis, cs: Sequence[Fraction]) -> list[Fraction]:
    if basis is Basis.MONOMIAL:
        return list(cs)
    d = len(cs)
    if basis is Basis.MAHLER:
        cs = [c / math.factorial(n) for n, c in enumerate(cs)]
        basis = Basis.FALLING
    table = {Basis.FALLING: S1, Basis.RISING: C, Basis.CENTRAL: cf_t}[basis]
    out = [Fraction(0)] * d
    for n, c in enumerate(cs):
        if c:
            for k in range(n + 1):
                e = table(n, k)
                if e:
                    out[k] += c * e
    return out


def _rising_from_mono(n: int, k: int) -> Fraction:
    # x^n = sum_k (-1)^(n-k) S2(n,k) x^(k)
    return (-1) ** (n - k) * S2(n, k)


def _from_monomial(basis: Basis, cs: Sequence[Fraction]) -> list[Fraction]:
    if basis is Basis.MONOMIAL:
        return list(cs)
    table = {
        Basis.FALLING: S2,
        Basis.MAHLER: S2,
        Basis.RISING: _rising_from_mono,
        Basis.CENTRAL: cf_T,
    }[basis]
    d = len(cs)
    out = [Fraction(0)] * d
    for n, c in enumerate(cs):
        if c:
            for k in range(n + 1):
                e = table(n, k)
                if e:
                    out[k] += c * e
    if basis is Basis.MAHLER:
        out = [c * math.factorial(k) for k, c in enumerate(out)]
    return out


class Polynomial:
    """Immutable polynomial: a basis tag and a stripped coefficient tuple.

    ``==`` is structural (same basis, same coefficients).  Use
    :meth:`same_function` to compare across bases.
    """

    __slots__ = ("basis", "coeffs")

    def __init__(self, coeffs: Iterable[RationalLike] = (), basis: Basis | str = Basis.MONOMIAL):
        self.basis = Basis(basis)
        self.coeffs = _strip([Q(c) for c in coeffs])

    # construction helpers
    @classmethod
    def zero(cls, basis: Basis = Basis.MONOMIAL) -> "Polynomial":
        return cls((), basis)

    @classmethod
    def constant(cls, c: RationalLike) -> "Polynomial":
        return cls([c])

    @classmethod
    def x(cls) -> "Polynomial":
        return cls([0, 1])

    @classmethod
    def term(cls, n: int, c: RationalLike = 1, basis: Basis | str = Basis.MONOMIAL) -> "Polynomial":
        return cls([0] * n + [c], basis)

    @classmethod
    def linear_product(cls, shifts: Iterable[RationalLike], scale: RationalLike = 1) -> "Polynomial":
        """scale * prod (x + s) over the given shifts."""
        cs = [Q(scale)]
        for s in shifts:
            cs = _mul_coeffs(cs, [Q(s), Fraction(1)])
        return cls(cs)

    # introspection
    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, n: int) -> Fraction:
        return self.coeffs[n] if 0 <= n < len(self.coeffs) else Fraction(0)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.basis is other.basis and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.basis, self.coeffs))

    def __repr__(self):
        from .polytext import format_poly

        return f"Polynomial({format_poly(self)!r})"

    def __str__(self):
        from .polytext import format_poly

        return format_poly(self)

    def same_function(self, other: "Polynomial") -> bool:
        return self.to_monomial().coeffs == other.to_monomial().coeffs

    # bases
    def convert(self, target: Basis | str) -> "Polynomial":
        target = Basis(target)
        if target is self.basis:
            return self
        mono = _to_monomial(self.basis, self.coeffs)
        return Polynomial(_from_monomial(target, mono), target)

    def to_monomial(self) -> "Polynomial":
        return self.convert(Basis.MONOMIAL)

    # arithmetic
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        return Polynomial.constant(Q(other))

    def __add__(self, other):
        other = self._coerce(other)
        if other.basis is self.basis:
            a, b = self.coeffs, other.coeffs
            n = max(len(a), len(b))
            return Polynomial(
                [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)],
                self.basis,
            )
        return self.to_monomial() + other.to_monomial()

    def __radd__(self, other):
        return self._coerce(other) + self

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs], self.basis)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c: RationalLike) -> "Polynomial":
        c = Q(c)
        return Polynomial([c * a for a in self.coeffs], self.basis)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        a = self.to_monomial().coeffs
        b = other.to_monomial().coeffs
        return Polynomial(_mul_coeffs(a, b))

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, c):
        return self.scale(1 / Q(c))

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        result = Polynomial.constant(1)
        base = self.to_monomial()
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # evaluation
    def __call__(self, a: RationalLike) -> Fraction:
        return self.evaluate(a)

    def evaluate(self, a: RationalLike) -> Fraction:
        """Evaluate directly in the stored basis (no conversion)."""
        a = Q(a)
        if self.basis is Basis.MONOMIAL:
            acc = Fraction(0)
            for c in reversed(self.coeffs):
                acc = acc * a + c
            return acc
        total = Fraction(0)
        for n, c in enumerate(self.coeffs):
            if c:
                total += c * basis_value(self.basis, n, a)
        return total

    # calculus and difference operators
    def compose(self, inner: "Polynomial") -> "Polynomial":
        """self(inner(x)) in the monomial basis."""
        inner = inner.to_monomial()
        out = Polynomial.zero()
        for c in reversed(self.to_monomial().coeffs):
            out = out * inner + c
        return out

    def shift(self, m: RationalLike) -> "Polynomial":
        """x -> x + m."""
        m = Q(m)
        cs = self.to_monomial().coeffs
        out = [Fraction(0)] * len(cs)
        for n, c in enumerate(cs):
            if c:
                for k in range(n + 1):
                    out[k] += c * math.comb(n, k) * m ** (n - k)
        return Polynomial(out)

    def affine(self, a: RationalLike, b: RationalLike) -> "Polynomial":
        """x -> a + b x."""
        return self.compose(Polynomial([a, b]))

    def forward_diff(self) -> "Polynomial":
        return self.shift(1) - self.to_monomial()

    def central_diff(self) -> "Polynomial":
        half = Fraction(1, 2)
        return self.shift(half) - self.shift(-half)

    def derivative(self) -> "Polynomial":
        cs = self.to_monomial().coeffs
        return Polynomial([n * c for n, c in enumerate(cs)][1:])

    def antiderivative(self) -> "Polynomial":
        cs = self.to_monomial().coeffs
        return Polynomial([0] + [c / (n + 1) for n, c in enumerate(cs)])

    def definite_integral_01(self) -> Fraction:
        """Real integral over [0, 1]."""
        return sum((c / (n + 1) for n, c in enumerate(self.to_monomial().coeffs)), Fraction(0))

    def reflect(self) -> "Polynomial":
        """x -> -x."""
        cs = self.to_monomial().coeffs
        return Polynomial([c if n % 2 == 0 else -c for n, c in enumerate(cs)])

    def parity_split(self) -> tuple["Polynomial", "Polynomial"]:
        """(even part, odd part), both monomial."""
        cs = self.to_monomial().coeffs
        even = Polynomial([c if n % 2 == 0 else 0 for n, c in enumerate(cs)])
        odd = Polynomial([c if n % 2 == 1 else 0 for n, c in enumerate(cs)])
        return even, odd


def basis_value(basis: Basis, n: int, a: RationalLike) -> Fraction:
    """Value at a of the n-th basis element."""
    from .arith import binom, falling, rising

    a = Q(a)
    if basis is Basis.MONOMIAL:
        return a**n
    if basis is Basis.FALLING:
        return falling(a, n)
    if basis is Basis.RISING:
        return rising(a, n)
    if basis is Basis.MAHLER:
        return binom(a, n)
    if n == 0:
        return Fraction(1)
    v = a
    half = Fraction(n, 2)
    for j in range(1, n):
        v *= a + half - j
    return v


# Frequently used building blocks, all in the monomial basis unless noted.

def X() -> Polynomial:
    return Polynomial.x()


def ff(n: int, shift: RationalLike = 0) -> Polynomial:
    """(x + shift)_(n) as a monomial polynomial."""
    s = Q(shift)
    return Polynomial.linear_product([s - i for i in range(n)])


def rf(n: int, shift: RationalLike = 0) -> Polynomial:
    """(x + shift)^(n)."""
    s = Q(shift)
    return Polynomial.linear_product([s + i for i in range(n)])


def binom_poly(n: int, shift: RationalLike = 0, sign: int = 1) -> Polynomial:
    """binom(sign*x + shift, n) for sign = +1 or -1."""
    if n < 0:
        return Polynomial.zero()
    s = Q(shift)
    cs = [Fraction(1, math.factorial(n))]
    for i in range(n):
        cs = _mul_coeffs(cs, [s - i, Fraction(sign)])
    return Polynomial(cs)


def central(n: int) -> Polynomial:
    """x^[n] in the monomial basis."""
    return Polynomial.term(n, 1, Basis.CENTRAL).to_monomial()


def monomial(n: int) -> Polynomial:
    return Polynomial.term(n)


class BiPolynomial:
    """Polynomial in x whose coefficients are monomial polynomials in y.

    ``rows[i]`` is the coefficient of x^i.
    """

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Polynomial] = ()):
        rs = [r.to_monomial() for r in rows]
        while rs and rs[-1].is_zero():
            rs.pop()
        self.rows = tuple(rs)

    @classmethod
    def from_dict(cls, terms: dict[tuple[int, int], RationalLike]) -> "BiPolynomial":
        if not terms:
            return cls()
        dx = max(i for i, _ in terms)
        grid = [[Fraction(0)] * (1 + max([j for (i, j) in terms if i == r] or [0])) for r in range(dx + 1)]
        for (i, j), c in terms.items():
            grid[i][j] += Q(c)
        return cls(Polynomial(row) for row in grid)

    @classmethod
    def in_x(cls, p: Polynomial) -> "BiPolynomial":
        return cls(Polynomial.constant(c) for c in p.to_monomial().coeffs)

    @classmethod
    def in_y(cls, p: Polynomial) -> "BiPolynomial":
        return cls([p])

    def coeff(self, i: int, j: int) -> Fraction:
        return self.rows[i].coeff(j) if i < len(self.rows) else Fraction(0)

    def terms(self) -> dict[tuple[int, int], Fraction]:
        return {(i, j): c for i, r in enumerate(self.rows) for j, c in enumerate(r.coeffs) if c}

    def is_zero(self) -> bool:
        return not self.rows

    def __eq__(self, other):
        if not isinstance(other, BiPolynomial):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"BiPolynomial({self.terms()!r})"

    def __add__(self, other: "BiPolynomial") -> "BiPolynomial":
        n = max(len(self.rows), len(other.rows))
        zero = Polynomial.zero()
        return BiPolynomial(
            (self.rows[i] if i < len(self.rows) else zero) + (other.rows[i] if i < len(other.rows) else zero)
            for i in range(n)
        )

    def __neg__(self):
        return BiPolynomial(-r for r in self.rows)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: RationalLike) -> "BiPolynomial":
        return BiPolynomial(r.scale(c) for r in self.rows)

    def __mul__(self, other):
        if not isinstance(other, BiPolynomial):
            return self.scale(other)
        return bi_multiply(self, other)

    __rmul__ = scale

    def evaluate(self, x: RationalLike, y: RationalLike) -> Fraction:
        x = Q(x)
        acc = Fraction(0)
        for r in reversed(self.rows):
            acc = acc * x + r.evaluate(y)
        return acc

    def swap(self) -> "BiPolynomial":
        return BiPolynomial.from_dict({(j, i): c for (i, j), c in self.terms().items()})

    def integrate_out(self, variable: str, integral) -> Polynomial:
        """Apply a linear functional (Polynomial -> Rational) in one variable.

        ``variable`` is "x" or "y"; the result is a polynomial in the other one.
        ``integral`` is typically ``volkenborn_value`` or ``fermionic_value``.
        """
        if variable == "y":
            return Polynomial([integral(r) for r in self.rows])
        if variable == "x":
            return self.swap().integrate_out("y", integral)
        raise ValueError("variable must be 'x' or 'y'")


def bi_multiply(a: BiPolynomial, b: BiPolynomial) -> BiPolynomial:
    if a.is_zero() or b.is_zero():
        return BiPolynomial()
    zero = Polynomial.zero()
    out = [zero] * (len(a.rows) + len(b.rows) - 1)
    for i, ra in enumerate(a.rows):
        if ra.is_zero():
            continue
        for j, rb in enumerate(b.rows):
            if not rb.is_zero():
                out[i + j] = out[i + j] + ra * rb
    return BiPolynomial(out)


def substitute_sum(p: Polynomial) -> BiPolynomial:
    """p(x + y)."""
    cs = p.to_monomial().coeffs
    terms: dict[tuple[int, int], Fraction] = {}
    for n, c in enumerate(cs):
        if c:
            for k in range(n + 1):
                key = (k, n - k)
                terms[key] = terms.get(key, Fraction(0)) + c * math.comb(n, k)
    return BiPolynomial.from_dict(terms)


def substitute_product(p: Polynomial) -> BiPolynomial:
    """p(x * y)."""
    cs = p.to_monomial().coeffs
    return BiPolynomial.from_dict({(n, n): c for n, c in enumerate(cs) if c})
