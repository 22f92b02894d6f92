"""Text form of polynomials.

Grammar (whitespace ignored)::

    expr  := ['-'] term (('+' | '-') term)*
    term  := coef | [coef '*'] atom
    atom  := 'x' ['^' int] | ('ff' | 'rf' | 'binom' | 'cf') '(' int ')'
    coef  := int ['/' int]

ff, rf, binom and cf are x_(n), x^(n), binom(x,n) and x^[n].  An expression
whose atoms all share one non-monomial basis parses into that basis;
anything mixed (bare constants count as monomial) is collected in the
monomial basis.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .arith import format_rational
from .poly import Basis, Polynomial

_ATOM_BASIS = {
    "ff": Basis.FALLING,
    "rf": Basis.RISING,
    "binom": Basis.MAHLER,
    "cf": Basis.CENTRAL,
}
_BASIS_ATOM = {v: k for k, v in _ATOM_BASIS.items()}

_TOKEN = re.compile(
    r"\s*(?:"
    r"(?P<num>\d+(?:/\d+)?)"
    r"|(?P<fn>ff|rf|binom|cf)\s*\(\s*(?P<arg>\d+)\s*\)"
    r"|(?P<x>x)(?:\s*\^\s*(?P<pow>\d+))?"
    r"|(?P<op>[+\-*])"
    r")"
)


class PolyParseError(ValueError):
    pass


def _tokens(text: str):
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise PolyParseError(f"unexpected input at {pos}: {text[pos:pos + 10]!r}")
        pos = m.end()
        if m.group("num"):
            yield ("num", Fraction(m.group("num")))
        elif m.group("fn"):
            yield ("atom", (_ATOM_BASIS[m.group("fn")], int(m.group("arg"))))
        elif m.group("x"):
            yield ("atom", (Basis.MONOMIAL, int(m.group("pow") or 1)))
        else:
            yield ("op", m.group("op"))


def parse_poly(text: str) -> Polynomial:
    toks = list(_tokens(text))
    if not toks:
        raise PolyParseError("empty expression")
    terms: list[tuple[Fraction, Basis, int]] = []
    i = 0
    sign = 1
    expect_term = True
    while i < len(toks):
        kind, val = toks[i]
        if expect_term:
            if kind == "op" and val in "+-":
                if val == "-":
                    sign = -sign
                i += 1
                continue
            coef = Fraction(1)
            if kind == "num":
                coef = val
                i += 1
                if i < len(toks) and toks[i] == ("op", "*"):
                    i += 1
                    if i >= len(toks) or toks[i][0] != "atom":
                        raise PolyParseError("expected an atom after '*'")
                    basis, n = toks[i][1]
                    i += 1
                else:
                    basis, n = Basis.MONOMIAL, 0
            elif kind == "atom":
                basis, n = val
                i += 1
            else:
                raise PolyParseError(f"unexpected {val!r}")
            terms.append((sign * coef, basis, n))
            sign = 1
            expect_term = False
        else:
            if kind != "op" or val not in "+-":
                raise PolyParseError(f"expected '+' or '-', got {val!r}")
            sign = -1 if val == "-" else 1
            i += 1
            expect_term = True
    if expect_term:
        raise PolyParseError("dangling operator")

    bases = {b for _, b, _ in terms}
    target = bases.pop() if len(bases) == 1 else Basis.MONOMIAL
    total = Polynomial.zero(target)
    for c, b, n in terms:
        total = total + Polynomial.term(n, c, b)
    return total.convert(target) if total.basis is not target else total


def _atom_text(basis: Basis, n: int) -> str:
    if basis is Basis.MONOMIAL:
        return "x" if n == 1 else f"x^{n}"
    return f"{_BASIS_ATOM[basis]}({n})"


def format_poly(p: Polynomial) -> str:
    """Canonical text: ascending degree, unit coefficients elided."""
    if p.is_zero():
        return "0" if p.basis is Basis.MONOMIAL else f"0*{_atom_text(p.basis, 0)}"
    parts: list[str] = []
    for n, c in enumerate(p.coeffs):
        if c == 0:
            continue
        neg = c < 0
        mag = -c if neg else c
        if p.basis is Basis.MONOMIAL and n == 0:
            body = format_rational(mag)
        elif mag == 1:
            body = _atom_text(p.basis, n)
        else:
            body = f"{format_rational(mag)}*{_atom_text(p.basis, n)}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)
