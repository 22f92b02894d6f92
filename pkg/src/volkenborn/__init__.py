"""Exact Volkenborn and fermionic p-adic integrals of polynomials and the
special-number families they generate."""

from .arith import INFINITY, Q, format_rational, ord_p, p_norm, parse_rational
from .integrate import (
    alternating_sum,
    coset_integral,
    fermionic,
    fermionic_value,
    odd_rule,
    riemann_sum,
    shift_equation_residual,
    twisted_fermionic_monomial,
    unit_integral_monomial,
    volkenborn,
    volkenborn_value,
)
from .measures import Measure, MeasureKind, additivity_residual, measure_value
from .poly import Basis, BiPolynomial, Polynomial
from .polytext import format_poly, parse_poly
from .series import SeriesKind, TruncatedSeries, binom_pow, std_series

__version__ = "0.1.0"

__all__ = [
    "INFINITY",
    "Basis",
    "BiPolynomial",
    "Measure",
    "MeasureKind",
    "Polynomial",
    "Q",
    "SeriesKind",
    "TruncatedSeries",
    "additivity_residual",
    "alternating_sum",
    "binom_pow",
    "coset_integral",
    "fermionic",
    "fermionic_value",
    "format_poly",
    "format_rational",
    "measure_value",
    "odd_rule",
    "ord_p",
    "p_norm",
    "parse_poly",
    "parse_rational",
    "riemann_sum",
    "shift_equation_residual",
    "std_series",
    "twisted_fermionic_monomial",
    "unit_integral_monomial",
    "volkenborn",
    "volkenborn_value",
]
