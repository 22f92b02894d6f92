"""Integrating polynomials over Z_p, exactly and by finite sums.

The Volkenborn integral of x^n is the Bernoulli number B_n and the fermionic
integral is the Euler number E_n.  The library computes each integral along
two independent routes and refuses to answer if they disagree.  The finite
sums that define the integrals converge p-adically, and we watch that happen.

Run with: python3 demos/01_integrals.py
"""

from fractions import Fraction

from volkenborn import (
    Basis,
    INFINITY,
    Polynomial,
    alternating_sum,
    fermionic,
    format_poly,
    ord_p,
    parse_poly,
    riemann_sum,
    volkenborn,
)


def show(label, value):
    print(f"  {label:<28} {value}")


print("Moments of the two measures")
for n in range(9):
    x_n = Polynomial.term(n)
    b, e = volkenborn(x_n).value, fermionic(x_n).value
    print(f"  n={n}  int x^n dmu_1 = {str(b):>8}   int x^n dmu_-1 = {e}")

print("\nThe same polynomial in different bases integrates to the same value")
p = parse_poly("3*ff(4) - 2*ff(1) + 5")
show("input", format_poly(p))
for basis in Basis:
    q = p.convert(basis)
    show(f"{basis.value.lower()} form", format_poly(q))
show("Volkenborn integral", volkenborn(p).value)
# in the falling basis the answer can be read off term by term: int x_(n) = (-1)^n n!/(n+1)
show("term by term", 3 * Fraction(24, 5) - 2 * Fraction(-1, 2) + 5)

print("\nConvergence: distance from the level-N sum to the exact value")
x4 = Polynomial.term(4)
for prime in (3, 5, 7):
    exact = volkenborn(x4).value
    vals = [ord_p(riemann_sum(x4, prime, N) - exact, prime) for N in range(1, 6)]
    print(f"  p={prime} Volkenborn x^4:  ord_p = {vals}")
    exact = fermionic(x4).value
    vals = [ord_p(alternating_sum(x4, prime, N) - exact, prime) for N in range(1, 6)]
    print(f"  p={prime} fermionic  x^4:  ord_p = {vals}")

one = Polynomial.term(0)
v = ord_p(riemann_sum(one, 5, 2) - volkenborn(one).value, 5)
print(f"\nFor the constant 1 the finite sum is already exact: ord_5 = {'inf' if v is INFINITY else v}")
