"""Distributions on Z_p and the additivity they must satisfy.

A distribution assigns a value to every coset a + p^N Z_p, and the value on
a coset must equal the sum over its p children.  The Bernoulli distributions
get this from the multiplication formula for Bernoulli polynomials; the
Mazur and Dirac cases are checked alongside.

Run with: python3 demos/03_measures.py
"""

from fractions import Fraction

from volkenborn import Measure, additivity_residual, measure_value

p = 3
print(f"Bernoulli distribution k=2 on the cosets of 9Z_{p}")
mu = Measure("BERNOULLI_K", p, 2)
for a in range(9):
    print(f"  mu({a} + 9Z_3) = {measure_value(mu, a, 2)}")
children = [measure_value(mu, 1 + 3 * j, 2) for j in range(3)]
print(f"  children of 1 + 3Z_3 sum to {sum(children, Fraction(0))}, parent is {measure_value(mu, 1, 1)}")

print("\nLargest additivity residual, levels 0..3")
cases = [("HAAR", None), ("MAZUR", None), ("DIRAC", Fraction(1, 2))] + [("BERNOULLI_K", k) for k in range(5)]
for kind, param in cases:
    m = Measure(kind, 5, param)
    worst = max(abs(additivity_residual(m, a, N)) for N in range(4) for a in range(5**N))
    print(f"  {kind:<12} {'' if param is None else param!s:<4} {worst}")
