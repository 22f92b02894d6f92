"""Number triangles and the sequences the integrals produce.

We print the Stirling, Lah and central factorial tables, then integrate
products of falling and rising factorials.  The central factorial matrix
carries one cell where the printed value (-870) and the computed value
(-820) part ways; three independent derivations below agree on -820.

Run with: python3 demos/02_tables_and_sequences.py
"""

from fractions import Fraction

from volkenborn import Basis, Polynomial, volkenborn_value
from volkenborn.catalog import emit_tables
from volkenborn.families import bernoulli
from volkenborn.families.sequences import sequence, y_sequences
from volkenborn.families.triangles import cf_t

print(emit_tables(["stirling1", "lah", "central_t_even"]))

print("The disputed cell t(10,4), three ways")
x10 = Polynomial.term(10, 1, Basis.CENTRAL).to_monomial()
print(f"  coefficient of x^4 in x^[10]          {x10.coeffs[4]}")
# t(n,k) = t(n-2,k-2) - ((n-2)/2)^2 t(n-2,k), started from t(0,0) = 1
t = {(0, 0): Fraction(1)}
for n in range(2, 11, 2):
    for k in range(0, n + 1, 2):
        t[n, k] = t.get((n - 2, k - 2), 0) - Fraction(n - 2, 2) ** 2 * t.get((n - 2, k), 0)
print(f"  the even recurrence                   {t[10, 4]}")
prod = Polynomial.term(5, 1, Basis.FALLING) * Polynomial.term(5, 1, Basis.RISING)
print(f"  x^4 coefficient of x_(5) x^(5)        {prod.to_monomial().coeffs[4]}")
print(f"  library accessor cf_t(10, 4)          {cf_t(10, 4)}")

print("\nY(n,B): integrating x_(n) x^(n) gives a combination of even Bernoulli numbers")
for n in range(7):
    direct = volkenborn_value(Polynomial.term(n, 1, Basis.FALLING) * Polynomial.term(n, 1, Basis.RISING))
    combo = sum((cf_t(2 * n, 2 * k) * bernoulli(2 * k) for k in range(n + 1)), Fraction(0))
    y = y_sequences(n, "B")
    print(f"  n={n}  Y = {str(y):>14}   {'matches' if y == direct == combo else 'differs'}")

print("\nDaehee and Changhee numbers: integrals of x_(n) for the two measures")
for n in range(8):
    print(f"  n={n}  D_n = {str(sequence('DAEHEE1', n)):>8}   Ch_n = {sequence('CHANGHEE1', n)}")
