"""Summing the Gauss hypergeometric series, in floats and in exact rationals.

The series F(a,b;c;z) = sum_n (a)_n (b)_n / ((c)_n n!) z^n converges for
|z| < 1.  When a or b is a nonpositive integer it terminates and is a
polynomial, valid everywhere.
"""

import math
from fractions import Fraction

from hypquad import HypParams, SeriesControl, gauss_2f1, pochhammer

# rising factorials are the series' building blocks
print("(1/2)_4 =", pochhammer(Fraction(1, 2), 4))

# F(1,1;2;z) = -ln(1-z)/z: an elementary sanity anchor
for z in (0.2, 0.5, 0.9):
    res = gauss_2f1(HypParams(1, 1, 2), z)
    print(f"F(1,1;2;{z}) = {res.value:.15f}   -ln(1-z)/z = {-math.log(1-z)/z:.15f}"
          f"   ({res.terms_used} terms, converged={res.converged})")

# exact-rational mode: the partial sum is a single reduced fraction
exact = gauss_2f1(HypParams(Fraction(1), Fraction(1), Fraction(2)), Fraction(1, 2),
                  SeriesControl(max_terms=60))
print("exact partial sum at z=1/2:", exact.value)

# terminating series escape the unit disk: F(-3, 1/2; 5/2; 7/2) is a cubic
poly = gauss_2f1(HypParams(-3, Fraction(1, 2), Fraction(5, 2)), Fraction(7, 2))
print("terminating F(-3,1/2;5/2;7/2) =", poly.value)
