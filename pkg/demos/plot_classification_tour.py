"""
Where on the real line is the Burau image discrete?
===================================================

Walk along the real axis and ask the classifier at a handful of exact points.
"""

from fractions import Fraction

from realburau import QuadNum, classify

golden_sq = QuadNum(Fraction(3, 2), Fraction(1, 2), 5)     # (3 + sqrt 5)/2
phi = QuadNum(Fraction(1, 2), Fraction(1, 2), 5)           # golden ratio

points = [Fraction(-2), Fraction(-1), Fraction(1, 4), Fraction(1, 2), Fraction(1),
          phi, Fraction(2), golden_sq, Fraction(3)]

for t0 in points:
    v = classify(t0)
    print(f"t = {str(t0):>14}  {v.regime:<18} discrete={v.discrete:<17} faithful={v.faithful}")

# t and 1/t always get the same answer
for t0 in points:
    a, b = classify(t0), classify(1 / t0)
    assert (a.discrete, a.faithful) == (b.discrete, b.faithful)

# Decimal input switches to numerical mode and never claims a certificate
print(classify(0.5).dumps())
