"""
Two B4 braids that collide at t = (3 + sqrt 5)/2
================================================
"""

from fractions import Fraction

from realburau import QuadNum, b4_kernel_pair_check, burau, named_word, specialize

w1, w2 = named_word("omega1", 4), named_word("omega2", 4)
print("omega1 =", w1)
print("omega2 =", w2)

R1, R2 = burau(w1), burau(w2)
print("symbolic images differ:", R1 != R2)

t0 = QuadNum(Fraction(3, 2), Fraction(1, 2), 5)
S1 = specialize(R1, t0)
for row in S1.format():
    print("   ", row)
print("equal at t0:", S1 == specialize(R2, t0))

print(b4_kernel_pair_check().to_json())
