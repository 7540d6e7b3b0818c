"""
Unfaithful points from lower-left entries
=========================================

If the 2-1 entry of rho3(w) vanishes at t0, then w and s1 both specialize to
upper triangular matrices and generate a solvable group, so t0 cannot be a
faithful specialization.  All such positive roots sit in the elliptic window.
"""

import random

import numpy as np

from realburau import BraidWord, hunt_unfaithful, parse_word
from realburau.burau import burau

for text in ("s2^-2 s1 s2^-1", "s2^5 s1^2 s2^-4 s1 s2^3"):
    w = parse_word(text, 3)
    for cert in hunt_unfaithful(w):
        print(f"{text:<26} root ~ {cert.root_float():.9f}")

# A random sample: collect every positive root and look at its spread
rng = random.Random(1)
roots = []
for _ in range(300):
    w = BraidWord(3, tuple((rng.randint(1, 2), rng.choice((1, -1)))
                           for _ in range(rng.randint(2, 12))))
    if w.uses_only(1) or burau(w)[1, 0].is_zero():
        continue
    roots += [c.root_float() for c in hunt_unfaithful(w)]

roots = np.array(roots)
lo, hi = (3 - 5 ** 0.5) / 2, (3 + 5 ** 0.5) / 2
print(f"{roots.size} roots, min {roots.min():.4f}, max {roots.max():.4f}; window ({lo:.4f}, {hi:.4f})")
print(np.histogram(roots, bins=8, range=(lo, hi))[0])
