"""
Orbits inside the window
========================

For t in the window, x is a rotation.  Iterating y on the fixed point of x
either revisits finitely many points (rational rotation, t = 1) or keeps
producing new ones that crowd together (irrational rotation, t = 1/2).
"""

from realburau import orbit_accumulation_test

for t0 in (1.0, 0.5):
    for n in (50, 200, 214, 400):
        ev = orbit_accumulation_test(t0, n)
        print(f"t={t0}  n={n:4d}  distinct={ev.distinct_points:4d}  "
              f"min distance={ev.min_distance:.4f}")
