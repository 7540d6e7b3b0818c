"""
Fundamental domains in the Poincare disk
========================================

Outside the elliptic window the images of x and y pair the sides of an
ideal quadrilateral.  Each picture is drawn only after its side pairings
check out exactly.
"""

import os
from fractions import Fraction

from realburau import QuadNum, pingpong_certificate, render_disk_figure

out_dir = os.environ.get("DEMO_OUT_DIR", ".")
cases = [(Fraction(-2), 1), (QuadNum(Fraction(3, 2), Fraction(1, 2), 5), 2), (Fraction(3), 3)]

for t0, case in cases:
    cert = pingpong_certificate(t0, case)
    print(f"case {case}, t = {t0}: ok={cert.ok}")
    for label, v in zip(cert.labels, cert.vertices):
        print(f"    {label:<16} {v}")
    path = os.path.join(out_dir, f"domain_case{case}.svg")
    render_disk_figure(t0, case, path)
    print("    wrote", path)
