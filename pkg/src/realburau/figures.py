"""SVG pictures of the fundamental domains in the Poincare disk.

Boundary points of the upper half-plane go to the unit circle by the Cayley
transform z -> (z - i)/(z + i) (so oo lands on 1).  Each side of the
certified quadrilateral is drawn as the geodesic between its endpoints; the
half-planes cut off behind the sides are left white and the remaining shaded
region is the fundamental domain.
"""

from __future__ import annotations

import cmath
import io
import math
import os
from dataclasses import dataclass
from xml.sax.saxutils import escape

from .moebius import INF, PingPongCertificate, format_point, pingpong_certificate

SIZE = 1000
RADIUS_PX = 400  # unit disk radius in pixels; the rest is margin for labels


def cayley(p) -> complex:
    if p is INF:
        return 1 + 0j
    z = complex(float(p), 0.0)
    return (z - 1j) / (z + 1j)


@dataclass(frozen=True)
class Geodesic:
    """Geodesic of the disk between two unit-circle points.

    ``center`` / ``radius`` describe the orthogonal circle carrying it; for
    (near-)antipodal endpoints it is a diameter and ``radius`` is inf.
    """

    p: complex
    q: complex
    center: complex | None
    radius: float

    def midpoint(self) -> complex:
        if self.center is None:
            return 0j
        c = self.center
        return c - self.radius * c / abs(c)


def geodesic(p: complex, q: complex) -> Geodesic:
    denom = 1 + (p * q.conjugate()).real
    if abs(p + q) < 1e-12 or abs(denom) < 1e-12:
        return Geodesic(p, q, None, math.inf)
    c = (p + q) / denom
    return Geodesic(p, q, c, abs(c - p))


def chords_cross(g: Geodesic, h: Geodesic, tol: float = 1e-9) -> bool:
    """Two geodesics meet in the open disk iff their endpoints interleave."""
    def ang(z):
        return cmath.phase(z) % (2 * math.pi)

    a, b = sorted((ang(g.p), ang(g.q)))
    ends = [ang(h.p), ang(h.q)]
    if any(abs(e - x) < tol or abs(abs(e - x) - 2 * math.pi) < tol
           for e in ends for x in (a, b)):
        return False  # shared ideal endpoint: asymptotic, not crossing
    inside = [a < e < b for e in ends]
    return inside[0] != inside[1]


@dataclass(frozen=True)
class DiskFigure:
    certificate: PingPongCertificate
    points: list[complex]
    labels: list[str]
    sides: list[Geodesic]
    svg: str


def _px(z: complex) -> tuple[float, float]:
    return SIZE / 2 + RADIUS_PX * z.real, SIZE / 2 - RADIUS_PX * z.imag


def _geodesic_path(g: Geodesic) -> str:
    x0, y0 = _px(g.p)
    x1, y1 = _px(g.q)
    if g.center is None:
        return f"M {x0:.4f} {y0:.4f} L {x1:.4f} {y1:.4f}"
    mx, my = _px(g.midpoint())
    # the short arc bulging through the midpoint: sweep=1 when it lies to the
    # (screen) left of the chord direction
    cross = (x1 - x0) * (my - y0) - (y1 - y0) * (mx - x0)
    sweep = 1 if cross < 0 else 0
    r = g.radius * RADIUS_PX
    return f"M {x0:.4f} {y0:.4f} A {r:.4f} {r:.4f} 0 0 {sweep} {x1:.4f} {y1:.4f}"


def _boundary_arc(q: complex, p: complex, avoid: list[complex]) -> str:
    """Continue a path from q back to p along the unit circle, avoiding points."""
    aq, ap = cmath.phase(q), cmath.phase(p)
    ccw_span = (ap - aq) % (2 * math.pi)
    ccw_ok = all(not (0 < (cmath.phase(v) - aq) % (2 * math.pi) < ccw_span)
                 for v in avoid)
    span = ccw_span if ccw_ok else 2 * math.pi - ccw_span
    large = 1 if span > math.pi else 0
    # counterclockwise in math coordinates is counterclockwise on screen: sweep 0
    sweep = 0 if ccw_ok else 1
    x1, y1 = _px(p)
    return f"A {RADIUS_PX} {RADIUS_PX} 0 {large} {sweep} {x1:.4f} {y1:.4f} Z"


def build_disk_figure(t0, case_id: int) -> DiskFigure:
    cert = pingpong_certificate(t0, case_id)
    if not cert.ok:
        raise ValueError("certificate failed; refusing to draw an unverified domain")
    pts = [cayley(v) for v in cert.vertices]
    n = len(pts)
    sides = [geodesic(pts[i], pts[(i + 1) % n]) for i in range(n)]
    c = SIZE / 2
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" '
        f'height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">',
        f'<title>Case {case_id}, t = {escape(format_point(cert.t0))}</title>',
        f'<circle cx="{c}" cy="{c}" r="{RADIUS_PX}" fill="#d0d0d0" stroke="none"/>',
    ]
    colors = ["#1f4fbf", "#e07b00"]
    for i, g in enumerate(sides):
        others = [pts[k] for k in range(n) if k not in (i, (i + 1) % n)]
        region = _geodesic_path(g) + " " + _boundary_arc(g.q, g.p, others)
        out.append(f'<path d="{region}" fill="white" stroke="none"/>')
    for i, g in enumerate(sides):
        # sides paired by the same generator share a colour
        color = colors[0] if i in _pair_sides(cert, 0) else colors[1]
        out.append(f'<path d="{_geodesic_path(g)}" fill="none" stroke="{color}" '
                   f'stroke-width="4"/>')
    out.append(f'<circle cx="{c}" cy="{c}" r="{RADIUS_PX}" fill="none" '
               f'stroke="black" stroke-width="3"/>')
    for z, lab, v in zip(pts, cert.labels, cert.vertices):
        x, y = _px(z)
        lx, ly = _px(z * 1.12)
        out.append(f'<circle cx="{x:.4f}" cy="{y:.4f}" r="8" fill="black"/>')
        out.append(f'<text x="{lx:.4f}" y="{ly:.4f}" font-size="20" '
                   f'text-anchor="middle">{escape(lab)} = {escape(format_point(v))}</text>')
    out.append("</svg>")
    return DiskFigure(cert, pts, cert.labels, sides, "\n".join(out) + "\n")


def _pair_sides(cert: PingPongCertificate, k: int) -> tuple[int, int]:
    p = cert.pairings[k]
    return p.source_side[0], p.target_side[0]


def render_disk_figure(t0, case_id: int, output=None) -> str:
    """Return the SVG text and, if ``output`` is a path or writable file, write it.

    Nothing is written unless the certificate for (t0, case_id) verifies.
    """
    fig = build_disk_figure(t0, case_id)
    if output is not None:
        if isinstance(output, (str, os.PathLike)):
            with open(output, "w", encoding="utf-8") as fh:
                fh.write(fig.svg)
        elif isinstance(output, io.IOBase) or hasattr(output, "write"):
            output.write(fig.svg)
    return fig.svg
