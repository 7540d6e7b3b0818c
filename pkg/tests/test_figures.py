import io
import xml.etree.ElementTree as ET
from fractions import Fraction
from itertools import combinations

import pytest

from realburau.errors import PreconditionError
from realburau.figures import (build_disk_figure, cayley, chords_cross, geodesic,
                               render_disk_figure)
from realburau.moebius import INF

SVG = "{http://www.w3.org/2000/svg}"


def test_cayley_sends_boundary_to_circle():
    assert cayley(INF) == 1
    for x in (-3, 0, Fraction(1, 2), 7):
        assert abs(abs(cayley(x)) - 1) < 1e-12


def test_geodesic_circle_is_orthogonal():
    g = geodesic(cayley(0), cayley(Fraction(1, 2)))
    # orthogonal to the unit circle: |c|^2 = 1 + r^2
    assert abs(abs(g.center) ** 2 - 1 - g.radius ** 2) < 1e-12


@pytest.mark.parametrize("t0, case", [(-2, 1), (Fraction(-1, 3), 1), (3, 3), (Fraction(7, 2), 3)])
def test_sides_do_not_cross(t0, case):
    fig = build_disk_figure(t0, case)
    assert not any(chords_cross(a, b) for a, b in combinations(fig.sides, 2))


def test_case2_adjacent_sides_tangent_at_boundary(golden_square):
    fig = build_disk_figure(golden_square, 2)
    n = len(fig.sides)
    for i in range(n):
        a, b = fig.sides[i], fig.sides[(i + 1) % n]
        assert a.center is not None and b.center is not None
        gap = abs(a.center - b.center)
        assert min(abs(gap - (a.radius + b.radius)), abs(gap - abs(a.radius - b.radius))) < 1e-9
        assert not chords_cross(a, b)


def test_svg_document(tmp_path):
    out = tmp_path / "case1.svg"
    text = render_disk_figure(-2, 1, str(out))
    assert out.read_text() == text
    root = ET.fromstring(text.split("\n", 1)[1])
    assert root.get("width") == "1000" and root.get("height") == "1000"
    labels = [e.text for e in root.iter(SVG + "text")]
    assert len(labels) == 4 and any(lab.startswith("oo") for lab in labels)


def test_file_sink():
    buf = io.StringIO()
    render_disk_figure(3, 3, buf)
    assert buf.getvalue().startswith("<?xml")


def test_invalid_case_writes_nothing(tmp_path):
    out = tmp_path / "bad.svg"
    with pytest.raises(PreconditionError):
        render_disk_figure(1, 3, str(out))
    assert not out.exists()
