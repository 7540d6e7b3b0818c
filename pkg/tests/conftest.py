"""Shared oracles and strategies.

The oracles below are written against sympy, independently of the package's
own Laurent, scalar and matrix code, so agreement is meaningful.
"""

from __future__ import annotations

from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import strategies as st

from realburau.braid import BraidWord
from realburau.scalars import QuadNum

t = sp.Symbol("t")
s = sp.Symbol("s")


def oracle_generator(i: int, n: int) -> sp.Matrix:
    """Reduced Burau generator written out from its defining row pattern."""
    m = n - 1
    M = sp.eye(m)
    r = i - 1
    if r >= 1:
        M[r, r - 1] = t
    M[r, r] = -t
    if r + 1 < m:
        M[r, r + 1] = 1
    return M


def oracle_burau(w: BraidWord) -> sp.Matrix:
    M = sp.eye(w.strands - 1)
    for index, power in w.letters:
        g = oracle_generator(index, w.strands)
        M = M * (g ** power if power > 0 else (g.inv()) ** (-power))
    return M.applyfunc(sp.simplify)


def to_sympy_laurent(p) -> sp.Expr:
    return sum((sp.Integer(c) * t ** k for k, c in p.as_dict().items()), sp.Integer(0))


def to_sympy_matrix(M) -> sp.Matrix:
    return sp.Matrix([[to_sympy_laurent(a) for a in row] for row in M.rows])


def to_sympy_scalar(x):
    if isinstance(x, QuadNum):
        return sp.Rational(x.a.numerator, x.a.denominator) + \
            sp.Rational(x.b.numerator, x.b.denominator) * sp.sqrt(x.d)
    if isinstance(x, float):
        return sp.Float(x)
    x = Fraction(x)
    return sp.Rational(x.numerator, x.denominator)


def sympy_equal(a, b) -> bool:
    return sp.simplify(sp.expand(a - b)) == 0


@st.composite
def braid_words(draw, strands: int = 3, max_len: int = 8):
    n = draw(st.integers(0, max_len))
    letters = tuple((draw(st.integers(1, strands - 1)), draw(st.sampled_from((1, -1))))
                    for _ in range(n))
    return BraidWord(strands, letters)


rationals = st.fractions(min_value=-20, max_value=20, max_denominator=30)
nonzero_rationals = rationals.filter(lambda x: x != 0)


@st.composite
def quadnums(draw, d: int | None = None):
    d = d if d is not None else draw(st.sampled_from((2, 3, 5, 7, 13)))
    a = draw(rationals)
    b = draw(rationals.filter(lambda x: x != 0))
    return QuadNum(a, b, d)


@pytest.fixture
def golden_square() -> QuadNum:
    return QuadNum(Fraction(3, 2), Fraction(1, 2), 5)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[n])
