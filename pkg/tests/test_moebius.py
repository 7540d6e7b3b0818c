import cmath
import math
from fractions import Fraction
from itertools import combinations

import mpmath
import pytest
import sympy as sp
from hypothesis import assume, given, settings, strategies as st

from realburau.burau import RealMatrix, conjugated_generators, specialize
from realburau.errors import PreconditionError
from realburau.moebius import (ELLIPTIC, HYPERBOLIC, INF, IRRATIONAL_ROTATION, PARABOLIC,
                               QUADRATIC_COS_TABLE, RATIONAL_ROTATION, SCALAR, UNDETERMINED,
                               InteriorPoint, apply_complex, case_regime,
                               classify_isometry, commutator_trace_check, fixed_points,
                               mobius_apply, orbit_accumulation_test, pingpong_certificate,
                               rotation_data)
from realburau.scalars import QuadNum, reciprocal

from conftest import nonzero_rationals, quadnums, to_sympy_scalar

GOLDEN_SQ = QuadNum(Fraction(3, 2), Fraction(1, 2), 5)


def gens_at(t0):
    x, y = conjugated_generators()
    X, Y = specialize(x, t0), specialize(y, t0)
    return X, Y


# -- classification ------------------------------------------------------------

def test_trichotomy_examples():
    X, _ = gens_at(-1)
    assert classify_isometry(X).kind == HYPERBOLIC and X.trace() == 3
    X, _ = gens_at(GOLDEN_SQ)
    assert classify_isometry(X).kind == PARABOLIC and X.trace() == -2
    X, _ = gens_at(1)
    c = classify_isometry(X)
    assert c.kind == ELLIPTIC and X.trace() == -1 and c.cos_theta == Fraction(1, 2)
    assert classify_isometry(RealMatrix.identity(2)).kind == SCALAR


def test_determinant_is_checked():
    with pytest.raises(PreconditionError):
        classify_isometry(RealMatrix([[2, 0], [0, 1]]))
    with pytest.raises(PreconditionError):
        classify_isometry(RealMatrix([[1.0, 0.0], [0.0, 1.1]]))


sl2 = st.tuples(nonzero_rationals, st.fractions(-5, 5, max_denominator=5),
                st.fractions(-5, 5, max_denominator=5)).map(
    lambda v: RealMatrix([[v[0], v[1]], [v[2], (1 + v[1] * v[2]) / v[0]]]))


@given(sl2, sl2)
def test_class_is_conjugation_invariant(M, g):
    assert classify_isometry(g @ M @ g.inverse()).kind == classify_isometry(M).kind


points = st.one_of(st.just(INF), st.fractions(-10, 10, max_denominator=9))


@given(sl2, sl2, points)
def test_action_respects_composition(M, N, p):
    assert mobius_apply(M @ N, p) == mobius_apply(M, mobius_apply(N, p)) or (
        mobius_apply(M @ N, p) is INF and mobius_apply(M, mobius_apply(N, p)) is INF)


exact_t = st.one_of(nonzero_rationals, quadnums(5), quadnums(2))


@settings(max_examples=60)
@given(exact_t, st.sampled_from(["x", "y", "yx"]))
def test_fixed_points_are_fixed(t0, which):
    X, Y = gens_at(t0)
    M = {"x": X, "y": Y, "yx": Y @ X.inverse()}[which]
    if classify_isometry(M).kind == SCALAR:
        return
    for p in fixed_points(M):
        if isinstance(p, InteriorPoint):
            z = complex(p)
            assert abs(apply_complex(M, z) - z) < 1e-9 * max(1, abs(z))
            assert z.imag > 0
        elif isinstance(p, float):
            assert abs(float(mobius_apply(M, p)) - p) < 1e-7 * max(1, abs(p))
        else:
            assert mobius_apply(M, p) == p


@given(exact_t)
def test_hyperbolic_fixed_points_straddle(t0):
    X, _ = gens_at(t0)
    if classify_isometry(X).kind == HYPERBOLIC:
        f = fixed_points(X)
        assert len(f) == 2 and f[0] != f[1]


@given(exact_t)
def test_cos_theta_is_reciprocal_invariant(t0):
    a, b = gens_at(t0)[0], gens_at(reciprocal(t0))[0]
    assert a.trace() == b.trace()


# -- rotation data -------------------------------------------------------------

def _psi(m: int) -> list[int]:
    """Integer coefficients of prod (X - 2 cos(2 pi j/m)), j coprime to m, j <= m/2.

    Computed numerically at high precision and rounded: an independent route to
    the minimal polynomial of 2 cos(2 pi/m).
    """
    mpmath.mp.dps = 80
    roots = [2 * mpmath.cos(2 * mpmath.pi * j / m) for j in range(0, m // 2 + 1)
             if math.gcd(j, m) == 1]
    coeffs = [mpmath.mpf(1)]
    for r in roots:
        coeffs = [a - r * b for a, b in zip(coeffs + [0], [0] + coeffs)]
    ints = [int(mpmath.nint(c)) for c in coeffs]
    assert all(abs(c - i) < mpmath.mpf(10) ** -40 for c, i in zip(coeffs, ints))
    return ints


def test_cos_table_against_minimal_polynomials():
    degree_le_2 = set()
    for m in range(1, 51):
        psi = _psi(m)
        if m <= 16:
            mp = sp.minimal_polynomial(2 * sp.cos(2 * sp.pi / m), sp.Symbol("X"))
            assert sp.degree(mp) == len(psi) - 1
        if len(psi) - 1 <= 2:
            for k in range(0, m // 2 + 1):
                if math.gcd(k, m) == 1:
                    degree_le_2.add(Fraction(k, m))
    assert degree_le_2 == set(QUADRATIC_COS_TABLE)
    for frac, value in QUADRATIC_COS_TABLE.items():
        exact = sp.cos(2 * sp.pi * sp.Rational(frac.numerator, frac.denominator))
        assert sp.simplify(exact - to_sympy_scalar(value)) == 0


def test_window_candidates():
    # cos(theta) inside the window lies in (1/2, 1): only k = 1 and m in {8, 10, 12}
    inside = sorted(f for f, v in QUADRATIC_COS_TABLE.items() if Fraction(1, 2) < v < 1)
    assert inside == [Fraction(1, 12), Fraction(1, 10), Fraction(1, 8)]


def test_rotation_at_one():
    X, _ = gens_at(1)
    rd = rotation_data(X, 1)
    assert rd.order_class == RATIONAL_ROTATION and rd.rotation_number == Fraction(1, 6)
    assert rd.certified and rd.matrix_order == 3 and rd.triangle_order == 6


def test_rotation_at_half_is_irrational():
    X, _ = gens_at(Fraction(1, 2))
    rd = rotation_data(X, Fraction(1, 2))
    assert rd.cos_theta == Fraction(3, 4)
    assert rd.order_class == IRRATIONAL_ROTATION and rd.certified


def test_rotation_float_modes():
    X, _ = gens_at(1.0)
    rd = rotation_data(X)
    assert rd.order_class == RATIONAL_ROTATION and not rd.certified
    assert rd.rotation_number == Fraction(1, 6)
    X, _ = gens_at(0.5)
    assert rotation_data(X).order_class == UNDETERMINED


def test_rotation_needs_elliptic_and_consistent_t():
    with pytest.raises(PreconditionError):
        rotation_data(gens_at(-2)[0])
    with pytest.raises(PreconditionError):
        rotation_data(gens_at(1)[0], 2)


def test_commutator_trace():
    rep = commutator_trace_check()
    assert rep.symbolic_equal
    assert all(above for _, _, above in rep.samples)


# -- orbits --------------------------------------------------------------------

def test_orbit_at_one_is_finite():
    ev = orbit_accumulation_test(1, 200)
    assert ev.distinct_points <= 6
    assert ev.accumulating is None


def test_orbit_two_iterations():
    ev = orbit_accumulation_test(Fraction(1, 2), 2)
    assert ev.min_distance > 0 and ev.iterations == 2


def test_orbit_accumulates_with_more_iterates():
    # 1/2 has irrational rotation; enough iterates always come close
    ev = orbit_accumulation_test(0.5, 400)
    assert ev.accumulating is True and ev.min_distance < 0.05


def test_orbit_preconditions():
    for bad in (0, -2, 3):
        with pytest.raises(PreconditionError):
            orbit_accumulation_test(bad)
    with pytest.raises(PreconditionError):
        orbit_accumulation_test(1, 1)


# -- ping-pong -----------------------------------------------------------------

def test_case1_points_at_minus_two():
    cert = pingpong_certificate(-2, 1)
    assert cert.ok
    assert set(map(str, cert.vertices)) == {"oo", "-1", "0", "1/2"}


def test_case2_fixed_points(golden_square):
    cert = pingpong_certificate(golden_square, 2)
    assert cert.ok and cert.exactness == "quadratic"
    six = cert.extra_points["fix(x^-1)"] + cert.extra_points["fix(y)"] + \
        cert.extra_points["fix(y x^-1)"]
    assert len(six) == 3 and len(set(six)) == 3


def test_case3_six_fixed_points_distinct():
    cert = pingpong_certificate(3, 3)
    assert cert.ok
    six = [p for k in ("fix(x^-1)", "fix(y)", "fix(y x^-1)") for p in cert.extra_points[k]]
    assert len(six) == 6
    assert all(a != b for a, b in combinations(six, 2))


@pytest.mark.parametrize("t0, case", [(Fraction(-1, 3), 1), (-1, 1), (Fraction(-100), 1),
                                      (Fraction(7, 2), 3), (Fraction(11, 4), 3), (100, 3)])
def test_certificates_hold_across_regimes(t0, case):
    assert case_regime(t0) == case
    assert pingpong_certificate(t0, case).ok


def test_regime_mismatch():
    with pytest.raises(PreconditionError):
        pingpong_certificate(1, 3)
    with pytest.raises(PreconditionError):
        pingpong_certificate(-1, 2)
    with pytest.raises(PreconditionError):
        pingpong_certificate(-1, 7)
