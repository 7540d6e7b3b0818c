import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from realburau.burau import conjugated_generators, specialize
from realburau.classifier import (CERTIFIED, ELLIPTIC_WINDOW, EXCLUDED_ZERO, MINUS_ONE,
                                  NEGATIVE_HYPERBOLIC, NUMERICAL, NUMERICAL_NO,
                                  NUMERICAL_UNDETERMINED, ONE, PARABOLIC_BOUNDARY,
                                  POSITIVE_OUTER, _EXPECTED_CLASS, classify, duality_check,
                                  regime_of)
from realburau.errors import PreconditionError
from realburau.moebius import QUADRATIC_COS_TABLE, classify_isometry
from realburau.scalars import QuadNum, reciprocal

from conftest import nonzero_rationals, quadnums

Q5 = lambda a, b: QuadNum(Fraction(a), Fraction(b), 5)  # noqa: E731
GOLDEN_SQ = Q5(Fraction(3, 2), Fraction(1, 2))


@pytest.mark.parametrize("t0, regime, discrete, faithful", [
    (-2, NEGATIVE_HYPERBOLIC, "Yes", "Yes"),
    (GOLDEN_SQ, PARABOLIC_BOUNDARY, "Yes", "Yes"),
    (Fraction(1, 2), ELLIPTIC_WINDOW, "No", "Undetermined"),
    (1, ONE, "TriangleGroup(6)", "No"),
    (-1, MINUS_ONE, "Yes", "No"),
    (Fraction(1, 4), POSITIVE_OUTER, "Yes", "Yes"),
    (Q5(Fraction(1, 2), Fraction(1, 2)), ELLIPTIC_WINDOW, "No", "Undetermined"),
])
def test_verdict_table(t0, regime, discrete, faithful):
    v = classify(t0)
    assert (v.regime, v.discrete, v.faithful, v.exactness) == (regime, discrete, faithful,
                                                               CERTIFIED)


def test_minus_one_carries_evidence_flag():
    names = [e.name for e in classify(-1).evidence]
    assert "integer entries" in names


def test_float_input_is_numerical():
    v = classify(0.5)
    assert v.regime == ELLIPTIC_WINDOW and v.discrete == NUMERICAL_NO
    assert v.exactness == NUMERICAL


@pytest.mark.parametrize("t0", [1.0, -1.0, 1e-13, (3 + 5 ** 0.5) / 2, 2.618033988749895])
def test_float_near_boundary_is_undetermined(t0):
    assert classify(t0).discrete == NUMERICAL_UNDETERMINED


def test_zero():
    v = classify(0)
    assert v.regime == EXCLUDED_ZERO and v.discrete is None and v.faithful is None
    with pytest.raises(PreconditionError):
        duality_check(0)


def test_json_has_exact_fields():
    doc = json.loads(classify(GOLDEN_SQ).dumps())
    assert set(doc) == {"t_input", "regime", "discrete", "faithful", "exactness", "evidence"}
    assert all(len(e) == 3 for e in doc["evidence"])
    assert doc["t_input"] == "q(3/2,1/2,5)"


@pytest.mark.parametrize("t0", [-2, GOLDEN_SQ, Fraction(1, 2), 1, -1, Fraction(1, 4)])
def test_duality_examples(t0):
    assert duality_check(t0)


def test_half_and_two_share_cosine():
    a, b = classify(Fraction(1, 2)), classify(2)
    assert a.discrete == b.discrete == "No"
    assert a.evidence[-1].detail.split(";")[0] == b.evidence[-1].detail.split(";")[0]


exact_t = st.one_of(nonzero_rationals, quadnums(5), quadnums(3))


@settings(max_examples=80, deadline=None)
@given(exact_t)
def test_verdict_symmetry(t0):
    if t0 == 0:
        return
    a, b = classify(t0), classify(reciprocal(t0))
    assert (a.discrete, a.faithful) == (b.discrete, b.faithful)


@settings(max_examples=80, deadline=None)
@given(exact_t)
def test_regime_invariants(t0):
    v = classify(t0)
    g = t0 * t0 - 3 * t0 + 1
    if v.regime == NEGATIVE_HYPERBOLIC:
        assert t0 < 0 and t0 != -1
    if v.regime == POSITIVE_OUTER:
        assert t0 > 0 and g > 0
    if v.regime == ELLIPTIC_WINDOW:
        assert g < 0 and t0 != 1
    if v.faithful == "Yes":
        assert v.regime in (NEGATIVE_HYPERBOLIC, POSITIVE_OUTER, PARABOLIC_BOUNDARY)
    X = specialize(conjugated_generators()[0], t0)
    assert classify_isometry(X).kind == _EXPECTED_CLASS[v.regime]
    n = v.triangle_order
    if n is not None:
        assert n >= 6 and v.regime in (ELLIPTIC_WINDOW, ONE)
        assert QUADRATIC_COS_TABLE[Fraction(1, n)] == (t0 + 1 / t0 - 1) / 2


@given(exact_t)
def test_regime_partition(t0):
    # exactly one regime; window endpoints are parabolic boundary points
    r = regime_of(t0)
    assert r in {NEGATIVE_HYPERBOLIC, POSITIVE_OUTER, PARABOLIC_BOUNDARY, ELLIPTIC_WINDOW,
                 MINUS_ONE, ONE}
    assert regime_of(Q5(Fraction(3, 2), Fraction(-1, 2))) == PARABOLIC_BOUNDARY
