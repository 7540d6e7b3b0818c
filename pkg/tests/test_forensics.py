import random
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings

from realburau.braid import BraidWord, named_word, parse_word
from realburau.burau import burau, specialize
from realburau.errors import PreconditionError
from realburau.forensics import (GOLDEN_SQUARE, WINDOW_POLY, entry21, b4_kernel_pair_check,
                                 entry21_polynomial, galois_discreteness_certificate,
                                 hunt_unfaithful, specialize_by_generators,
                                 unipotent_extension_check)
from realburau.laurent import IntPoly, RootInterval, divides, poly_gcd
from realburau.scalars import QuadNum

from conftest import braid_words, oracle_burau, t, to_sympy_laurent

F1 = IntPoly([-1, 1, -2, 1])
F2 = IntPoly([1, -3, 6, -10, 13, -16, 16, -15, 12, -8, 5, -3, 1])
W1 = "s2^-2 s1 s2^-1"
W2 = "s2^5 s1^2 s2^-4 s1 s2^3"


def test_entry_matches_oracle():
    for text in (W1, W2):
        w = parse_word(text, 3)
        ours = entry21(w)
        assert sp.expand(to_sympy_laurent(ours) - oracle_burau(w)[1, 0]) == 0
        poly = entry21_polynomial(w)
        assert poly.coeffs[0] != 0
        assert sp.expand(to_sympy_laurent(poly.to_laurent()) * t ** ours.low
                         - to_sympy_laurent(ours)) == 0


def test_printed_factors_divide():
    assert divides(F1, entry21_polynomial(parse_word(W1, 3)))
    assert divides(F2, entry21_polynomial(parse_word(W2, 3)))


def test_sigma2_entry_is_monomial():
    assert entry21_polynomial(parse_word("s2", 3)) == IntPoly([1])
    assert hunt_unfaithful(parse_word("s2", 3)) == []


@pytest.mark.parametrize("text", ["", "s1", "s1^-4"])
def test_sigma1_powers_rejected(text):
    with pytest.raises(PreconditionError):
        entry21_polynomial(parse_word(text, 3))


def test_central_word_rejected():
    with pytest.raises(PreconditionError):
        entry21_polynomial(named_word("center3", 3))


def test_hunt_first_example():
    certs = hunt_unfaithful(parse_word(W1, 3))
    assert len(certs) == 1
    c = certs[0]
    assert 0.382 < float(c.window_interval.lo) and float(c.window_interval.hi) < 2.619
    assert abs(c.root_float() - 1.7548776662) < 1e-6
    assert c.checks["upper_triangular_pair"]


def test_hunt_second_example():
    certs = hunt_unfaithful(parse_word(W2, 3))
    assert len(certs) == 2
    for c in certs:
        assert isinstance(c.root, RootInterval)
        assert poly_gcd(c.root.polynomial, entry21_polynomial(c.word)).degree > 0


def test_exact_quadratic_root_is_detected():
    # find a short word whose entry has a quadratic factor and check exact vanishing
    rng = random.Random(3)
    seen = 0
    for _ in range(400):
        w = BraidWord(3, tuple((rng.randint(1, 2), rng.choice((1, -1)))
                               for _ in range(rng.randint(2, 8))))
        if w.uses_only(1) or burau(w)[1, 0].is_zero():
            continue
        for c in hunt_unfaithful(w):
            if isinstance(c.root, (QuadNum, Fraction)):
                seen += 1
                assert specialize(burau(w), c.root)[1, 0] == 0
                assert c.checks["entry21_vanishes"]["method"] == "exact evaluation at the root"
    assert seen > 0


@settings(max_examples=40, deadline=None)
@given(braid_words(3, 10))
def test_roots_lie_in_window(w):
    if w.uses_only(1) or burau(w)[1, 0].is_zero():
        return
    for c in hunt_unfaithful(w):
        fine = c.window_interval.refine(Fraction(1, 10 ** 6))
        assert WINDOW_POLY(fine.lo) < 0 and WINDOW_POLY(fine.hi) < 0


def test_b4_pair():
    rep = b4_kernel_pair_check()
    assert rep.symbolic_unequal and rep.equal_at_t0
    assert rep.quotient_identity_at_t0 and not rep.quotient_symbolic_identity
    assert rep.unequal_at_probe


def test_generatorwise_specialization_agrees():
    w = named_word("omega1", 4)
    assert specialize_by_generators(w, Fraction(2)) == specialize(burau(w), Fraction(2))


def test_unipotent_extension_at_one():
    a2 = named_word("a2", 3)
    assert specialize(burau(a2 ** 3), 1).is_identity()
    rep = unipotent_extension_check(a2 ** 3, 1)
    assert rep.b3_identity and rep.b4_unitriangular and rep.depth <= 2
    assert rep.kernel_element is not None and rep.kernel_symbolically_nontrivial
    assert specialize_by_generators(rep.kernel_element, 1).is_identity()


def test_unipotent_extension_at_minus_one():
    # the B3 kernel at t = -1 is generated by (s1 s2)^6, whose B4 image is already I
    w = parse_word("s1 s2", 3) ** 6
    rep = unipotent_extension_check(w, -1)
    assert rep.depth == 0 and rep.kernel_symbolically_nontrivial
    assert specialize_by_generators(rep.kernel_element, -1).is_identity()


def test_unipotent_extension_trivial_and_bad():
    assert unipotent_extension_check(parse_word("", 3), 1).depth == 0
    with pytest.raises(PreconditionError):
        unipotent_extension_check(parse_word("s1", 3), 1)
    with pytest.raises(PreconditionError):
        unipotent_extension_check(parse_word("", 3), 1.0)


def test_galois_b3(golden_square):
    words = [parse_word("s1", 3), parse_word("s2", 3), named_word("a1", 3),
             named_word("center3", 3)]
    cert = galois_discreteness_certificate(golden_square, words, 3)
    assert cert.relation_verified
    assert all(r["conjugate_is_reciprocal_specialization"] for r in cert.per_word)


def test_galois_b4(golden_square):
    words = [parse_word("s1 s3^-1", 4), named_word("omega1", 4)]
    assert galois_discreteness_certificate(golden_square, words, 4).relation_verified


def test_galois_rejects_norm_minus_one():
    with pytest.raises(PreconditionError):
        galois_discreteness_certificate(QuadNum(Fraction(1, 2), Fraction(1, 2), 5),
                                        [parse_word("s1", 3)], 3)
    with pytest.raises(PreconditionError):
        galois_discreteness_certificate(Fraction(2), [parse_word("s1", 3)], 3)
