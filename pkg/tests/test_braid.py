from hypothesis import given

import pytest

from realburau.braid import (BraidWord, concat, exponent_sum, inverse, named_word,
                             parse_word, print_word, sigma)
from realburau.errors import PreconditionError, WordSyntaxError

from conftest import braid_words


def test_parse_merges_adjacent_powers():
    w = parse_word("s1 s1^2 s2^-1 s2", 3)
    assert w.letters == ((1, 3),)


def test_parse_identity_spellings():
    for text in ("", "  ", "e", "1"):
        assert parse_word(text, 4).is_empty


def test_parse_reports_position():
    with pytest.raises(WordSyntaxError) as info:
        parse_word("s1 s2 x3", 3)
    assert info.value.position == 6


@pytest.mark.parametrize("text", ["s3", "s0", "s1^0", "s1^", "sigma1"])
def test_parse_rejects(text):
    with pytest.raises(WordSyntaxError):
        parse_word(text, 3)


def test_unsupported_strands():
    with pytest.raises(PreconditionError):
        parse_word("s1", 5)
    with pytest.raises(PreconditionError):
        BraidWord(2)


def test_named_words():
    assert print_word(named_word("a1", 3)) == "s1^-1 s2"
    assert print_word(named_word("a2", 3)) == "s2 s1^-1"
    assert len(named_word("center3", 3)) == 6
    x4 = named_word("x4", 4)
    assert print_word(named_word("y4", 4)) == f"s2 {print_word(x4)} s2^-1"
    with pytest.raises(PreconditionError):
        named_word("omega1", 3)
    with pytest.raises(PreconditionError):
        named_word("nope", 3)


def test_omega_words_are_b4_words():
    w1, w2 = named_word("omega1", 4), named_word("omega2", 4)
    assert w1.strands == w2.strands == 4
    # each x or y letter contributes exponent sum 0
    assert exponent_sum(w1) == exponent_sum(w2) == 0


def test_embed():
    w = parse_word("s1 s2^-3", 3).embed(4)
    assert w.strands == 4 and w.letters == ((1, 1), (2, -3))
    with pytest.raises(PreconditionError):
        sigma(1, 4).embed(3)


@given(braid_words(3))
def test_print_parse_roundtrip(w):
    assert parse_word(print_word(w), 3) == w


@given(braid_words(4), braid_words(4))
def test_exponent_sum_is_additive(u, v):
    assert exponent_sum(concat(u, v)) == exponent_sum(u) + exponent_sum(v)


@given(braid_words(3))
def test_inverse_cancels(w):
    assert concat(w, inverse(w)).is_empty
    assert inverse(inverse(w)) == w


@given(braid_words(3))
def test_canonical_form_has_no_adjacent_repeats(w):
    idx = [i for i, _ in w.letters]
    assert all(a != b for a, b in zip(idx, idx[1:]))
    assert all(p != 0 for _, p in w.letters)
