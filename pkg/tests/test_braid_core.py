from __future__ import annotations

import random

import pytest

from braidmarkov.braid import (
    BraidWord,
    Permutation,
    closure_component_count,
    compose,
    conjugate,
    connect_sum,
    destabilize,
    exponent_sum,
    format_word,
    free_reduce,
    inverse,
    parse_word,
    permutation_of,
    prepare_destabilization,
    random_word,
    rotate,
    stabilize,
    weighted_stabilize,
    words_equal,
)
from braidmarkov.errors import BraidMarkovError, BraidParseError, NotDestabilizable, StrandMismatch


def W(text: str) -> BraidWord:
    return parse_word(text)


def test_parse_and_format():
    w = W("B3: s1 s2^-1 s1")
    assert w.strands == 3
    assert w.signed_indices() == (1, -2, 1)
    assert format_word(w) == "B3: s1 s2^-1 s1"
    assert format_word(BraidWord(1)) == "B1:"
    assert W("B1:") == BraidWord(1)


@pytest.mark.parametrize(
    "text",
    ["s1 s2", "B0:", "B2: s2", "B3: s1 x2", "B3: s0", "B2: s1^-2"],
)
def test_parse_rejects(text):
    with pytest.raises(BraidParseError):
        parse_word(text)


def test_parse_error_reports_token_position():
    with pytest.raises(BraidParseError) as info:
        parse_word("B3: s1 s2 s7")
    assert info.value.position == 2


def test_letter_out_of_range_rejected():
    with pytest.raises(BraidMarkovError):
        BraidWord.of(2, 2)


def test_compose():
    assert compose(W("B3: s1"), W("B3: s2")) == W("B3: s1 s2")
    assert compose(W("B2:"), W("B2: s1")) == W("B2: s1")
    with pytest.raises(StrandMismatch):
        compose(W("B2: s1"), W("B3: s1"))


def test_inverse():
    assert inverse(W("B3: s1 s2")) == W("B3: s2^-1 s1^-1")
    assert inverse(W("B2:")) == W("B2:")
    assert inverse(W("B2: s1^-1")) == W("B2: s1")


def test_free_reduce():
    assert free_reduce(W("B3: s1 s1^-1 s2")) == W("B3: s2")
    assert free_reduce(W("B2: s1 s1")) == W("B2: s1 s1")
    assert free_reduce(W("B3: s2 s1 s1^-1 s2^-1")) == W("B3:")


def test_permutation_of():
    assert permutation_of(W("B2: s1")) == Permutation((2, 1))
    p = permutation_of(W("B3: s1 s2"))
    assert (p(1), p(2), p(3)) == (2, 3, 1)
    assert permutation_of(W("B3:")).is_identity()


def test_permutation_of_is_multiplicative():
    rng = random.Random(3)
    for _ in range(100):
        n = rng.randint(2, 5)
        a = random_word(rng, n, rng.randint(0, 8))
        b = random_word(rng, n, rng.randint(0, 8))
        assert permutation_of(compose(a, b)) == permutation_of(a).then(permutation_of(b))


def test_permutation_parity_matches_word_length():
    rng = random.Random(4)
    for _ in range(50):
        a = random_word(rng, 4, rng.randint(0, 10))
        assert permutation_of(a).parity() == (-1) ** len(a)


def test_closure_component_count():
    assert closure_component_count(W("B3:")) == 3
    assert closure_component_count(W("B2: s1")) == 1
    assert closure_component_count(W("B2: s1 s1")) == 2


def test_exponent_sum():
    assert exponent_sum(W("B3: s1 s2^-1")) == 0
    assert exponent_sum(W("B2: s1 s1 s1")) == 3
    assert exponent_sum(W("B2:")) == 0


def test_conjugate():
    assert conjugate(W("B2: s1"), W("B2: s1")) == W("B2: s1")
    assert conjugate(W("B3: s1"), W("B3: s2")) == W("B3: s2 s1 s2^-1")
    with pytest.raises(StrandMismatch):
        conjugate(W("B3: s1"), W("B2: s1"))


def test_stabilize():
    assert stabilize(W("B2: s1"), 1) == W("B3: s1 s2")
    assert stabilize(W("B1:"), -1) == W("B2: s1^-1")
    assert stabilize(W("B3: s1 s2"), 1) == W("B4: s1 s2 s3")


def test_destabilize():
    assert destabilize(W("B3: s1 s2")) == W("B2: s1")
    assert destabilize(W("B2: s1^-1")) == W("B1:")
    with pytest.raises(NotDestabilizable):
        destabilize(W("B3: s2 s1 s2"))
    with pytest.raises(NotDestabilizable):
        destabilize(W("B3: s2 s1"))
    with pytest.raises(NotDestabilizable):
        destabilize(W("B1:"))


def test_stabilize_destabilize_round_trip():
    rng = random.Random(5)
    for _ in range(100):
        a = random_word(rng, rng.randint(1, 5), rng.randint(0, 10))
        for sign in (1, -1):
            assert destabilize(stabilize(a, sign)) == a


def test_rotate_then_destabilize():
    w = W("B3: s2 s1 s1")
    k = prepare_destabilization(w)
    assert k == 1
    assert destabilize(rotate(w, k)) == W("B2: s1 s1")
    assert rotate(W("B2:"), 3) == W("B2:")


def test_connect_sum():
    assert connect_sum(W("B2: s1 s1 s1"), W("B2: s1 s1 s1")) == W("B3: s1 s1 s1 s2 s2 s2")
    assert connect_sum(W("B2: s1"), W("B1:")) == W("B2: s1")
    assert connect_sum(W("B1:"), W("B3: s1 s2")) == W("B3: s1 s2")


def test_weighted_stabilize_is_conjugate_of_stabilization():
    a = W("B2: s1 s1 s1")
    out, witness = weighted_stabilize(a, 2, 1)
    assert witness == W("B3: s2 s1")
    assert out.strands == 3
    assert words_equal(out, conjugate(stabilize(a, 1), witness))
    plain, empty = weighted_stabilize(a, 0, -1)
    assert plain == stabilize(a, -1)
    assert len(empty) == 0
    with pytest.raises(BraidMarkovError):
        weighted_stabilize(a, 3, 1)
