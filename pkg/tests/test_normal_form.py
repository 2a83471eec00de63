from __future__ import annotations

import itertools
import random
from typing import Callable, Dict, List, Set

import pytest

from braidmarkov.braid import (
    BraidWord,
    compose,
    garside_form,
    inverse,
    normal_form,
    parse_word,
    random_word,
    words_equal,
)
from braidmarkov.errors import StrandMismatch
from braidmarkov.invariants import burau_reduced


def W(text: str) -> BraidWord:
    return parse_word(text)


def test_braid_relation_and_far_commutation():
    assert normal_form(W("B3: s1 s2 s1")) == normal_form(W("B3: s2 s1 s2"))
    assert normal_form(W("B4: s1 s3")) == normal_form(W("B4: s3 s1"))
    assert normal_form(W("B2: s1 s1^-1")) == normal_form(W("B2:"))


def test_words_equal_cases():
    assert words_equal(W("B3: s1 s2 s1"), W("B3: s2 s1 s2"))
    assert not words_equal(W("B2: s1"), W("B2: s1^-1"))
    assert words_equal(W("B3: s1 s1^-1"), W("B3:"))
    with pytest.raises(StrandMismatch):
        words_equal(W("B2:"), W("B3:"))


def test_delta_squared_is_central_power():
    form = garside_form(W("B3: s1 s2 s1 s1 s2 s1"))
    assert form.delta_power == 2
    assert form.factors == ()


def test_negative_letters_give_negative_delta_power():
    form = garside_form(W("B3: s1^-1"))
    assert form.delta_power == -1
    assert words_equal(form.to_word(), W("B3: s1^-1"))


def test_normal_form_is_idempotent_and_equal_to_input():
    rng = random.Random(11)
    for _ in range(200):
        a = random_word(rng, rng.randint(2, 5), rng.randint(0, 12))
        nf = normal_form(a)
        assert normal_form(nf) == nf
        assert words_equal(nf, a)


def test_word_times_inverse_is_trivial():
    rng = random.Random(12)
    for _ in range(100):
        a = random_word(rng, rng.randint(2, 5), rng.randint(0, 10))
        assert words_equal(compose(a, inverse(a)), BraidWord(a.strands))


def _relation_step(rng: random.Random, n: int, letters: List[int]) -> List[int]:
    """Apply one random defining relation somewhere in the word."""
    kind = rng.choice(("insert", "braid", "commute"))
    if kind == "insert" or not letters:
        pos = rng.randint(0, len(letters))
        i = rng.randint(1, n - 1)
        s = rng.choice((1, -1))
        return letters[:pos] + [s * i, -s * i] + letters[pos:]
    if kind == "braid":
        for pos in range(len(letters) - 2):
            x, y, z = letters[pos : pos + 3]
            if x == z and x > 0 and y > 0 and abs(x - y) == 1:
                return letters[:pos] + [y, x, y] + letters[pos + 3 :]
        return letters
    for pos in range(len(letters) - 1):
        x, y = letters[pos], letters[pos + 1]
        if abs(abs(x) - abs(y)) >= 2:
            return letters[:pos] + [y, x] + letters[pos + 2 :]
    return letters


def test_relation_rewrites_preserve_normal_form():
    rng = random.Random(13)
    for _ in range(200):
        n = rng.randint(3, 5)
        a = random_word(rng, n, rng.randint(0, 10))
        letters = list(a.signed_indices())
        for _ in range(rng.randint(1, 6)):
            letters = _relation_step(rng, n, letters)
        assert words_equal(a, BraidWord.of(n, *letters))


def test_b3_exhaustive_agrees_with_burau():
    # the reduced Burau representation of B3 is faithful, so its matrices
    # separate exactly the classes the normal form separates
    nf_to_matrix: Dict[object, object] = {}
    matrix_to_nf: Dict[object, object] = {}
    alphabet = (1, -1, 2, -2)
    for length in range(7):
        for letters in itertools.product(alphabet, repeat=length):
            w = BraidWord.of(3, *letters)
            form = garside_form(w)
            matrix = burau_reduced(w)
            assert nf_to_matrix.setdefault(form, matrix) == matrix
            assert matrix_to_nf.setdefault(matrix, form) == form
    assert len(nf_to_matrix) == len(matrix_to_nf)


# B3 words as strings: a = s1, A = s1^-1, b = s2, B = s2^-1
_SYMBOL = {1: "a", -1: "A", 2: "b", -2: "B"}
_INV = {"a": "A", "A": "a", "b": "B", "B": "b"}
_RELATOR = "abaBAB"  # s1 s2 s1 (s2 s1 s2)^-1
RELATION_CAP = 12


def _free_inverse(w: str) -> str:
    return "".join(_INV[c] for c in reversed(w))


def _join(left: str, right: str) -> str:
    """Concatenate two freely reduced words and cancel at the seam."""
    i = 0
    while i < min(len(left), len(right)) and left[-1 - i] == _INV[right[i]]:
        i += 1
    return left[: len(left) - i] + right[i:]


def _relation_table() -> Dict[str, List[str]]:
    """u -> v with |u| >= 3 and u v^-1 a cyclic rotation of the relator or its inverse."""
    table: Dict[str, List[str]] = {}
    for r in (_RELATOR, _free_inverse(_RELATOR)):
        for i in range(len(r)):
            rot = r[i:] + r[:i]
            for k in range(3, len(rot) + 1):
                table.setdefault(rot[:k], []).append(_free_inverse(rot[k:]))
    return table


def _relation_components(cap: int, max_exponent: int) -> Callable[[str], str]:
    """Connected components of freely reduced B3 words of length <= cap under relator substitution.

    Every edge of the rewrite graph has a non-lengthening direction, so scanning
    each word for subwords of length >= 3 finds all of them. Exponent sum is
    invariant, so words beyond max_exponent are never on a path between short words.
    """
    table = _relation_table()
    parent: Dict[str, str] = {}

    def find(x: str) -> str:
        root = x
        while parent.get(root, root) != root:
            root = parent[root]
        while x != root:
            parent[x], x = root, parent[x]
        return root

    level = [""]
    for length in range(cap + 1):
        for w in level:
            if abs(w.count("a") + w.count("b") - w.count("A") - w.count("B")) > max_exponent:
                continue
            for k in range(3, min(6, length) + 1):
                for p in range(length - k + 1):
                    for v in table.get(w[p : p + k], ()):
                        a, b = find(w), find(_join(_join(w[:p], v), w[p + k :]))
                        if a != b:
                            parent[a] = b
        if length < cap:
            level = [w + c for w in level for c in "aAbB" if not w or w[-1] != _INV[c]]
    return find


def test_relation_table_holds_the_braid_relation():
    table = _relation_table()
    assert "bab" in table["aba"]
    assert "" in table[_RELATOR]
    assert all(len(u) >= len(v) for u, vs in table.items() for v in vs)


def test_b3_normal_form_agrees_with_relation_search():
    find = _relation_components(RELATION_CAP, max_exponent=6)
    forms_of_component: Dict[str, Set[object]] = {}
    components_of_form: Dict[object, Set[str]] = {}
    for length in range(7):
        for letters in itertools.product((1, -1, 2, -2), repeat=length):
            reduced = ""
            for x in letters:
                reduced = _join(reduced, _SYMBOL[x])
            root = find(reduced)
            form = garside_form(BraidWord.of(3, *letters))
            forms_of_component.setdefault(root, set()).add(form)
            components_of_form.setdefault(form, set()).add(root)
    assert all(len(forms) == 1 for forms in forms_of_component.values())
    assert all(len(roots) == 1 for roots in components_of_form.values())
