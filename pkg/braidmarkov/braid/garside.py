from __future__ import annotations

"""
Left-greedy normal form
-----------------------
A braid is written as Delta^k . A_1 ... A_m where each A_i is a permutation
braid (positive, every pair of strands crosses at most once). A permutation
braid is stored as its final arrangement: arr[pos] is the starting position of
the strand that ends at pos (all 0-based). The sequence is left-weighted:
every generator starting A_{i+1} already finishes A_i.
"""

import logging
from dataclasses import dataclass
from typing import FrozenSet, List, Tuple

from .word import BraidWord, Generator, inverse, positive_word, _require_same_strands

logger = logging.getLogger(__name__)

Arrangement = Tuple[int, ...]


def _identity(n: int) -> Arrangement:
    return tuple(range(n))


def _delta(n: int) -> Arrangement:
    return tuple(reversed(range(n)))


def _finishing_set(arr: Arrangement) -> FrozenSet[int]:
    return frozenset(i for i in range(1, len(arr)) if arr[i - 1] > arr[i])


def _starting_set(arr: Arrangement) -> FrozenSet[int]:
    inv = [0] * len(arr)
    for pos, strand in enumerate(arr):
        inv[strand] = pos
    return frozenset(i for i in range(1, len(arr)) if inv[i - 1] > inv[i])


def _times_generator(arr: Arrangement, i: int) -> Arrangement:
    """A . s_i (positions i-1, i swap)."""
    out = list(arr)
    out[i - 1], out[i] = out[i], out[i - 1]
    return tuple(out)


def _generator_inverse_times(arr: Arrangement, i: int) -> Arrangement:
    """s_i^-1 . B for i in S(B) (strand labels i-1, i swap)."""
    out = []
    for strand in arr:
        if strand == i - 1:
            out.append(i)
        elif strand == i:
            out.append(i - 1)
        else:
            out.append(strand)
    return tuple(out)


def _flip(arr: Arrangement) -> Arrangement:
    """Conjugation by Delta."""
    n = len(arr)
    return tuple(n - 1 - arr[n - 1 - pos] for pos in range(n))


def _expand(arr: Arrangement) -> List[int]:
    """Positive letters of a permutation braid, smallest finishing generator peeled first."""
    letters: List[int] = []
    cur = arr
    while cur != _identity(len(cur)):
        i = min(_finishing_set(cur))
        letters.append(i)
        cur = _times_generator(cur, i)
    letters.reverse()
    return letters


@dataclass(frozen=True, slots=True)
class GarsideForm:
    strands: int
    delta_power: int
    factors: Tuple[Arrangement, ...]

    def to_word(self) -> BraidWord:
        n = self.strands
        if n < 2:
            return BraidWord(n)
        delta_word = positive_word(n, _expand(_delta(n)))
        block = delta_word if self.delta_power >= 0 else inverse(delta_word)
        letters: Tuple[Generator, ...] = block.letters * abs(self.delta_power)
        for arr in self.factors:
            letters += positive_word(n, _expand(arr)).letters
        return BraidWord(n, letters)


def _make_left_weighted(factors: List[Arrangement]) -> bool:
    changed = False
    for idx in range(len(factors) - 1):
        a, b = factors[idx], factors[idx + 1]
        while True:
            movable = _starting_set(b) - _finishing_set(a)
            if not movable:
                break
            i = min(movable)
            a = _times_generator(a, i)
            b = _generator_inverse_times(b, i)
            changed = True
        factors[idx], factors[idx + 1] = a, b
    return changed


def garside_form(a: BraidWord) -> GarsideForm:
    n = a.strands
    if n < 2:
        return GarsideForm(n, 0, ())
    delta = _delta(n)
    power = 0
    factors: List[Arrangement] = []
    for g in a.letters:
        if g.sign > 0:
            factors.append(_times_generator(_identity(n), g.index))
        else:
            # s_i^-1 = Delta^-1 . (Delta s_i^-1); Delta^-1 moves to the front
            factors = [_flip(f) for f in factors]
            power -= 1
            factors.append(_times_generator(delta, g.index))

    passes = 0
    while _make_left_weighted(factors):
        passes += 1
    while factors and factors[0] == delta:
        factors.pop(0)
        power += 1
    identity = _identity(n)
    while factors and factors[-1] == identity:
        factors.pop()
    logger.debug("normal form of %d letters: Delta^%d with %d factors after %d passes", len(a), power, len(factors), passes)
    return GarsideForm(n, power, tuple(factors))


def normal_form(a: BraidWord) -> BraidWord:
    return garside_form(a).to_word()


def words_equal(a: BraidWord, b: BraidWord) -> bool:
    _require_same_strands(a, b)
    return garside_form(a) == garside_form(b)
