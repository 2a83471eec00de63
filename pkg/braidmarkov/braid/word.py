from __future__ import annotations

import random
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from ..errors import BraidMarkovError, NotDestabilizable, StrandMismatch


@dataclass(frozen=True, slots=True)
class Generator:
    """Artin generator sigma_index; sign -1 is the inverse half-twist."""

    index: int
    sign: int = 1

    def __post_init__(self) -> None:
        if self.index < 1:
            raise BraidMarkovError(f"generator index must be >= 1, got {self.index}")
        if self.sign not in (1, -1):
            raise BraidMarkovError(f"generator sign must be +1 or -1, got {self.sign}")

    def inverse(self) -> "Generator":
        return Generator(self.index, -self.sign)

    def shifted(self, offset: int) -> "Generator":
        return Generator(self.index + offset, self.sign)


@dataclass(frozen=True, slots=True)
class BraidWord:
    strands: int
    letters: Tuple[Generator, ...] = ()

    def __post_init__(self) -> None:
        if self.strands < 1:
            raise BraidMarkovError(f"braid index must be >= 1, got {self.strands}")
        if not isinstance(self.letters, tuple):
            object.__setattr__(self, "letters", tuple(self.letters))
        for pos, g in enumerate(self.letters):
            if g.index > self.strands - 1:
                raise BraidMarkovError(
                    f"letter {pos} (s{g.index}) out of range for {self.strands} strands"
                )

    @classmethod
    def of(cls, strands: int, *indices: int) -> "BraidWord":
        """Shorthand: signed indices, e.g. BraidWord.of(3, 1, -2) is s1 s2^-1."""
        return cls(strands, tuple(Generator(abs(i), 1 if i > 0 else -1) for i in indices))

    def __len__(self) -> int:
        return len(self.letters)

    def signed_indices(self) -> Tuple[int, ...]:
        return tuple(g.index * g.sign for g in self.letters)

    def __str__(self) -> str:
        from .text import format_word

        return format_word(self)


def _require_same_strands(a: BraidWord, b: BraidWord) -> None:
    if a.strands != b.strands:
        raise StrandMismatch(a.strands, b.strands)


def compose(a: BraidWord, b: BraidWord) -> BraidWord:
    _require_same_strands(a, b)
    return BraidWord(a.strands, a.letters + b.letters)


def inverse(a: BraidWord) -> BraidWord:
    return BraidWord(a.strands, tuple(g.inverse() for g in reversed(a.letters)))


def free_reduce(a: BraidWord) -> BraidWord:
    stack: List[Generator] = []
    for g in a.letters:
        if stack and stack[-1].index == g.index and stack[-1].sign == -g.sign:
            stack.pop()
        else:
            stack.append(g)
    return BraidWord(a.strands, tuple(stack))


def exponent_sum(a: BraidWord) -> int:
    return sum(g.sign for g in a.letters)


def conjugate(a: BraidWord, g: BraidWord) -> BraidWord:
    """g . a . g^-1, freely reduced."""
    _require_same_strands(a, g)
    return free_reduce(BraidWord(a.strands, g.letters + a.letters + inverse(g).letters))


def stabilize(a: BraidWord, sign: int) -> BraidWord:
    if sign not in (1, -1):
        raise BraidMarkovError(f"stabilization sign must be +1 or -1, got {sign}")
    n = a.strands
    return BraidWord(n + 1, a.letters + (Generator(n, sign),))


def _top_positions(a: BraidWord) -> List[int]:
    top = a.strands - 1
    return [pos for pos, g in enumerate(a.letters) if g.index == top]


def destabilize(a: BraidWord) -> BraidWord:
    """Drop the final letter s_{n-1}^{+-1}; it must be the only s_{n-1} in the word."""
    if a.strands < 2:
        raise NotDestabilizable("a 1-strand braid cannot be destabilized")
    top = a.strands - 1
    positions = _top_positions(a)
    if not positions:
        raise NotDestabilizable(f"s{top} does not occur")
    if len(positions) > 1:
        raise NotDestabilizable(f"s{top} occurs {len(positions)} times")
    if positions[0] != len(a.letters) - 1:
        raise NotDestabilizable(f"s{top} is not the final letter; rotate first")
    return BraidWord(a.strands - 1, a.letters[:-1])


def rotate(a: BraidWord, k: int = 1) -> BraidWord:
    """Move the first k letters to the end (a conjugation)."""
    if not a.letters:
        return a
    k %= len(a.letters)
    return BraidWord(a.strands, a.letters[k:] + a.letters[:k])


def prepare_destabilization(a: BraidWord) -> int:
    """Number of single rotations that bring the unique s_{n-1} letter to the end."""
    positions = _top_positions(a)
    if a.strands < 2 or len(positions) != 1:
        raise NotDestabilizable(
            f"expected exactly one s{a.strands - 1}, found {len(positions)}"
        )
    return (positions[0] + 1) % len(a.letters)


def connect_sum(v: BraidWord, w: BraidWord) -> BraidWord:
    offset = v.strands - 1
    return BraidWord(
        v.strands + w.strands - 1,
        v.letters + tuple(g.shifted(offset) for g in w.letters),
    )


def weighted_stabilize(a: BraidWord, weight: int, sign: int) -> Tuple[BraidWord, BraidWord]:
    """Stabilization that threads the new loop around `weight` parallel strands.

    Realized as stabilize(a, sign) followed by conjugation with
    s_n s_{n-1} ... s_{n-weight+1}. Returns (result, conjugating word) so the
    two primitive moves can be written into a certificate.
    """
    n = a.strands
    if not 0 <= weight <= n:
        raise BraidMarkovError(f"weight must lie in [0, {n}], got {weight}")
    stabilized = stabilize(a, sign)
    witness = BraidWord(n + 1, tuple(Generator(n - j) for j in range(weight)))
    return conjugate(stabilized, witness), witness


def random_word(rng: random.Random, strands: int, length: int) -> BraidWord:
    if strands < 2:
        return BraidWord(max(strands, 1))
    letters = tuple(
        Generator(rng.randint(1, strands - 1), rng.choice((1, -1))) for _ in range(length)
    )
    return BraidWord(strands, letters)


def positive_word(strands: int, indices: Sequence[int]) -> BraidWord:
    return BraidWord(strands, tuple(Generator(i) for i in indices))
