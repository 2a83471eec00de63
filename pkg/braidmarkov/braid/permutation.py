from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

from ..errors import BraidMarkovError
from .word import BraidWord


@dataclass(frozen=True, slots=True)
class Permutation:
    """Bijection on {1..n}; images[k-1] is the image of k."""

    images: Tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.images, tuple):
            object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise BraidMarkovError(f"not a bijection on 1..{len(self.images)}: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def then(self, other: "Permutation") -> "Permutation":
        """Permutation of a word whose letters of `self` come first."""
        if other.size != self.size:
            raise BraidMarkovError("permutation sizes differ")
        return Permutation(tuple(self.images[other.images[k] - 1] for k in range(self.size)))

    def cycles(self) -> List[Tuple[int, ...]]:
        seen = [False] * (self.size + 1)
        out: List[Tuple[int, ...]] = []
        for start in range(1, self.size + 1):
            if seen[start]:
                continue
            cycle = []
            k = start
            while not seen[k]:
                seen[k] = True
                cycle.append(k)
                k = self(k)
            out.append(tuple(cycle))
        return out

    def is_identity(self) -> bool:
        return all(img == k for k, img in enumerate(self.images, start=1))

    def parity(self) -> int:
        """+1 for even permutations, -1 for odd."""
        odd = sum(len(c) - 1 for c in self.cycles()) % 2
        return -1 if odd else 1


def permutation_of(a: BraidWord) -> Permutation:
    images = list(range(1, a.strands + 1))
    # right-composing with the transposition (i, i+1) swaps two entries
    for g in a.letters:
        i = g.index
        images[i - 1], images[i] = images[i], images[i - 1]
    return Permutation(tuple(images))


def closure_component_count(a: BraidWord) -> int:
    return len(permutation_of(a).cycles())
