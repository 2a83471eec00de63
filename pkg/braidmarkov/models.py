from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from .braid.word import BraidWord
from .errors import CertificateError


@dataclass(frozen=True, slots=True)
class Move:
    """One Markov move: stabilize / destabilize / conjugate / cyclic_rotate."""

    kind: str
    sign: Optional[int] = None
    witness: Optional[BraidWord] = None

    def __post_init__(self) -> None:
        if self.sign is not None and self.sign not in (1, -1):
            raise CertificateError(f"move sign must be +1 or -1, got {self.sign}")

    @classmethod
    def stabilize(cls, sign: int) -> "Move":
        return cls("stabilize", sign)

    @classmethod
    def destabilize(cls, sign: Optional[int] = None) -> "Move":
        return cls("destabilize", sign)

    @classmethod
    def conjugate(cls, witness: BraidWord) -> "Move":
        return cls("conjugate", None, witness)

    @classmethod
    def cyclic_rotate(cls) -> "Move":
        return cls("cyclic_rotate")


@dataclass(frozen=True, slots=True)
class MoveCertificate:
    initial_index: int
    moves: Tuple[Move, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.moves, tuple):
            object.__setattr__(self, "moves", tuple(self.moves))

    def __len__(self) -> int:
        return len(self.moves)

    def counts(self) -> Dict[str, int]:
        out: Dict[str, int] = {}
        for m in self.moves:
            out[m.kind] = out.get(m.kind, 0) + 1
        return out
