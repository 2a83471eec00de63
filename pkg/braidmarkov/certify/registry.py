from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, List

from ..braid.word import BraidWord, conjugate, destabilize, rotate, stabilize
from ..errors import CertificateError, NotDestabilizable, StrandMismatch
from ..models import Move

MoveApplier = Callable[[BraidWord, Move], BraidWord]


@dataclass(frozen=True)
class MoveRegistration:
    applier: MoveApplier
    ledger_delta: int
    needs_sign: bool
    needs_witness: bool
    description: str


_MOVE_REGISTRY: Dict[str, MoveRegistration] = {}
_BUILTINS_REGISTERED = False


def register_move(
    kind: str,
    applier: MoveApplier,
    *,
    ledger_delta: int = 0,
    needs_sign: bool = False,
    needs_witness: bool = False,
    description: str = "",
    replace: bool = False,
) -> None:
    if not kind:
        raise ValueError("move kind must be non-empty")
    if kind in _MOVE_REGISTRY and not replace:
        return
    _MOVE_REGISTRY[kind] = MoveRegistration(
        applier=applier,
        ledger_delta=ledger_delta,
        needs_sign=needs_sign,
        needs_witness=needs_witness,
        description=description,
    )


def _apply_stabilize(word: BraidWord, move: Move) -> BraidWord:
    return stabilize(word, move.sign if move.sign is not None else 1)


def _apply_destabilize(word: BraidWord, move: Move) -> BraidWord:
    result = destabilize(word)
    if move.sign is not None and word.letters[-1].sign != move.sign:
        raise NotDestabilizable(
            f"final letter has sign {word.letters[-1].sign:+d}, move expects {move.sign:+d}"
        )
    return result


def _apply_conjugate(word: BraidWord, move: Move) -> BraidWord:
    if move.witness is None:
        raise CertificateError("conjugate move without witness")
    if move.witness.strands != word.strands:
        raise StrandMismatch(move.witness.strands, word.strands)
    return conjugate(word, move.witness)


def _apply_cyclic_rotate(word: BraidWord, move: Move) -> BraidWord:
    return rotate(word, 1)


def _ensure_builtins_registered() -> None:
    global _BUILTINS_REGISTERED
    if _BUILTINS_REGISTERED:
        return
    register_move(
        "stabilize",
        _apply_stabilize,
        ledger_delta=1,
        needs_sign=True,
        description="append s_n^sign on a new strand",
    )
    register_move(
        "destabilize",
        _apply_destabilize,
        ledger_delta=-1,
        description="drop the unique final s_{n-1}^+-1",
    )
    register_move(
        "conjugate",
        _apply_conjugate,
        needs_witness=True,
        description="g . w . g^-1, freely reduced",
    )
    register_move(
        "cyclic_rotate",
        _apply_cyclic_rotate,
        description="move the first letter to the end",
    )
    _BUILTINS_REGISTERED = True


def get_move(kind: str) -> MoveRegistration:
    _ensure_builtins_registered()
    reg = _MOVE_REGISTRY.get(kind)
    if reg is None:
        raise CertificateError(f"move kind '{kind}' not registered")
    return reg


def list_move_kinds() -> List[str]:
    _ensure_builtins_registered()
    return sorted(_MOVE_REGISTRY.keys())


def apply_move(word: BraidWord, move: Move) -> BraidWord:
    reg = get_move(move.kind)
    if reg.needs_sign and move.sign is None:
        raise CertificateError(f"{move.kind} move needs a sign")
    if reg.needs_witness and move.witness is None:
        raise CertificateError(f"{move.kind} move needs a witness")
    return reg.applier(word, move)


def ledger_delta(move: Move) -> int:
    return get_move(move.kind).ledger_delta
