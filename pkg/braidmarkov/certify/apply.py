from __future__ import annotations

import logging
from typing import List

from ..braid.word import BraidWord, inverse
from ..errors import BraidMarkovError, CertificateError, LedgerMismatch, MoveInapplicable
from ..models import Move, MoveCertificate
from .registry import apply_move, ledger_delta

logger = logging.getLogger(__name__)


def ledger_trace(cert: MoveCertificate) -> List[int]:
    """Braid index before the first move and after each move."""
    out = [cert.initial_index]
    for move in cert.moves:
        out.append(out[-1] + ledger_delta(move))
    return out


def final_index(cert: MoveCertificate) -> int:
    return ledger_trace(cert)[-1]


def replay(start: BraidWord, cert: MoveCertificate) -> List[BraidWord]:
    """Every intermediate word, start included; fails on the first inapplicable move."""
    if start.strands != cert.initial_index:
        raise LedgerMismatch(f"start has {start.strands} strands, certificate starts at {cert.initial_index}")
    trace = ledger_trace(cert)
    if min(trace) < 1:
        raise LedgerMismatch(f"ledger drops to {min(trace)} at move {trace.index(min(trace)) - 1}")
    words = [start]
    for index, move in enumerate(cert.moves):
        try:
            words.append(apply_move(words[-1], move))
        except BraidMarkovError as exc:
            reason = exc.reason if isinstance(exc, MoveInapplicable) else str(exc)
            raise MoveInapplicable(index, reason) from exc
    return words


def apply_certificate(start: BraidWord, cert: MoveCertificate) -> BraidWord:
    return replay(start, cert)[-1]


def invert_certificate(start: BraidWord, cert: MoveCertificate) -> MoveCertificate:
    """Certificate of end == start from one of start == end."""
    words = replay(start, cert)
    moves: List[Move] = []
    for index in range(len(cert.moves) - 1, -1, -1):
        move = cert.moves[index]
        before = words[index]
        if move.kind == "stabilize":
            moves.append(Move.destabilize(move.sign))
        elif move.kind == "destabilize":
            moves.append(Move.stabilize(before.letters[-1].sign))
        elif move.kind == "conjugate":
            moves.append(Move.conjugate(inverse(move.witness)))
        elif move.kind == "cyclic_rotate":
            if before.letters:
                moves.append(Move.conjugate(BraidWord(before.strands, before.letters[:1])))
        else:
            raise CertificateError(f"cannot invert move kind {move.kind!r}")
    return MoveCertificate(words[-1].strands, tuple(moves))


def chain_certificates(first: MoveCertificate, second: MoveCertificate) -> MoveCertificate:
    end = final_index(first)
    if second.initial_index != end:
        raise LedgerMismatch(f"first certificate ends at index {end}, second starts at {second.initial_index}")
    return MoveCertificate(first.initial_index, first.moves + second.moves)
