from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Dict, List, Union

from ..braid.text import format_word, parse_word
from ..errors import BraidParseError, CertificateError, FormatError
from ..models import Move, MoveCertificate
from .registry import list_move_kinds


def move_from_dict(raw: Any, path: str = "move") -> Move:
    if not isinstance(raw, dict):
        raise FormatError(path, "expected object")
    kind = raw.get("kind")
    if not isinstance(kind, str):
        raise FormatError(f"{path}.kind", "expected string")
    if kind not in list_move_kinds():
        raise FormatError(f"{path}.kind", f"unknown move kind {kind!r}")
    sign = raw.get("sign")
    if sign is not None and (isinstance(sign, bool) or sign not in (1, -1)):
        raise FormatError(f"{path}.sign", "expected 1 or -1")
    witness = None
    if raw.get("witness") is not None:
        text = raw["witness"]
        if not isinstance(text, str):
            raise FormatError(f"{path}.witness", "expected braid word text")
        try:
            witness = parse_word(text)
        except BraidParseError as exc:
            raise FormatError(f"{path}.witness", str(exc)) from exc
    try:
        return Move(kind, sign, witness)
    except CertificateError as exc:
        raise FormatError(path, str(exc)) from exc


def move_to_dict(move: Move) -> Dict[str, Any]:
    out: Dict[str, Any] = {"kind": move.kind}
    if move.sign is not None:
        out["sign"] = move.sign
    if move.witness is not None:
        out["witness"] = format_word(move.witness)
    return out


def certificate_from_dict(data: Any) -> MoveCertificate:
    if not isinstance(data, dict):
        raise FormatError("certificate", "expected object")
    index = data.get("initial_index")
    if not isinstance(index, int) or isinstance(index, bool) or index < 1:
        raise FormatError("initial_index", "expected positive int")
    raw_moves = data.get("moves", [])
    if not isinstance(raw_moves, list):
        raise FormatError("moves", "expected list")
    moves: List[Move] = [move_from_dict(raw, f"moves[{k}]") for k, raw in enumerate(raw_moves)]
    return MoveCertificate(index, tuple(moves))


def certificate_to_dict(cert: MoveCertificate) -> Dict[str, Any]:
    return {"initial_index": cert.initial_index, "moves": [move_to_dict(m) for m in cert.moves]}


def load_certificate(path: Union[str, Path]) -> MoveCertificate:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise FormatError(str(path), f"invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    return certificate_from_dict(data)


def dump_certificate(cert: MoveCertificate, path: Union[str, Path]) -> None:
    Path(path).write_text(json.dumps(certificate_to_dict(cert), indent=2) + "\n", encoding="utf-8")
