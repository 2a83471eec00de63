from __future__ import annotations

from typing import Any, Optional


class BraidMarkovError(ValueError):
    """Base class for every domain error raised by the engine."""


# ---- braid words ----


class BraidParseError(BraidMarkovError):
    def __init__(self, text: str, reason: str, position: Optional[int] = None) -> None:
        self.text = text
        self.reason = reason
        self.position = position
        where = f" at token {position}" if position is not None else ""
        super().__init__(f"cannot parse braid word {text!r}{where}: {reason}")


class StrandMismatch(BraidMarkovError):
    def __init__(self, left: int, right: int) -> None:
        self.left = left
        self.right = right
        super().__init__(f"strand counts differ: B{left} vs B{right}")


class NotDestabilizable(BraidMarkovError):
    pass


# ---- invariants ----


class TooFewStrands(BraidMarkovError):
    pass


class NonExactDivision(BraidMarkovError):
    def __init__(self, message: str, determinant: Any = None) -> None:
        self.determinant = determinant
        super().__init__(message)


class NotAKnot(BraidMarkovError):
    pass


# ---- tilings ----


class TilingError(BraidMarkovError):
    pass


class NotABArc(TilingError):
    pass


class EssentialArc(TilingError):
    pass


class SelfAdjacentTiles(TilingError):
    pass


class NonLocalConfiguration(TilingError):
    pass


class NotAbTile(TilingError):
    pass


class NotEndTile(TilingError):
    pass


class NonAaTilesPresent(TilingError):
    pass


class StuckNoAbTile(TilingError):
    pass


class ScriptTooLong(TilingError):
    pass


class InvalidTiling(TilingError):
    def __init__(self, report: Any) -> None:
        self.report = report
        super().__init__(f"invalid tiling: {report}")


# ---- certificates ----


class CertificateError(BraidMarkovError):
    pass


class LedgerMismatch(CertificateError):
    pass


class MoveInapplicable(CertificateError):
    def __init__(self, index: int, reason: str) -> None:
        self.index = index
        self.reason = reason
        super().__init__(f"move {index} inapplicable: {reason}")


# ---- documents ----


class FormatError(BraidMarkovError):
    def __init__(self, field: str, message: str) -> None:
        self.field = field
        super().__init__(f"{field}: {message}")
