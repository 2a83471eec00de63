"""Two-colored crossing diagrams and the green-under-red splitting procedure."""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Any, Dict, List, Tuple, Union

from .errors import FormatError

logger = logging.getLogger(__name__)

COLORS = ("red", "green")


@dataclass(frozen=True, slots=True)
class ColoredCrossing:
    id: str
    over: str
    under: str

    def __post_init__(self) -> None:
        for side in ("over", "under"):
            if getattr(self, side) not in COLORS:
                raise FormatError(side, f"expected 'red' or 'green', got {getattr(self, side)!r}")

    @property
    def is_self_crossing(self) -> bool:
        return self.over == self.under

    @property
    def green_over_red(self) -> bool:
        return self.over == "green" and self.under == "red"

    def switched(self) -> "ColoredCrossing":
        return replace(self, over=self.under, under=self.over)


@dataclass(frozen=True, slots=True)
class ColoredDiagram:
    crossings: Tuple[ColoredCrossing, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.crossings, tuple):
            object.__setattr__(self, "crossings", tuple(self.crossings))
        seen = set()
        for c in self.crossings:
            if c.id in seen:
                raise FormatError("crossings", f"duplicate crossing id {c.id!r}")
            seen.add(c.id)

    def self_crossings(self) -> List[str]:
        return [c.id for c in self.crossings if c.is_self_crossing]


@dataclass(frozen=True, slots=True)
class SwitchCertificate:
    switched: Tuple[str, ...] = ()

    def __len__(self) -> int:
        return len(self.switched)

    @property
    def summands(self) -> int:
        # one unknot summand per switched crossing
        return len(self.switched)


def green_over_red_count(d: ColoredDiagram) -> int:
    return sum(1 for c in d.crossings if c.green_over_red)


def split_by_switches(d: ColoredDiagram) -> Tuple[ColoredDiagram, SwitchCertificate]:
    switched: List[str] = []
    out: List[ColoredCrossing] = []
    for c in d.crossings:
        if c.green_over_red:
            switched.append(c.id)
            out.append(c.switched())
        else:
            out.append(c)
    logger.debug("switched %d of %d crossings", len(switched), len(d.crossings))
    return ColoredDiagram(tuple(out)), SwitchCertificate(tuple(switched))


def diagram_from_dict(data: Any) -> ColoredDiagram:
    if not isinstance(data, dict):
        raise FormatError("diagram", "expected object")
    raw = data.get("crossings", [])
    if not isinstance(raw, list):
        raise FormatError("crossings", "expected list")
    crossings: List[ColoredCrossing] = []
    for k, item in enumerate(raw):
        path = f"crossings[{k}]"
        if not isinstance(item, dict):
            raise FormatError(path, "expected object")
        cid = item.get("id")
        if isinstance(cid, int) and not isinstance(cid, bool):
            cid = str(cid)
        if not isinstance(cid, str):
            raise FormatError(f"{path}.id", "expected string")
        try:
            crossings.append(ColoredCrossing(cid, item.get("over"), item.get("under")))
        except FormatError as exc:
            raise FormatError(f"{path}.{exc.field}", str(exc).split(": ", 1)[-1]) from exc
    return ColoredDiagram(tuple(crossings))


def diagram_to_dict(d: ColoredDiagram) -> Dict[str, Any]:
    return {"crossings": [{"id": c.id, "over": c.over, "under": c.under} for c in d.crossings]}


def switch_certificate_to_dict(cert: SwitchCertificate) -> Dict[str, Any]:
    return {"switched": list(cert.switched), "summands": cert.summands}


def load_diagram(path: Union[str, Path]) -> ColoredDiagram:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise FormatError(str(path), f"invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    return diagram_from_dict(data)


def dump_switch_certificate(cert: SwitchCertificate, path: Union[str, Path]) -> None:
    Path(path).write_text(json.dumps(switch_certificate_to_dict(cert), indent=2) + "\n", encoding="utf-8")
