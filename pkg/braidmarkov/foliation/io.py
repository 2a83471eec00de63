from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from ..errors import FormatError
from .models import FEdge, FSingularity, FTile, FVertex, Tiling


def _require(obj: Dict[str, Any], key: str, path: str, kind: type) -> Any:
    if key not in obj:
        raise FormatError(f"{path}.{key}", "missing")
    value = obj[key]
    if kind is int and isinstance(value, bool):
        raise FormatError(f"{path}.{key}", "expected int")
    if not isinstance(value, kind):
        raise FormatError(f"{path}.{key}", f"expected {kind.__name__}")
    return value


def _optional_id_list(values: Any, path: str, size: Optional[int] = None) -> List[Optional[str]]:
    if not isinstance(values, list):
        raise FormatError(path, "expected list")
    if size is not None and len(values) != size:
        raise FormatError(path, f"expected {size} entries, got {len(values)}")
    for k, x in enumerate(values):
        if x is not None and not isinstance(x, str):
            raise FormatError(f"{path}[{k}]", "expected string or null")
    return list(values)


def tiling_from_dict(data: Any) -> Tiling:
    if not isinstance(data, dict):
        raise FormatError("tiling", "expected object")
    surface_kind = data.get("surface_kind", "disc")
    if not isinstance(surface_kind, str):
        raise FormatError("tiling.surface_kind", "expected string")
    chi = data.get("chi", 1 if surface_kind == "disc" else 0)
    if not isinstance(chi, int) or isinstance(chi, bool):
        raise FormatError("tiling.chi", "expected int")
    boundary_count = data.get("boundary_count")
    if boundary_count is not None and (not isinstance(boundary_count, int) or isinstance(boundary_count, bool)):
        raise FormatError("tiling.boundary_count", "expected int")

    t = Tiling(surface_kind=surface_kind, chi=chi, boundary_count=boundary_count)
    for section in ("vertices", "singularities", "edges", "tiles"):
        if not isinstance(data.get(section, []), list):
            raise FormatError(f"tiling.{section}", "expected list")

    for k, raw in enumerate(data.get("vertices", [])):
        path = f"vertices[{k}]"
        if not isinstance(raw, dict):
            raise FormatError(path, "expected object")
        vid = _require(raw, "id", path, str)
        if vid in t.vertices:
            raise FormatError(f"{path}.id", f"duplicate id {vid!r}")
        t.vertices[vid] = FVertex(vid, _require(raw, "sign", path, int), _require(raw, "axis_rank", path, int))

    for k, raw in enumerate(data.get("singularities", [])):
        path = f"singularities[{k}]"
        if not isinstance(raw, dict):
            raise FormatError(path, "expected object")
        sid = _require(raw, "id", path, str)
        if sid in t.singularities:
            raise FormatError(f"{path}.id", f"duplicate id {sid!r}")
        t.singularities[sid] = FSingularity(
            sid, _require(raw, "sign", path, int), _require(raw, "theta_rank", path, int)
        )

    for k, raw in enumerate(data.get("edges", [])):
        path = f"edges[{k}]"
        if not isinstance(raw, dict):
            raise FormatError(path, "expected object")
        eid = _require(raw, "id", path, str)
        if eid in t.edges:
            raise FormatError(f"{path}.id", f"duplicate id {eid!r}")
        endpoints = _optional_id_list(_require(raw, "endpoints", path, list), f"{path}.endpoints", 2)
        adjacent = _require(raw, "adjacent_tiles", path, list)
        if not all(isinstance(x, str) for x in adjacent):
            raise FormatError(f"{path}.adjacent_tiles", "expected strings")
        t.edges[eid] = FEdge(eid, _require(raw, "kind", path, str), endpoints, list(adjacent))

    for k, raw in enumerate(data.get("tiles", [])):
        path = f"tiles[{k}]"
        if not isinstance(raw, dict):
            raise FormatError(path, "expected object")
        tid = _require(raw, "id", path, str)
        if tid in t.tiles:
            raise FormatError(f"{path}.id", f"duplicate id {tid!r}")
        vertices = _optional_id_list(_require(raw, "vertices", path, list), f"{path}.vertices", 4)
        edges = _require(raw, "edges", path, list)
        if len(edges) != 4 or not all(isinstance(x, str) for x in edges):
            raise FormatError(f"{path}.edges", "expected 4 edge ids")
        t.tiles[tid] = FTile(
            tid, _require(raw, "kind", path, str), _require(raw, "singularity", path, str), vertices, list(edges)
        )
    return t


def tiling_to_dict(t: Tiling) -> Dict[str, Any]:
    out: Dict[str, Any] = {"surface_kind": t.surface_kind, "chi": t.chi}
    if t.boundary_count is not None:
        out["boundary_count"] = t.boundary_count
    out["vertices"] = [{"id": v.id, "sign": v.sign, "axis_rank": v.axis_rank} for v in t.vertices.values()]
    out["singularities"] = [
        {"id": s.id, "sign": s.sign, "theta_rank": s.theta_rank} for s in t.singularities.values()
    ]
    out["edges"] = [
        {"id": e.id, "kind": e.kind, "endpoints": list(e.endpoints), "adjacent_tiles": list(e.adjacent_tiles)}
        for e in t.edges.values()
    ]
    out["tiles"] = [
        {
            "id": tile.id,
            "kind": tile.kind,
            "singularity": tile.singularity,
            "vertices": list(tile.vertices),
            "edges": list(tile.edges),
        }
        for tile in t.tiles.values()
    ]
    return out


def load_tiling(path: Union[str, Path]) -> Tiling:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise FormatError(str(path), f"invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    return tiling_from_dict(data)


def dump_tiling(t: Tiling, path: Union[str, Path]) -> None:
    Path(path).write_text(json.dumps(tiling_to_dict(t), indent=2) + "\n", encoding="utf-8")
