from __future__ import annotations

"""
Combinatorial queries on a tiling.

A corner (tile, i) sits at c_i; slot (tile, i) is the edge from c_i to
c_{i+1}. Following slot i to its glued partner (tile', j) lands on corner
(tile', j+1), which is the next corner around the same vertex (or along the
same boundary circle when c_i is a boundary corner).
"""

from typing import Dict, List, Optional, Tuple

from .models import FEdge, FTile, Tiling

Slot = Tuple[str, int]
Corner = Tuple[str, int]
SlotTable = Dict[str, List[Slot]]


def slot_ends(tile: FTile, i: int) -> Tuple[Optional[str], Optional[str]]:
    return tile.vertices[i], tile.vertices[(i + 1) % 4]


def tile_kind(vertices: List[Optional[str]]) -> str:
    boundary = sum(1 for k in (1, 3) if vertices[k] is None)
    return {2: "aa", 1: "ab", 0: "bb"}[boundary]


def slot_table(t: Tiling) -> SlotTable:
    table: SlotTable = {}
    for tid, tile in t.tiles.items():
        for i, eid in enumerate(tile.edges):
            table.setdefault(eid, []).append((tid, i))
    return table


def partner(t: Tiling, table: SlotTable, slot: Slot) -> Optional[Slot]:
    tid, i = slot
    slots = table.get(t.tiles[tid].edges[i], [])
    if len(slots) != 2:
        return None
    return slots[1] if slots[0] == slot else slots[0]


def next_corner(t: Tiling, table: SlotTable, corner: Corner) -> Optional[Corner]:
    p = partner(t, table, corner)
    if p is None:
        return None
    return p[0], (p[1] + 1) % 4


def corner_label(t: Tiling, corner: Corner) -> Optional[str]:
    return t.tiles[corner[0]].vertices[corner[1]]


def corner_cycles(t: Tiling, table: Optional[SlotTable] = None) -> List[List[Corner]]:
    """Cycles of the corner permutation; assumes every edge has two slots."""
    table = table if table is not None else slot_table(t)
    seen = set()
    cycles: List[List[Corner]] = []
    for tid in t.tiles:
        for i in range(4):
            start = (tid, i)
            if start in seen:
                continue
            cycle = []
            cur: Optional[Corner] = start
            while cur is not None and cur not in seen:
                seen.add(cur)
                cycle.append(cur)
                cur = next_corner(t, table, cur)
            cycles.append(cycle)
    return cycles


def vertex_corners(t: Tiling, v: str) -> List[Corner]:
    return [(tid, i) for tid, tile in t.tiles.items() for i, x in enumerate(tile.vertices) if x == v]


def valence(t: Tiling, v: str) -> int:
    return len(vertex_corners(t, v))


def vertex_rotation(t: Tiling, v: str) -> List[Corner]:
    """Corners around v in rotation order, starting from the first corner found."""
    corners = vertex_corners(t, v)
    if not corners:
        return []
    table = slot_table(t)
    out = [corners[0]]
    cur = next_corner(t, table, corners[0])
    while cur is not None and cur != corners[0] and len(out) <= len(corners):
        out.append(cur)
        cur = next_corner(t, table, cur)
    return out


def boundary_cycles(t: Tiling, table: Optional[SlotTable] = None) -> List[List[Corner]]:
    return [c for c in corner_cycles(t, table) if c and corner_label(t, c[0]) is None]


def ledger_index(t: Tiling) -> int:
    return sum(v.sign for v in t.vertices.values())


def census(t: Tiling) -> Dict[str, int]:
    kinds = {"aa": 0, "ab": 0, "bb": 0}
    for tile in t.tiles.values():
        kinds[tile_kind(tile.vertices)] += 1
    positives = sum(1 for v in t.vertices.values() if v.sign > 0)
    negatives = len(t.vertices) - positives
    return {
        "V": len(t.vertices),
        "S": len(t.singularities),
        "positive": positives,
        "negative": negatives,
        "ledger": positives - negatives,
        "aa": kinds["aa"],
        "ab": kinds["ab"],
        "bb": kinds["bb"],
    }


def derived_edge(eid: str, t: Tiling, slots: List[Slot]) -> FEdge:
    """Edge record as implied by its slots."""
    even = [s for s in slots if s[1] % 2 == 0]
    odd = [s for s in slots if s[1] % 2 == 1]
    ref = even[0] if even else slots[0]
    tile = t.tiles[ref[0]]
    x, y = slot_ends(tile, ref[1])
    pos, other = (x, y) if ref[1] % 2 == 0 else (y, x)
    adjacent = [even[0][0] if even else slots[0][0], odd[0][0] if odd else slots[-1][0]]
    return FEdge(eid, "a" if other is None else "b", [pos, other], adjacent)


def refresh(t: Tiling) -> None:
    """Recompute tile kinds and edge records from the slots, dropping unused edges."""
    for tile in t.tiles.values():
        tile.kind = tile_kind(tile.vertices)
    table = slot_table(t)
    order = [eid for eid in t.edges if eid in table] + [eid for eid in table if eid not in t.edges]
    t.edges = {eid: derived_edge(eid, t, table[eid]) for eid in order}


def compact_ranks(t: Tiling) -> None:
    for rank, v in enumerate(sorted(t.vertices.values(), key=lambda v: v.axis_rank)):
        v.axis_rank = rank
    for rank, s in enumerate(sorted(t.singularities.values(), key=lambda s: s.theta_rank)):
        s.theta_rank = rank
