from __future__ import annotations

import logging
from typing import Dict, List, Tuple

from ..errors import (
    EssentialArc,
    NonLocalConfiguration,
    NotABArc,
    NotAbTile,
    NotEndTile,
    SelfAdjacentTiles,
    TilingError,
)
from ..models import Move
from .models import Tiling
from .topology import (
    SlotTable,
    compact_ranks,
    partner,
    refresh,
    slot_table,
    tile_kind,
    valence,
    vertex_corners,
)

logger = logging.getLogger(__name__)


def _finish(t: Tiling) -> Tiling:
    refresh(t)
    compact_ranks(t)
    return t


def _excise_tile(t: Tiling, tile_id: str, table: SlotTable) -> None:
    """Remove a tile whose odd corners are both boundary.

    The two slots meeting at each positive corner are identified; every chain
    of identified slots that leaves the tile has its two outer partners glued.
    """
    tile = t.tiles[tile_id]
    parent = list(range(4))

    def find(s: int) -> int:
        while parent[s] != s:
            s = parent[s]
        return s

    def union(a: int, b: int) -> None:
        parent[find(a)] = find(b)

    union(3, 0)
    union(1, 2)
    outer: Dict[int, Tuple[str, int]] = {}
    for s in range(4):
        p = partner(t, table, (tile_id, s))
        if p is None:
            raise TilingError(f"slot {s} of tile {tile_id} is not glued")
        if p[0] == tile_id:
            union(s, p[1])
        else:
            outer[s] = p

    chains: Dict[int, List[int]] = {}
    for s in range(4):
        if s in outer:
            chains.setdefault(find(s), []).append(s)
    for ends in chains.values():
        if len(ends) != 2:
            raise TilingError(f"tile {tile_id} leaves a chain with {len(ends)} outer ends")
        sa, sb = ends
        pb = outer[sb]
        t.tiles[pb[0]].edges[pb[1]] = tile.edges[sa]
    del t.tiles[tile_id]


def is_b_arc_essential(t: Tiling, edge_id: str) -> bool:
    edge = t.edges.get(edge_id)
    if edge is None or edge.kind != "b":
        raise NotABArc(f"edge {edge_id!r} is not a b-arc")
    x, y = edge.endpoints
    n = len(t.vertices)
    diff = (t.vertices[x].axis_rank - t.vertices[y].axis_rank) % n
    return diff not in (1, n - 1)


def remove_inessential_b_arc(t: Tiling, edge_id: str) -> Tiling:
    """Collapse the pillow around an inessential b-arc: two vertices and two singularities go."""
    if is_b_arc_essential(t, edge_id):
        raise EssentialArc(f"b-arc {edge_id!r} joins non-adjacent axis ranks")
    table = slot_table(t)
    slots = table.get(edge_id, [])
    if len(slots) != 2:
        raise NonLocalConfiguration(f"edge {edge_id!r} is not glued on two sides")
    if slots[0][0] == slots[1][0]:
        raise SelfAdjacentTiles(f"tile {slots[0][0]} lies on both sides of {edge_id!r}")
    (t1, a), (t2, j) = slots if slots[0][1] % 2 == 0 else (slots[1], slots[0])
    b = (j + 1) % 4
    c1 = t.tiles[t1].vertices
    c2 = t.tiles[t2].vertices
    p, w, q, y = c1[a], c1[(a + 1) % 4], c1[(a + 2) % 4], c1[(a + 3) % 4]

    if valence(t, p) != 2 or valence(t, w) != 2:
        raise NonLocalConfiguration(f"endpoints of {edge_id!r} do not both have valence 2")
    if (c2[b], c2[(b + 1) % 4], c2[(b + 2) % 4], c2[(b + 3) % 4]) != (p, y, q, w):
        raise NonLocalConfiguration(f"tiles {t1}, {t2} do not form a pillow")
    if partner(t, table, (t1, (a + 3) % 4)) != (t2, b) or partner(t, table, (t1, (a + 1) % 4)) != (
        t2,
        (b + 2) % 4,
    ):
        raise NonLocalConfiguration(f"tiles {t1}, {t2} are not glued as a pillow")
    outer_1 = partner(t, table, (t1, (a + 2) % 4))
    outer_2 = partner(t, table, (t2, (b + 1) % 4))
    if outer_1 == (t2, (b + 1) % 4) or outer_1 is None or outer_2 is None:
        raise NonLocalConfiguration(f"pillow at {edge_id!r} closes up on itself")

    out = t.copy()
    out.tiles[outer_2[0]].edges[outer_2[1]] = out.tiles[t1].edges[(a + 2) % 4]
    for tid in (t1, t2):
        del out.singularities[out.tiles[tid].singularity]
        del out.tiles[tid]
    del out.vertices[p]
    del out.vertices[w]
    logger.debug("removed inessential b-arc %s (vertices %s, %s)", edge_id, p, w)
    return _finish(out)


def stabilize_along_ab_tile(t: Tiling, tile_id: str) -> Tuple[Tiling, Move]:
    """Eliminate the negative vertex of an ab tile; the braid index goes up by one."""
    tile = t.tiles.get(tile_id)
    if tile is None:
        raise NotAbTile(f"unknown tile {tile_id!r}")
    if tile_kind(tile.vertices) != "ab":
        raise NotAbTile(f"tile {tile_id} is {tile_kind(tile.vertices)}, not ab")
    w = next(x for k, x in enumerate(tile.vertices) if k % 2 == 1 and x is not None)
    sing = t.singularities[tile.singularity]

    out = t.copy()
    # every corner at w becomes boundary; bb tiles there turn ab, ab tiles turn aa
    for other in out.tiles.values():
        other.vertices = [None if x == w else x for x in other.vertices]
    del out.vertices[w]
    _excise_tile(out, tile_id, slot_table(out))
    del out.singularities[sing.id]
    logger.debug("stabilized along %s (negative vertex %s, sign %+d)", tile_id, w, sing.sign)
    return _finish(out), Move.stabilize(sing.sign)


def destabilize_along_end_tile(t: Tiling, vertex_id: str) -> Tuple[Tiling, Move]:
    vert = t.vertices.get(vertex_id)
    if vert is None:
        raise NotEndTile(f"unknown vertex {vertex_id!r}")
    if not t.tiles:
        raise NotEndTile("tiling has no tiles")
    if vert.sign != 1:
        raise NotEndTile(f"vertex {vertex_id} is negative")
    corners = vertex_corners(t, vertex_id)
    if len(corners) != 1:
        raise NotEndTile(f"vertex {vertex_id} has valence {len(corners)}")
    tid, i = corners[0]
    tile = t.tiles[tid]
    if tile_kind(tile.vertices) != "aa":
        raise NotEndTile(f"tile {tid} at {vertex_id} is {tile_kind(tile.vertices)}")
    table = slot_table(t)
    if partner(t, table, (tid, i)) != (tid, (i - 1) % 4):
        raise NotEndTile(f"tile {tid} is not glued to itself around {vertex_id}")

    sing = t.singularities[tile.singularity]
    out = t.copy()
    _excise_tile(out, tid, slot_table(out))
    del out.vertices[vertex_id]
    del out.singularities[sing.id]
    logger.debug("destabilized along end tile %s at %s (sign %+d)", tid, vertex_id, sing.sign)
    return _finish(out), Move.destabilize(sing.sign)
