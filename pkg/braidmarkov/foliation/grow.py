from __future__ import annotations

import logging
import random
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence

from ..errors import ScriptTooLong, TilingError
from .models import FSingularity, FTile, FVertex, Tiling
from .topology import (
    Slot,
    boundary_cycles,
    compact_ranks,
    ledger_index,
    refresh,
    slot_table,
)

logger = logging.getLogger(__name__)

INVERSE_MOVES = ("end_tile", "ab_tile", "pillow")


def _fresh_id(existing: Iterable[str], prefix: str) -> str:
    taken = set(existing)
    k = len(taken)
    while f"{prefix}{k}" in taken:
        k += 1
    return f"{prefix}{k}"


def _add_vertex(t: Tiling, sign: int, rank: int) -> str:
    for v in t.vertices.values():
        if v.axis_rank >= rank:
            v.axis_rank += 1
    vid = _fresh_id(t.vertices, "v")
    t.vertices[vid] = FVertex(vid, sign, rank)
    return vid


def _add_tile(t: Tiling, rng: random.Random, vertices: List[Optional[str]]) -> FTile:
    theta = rng.randint(0, len(t.singularities))
    for s in t.singularities.values():
        if s.theta_rank >= theta:
            s.theta_rank += 1
    sid = _fresh_id(t.singularities, "s")
    t.singularities[sid] = FSingularity(sid, rng.choice((1, -1)), theta)
    tid = _fresh_id(t.tiles, "T")
    tile = FTile(tid, "aa", sid, list(vertices), ["", "", "", ""])
    t.tiles[tid] = tile
    return tile


class _EdgeIds:
    def __init__(self, t: Tiling) -> None:
        self._taken = set(t.edges)

    def new(self) -> str:
        eid = _fresh_id(self._taken, "e")
        self._taken.add(eid)
        return eid


def _glue(t: Tiling, a: Slot, b: Slot, eid: str) -> None:
    t.tiles[a[0]].edges[a[1]] = eid
    t.tiles[b[0]].edges[b[1]] = eid


def _finish(t: Tiling) -> Tiling:
    refresh(t)
    compact_ranks(t)
    return t


def insert_end_tile(t: Tiling, rng: random.Random) -> Tiling:
    """Inverse destabilization: a new positive vertex on an end tile."""
    out = t.copy()
    ids = _EdgeIds(out)
    if not out.tiles:
        if len(out.vertices) != 1:
            raise TilingError("an empty tiling must be a radial disc")
        (q,) = out.vertices
        v = _add_vertex(out, 1, rng.randint(0, 1))
        tile = _add_tile(out, rng, [v, None, q, None])
        _glue(out, (tile.id, 3), (tile.id, 0), ids.new())
        _glue(out, (tile.id, 1), (tile.id, 2), ids.new())
        return _finish(out)

    table = slot_table(out)
    a_edges = sorted(eid for eid, e in out.edges.items() if e.kind == "a")
    eid = rng.choice(a_edges)
    even = next(s for s in table[eid] if s[1] % 2 == 0)
    odd = next(s for s in table[eid] if s[1] % 2 == 1)
    q = out.tiles[even[0]].vertices[even[1]]
    v = _add_vertex(out, 1, rng.randint(0, len(out.vertices)))
    tile = _add_tile(out, rng, [v, None, q, None])
    _glue(out, (tile.id, 3), (tile.id, 0), ids.new())
    _glue(out, (tile.id, 1), even, eid)
    _glue(out, (tile.id, 2), odd, ids.new())
    return _finish(out)


def _essential_ranks(t: Tiling, neighbours: Iterable[str]) -> List[int]:
    """Insertion ranks for a new vertex whose b-arcs to ``neighbours`` all stay essential.

    Inserting at rank r puts the vertex between old ranks r - 1 and r, cyclically.
    """
    n = len(t.vertices)
    taken = {t.vertices[u].axis_rank for u in neighbours}
    return [r for r in range(n + 1) if (r - 1) % n not in taken and r % n not in taken]


def insert_ab_tile(t: Tiling, rng: random.Random, max_run: int = 3) -> Optional[Tiling]:
    """Inverse ab-stabilization: a run of boundary corners becomes a new negative vertex.

    The new vertex is placed on the axis so that none of its b-arcs joins
    cyclically adjacent ranks. Returns None when the move does not apply: no
    tiles, ledger index below 2, or no such axis position.
    """
    if not t.tiles or ledger_index(t) < 2:
        return None
    out = t.copy()
    compact_ranks(out)
    ids = _EdgeIds(out)
    table = slot_table(out)
    cycles = boundary_cycles(out, table)
    cycle = rng.choice(cycles)
    size = len(cycle)
    k = rng.randint(0, min(max_run, size - 1))
    start = rng.randrange(size)
    run = [cycle[(start + j) % size] for j in range(k + 2)]

    def out_slot(c: Slot) -> Slot:
        return c

    def in_slot(c: Slot) -> Slot:
        return c[0], (c[1] - 1) % 4

    x0, xk, x_after = run[0], run[k], run[k + 1]
    p2 = out.tiles[x0[0]].vertices[(x0[1] + 1) % 4]
    p1 = out.tiles[xk[0]].vertices[(xk[1] + 1) % 4]
    e1 = out.tiles[x0[0]].edges[x0[1]]
    e2 = out.tiles[xk[0]].edges[xk[1]]

    neighbours = {p1, p2}
    for tid, i in run[1 : k + 1]:
        corners = out.tiles[tid].vertices
        neighbours.update(x for x in (corners[(i - 1) % 4], corners[(i + 1) % 4]) if x is not None)
    ranks = _essential_ranks(out, neighbours)
    if not ranks:
        return None

    w = _add_vertex(out, -1, rng.choice(ranks))
    tile = _add_tile(out, rng, [p1, w, p2, None])
    _glue(out, (tile.id, 2), out_slot(x0), e1)
    if k == 0:
        _glue(out, (tile.id, 3), in_slot(x_after), ids.new())
        _glue(out, (tile.id, 0), (tile.id, 1), ids.new())
    else:
        _glue(out, (tile.id, 1), in_slot(run[1]), ids.new())
        _glue(out, (tile.id, 0), out_slot(xk), e2)
        _glue(out, (tile.id, 3), in_slot(x_after), ids.new())
        for tid, i in run[1 : k + 1]:
            out.tiles[tid].vertices[i] = w
    return _finish(out)


def insert_pillow(t: Tiling, rng: random.Random) -> Optional[Tiling]:
    """Inverse of remove_inessential_b_arc at a random edge; None on the radial disc."""
    if not t.tiles:
        return None
    out = t.copy()
    ids = _EdgeIds(out)
    table = slot_table(out)
    eid = rng.choice(sorted(out.edges))
    even = next(s for s in table[eid] if s[1] % 2 == 0)
    odd = next(s for s in table[eid] if s[1] % 2 == 1)
    q = out.tiles[even[0]].vertices[even[1]]
    y = out.tiles[even[0]].vertices[(even[1] + 1) % 4]

    rank = rng.randint(0, len(out.vertices))
    first_sign = rng.choice((1, -1))
    first = _add_vertex(out, first_sign, rank)
    second = _add_vertex(out, -first_sign, rank + 1)
    p, w = (first, second) if first_sign > 0 else (second, first)

    t1 = _add_tile(out, rng, [p, w, q, y])
    t2 = _add_tile(out, rng, [p, y, q, w])
    _glue(out, (t1.id, 0), (t2.id, 3), ids.new())
    _glue(out, (t1.id, 3), (t2.id, 0), ids.new())
    _glue(out, (t1.id, 1), (t2.id, 2), ids.new())
    _glue(out, (t1.id, 2), odd, eid)
    _glue(out, (t2.id, 1), even, ids.new())
    return _finish(out)


def random_script(rng: random.Random, length: int, weights: Mapping[str, float]) -> List[str]:
    moves = [m for m in INVERSE_MOVES if weights.get(m, 0) > 0]
    return rng.choices(moves, weights=[weights[m] for m in moves], k=length)


def grow_disc(
    seed: Optional[Tiling],
    script: Sequence[str],
    rng_seed: int,
    *,
    max_moves: int = 30,
    max_run: int = 3,
) -> Tiling:
    """Synthesize a valid disc tiling by applying inverse moves to a seed disc.

    An inverse ab-stabilization or pillow insertion that does not apply at the
    current state is replaced by an end-tile insertion.
    """
    if len(script) > max_moves:
        raise ScriptTooLong(f"script has {len(script)} moves, bound is {max_moves}")
    rng = random.Random(rng_seed)
    cur = seed.copy() if seed is not None else Tiling.radial_disc()
    steps: Dict[str, Callable[[Tiling], Optional[Tiling]]] = {
        "end_tile": lambda x: insert_end_tile(x, rng),
        "ab_tile": lambda x: insert_ab_tile(x, rng, max_run),
        "pillow": lambda x: insert_pillow(x, rng),
    }
    for pos, move in enumerate(script):
        step = steps.get(move)
        if step is None:
            raise TilingError(f"unknown inverse move {move!r} at script position {pos}")
        nxt = step(cur)
        if nxt is None:
            logger.debug("inverse %s not applicable at step %d, inserting an end tile", move, pos)
            nxt = insert_end_tile(cur, rng)
        cur = nxt
    return cur
