from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Set, Tuple

import networkx as nx

from ..errors import (
    InvalidTiling,
    NonLocalConfiguration,
    NotEndTile,
    SelfAdjacentTiles,
    StuckNoAbTile,
    TilingError,
)
from ..models import Move, MoveCertificate
from .graph import singular_leaf_graph
from .models import Tiling
from .rewrite import (
    destabilize_along_end_tile,
    is_b_arc_essential,
    remove_inessential_b_arc,
    stabilize_along_ab_tile,
)
from .topology import census, ledger_index, tile_kind, valence
from .validate import validate_tiling

logger = logging.getLogger(__name__)


@dataclass(slots=True)
class SimplifyStep:
    action: str  # remove_b_arc | stabilize | destabilize
    target: str
    sign: Optional[int]
    census: Dict[str, int]


@dataclass(slots=True)
class SimplifyResult:
    certificate: MoveCertificate
    final: Tiling
    trace: List[SimplifyStep] = field(default_factory=list)
    initial_index: int = 1
    initial_negatives: int = 0
    pillows_removed: int = 0
    stabilizations: int = 0
    destabilizations: int = 0
    skipped_arcs: List[str] = field(default_factory=list)
    leaf_graph_is_tree: bool = True

    def ledger_trace(self) -> List[int]:
        out = [self.initial_index]
        for m in self.certificate.moves:
            out.append(out[-1] + (1 if m.kind == "stabilize" else -1))
        return out


def _check(t: Tiling, enabled: bool) -> None:
    if not enabled:
        return
    report = validate_tiling(t)
    if not report.ok:
        raise InvalidTiling(report)


def _removable_arc(t: Tiling, skipped: Set[str]) -> Optional[Tuple[str, Tiling]]:
    for eid in sorted(t.edges):
        if t.edges[eid].kind != "b" or is_b_arc_essential(t, eid):
            continue
        try:
            return eid, remove_inessential_b_arc(t, eid)
        except (NonLocalConfiguration, SelfAdjacentTiles) as exc:
            if eid not in skipped:
                logger.warning("skipping inessential b-arc %s: %s", eid, exc)
                skipped.add(eid)
    return None


def _next_ab_tile(t: Tiling) -> Optional[str]:
    ab = [tid for tid, tile in t.tiles.items() if tile_kind(tile.vertices) == "ab"]
    if not ab:
        return None
    return min(ab, key=lambda tid: t.singularities[t.tiles[tid].singularity].theta_rank)


def simplify_disc(
    t: Tiling,
    *,
    remove_inessential: bool = True,
    validate_each_step: bool = True,
) -> SimplifyResult:
    """Reduce a disc tiling to the radial disc, recording the Markov moves on the way.

    Phase 1 collapses inessential b-arcs, phase 2 stabilizes along ab tiles
    until no negative vertex is left, phase 3 destabilizes at end tiles,
    leaves of the singular leaf tree first.
    """
    if t.surface_kind != "disc":
        raise TilingError(f"simplify_disc needs a disc, got {t.surface_kind}")
    report = validate_tiling(t)
    if not report.ok:
        raise InvalidTiling(report)

    cur = t.copy()
    start = census(cur)
    result = SimplifyResult(
        certificate=MoveCertificate(ledger_index(cur)),
        final=cur,
        initial_index=start["ledger"],
        initial_negatives=start["negative"],
    )
    moves: List[Move] = []
    skipped: Set[str] = set()

    # phase 1
    while remove_inessential:
        found = _removable_arc(cur, skipped)
        if found is None:
            break
        eid, cur = found
        _check(cur, validate_each_step)
        result.pillows_removed += 1
        result.trace.append(SimplifyStep("remove_b_arc", eid, None, census(cur)))

    # phase 2
    while census(cur)["negative"] > 0:
        tid = _next_ab_tile(cur)
        if tid is None:
            raise StuckNoAbTile(f"{census(cur)['negative']} negative vertices remain but no ab tile")
        cur, move = stabilize_along_ab_tile(cur, tid)
        _check(cur, validate_each_step)
        moves.append(move)
        result.stabilizations += 1
        result.trace.append(SimplifyStep("stabilize", tid, move.sign, census(cur)))

    graph = singular_leaf_graph(cur)
    result.leaf_graph_is_tree = nx.is_tree(graph)
    if not result.leaf_graph_is_tree:
        logger.warning("singular leaf graph is not a tree: %d nodes, %d edges", graph.number_of_nodes(), graph.number_of_edges())

    # phase 3
    while cur.tiles:
        leaves = sorted(
            (v for v in cur.vertices.values() if valence(cur, v.id) == 1),
            key=lambda v: v.axis_rank,
        )
        for leaf in leaves:
            try:
                cur, move = destabilize_along_end_tile(cur, leaf.id)
            except NotEndTile as exc:
                logger.debug("leaf %s is not an end tile: %s", leaf.id, exc)
                continue
            _check(cur, validate_each_step)
            moves.append(move)
            result.destabilizations += 1
            result.trace.append(SimplifyStep("destabilize", leaf.id, move.sign, census(cur)))
            break
        else:
            raise TilingError(f"no end tile among {len(cur.tiles)} aa tiles")

    if not cur.is_radial_disc():
        raise TilingError(f"simplification stopped at {census(cur)}")
    if result.initial_index + result.stabilizations - result.destabilizations != 1:
        raise TilingError("ledger identity violated")

    result.final = cur
    result.certificate = MoveCertificate(result.initial_index, tuple(moves))
    result.skipped_arcs = sorted(skipped)
    logger.debug(
        "simplified disc: %d pillows, %d stabilizations, %d destabilizations",
        result.pillows_removed,
        result.stabilizations,
        result.destabilizations,
    )
    return result
