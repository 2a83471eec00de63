from __future__ import annotations

import networkx as nx

from ..errors import NonAaTilesPresent
from .models import Tiling
from .topology import slot_table, tile_kind


def _half_tile_graph(t: Tiling) -> nx.MultiGraph:
    """Halves (tile, 0) = slots 0,1 and (tile, 1) = slots 2,3; glued slots join halves."""
    g = nx.MultiGraph()
    for tid in t.tiles:
        g.add_edge((tid, 0), (tid, 1), key="leaf")
    for eid, slots in slot_table(t).items():
        (ta, ia), (tb, ib) = slots[0], slots[-1]
        g.add_edge((ta, ia // 2), (tb, ib // 2), key=eid)
    return g


def singular_leaf_graph(t: Tiling) -> nx.MultiGraph:
    """Vertices joined by the non-separating singular leaves of an all-aa tiling."""
    bad = [tid for tid, tile in t.tiles.items() if tile_kind(tile.vertices) != "aa"]
    if bad:
        raise NonAaTilesPresent(f"tiles {sorted(bad)} are not aa")
    graph = nx.MultiGraph()
    for vid, v in t.vertices.items():
        graph.add_node(vid, axis_rank=v.axis_rank)
    halves = _half_tile_graph(t)
    for tid, tile in t.tiles.items():
        halves.remove_edge((tid, 0), (tid, 1), key="leaf")
        keep = nx.is_connected(halves)
        halves.add_edge((tid, 0), (tid, 1), key="leaf")
        if keep:
            graph.add_edge(tile.vertices[0], tile.vertices[2], key=tid, singularity=tile.singularity)
    return graph
