from __future__ import annotations

import logging
from typing import Dict, List

import networkx as nx

from .models import DEFAULT_CHI, Tiling, ValidationReport
from .topology import (
    boundary_cycles,
    corner_cycles,
    corner_label,
    derived_edge,
    ledger_index,
    slot_ends,
    slot_table,
    tile_kind,
)

logger = logging.getLogger(__name__)

SURFACE_KINDS = ("disc", "annulus", "general")


def _check_records(t: Tiling, report: ValidationReport) -> None:
    if t.surface_kind not in SURFACE_KINDS:
        report.add("surface_kind", f"unknown surface kind {t.surface_kind!r}")
    elif t.surface_kind in DEFAULT_CHI and t.chi != DEFAULT_CHI[t.surface_kind]:
        report.add("chi", f"{t.surface_kind} must have chi={DEFAULT_CHI[t.surface_kind]}, declared {t.chi}")

    for v in t.vertices.values():
        if v.sign not in (1, -1):
            report.add("vertex_sign", f"sign {v.sign} is not +1/-1", v.id)
    ranks = sorted(v.axis_rank for v in t.vertices.values())
    if ranks != list(range(len(ranks))):
        report.add("axis_rank", f"axis ranks {ranks} are not 0..{len(ranks) - 1}")

    for s in t.singularities.values():
        if s.sign not in (1, -1):
            report.add("singularity_sign", f"sign {s.sign} is not +1/-1", s.id)
    thetas = sorted(s.theta_rank for s in t.singularities.values())
    if thetas != list(range(len(thetas))):
        report.add("theta_rank", f"theta ranks {thetas} are not 0..{len(thetas) - 1}")

    owners: Dict[str, List[str]] = {}
    for tile in t.tiles.values():
        if len(tile.vertices) != 4 or len(tile.edges) != 4:
            report.add("tile_shape", "a tile needs 4 corners and 4 slots", tile.id)
            continue
        owners.setdefault(tile.singularity, []).append(tile.id)
        if tile.singularity not in t.singularities:
            report.add("unknown_singularity", f"singularity {tile.singularity!r} does not exist", tile.id)
        for k, x in enumerate(tile.vertices):
            if x is None:
                if k % 2 == 0:
                    report.add("corner_sign", f"corner {k} must hold a positive vertex", tile.id)
                continue
            vert = t.vertices.get(x)
            if vert is None:
                report.add("unknown_vertex", f"corner {k} names missing vertex {x!r}", tile.id)
            elif k % 2 == 0 and vert.sign != 1:
                report.add("corner_sign", f"corner {k} holds negative vertex", tile.id, x)
            elif k % 2 == 1 and vert.sign != -1:
                report.add("corner_sign", f"corner {k} holds positive vertex", tile.id, x)
        for eid in tile.edges:
            if eid not in t.edges:
                report.add("unknown_edge", f"slot names missing edge {eid!r}", tile.id)
        if tile.kind != tile_kind(tile.vertices):
            report.add(
                "tile_kind",
                f"declared {tile.kind} but census gives {tile_kind(tile.vertices)}",
                tile.id,
            )

    for sid in t.singularities:
        n = len(owners.get(sid, []))
        if n != 1:
            report.add("singularity_tile", f"singularity lies in {n} tiles", sid)

    for eid, edge in t.edges.items():
        if edge.kind not in ("a", "b"):
            report.add("edge_kind", f"unknown edge kind {edge.kind!r}", eid)
        if edge.kind == "a" and any(
            x is not None and x in t.vertices and t.vertices[x].sign < 0 for x in edge.endpoints
        ):
            report.add("a_edge_negative_vertex", "a-edge at negative vertex", eid)


def _check_edges(t: Tiling, report: ValidationReport) -> None:
    table = slot_table(t)
    for eid, edge in t.edges.items():
        slots = table.get(eid, [])
        if len(slots) != 2:
            report.add("edge_slots", f"edge occupies {len(slots)} slots, expected 2", eid)
            continue
        (ta, ia), (tb, ib) = slots
        xa, ya = slot_ends(t.tiles[ta], ia)
        xb, yb = slot_ends(t.tiles[tb], ib)
        if (xa, ya) != (yb, xb) or ia % 2 == ib % 2:
            report.add("edge_orientation", "glued slots do not run in opposite directions", eid, ta, tb)
            continue
        implied = derived_edge(eid, t, slots)
        if edge.kind != implied.kind:
            report.add("edge_kind", f"declared {edge.kind} but slots give {implied.kind}", eid)
        if list(edge.endpoints) != implied.endpoints:
            report.add("edge_endpoints", f"declared {edge.endpoints} but slots give {implied.endpoints}", eid)
        if list(edge.adjacent_tiles) != implied.adjacent_tiles:
            report.add(
                "edge_tiles", f"declared {edge.adjacent_tiles} but slots give {implied.adjacent_tiles}", eid
            )
    for tile in t.tiles.values():
        if tile_kind(tile.vertices) == "bb" and any(
            eid in t.edges and t.edges[eid].kind == "a" for eid in tile.edges
        ):
            report.add("bb_boundary", "bb tile touches a boundary edge", tile.id)


def _check_surface(t: Tiling, report: ValidationReport) -> None:
    table = slot_table(t)
    if t.tiles:
        graph = nx.Graph()
        graph.add_nodes_from(t.tiles)
        for slots in table.values():
            graph.add_edge(slots[0][0], slots[-1][0])
        if not nx.is_connected(graph):
            report.add("connectivity", f"tile gluing graph has {nx.number_connected_components(graph)} components")

        cycles_at: Dict[str, int] = {}
        for cycle in corner_cycles(t, table):
            label = corner_label(t, cycle[0])
            if label is not None:
                cycles_at[label] = cycles_at.get(label, 0) + 1
        for vid in t.vertices:
            n = cycles_at.get(vid, 0)
            if n == 0:
                report.add("valence", "vertex has no corner", vid)
            elif n > 1:
                report.add("rotation", f"{n} rotation cycles at vertex, expected 1", vid)
        traced = len(boundary_cycles(t, table))
    else:
        # isolated radially foliated discs
        traced = len(t.vertices)

    expected = t.expected_boundary_count()
    if expected is not None and traced != expected:
        report.add("boundary_count", f"traced {traced} boundary circles, expected {expected}")

    if len(t.vertices) - len(t.singularities) != t.chi:
        report.add("euler", f"V - S = {len(t.vertices) - len(t.singularities)}, declared chi={t.chi}")
    if ledger_index(t) < 1:
        report.add("ledger", f"ledger braid index {ledger_index(t)} < 1")


def validate_tiling(t: Tiling) -> ValidationReport:
    report = ValidationReport()
    _check_records(t, report)
    if report.ok:
        _check_edges(t, report)
    if report.ok:
        _check_surface(t, report)
    if not report.ok:
        logger.debug("tiling rejected: %s", report)
    return report
