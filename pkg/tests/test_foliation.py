from __future__ import annotations

import random

import networkx as nx
import pytest

from braidmarkov.errors import (
    EssentialArc,
    FormatError,
    NonAaTilesPresent,
    NonLocalConfiguration,
    NotABArc,
    NotAbTile,
    NotEndTile,
    ScriptTooLong,
    SelfAdjacentTiles,
    TilingError,
)
from braidmarkov.foliation import (
    Tiling,
    boundary_cycles,
    census,
    destabilize_along_end_tile,
    grow_disc,
    insert_ab_tile,
    insert_end_tile,
    insert_pillow,
    is_b_arc_essential,
    ledger_index,
    random_script,
    remove_inessential_b_arc,
    singular_leaf_graph,
    stabilize_along_ab_tile,
    tiling_from_dict,
    tiling_to_dict,
    valence,
    validate_tiling,
    vertex_rotation,
)
from braidmarkov.foliation.topology import tile_kind

WEIGHTS = {"end_tile": 1.0, "ab_tile": 1.0, "pillow": 0.5}


def grown(seed: int, length: int = 30) -> Tiling:
    rng = random.Random(seed)
    return grow_disc(None, random_script(rng, length, WEIGHTS), seed)


# ---- validation ----


def test_fixture_tilings_are_valid(radial_disc, two_vertex_disc, ab_disc, pillow_disc):
    for t in (radial_disc, two_vertex_disc, ab_disc, pillow_disc):
        report = validate_tiling(t)
        assert report.ok, str(report)


def test_a_edge_at_negative_vertex_is_reported(doc):
    data = doc("ab")
    data["edges"][1]["endpoints"] = ["w", None]
    report = validate_tiling(tiling_from_dict(data))
    assert not report.ok
    assert "a_edge_negative_vertex" in report.codes()
    assert any(v.message == "a-edge at negative vertex" for v in report.violations)


@pytest.mark.parametrize(
    "edit, code",
    [
        (lambda d: d["tiles"][0].update(kind="ab"), "tile_kind"),
        (lambda d: d["vertices"][1].update(sign=-1), "corner_sign"),
        (lambda d: d["vertices"][1].update(axis_rank=0), "axis_rank"),
        (lambda d: d["tiles"][0].update(edges=["e0", "e1", "e0", "e1"]), "edge_orientation"),
        (lambda d: d.update(boundary_count=2), "boundary_count"),
        (lambda d: d.update(surface_kind="general", chi=0), "euler"),
        (lambda d: d.update(chi=0), "chi"),
        (lambda d: d["edges"][0].update(adjacent_tiles=["T0", "T9"]), "edge_tiles"),
    ],
)
def test_violations_are_reported_as_data(doc, edit, code):
    data = doc("two_vertex")
    edit(data)
    report = validate_tiling(tiling_from_dict(data))
    assert code in report.codes()


def test_queries(ab_disc, two_vertex_disc):
    assert valence(ab_disc, "b") == 3
    assert valence(ab_disc, "w") == 1
    assert len(vertex_rotation(ab_disc, "b")) == 3
    assert len(boundary_cycles(ab_disc)) == 1
    assert census(ab_disc) == {
        "V": 3,
        "S": 2,
        "positive": 2,
        "negative": 1,
        "ledger": 1,
        "aa": 1,
        "ab": 1,
        "bb": 0,
    }
    assert census(two_vertex_disc)["aa"] == 1


# ---- b-arcs ----


def test_b_arc_essentiality(pillow_disc, doc):
    assert is_b_arc_essential(pillow_disc, "e2") is False  # ranks 2, 3
    assert is_b_arc_essential(pillow_disc, "e4") is True  # ranks 1, 3
    with pytest.raises(NotABArc):
        is_b_arc_essential(pillow_disc, "e0")

    data = doc("pillow")
    for v, rank in zip(data["vertices"], (1, 2, 3, 0)):
        v["axis_rank"] = rank
    wrapped = tiling_from_dict(data)
    assert is_b_arc_essential(wrapped, "e2") is False  # ranks 3, 0 wrap around
    assert is_b_arc_essential(wrapped, "e4") is True  # ranks 2, 0


def test_remove_inessential_b_arc(pillow_disc):
    out = remove_inessential_b_arc(pillow_disc, "e2")
    assert len(out.vertices) == 2
    assert len(out.singularities) == 1
    assert len(out.vertices) - len(out.singularities) == 1
    assert validate_tiling(out).ok
    assert sorted(out.vertices) == ["a", "b"]
    # input untouched
    assert len(pillow_disc.vertices) == 4


def test_remove_rejects_essential_and_non_local(pillow_disc, ab_disc, doc):
    with pytest.raises(EssentialArc):
        remove_inessential_b_arc(pillow_disc, "e4")
    with pytest.raises(SelfAdjacentTiles):
        remove_inessential_b_arc(ab_disc, "e3")

    data = doc("pillow")
    for v, rank in zip(data["vertices"], (0, 1, 3, 2)):
        v["axis_rank"] = rank
    with pytest.raises(NonLocalConfiguration):
        remove_inessential_b_arc(tiling_from_dict(data), "e4")


# ---- stabilization / destabilization ----


def test_stabilize_along_ab_tile(ab_disc):
    out, move = stabilize_along_ab_tile(ab_disc, "T1")
    assert move.kind == "stabilize"
    assert move.sign == -1
    counts = census(out)
    assert (counts["V"], counts["S"], counts["negative"], counts["ledger"]) == (2, 1, 0, 2)
    assert all(tile.kind == "aa" for tile in out.tiles.values())
    assert validate_tiling(out).ok
    with pytest.raises(NotAbTile):
        stabilize_along_ab_tile(ab_disc, "T0")
    with pytest.raises(NotAbTile):
        stabilize_along_ab_tile(ab_disc, "T9")


def test_stabilize_turns_bb_tiles_at_the_vertex_into_ab():
    seen = 0
    for seed in range(300):
        t = grown(seed)
        for tid, tile in t.tiles.items():
            if tile_kind(tile.vertices) != "ab":
                continue
            w = next(x for k, x in enumerate(tile.vertices) if k % 2 == 1 and x is not None)
            bb_at_w = [
                oid
                for oid, other in t.tiles.items()
                if oid != tid and tile_kind(other.vertices) == "bb" and w in other.vertices
            ]
            if not bb_at_w:
                continue
            out, _ = stabilize_along_ab_tile(t, tid)
            assert validate_tiling(out).ok
            assert ledger_index(out) == ledger_index(t) + 1
            for oid in bb_at_w:
                assert tile_kind(out.tiles[oid].vertices) == "ab"
            seen += 1
            break
        if seen >= 5:
            break
    assert seen > 0


@pytest.mark.parametrize("vertex", ["a", "b"])
def test_destabilize_along_end_tile(two_vertex_disc, vertex):
    out, move = destabilize_along_end_tile(two_vertex_disc, vertex)
    assert move.kind == "destabilize"
    assert move.sign == 1
    assert out.is_radial_disc()
    assert ledger_index(out) == 1
    assert validate_tiling(out).ok


def test_destabilize_rejects(radial_disc, pillow_disc, ab_disc):
    with pytest.raises(NotEndTile):
        destabilize_along_end_tile(radial_disc, "v0")
    with pytest.raises(NotEndTile):
        destabilize_along_end_tile(pillow_disc, "p")  # valence 2
    with pytest.raises(NotEndTile):
        destabilize_along_end_tile(ab_disc, "w")  # negative
    with pytest.raises(NotEndTile):
        destabilize_along_end_tile(ab_disc, "x")


# ---- singular leaf graph ----


def test_singular_leaf_graph(two_vertex_disc, radial_disc, ab_disc):
    g = singular_leaf_graph(two_vertex_disc)
    assert g.number_of_nodes() == 2
    assert g.number_of_edges() == 1
    assert nx.is_tree(g)

    r = singular_leaf_graph(radial_disc)
    assert r.number_of_nodes() == 1
    assert r.number_of_edges() == 0

    with pytest.raises(NonAaTilesPresent):
        singular_leaf_graph(ab_disc)


# ---- grow ----


def test_grow_with_empty_script_is_the_seed():
    assert grow_disc(None, [], 0).is_radial_disc()


def test_grow_bounds_and_unknown_moves():
    with pytest.raises(ScriptTooLong):
        grow_disc(None, ["end_tile"] * 31, 0)
    assert len(grow_disc(None, ["end_tile"] * 31, 0, max_moves=31).tiles) == 31
    with pytest.raises(TilingError):
        grow_disc(None, ["twist"], 0)


def test_inverse_moves_not_applicable_on_radial_disc(radial_disc):
    rng = random.Random(0)
    assert insert_ab_tile(radial_disc, rng) is None
    assert insert_pillow(radial_disc, rng) is None
    assert validate_tiling(insert_end_tile(radial_disc, rng)).ok


def test_grown_tilings_are_valid_discs():
    for seed in range(100):
        t = grown(seed)
        report = validate_tiling(t)
        assert report.ok, f"seed {seed}: {report}"
        assert len(t.vertices) - len(t.singularities) == 1
        assert ledger_index(t) >= 1


def test_ab_tile_insertion_needs_room_on_the_axis(two_vertex_disc):
    for seed in range(20):
        assert insert_ab_tile(two_vertex_disc, random.Random(seed)) is None


def test_ab_tile_insertion_only_creates_essential_b_arcs():
    weights = {"end_tile": 1.0, "ab_tile": 1.0}
    for seed in range(500):
        rng = random.Random(seed)
        t = grow_disc(None, random_script(rng, rng.randint(0, 30), weights), seed)
        for eid, e in t.edges.items():
            if e.kind == "b":
                assert is_b_arc_essential(t, eid), f"seed {seed}: {eid}"


def test_each_inverse_move_keeps_validity():
    for seed in range(40):
        rng = random.Random(seed)
        t = Tiling.radial_disc()
        for _ in range(12):
            move = rng.choice((insert_end_tile, insert_ab_tile, insert_pillow))
            nxt = move(t, rng)
            if nxt is None:
                continue
            assert validate_tiling(nxt).ok
            t = nxt


def test_pillow_insertion_is_undone_by_removal(two_vertex_disc):
    rng = random.Random(1)
    with_pillow = insert_pillow(two_vertex_disc, rng)
    assert len(with_pillow.vertices) == 4
    arcs = [
        eid
        for eid, e in with_pillow.edges.items()
        if e.kind == "b" and not is_b_arc_essential(with_pillow, eid)
    ]
    removed = None
    for eid in arcs:
        try:
            removed = remove_inessential_b_arc(with_pillow, eid)
            break
        except (NonLocalConfiguration, SelfAdjacentTiles):
            continue
    assert removed is not None
    assert census(removed) == census(two_vertex_disc)


# ---- io ----


def test_tiling_document_round_trip(doc):
    data = doc("pillow")
    assert tiling_to_dict(tiling_from_dict(data)) == data


def test_tiling_document_errors(doc):
    data = doc("two_vertex")
    data["tiles"][0]["vertices"] = ["a", None, "b"]
    with pytest.raises(FormatError) as info:
        tiling_from_dict(data)
    assert info.value.field == "tiles[0].vertices"

    data = doc("two_vertex")
    del data["vertices"][0]["id"]
    with pytest.raises(FormatError) as info:
        tiling_from_dict(data)
    assert info.value.field == "vertices[0].id"

    with pytest.raises(FormatError):
        tiling_from_dict([])
