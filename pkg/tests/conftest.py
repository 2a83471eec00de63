from __future__ import annotations

import copy
from typing import Any, Dict

import pytest

from braidmarkov.foliation.io import tiling_from_dict
from braidmarkov.foliation.models import Tiling

# a:+ and b:+ on one aa tile; both a-edges glued to the tile itself
TWO_VERTEX_DISC: Dict[str, Any] = {
    "surface_kind": "disc",
    "chi": 1,
    "vertices": [
        {"id": "a", "sign": 1, "axis_rank": 0},
        {"id": "b", "sign": 1, "axis_rank": 1},
    ],
    "singularities": [{"id": "s0", "sign": 1, "theta_rank": 0}],
    "edges": [
        {"id": "e0", "kind": "a", "endpoints": ["a", None], "adjacent_tiles": ["T0", "T0"]},
        {"id": "e1", "kind": "a", "endpoints": ["b", None], "adjacent_tiles": ["T0", "T0"]},
    ],
    "tiles": [
        {"id": "T0", "kind": "aa", "singularity": "s0", "vertices": ["a", None, "b", None], "edges": ["e0", "e1", "e1", "e0"]},
    ],
}

# the two-vertex disc with an ab tile grafted at b; w is the only negative vertex
AB_DISC: Dict[str, Any] = {
    "surface_kind": "disc",
    "chi": 1,
    "vertices": [
        {"id": "a", "sign": 1, "axis_rank": 0},
        {"id": "b", "sign": 1, "axis_rank": 1},
        {"id": "w", "sign": -1, "axis_rank": 2},
    ],
    "singularities": [
        {"id": "s0", "sign": 1, "theta_rank": 0},
        {"id": "s1", "sign": -1, "theta_rank": 1},
    ],
    "edges": [
        {"id": "e0", "kind": "a", "endpoints": ["a", None], "adjacent_tiles": ["T0", "T0"]},
        {"id": "e1", "kind": "a", "endpoints": ["b", None], "adjacent_tiles": ["T1", "T0"]},
        {"id": "e2", "kind": "a", "endpoints": ["b", None], "adjacent_tiles": ["T0", "T1"]},
        {"id": "e3", "kind": "b", "endpoints": ["b", "w"], "adjacent_tiles": ["T1", "T1"]},
    ],
    "tiles": [
        {"id": "T0", "kind": "aa", "singularity": "s0", "vertices": ["a", None, "b", None], "edges": ["e0", "e1", "e2", "e0"]},
        {"id": "T1", "kind": "ab", "singularity": "s1", "vertices": ["b", "w", "b", None], "edges": ["e3", "e3", "e1", "e2"]},
    ],
}

# the two-vertex disc with an inessential pillow (p, w) inserted along e1
PILLOW_DISC: Dict[str, Any] = {
    "surface_kind": "disc",
    "chi": 1,
    "vertices": [
        {"id": "a", "sign": 1, "axis_rank": 0},
        {"id": "b", "sign": 1, "axis_rank": 1},
        {"id": "p", "sign": 1, "axis_rank": 2},
        {"id": "w", "sign": -1, "axis_rank": 3},
    ],
    "singularities": [
        {"id": "s0", "sign": 1, "theta_rank": 0},
        {"id": "s1", "sign": 1, "theta_rank": 1},
        {"id": "s2", "sign": -1, "theta_rank": 2},
    ],
    "edges": [
        {"id": "e0", "kind": "a", "endpoints": ["a", None], "adjacent_tiles": ["T0", "T0"]},
        {"id": "e1", "kind": "a", "endpoints": ["b", None], "adjacent_tiles": ["T1", "T0"]},
        {"id": "e2", "kind": "b", "endpoints": ["p", "w"], "adjacent_tiles": ["T1", "T2"]},
        {"id": "e3", "kind": "a", "endpoints": ["p", None], "adjacent_tiles": ["T2", "T1"]},
        {"id": "e4", "kind": "b", "endpoints": ["b", "w"], "adjacent_tiles": ["T2", "T1"]},
        {"id": "e5", "kind": "a", "endpoints": ["b", None], "adjacent_tiles": ["T0", "T2"]},
    ],
    "tiles": [
        {"id": "T0", "kind": "aa", "singularity": "s0", "vertices": ["a", None, "b", None], "edges": ["e0", "e1", "e5", "e0"]},
        {"id": "T1", "kind": "ab", "singularity": "s1", "vertices": ["p", "w", "b", None], "edges": ["e2", "e4", "e1", "e3"]},
        {"id": "T2", "kind": "ab", "singularity": "s2", "vertices": ["p", None, "b", "w"], "edges": ["e3", "e5", "e4", "e2"]},
    ],
}


@pytest.fixture
def radial_disc() -> Tiling:
    return Tiling.radial_disc()


@pytest.fixture
def two_vertex_disc() -> Tiling:
    return tiling_from_dict(copy.deepcopy(TWO_VERTEX_DISC))


@pytest.fixture
def ab_disc() -> Tiling:
    return tiling_from_dict(copy.deepcopy(AB_DISC))


@pytest.fixture
def pillow_disc() -> Tiling:
    return tiling_from_dict(copy.deepcopy(PILLOW_DISC))


@pytest.fixture
def doc():
    """Deep copy of one of the module-level tiling documents, for tests that edit them."""

    def _doc(name: str) -> Dict[str, Any]:
        return copy.deepcopy({"two_vertex": TWO_VERTEX_DISC, "ab": AB_DISC, "pillow": PILLOW_DISC}[name])

    return _doc
