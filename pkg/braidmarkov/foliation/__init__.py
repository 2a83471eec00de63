from .models import FEdge, FSingularity, FTile, FVertex, Tiling, ValidationReport, Violation
from .topology import (
    boundary_cycles,
    census,
    ledger_index,
    tile_kind,
    valence,
    vertex_rotation,
)
from .validate import validate_tiling
from .rewrite import (
    destabilize_along_end_tile,
    is_b_arc_essential,
    remove_inessential_b_arc,
    stabilize_along_ab_tile,
)
from .graph import singular_leaf_graph
from .simplify import SimplifyResult, SimplifyStep, simplify_disc
from .grow import INVERSE_MOVES, grow_disc, insert_ab_tile, insert_end_tile, insert_pillow, random_script
from .io import dump_tiling, load_tiling, tiling_from_dict, tiling_to_dict

__all__ = [
    "FEdge",
    "FSingularity",
    "FTile",
    "FVertex",
    "INVERSE_MOVES",
    "SimplifyResult",
    "SimplifyStep",
    "Tiling",
    "ValidationReport",
    "Violation",
    "boundary_cycles",
    "census",
    "destabilize_along_end_tile",
    "dump_tiling",
    "grow_disc",
    "insert_ab_tile",
    "insert_end_tile",
    "insert_pillow",
    "is_b_arc_essential",
    "ledger_index",
    "load_tiling",
    "random_script",
    "remove_inessential_b_arc",
    "simplify_disc",
    "singular_leaf_graph",
    "stabilize_along_ab_tile",
    "tile_kind",
    "tiling_from_dict",
    "tiling_to_dict",
    "valence",
    "validate_tiling",
    "vertex_rotation",
]
