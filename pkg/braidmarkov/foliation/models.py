from __future__ import annotations

import copy
from dataclasses import dataclass, field
from typing import Dict, List, Optional

# Boundary corners and a-edge ends are stored as None.
BOUNDARY = None

DEFAULT_CHI = {"disc": 1, "annulus": 0}
DEFAULT_BOUNDARY_COUNT = {"disc": 1, "annulus": 2}


@dataclass(slots=True)
class FVertex:
    id: str
    sign: int
    axis_rank: int


@dataclass(slots=True)
class FSingularity:
    id: str
    sign: int
    theta_rank: int


@dataclass(slots=True)
class FEdge:
    id: str
    kind: str  # a | b
    endpoints: List[Optional[str]]  # [positive vertex, negative vertex or None]
    adjacent_tiles: List[str]  # [tile of the even slot, tile of the odd slot]


@dataclass(slots=True)
class FTile:
    id: str
    kind: str  # aa | ab | bb
    singularity: str
    vertices: List[Optional[str]]  # corners c0..c3; even corners positive
    edges: List[str]  # slot i joins c_i and c_{i+1}


@dataclass(slots=True)
class Tiling:
    vertices: Dict[str, FVertex] = field(default_factory=dict)
    singularities: Dict[str, FSingularity] = field(default_factory=dict)
    edges: Dict[str, FEdge] = field(default_factory=dict)
    tiles: Dict[str, FTile] = field(default_factory=dict)
    surface_kind: str = "disc"
    chi: int = 1
    boundary_count: Optional[int] = None

    @classmethod
    def radial_disc(cls, vertex_id: str = "v0") -> "Tiling":
        return cls(vertices={vertex_id: FVertex(vertex_id, 1, 0)})

    def copy(self) -> "Tiling":
        return copy.deepcopy(self)

    def expected_boundary_count(self) -> Optional[int]:
        if self.boundary_count is not None:
            return self.boundary_count
        return DEFAULT_BOUNDARY_COUNT.get(self.surface_kind)

    def is_radial_disc(self) -> bool:
        return (
            self.surface_kind == "disc"
            and len(self.vertices) == 1
            and not self.singularities
            and not self.tiles
        )


@dataclass(slots=True)
class Violation:
    code: str
    message: str
    ids: List[str] = field(default_factory=list)

    def __str__(self) -> str:
        where = f" [{', '.join(self.ids)}]" if self.ids else ""
        return f"{self.code}: {self.message}{where}"


@dataclass(slots=True)
class ValidationReport:
    violations: List[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, code: str, message: str, *ids: Optional[str]) -> None:
        self.violations.append(Violation(code, message, [i for i in ids if i is not None]))

    def codes(self) -> List[str]:
        return [v.code for v in self.violations]

    def __str__(self) -> str:
        if self.ok:
            return "valid"
        return "; ".join(str(v) for v in self.violations)
