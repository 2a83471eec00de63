from __future__ import annotations

import csv
import logging
import random
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

from .errors import BraidMarkovError
from .foliation.grow import grow_disc, random_script
from .foliation.simplify import simplify_disc

CSV_COLUMNS = (
    "case",
    "script_length",
    "initial_index",
    "negatives",
    "pillows_removed",
    "skipped_arcs",
    "stabilizations",
    "destabilizations",
    "certificate_length",
)


@dataclass(slots=True)
class BenchRow:
    case: int
    script_length: int
    initial_index: int
    negatives: int
    pillows_removed: int
    skipped_arcs: int
    stabilizations: int
    destabilizations: int
    certificate_length: int


@dataclass(slots=True)
class BenchResult:
    rows: List[BenchRow] = field(default_factory=list)
    failures: Dict[int, str] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures


def case_seed(seed: int, case: int) -> int:
    return seed * 1_000_003 + case


def run_case(case: int, profile: Dict[str, Any]) -> BenchRow:
    """Grow one disc from the case seed and simplify it back to the radial disc."""
    grow = profile["grow"]
    bench = profile["bench"]
    simplify = profile["simplify"]
    rng = random.Random(case_seed(int(bench["seed"]), case))
    upper = int(bench["max_moves"])
    length = rng.randint(min(int(bench.get("min_moves", 0)), upper), upper)
    script = random_script(rng, length, grow["weights"])
    tiling = grow_disc(
        None,
        script,
        rng.randrange(2**31),
        max_moves=int(bench["max_moves"]),
        max_run=int(grow["max_run"]),
    )
    result = simplify_disc(
        tiling,
        remove_inessential=bool(simplify["remove_inessential"]),
        validate_each_step=bool(simplify["validate_each_step"]),
    )
    return BenchRow(
        case=case,
        script_length=len(script),
        initial_index=result.initial_index,
        negatives=result.initial_negatives,
        pillows_removed=result.pillows_removed,
        skipped_arcs=len(result.skipped_arcs),
        stabilizations=result.stabilizations,
        destabilizations=result.destabilizations,
        certificate_length=len(result.certificate),
    )


def _run_case_safe(case: int, profile: Dict[str, Any]) -> Tuple[int, Optional[BenchRow], Optional[str]]:
    try:
        return case, run_case(case, profile), None
    except BraidMarkovError as exc:
        return case, None, str(exc)


class BenchRunner:
    def __init__(self, profile: Dict[str, Any]) -> None:
        self._profile = profile
        self._logger = logging.getLogger(__name__)

    @property
    def cases(self) -> int:
        return int(self._profile["bench"]["cases"])

    @property
    def workers(self) -> int:
        return int(self._profile["bench"].get("workers", 1))

    def run(self) -> BenchResult:
        self._logger.info(
            "bench start: %d cases, seed=%s, max_moves=%s, workers=%d",
            self.cases,
            self._profile["bench"]["seed"],
            self._profile["bench"]["max_moves"],
            self.workers,
        )
        result = BenchResult()
        if self.workers <= 1:
            for case in range(self.cases):
                self._collect(result, *_run_case_safe(case, self._profile))
        else:
            with ProcessPoolExecutor(max_workers=self.workers) as pool:
                futures = {pool.submit(_run_case_safe, case, self._profile): case for case in range(self.cases)}
                for fut in as_completed(futures):
                    try:
                        self._collect(result, *fut.result())
                    except Exception as exc:
                        self._logger.exception("bench case %d crashed", futures[fut])
                        result.failures[futures[fut]] = str(exc)
        result.rows.sort(key=lambda r: r.case)
        self._logger.info("bench done: %d rows, %d failures", len(result.rows), len(result.failures))
        return result

    def _collect(self, result: BenchResult, case: int, row: Optional[BenchRow], error: Optional[str]) -> None:
        if row is not None:
            result.rows.append(row)
            return
        self._logger.error("bench case %d failed: %s", case, error)
        result.failures[case] = error or "unknown error"


def write_csv(rows: List[BenchRow], path: Union[str, Path]) -> None:
    with Path(path).open("w", newline="", encoding="utf-8") as fh:
        writer = csv.DictWriter(fh, fieldnames=list(CSV_COLUMNS))
        writer.writeheader()
        for row in rows:
            writer.writerow(asdict(row))
