from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Protocol, Sequence

from ..braid.permutation import closure_component_count
from ..braid.word import BraidWord, exponent_sum
from ..errors import BraidMarkovError
from .alexander import alexander_report, determinant_at, self_linking
from .laurent import format_poly

logger = logging.getLogger(__name__)


@dataclass(slots=True)
class OracleResult:
    """Standard result returned by invariant oracles."""

    name: str
    value: Any
    text: str
    extras: Dict[str, Any] = field(default_factory=dict)


class IInvariantOracle(Protocol):
    """An invariant of the closed braid, computed exactly from one word."""

    name: str

    def compute(self, word: BraidWord) -> OracleResult:
        ...


class ComponentsOracle:
    name = "components"

    def compute(self, word: BraidWord) -> OracleResult:
        n = closure_component_count(word)
        return OracleResult(self.name, n, str(n))


class ExponentSumOracle:
    name = "exponent_sum"

    def compute(self, word: BraidWord) -> OracleResult:
        e = exponent_sum(word)
        return OracleResult(self.name, e, str(e))


class SelfLinkingOracle:
    name = "self_linking"

    def compute(self, word: BraidWord) -> OracleResult:
        if closure_component_count(word) != 1:
            return OracleResult(self.name, None, "n/a (link)")
        sl = self_linking(word)
        return OracleResult(self.name, sl, str(sl))


class AlexanderOracle:
    name = "alexander"

    def __init__(self, max_strands: int = 16) -> None:
        self.max_strands = max_strands

    def compute(self, word: BraidWord) -> OracleResult:
        if word.strands > self.max_strands:
            return OracleResult(self.name, None, f"skipped (> {self.max_strands} strands)")
        report = alexander_report(word)
        text = format_poly(report.polynomial)
        if not report.scaled:
            text += " (unscaled)"
        return OracleResult(
            self.name,
            report.polynomial,
            text,
            extras={"scaled": report.scaled, "components": report.components},
        )


class DeterminantOracle:
    name = "determinant"

    def __init__(self, max_strands: int = 16) -> None:
        self.max_strands = max_strands

    def compute(self, word: BraidWord) -> OracleResult:
        if word.strands > self.max_strands:
            return OracleResult(self.name, None, "skipped")
        value = determinant_at(word, -1)
        return OracleResult(self.name, value, str(value))


def build_oracles(names: Sequence[str], *, max_strands: int = 16) -> List[IInvariantOracle]:
    factories = {
        "components": ComponentsOracle,
        "exponent_sum": ExponentSumOracle,
        "self_linking": SelfLinkingOracle,
        "alexander": lambda: AlexanderOracle(max_strands),
        "determinant": lambda: DeterminantOracle(max_strands),
    }
    out: List[IInvariantOracle] = []
    for name in names:
        factory = factories.get(name)
        if factory is None:
            raise BraidMarkovError(f"unknown invariant oracle {name!r}")
        out.append(factory())
    return out


class OracleEngine:
    """Evaluates a configured list of oracles on one word."""

    def __init__(self, oracles: Optional[Sequence[IInvariantOracle]] = None) -> None:
        self._oracles = list(oracles) if oracles is not None else build_oracles(
            ["components", "exponent_sum", "self_linking", "alexander", "determinant"]
        )

    @property
    def names(self) -> List[str]:
        return [o.name for o in self._oracles]

    def evaluate(self, word: BraidWord) -> Dict[str, OracleResult]:
        out: Dict[str, OracleResult] = {}
        for oracle in self._oracles:
            out[oracle.name] = oracle.compute(word)
        logger.debug("evaluated %d oracles on %s", len(out), word)
        return out
