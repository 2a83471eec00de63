from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from ..braid.garside import words_equal
from ..braid.word import BraidWord
from ..errors import CertificateError, InvalidTiling
from ..foliation.models import Tiling
from ..foliation.simplify import simplify_disc
from ..foliation.validate import validate_tiling
from ..invariants.laurent import format_poly
from ..invariants.oracles import OracleEngine, build_oracles
from ..models import MoveCertificate
from .apply import apply_certificate, ledger_trace

logger = logging.getLogger(__name__)


@dataclass(slots=True)
class VerificationReport:
    replayed: bool
    endpoint: Optional[BraidWord]
    words_equal: bool
    components: Tuple[int, int]
    # (source, target) polynomials as text; None unless both closures are knots
    alexander: Optional[Tuple[str, str]]
    ledger: List[int] = field(default_factory=list)
    alarm: Optional[str] = None
    verdict: str = "reject"
    reason: str = ""

    @property
    def accepted(self) -> bool:
        return self.verdict == "accept"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "replayed": self.replayed,
            "endpoint": str(self.endpoint) if self.endpoint is not None else None,
            "words_equal": self.words_equal,
            "components": list(self.components),
            "alexander": list(self.alexander) if self.alexander is not None else None,
            "ledger": list(self.ledger),
            "alarm": self.alarm,
            "verdict": self.verdict,
            "reason": self.reason,
        }


def verify_equivalence(
    a: BraidWord,
    b: BraidWord,
    cert: MoveCertificate,
    *,
    max_strands: int = 16,
) -> VerificationReport:
    """Decide whether cert carries a to a word equal to b; never raises on bad input."""
    try:
        ledger = ledger_trace(cert)
    except CertificateError:
        ledger = [cert.initial_index]

    engine = OracleEngine(build_oracles(["components", "alexander"], max_strands=max_strands))
    inv_a = engine.evaluate(a)
    inv_b = engine.evaluate(b)
    components = (int(inv_a["components"].value), int(inv_b["components"].value))
    alexander: Optional[Tuple[str, str]] = None
    if components == (1, 1):
        va, vb = inv_a["alexander"].value, inv_b["alexander"].value
        if va is not None and vb is not None:
            alexander = (format_poly(va), format_poly(vb))

    report = VerificationReport(
        replayed=False,
        endpoint=None,
        words_equal=False,
        components=components,
        alexander=alexander,
        ledger=ledger,
    )

    try:
        endpoint = apply_certificate(a, cert)
    except CertificateError as exc:
        report.reason = str(exc)
        return report
    report.replayed = True
    report.endpoint = endpoint

    if endpoint.strands != b.strands:
        report.reason = f"endpoint has {endpoint.strands} strands, target has {b.strands}"
        return report
    report.words_equal = words_equal(endpoint, b)
    if not report.words_equal:
        report.reason = "endpoint and target differ in normal form"
        return report

    if components[0] != components[1]:
        report.alarm = f"component counts differ: {components[0]} vs {components[1]}"
    elif alexander is not None and alexander[0] != alexander[1]:
        report.alarm = f"Alexander polynomials differ: {alexander[0]} vs {alexander[1]}"
    if report.alarm is not None:
        logger.error("internal-consistency alarm for %s -> %s: %s", a, b, report.alarm)
        report.reason = "internal-consistency alarm"
        return report

    report.verdict = "accept"
    report.reason = "certified chain ends at the target"
    return report


def certificate_from_disc(
    t: Tiling,
    *,
    remove_inessential: bool = True,
    validate_each_step: bool = True,
) -> MoveCertificate:
    report = validate_tiling(t)
    if not report.ok:
        raise InvalidTiling(report)
    result = simplify_disc(
        t,
        remove_inessential=remove_inessential,
        validate_each_step=validate_each_step,
    )
    return result.certificate
