from __future__ import annotations

import logging
from typing import Any, Dict

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import __version__
from .braid.garside import garside_form
from .braid.text import format_word, parse_word
from .certify.io import certificate_from_dict, certificate_to_dict, move_from_dict
from .certify.registry import apply_move, get_move, list_move_kinds
from .certify.verify import verify_equivalence
from .config import load_settings
from .errors import BraidMarkovError
from .foliation.io import tiling_from_dict
from .foliation.simplify import simplify_disc
from .invariants.oracles import OracleEngine, build_oracles
from .unlink import diagram_from_dict, diagram_to_dict, green_over_red_count, split_by_switches


logger = logging.getLogger(__name__)

settings = load_settings()
app = FastAPI(title="braid-markov", version=__version__, root_path=settings.api.base_path or "")
app.add_middleware(
    CORSMiddleware,
    allow_origins=settings.api.cors_allow_origins,
    allow_methods=["*"],
    allow_headers=["*"],
)

_engine = OracleEngine(build_oracles(settings.invariants.oracles, max_strands=settings.invariants.max_strands))


class WordRequest(BaseModel):
    word: str


class MoveRequest(BaseModel):
    word: str
    move: Dict[str, Any]


class VerifyRequest(BaseModel):
    source: str
    target: str
    certificate: Dict[str, Any]


class TilingRequest(BaseModel):
    tiling: Dict[str, Any]


class DiagramRequest(BaseModel):
    diagram: Dict[str, Any] = Field(default_factory=dict)


@app.exception_handler(BraidMarkovError)
async def _domain_error(request: Request, exc: BraidMarkovError) -> JSONResponse:
    logger.info("%s %s rejected: %s", request.method, request.url.path, exc)
    return JSONResponse(status_code=400, content={"detail": str(exc)})


@app.get("/api/health")
async def health() -> Dict[str, Any]:
    return {"status": "ok", "version": __version__}


@app.get("/api/moves")
async def moves() -> Dict[str, Any]:
    items = []
    for kind in list_move_kinds():
        reg = get_move(kind)
        items.append({"kind": kind, "ledger_delta": reg.ledger_delta, "description": reg.description})
    return {"items": items}


@app.post("/api/normalize")
def normalize(req: WordRequest) -> Dict[str, Any]:
    word = parse_word(req.word)
    form = garside_form(word)
    return {
        "word": format_word(word),
        "normal_form": format_word(form.to_word()),
        "delta_power": form.delta_power,
        "factors": len(form.factors),
    }


@app.post("/api/invariants")
def invariants(req: WordRequest) -> Dict[str, Any]:
    word = parse_word(req.word)
    results = _engine.evaluate(word)
    return {
        "word": format_word(word),
        "invariants": {name: {"text": r.text, **r.extras} for name, r in results.items()},
    }


@app.post("/api/move")
def move(req: MoveRequest) -> Dict[str, Any]:
    word = parse_word(req.word)
    return {"word": format_word(apply_move(word, move_from_dict(req.move)))}


@app.post("/api/verify")
def verify(req: VerifyRequest) -> Dict[str, Any]:
    report = verify_equivalence(
        parse_word(req.source),
        parse_word(req.target),
        certificate_from_dict(req.certificate),
        max_strands=settings.invariants.max_strands,
    )
    return report.to_dict()


@app.post("/api/simplify-disc")
def simplify(req: TilingRequest) -> Dict[str, Any]:
    try:
        result = simplify_disc(
            tiling_from_dict(req.tiling),
            remove_inessential=settings.simplify.remove_inessential,
            validate_each_step=settings.simplify.validate_each_step,
        )
    except BraidMarkovError:
        raise
    except Exception:
        logger.exception("simplify-disc failed")
        raise
    return {
        "certificate": certificate_to_dict(result.certificate),
        "ledger": result.ledger_trace(),
        "trace": [{"action": s.action, "target": s.target, "sign": s.sign, "census": s.census} for s in result.trace],
        "skipped_arcs": result.skipped_arcs,
    }


@app.post("/api/unlink")
def unlink(req: DiagramRequest) -> Dict[str, Any]:
    diagram = diagram_from_dict(req.diagram)
    before = green_over_red_count(diagram)
    split, cert = split_by_switches(diagram)
    return {
        "diagram": diagram_to_dict(split),
        "certificate": {"switched": list(cert.switched), "summands": cert.summands},
        "green_over_red": before,
    }
