from __future__ import annotations

import argparse
import json
import logging
import random
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

import yaml
from pydantic import ValidationError

from .bench import CSV_COLUMNS, BenchRunner, write_csv
from .braid.garside import garside_form
from .braid.text import format_word, parse_word
from .certify.io import certificate_to_dict, dump_certificate, load_certificate, move_from_dict
from .certify.registry import apply_move
from .certify.verify import verify_equivalence
from .config import Settings, load_settings
from .errors import BraidMarkovError, FormatError
from .foliation.grow import grow_disc, random_script
from .foliation.io import dump_tiling, load_tiling, tiling_to_dict
from .foliation.profile_loader import build_grow_profile
from .foliation.simplify import simplify_disc
from .foliation.topology import census
from .invariants.oracles import OracleEngine, build_oracles
from .unlink import dump_switch_certificate, green_over_red_count, load_diagram, split_by_switches

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_REJECT = 1
EXIT_MALFORMED = 2


def _emit(args: argparse.Namespace, payload: Dict[str, Any], lines: Sequence[str]) -> None:
    if args.json:
        print(json.dumps(payload, ensure_ascii=False, indent=2))
    else:
        for line in lines:
            print(line)


def _read_json_arg(text: str, field: str) -> Any:
    """Inline JSON, or the path of a JSON file."""
    source = text
    if not text.lstrip().startswith(("{", "[")):
        try:
            source = Path(text).read_text(encoding="utf-8")
        except OSError as exc:
            raise FormatError(field, f"cannot read {text}: {exc.strerror}") from exc
    try:
        return json.loads(source)
    except json.JSONDecodeError as exc:
        raise FormatError(field, f"invalid JSON at line {exc.lineno}: {exc.msg}") from exc


def _ledger_text(ledger: Sequence[int]) -> str:
    return " → ".join(str(x) for x in ledger) if len(ledger) > 1 else f"{ledger[0]} → {ledger[0]}"


def cmd_normalize(args: argparse.Namespace, settings: Settings) -> int:
    word = parse_word(args.word)
    form = garside_form(word)
    nf = form.to_word()
    _emit(
        args,
        {
            "word": format_word(word),
            "normal_form": format_word(nf),
            "delta_power": form.delta_power,
            "factors": len(form.factors),
        },
        [format_word(nf)],
    )
    return EXIT_OK


def cmd_invariants(args: argparse.Namespace, settings: Settings) -> int:
    word = parse_word(args.word)
    engine = OracleEngine(build_oracles(settings.invariants.oracles, max_strands=settings.invariants.max_strands))
    results = engine.evaluate(word)
    payload = {"word": format_word(word)}
    payload.update({name: r.text for name, r in results.items()})
    lines = [format_word(word)] + [f"{name}: {r.text}" for name, r in results.items()]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_move(args: argparse.Namespace, settings: Settings) -> int:
    word = parse_word(args.word)
    move = move_from_dict(_read_json_arg(args.move, "move"))
    out = apply_move(word, move)
    _emit(args, {"word": format_word(out)}, [format_word(out)])
    return EXIT_OK


def cmd_simplify_disc(args: argparse.Namespace, settings: Settings) -> int:
    tiling = load_tiling(args.tiling)
    result = simplify_disc(
        tiling,
        remove_inessential=settings.simplify.remove_inessential,
        validate_each_step=settings.simplify.validate_each_step,
    )
    ledger = result.ledger_trace()
    if args.output:
        dump_certificate(result.certificate, args.output)
        logger.info("certificate written to %s", args.output)
    payload = {
        "certificate": certificate_to_dict(result.certificate),
        "ledger": ledger,
        "pillows_removed": result.pillows_removed,
        "stabilizations": result.stabilizations,
        "destabilizations": result.destabilizations,
        "skipped_arcs": result.skipped_arcs,
        "trace": [
            {"action": s.action, "target": s.target, "sign": s.sign, "census": s.census} for s in result.trace
        ],
    }
    lines = [
        f"ledger: {_ledger_text(ledger)}",
        f"moves: {len(result.certificate)} "
        f"(stabilize {result.stabilizations}, destabilize {result.destabilizations}, "
        f"pillows removed {result.pillows_removed})",
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, settings: Settings) -> int:
    a = parse_word(args.source)
    b = parse_word(args.target)
    cert = load_certificate(args.certificate)
    report = verify_equivalence(a, b, cert, max_strands=settings.invariants.max_strands)
    lines = [
        f"verdict: {report.verdict}",
        f"reason: {report.reason}",
        f"ledger: {_ledger_text(report.ledger)}",
    ]
    if report.endpoint is not None:
        lines.append(f"endpoint: {format_word(report.endpoint)}")
    if report.alarm:
        lines.append(f"alarm: {report.alarm}")
    _emit(args, report.to_dict(), lines)
    return EXIT_OK if report.accepted else EXIT_REJECT


def cmd_unlink(args: argparse.Namespace, settings: Settings) -> int:
    diagram = load_diagram(args.diagram)
    before = green_over_red_count(diagram)
    _, cert = split_by_switches(diagram)
    if args.output:
        dump_switch_certificate(cert, args.output)
        logger.info("switch certificate written to %s", args.output)
    _emit(
        args,
        {"green_over_red": before, "switched": list(cert.switched), "summands": cert.summands},
        [f"green over red: {before}", "switched: " + (" ".join(cert.switched) or "(none)")],
    )
    return EXIT_OK


def cmd_grow(args: argparse.Namespace, settings: Settings) -> int:
    max_moves = args.max_moves if args.max_moves is not None else settings.grow.max_moves
    seed = args.seed if args.seed is not None else settings.bench.seed
    rng = random.Random(seed)
    script = random_script(rng, max_moves, settings.grow.weights)
    tiling = grow_disc(None, script, seed, max_moves=max_moves, max_run=settings.grow.max_run)
    counts = census(tiling)
    if not args.output:
        # the tiling document itself is the output
        print(json.dumps(tiling_to_dict(tiling), indent=2))
        return EXIT_OK
    dump_tiling(tiling, args.output)
    logger.info("tiling written to %s", args.output)
    _emit(args, {"script": script, "census": counts}, [f"script: {' '.join(script) or '(empty)'}", f"census: {counts}"])
    return EXIT_OK


def cmd_bench(args: argparse.Namespace, settings: Settings) -> int:
    overrides: Dict[str, Any] = {"bench": {}}
    for key in ("seed", "max_moves", "cases", "workers"):
        value = getattr(args, key)
        if value is not None:
            overrides["bench"][key] = value
    profile = build_grow_profile(settings, args.profile, overrides)
    result = BenchRunner(profile).run()
    if args.csv:
        write_csv(result.rows, args.csv)
        logger.info("bench table written to %s", args.csv)
    elif not args.json:
        print(",".join(CSV_COLUMNS))
        for row in result.rows:
            print(",".join(str(getattr(row, c)) for c in CSV_COLUMNS))
    if args.json:
        print(
            json.dumps(
                {
                    "rows": [{c: getattr(r, c) for c in CSV_COLUMNS} for r in result.rows],
                    "failures": {str(k): v for k, v in result.failures.items()},
                },
                indent=2,
            )
        )
    for case, error in sorted(result.failures.items()):
        print(f"case {case}: {error}", file=sys.stderr)
    return EXIT_OK if result.ok else EXIT_REJECT


def build_parser() -> argparse.ArgumentParser:
    # global flags are accepted before or after the verb
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    common.add_argument("--config", default=argparse.SUPPRESS, help="path to config.yaml")

    parser = argparse.ArgumentParser(prog="braidmarkov", description="Markov-move engine for closed braids")
    parser.add_argument("--json", action="store_true", default=False, help="machine-readable output")
    parser.add_argument("--config", default=None, help="path to config.yaml")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("normalize", parents=[common], help="print the Garside normal form")
    p.add_argument("word")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("invariants", parents=[common], help="print closure invariants")
    p.add_argument("word")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("move", parents=[common], help="apply one Markov move")
    p.add_argument("word")
    p.add_argument("move", help="move JSON, inline or a file path")
    p.set_defaults(func=cmd_move)

    p = sub.add_parser("simplify-disc", parents=[common], help="reduce a disc tiling, emit its certificate")
    p.add_argument("tiling")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_simplify_disc)

    p = sub.add_parser("verify", parents=[common], help="check a move certificate")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("certificate")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("unlink", parents=[common], help="switch green-over-red crossings")
    p.add_argument("diagram")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_unlink)

    p = sub.add_parser("grow", parents=[common], help="synthesize a disc tiling")
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--max-moves", type=int, default=None)
    p.set_defaults(func=cmd_grow)

    p = sub.add_parser("bench", parents=[common], help="grow/simplify batch table")
    p.add_argument("--csv", default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--max-moves", type=int, default=None)
    p.add_argument("--cases", type=int, default=None)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--profile", default=None, help="configs/bench/<profile>.yaml")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        settings = load_settings(args.config)
    except ValidationError as exc:
        print(f"config: {exc.errors()[0]['msg']}", file=sys.stderr)
        return EXIT_MALFORMED
    except yaml.YAMLError as exc:
        print(f"config: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    logging.basicConfig(
        level=getattr(logging, settings.app.log_level.upper(), logging.INFO),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args, settings)
    except FormatError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_MALFORMED
    except BraidMarkovError as exc:
        print(f"{args.verb}: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except OSError as exc:
        print(f"{exc.filename or args.verb}: {exc.strerror}", file=sys.stderr)
        return EXIT_MALFORMED


if __name__ == "__main__":
    raise SystemExit(main())
