"""Command-line front end.

Exit codes: 0 success (causal: unrelated), 10 causal: related,
2 parse/input error, 3 resource limit exceeded, 1 verify failures.

Results can be cached as JSON files keyed by diagram hash, convention tag
and code version; set ``--cache-dir`` or the SKYLINK_CACHE_DIR environment
variable.  Cached entries from a different convention or version are
recomputed, never compared.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from . import __version__
from .cube import (DEFAULT_CROSSING_LIMIT, build_akh_complex,
                   build_kh_complex, dump_complex)
from .causality import decide_akh, decide_kh
from .diagrams import (annular_to_planar, braid_closure, parse_braid,
                       parse_pd)
from .errors import (DegenerateInputError, GenericityError,
                     HypothesisViolationError, ParseError,
                     ResourceLimitError)
from .invariants import CONVENTION, GradedDims, akh, diagram_hash, kh
from .skies import DEFAULT_DELTA, DEFAULT_EPSILON, Event, end_to_end
from .verify import run_all

EXIT_OK = 0
EXIT_RELATED = 10
EXIT_PARSE = 2
EXIT_RESOURCE = 3
EXIT_VERIFY_FAILED = 1

CACHE_ENV = "SKYLINK_CACHE_DIR"


@dataclass
class RunConfig:
    """Run-wide settings assembled from flags and the environment."""

    crossing_limit: int = DEFAULT_CROSSING_LIMIT
    epsilon: float = DEFAULT_EPSILON
    delta: float = DEFAULT_DELTA
    route: str = "akh"
    output: str = "json"
    cache_dir: Optional[Path] = None
    seed: int = 0

    def __post_init__(self):
        if self.crossing_limit < 1:
            raise ParseError("crossing limit must be >= 1")
        if self.epsilon <= 0 or self.delta <= 0:
            raise ParseError("epsilon and delta must be positive")


# ---------------------------------------------------------------------------
# cache


def _cache_path(cache_dir: Path, kind: str, diagram_id: str) -> Path:
    key = hashlib.sha256(
        f"{kind}|{diagram_id}|{CONVENTION}|{__version__}".encode()).hexdigest()
    return cache_dir / f"{kind}-{key[:32]}.json"


def _cache_get(cache_dir: Optional[Path], kind: str,
               diagram_id: str) -> Optional[GradedDims]:
    if cache_dir is None:
        return None
    path = _cache_path(cache_dir, kind, diagram_id)
    if not path.exists():
        return None
    try:
        payload = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError):
        return None
    if (payload.get("convention") != CONVENTION
            or payload.get("code_version") != __version__
            or payload.get("diagram") != diagram_id):
        return None
    return GradedDims.from_entries(payload["dims"], CONVENTION, diagram_id)


def _cache_put(cache_dir: Optional[Path], kind: str, diagram_id: str,
               dims: GradedDims) -> None:
    if cache_dir is None:
        return
    cache_dir.mkdir(parents=True, exist_ok=True)
    payload = {
        "kind": kind,
        "convention": CONVENTION,
        "code_version": __version__,
        "diagram": diagram_id,
        "dims": dims.to_entries(),
    }
    path = _cache_path(cache_dir, kind, diagram_id)
    path.write_text(json.dumps(payload, sort_keys=True))


# ---------------------------------------------------------------------------
# rendering


def _emit_dims(dims: GradedDims, output: str) -> None:
    if output == "json":
        print(json.dumps(dims.to_entries(), sort_keys=True))
        return
    for entry in dims.to_entries():
        k = "" if entry["k"] is None else f" k={entry['k']}"
        print(f"i={entry['i']} j={entry['j']}{k} dim={entry['dim']}")


def _emit_verdict(payload: dict, output: str) -> None:
    if output == "json":
        print(json.dumps(payload, sort_keys=True))
        return
    related = "related" if payload["related"] else "unrelated"
    extra = f" via {payload['route']}"
    if payload.get("model") not in (None, "none"):
        extra += f" (model {payload['model']})"
    print(related + extra)


# ---------------------------------------------------------------------------
# event parsing


def parse_event(text: str) -> Event:
    parts = text.split(",")
    if len(parts) != 3:
        raise ParseError(f"event {text!r} must be 'px,py,t'")
    try:
        px, py, t = (float(p) for p in parts)
    except ValueError:
        raise ParseError(f"non-numeric coordinate in event {text!r}") from None
    return Event(px, py, t)


def parse_event_pair(text: str):
    halves = text.split(";")
    if len(halves) != 2:
        raise ParseError(f"event pair {text!r} must be 'px,py,t;qx,qy,s'")
    return parse_event(halves[0]), parse_event(halves[1])


# ---------------------------------------------------------------------------
# subcommands


def _config_from(args) -> RunConfig:
    cache = getattr(args, "cache_dir", None) or os.environ.get(CACHE_ENV)
    return RunConfig(
        crossing_limit=getattr(args, "limit", DEFAULT_CROSSING_LIMIT),
        epsilon=getattr(args, "epsilon", DEFAULT_EPSILON),
        delta=getattr(args, "delta", DEFAULT_DELTA),
        route=getattr(args, "route", "akh"),
        output=getattr(args, "output", "json"),
        cache_dir=Path(cache) if cache else None,
        seed=getattr(args, "seed", 0),
    )


def cmd_kh(args) -> int:
    cfg = _config_from(args)
    if args.pd is not None:
        diagram = parse_pd(args.pd)
    else:
        if args.strands is None:
            raise ParseError("--braid requires --strands")
        diagram = annular_to_planar(
            braid_closure(parse_braid(args.braid, args.strands)))
    if args.dump_complex:
        print(dump_complex(build_kh_complex(diagram, cfg.crossing_limit)),
              file=sys.stderr)
    diagram_id = diagram_hash(diagram)
    dims = _cache_get(cfg.cache_dir, "kh", diagram_id)
    if dims is None:
        dims = kh(diagram, cfg.crossing_limit)
        _cache_put(cfg.cache_dir, "kh", diagram_id, dims)
    _emit_dims(dims, cfg.output)
    return EXIT_OK


def cmd_akh(args) -> int:
    cfg = _config_from(args)
    if args.strands is None:
        raise ParseError("--braid requires --strands")
    diagram = braid_closure(parse_braid(args.braid, args.strands))
    if args.dump_complex:
        print(dump_complex(build_akh_complex(diagram, cfg.crossing_limit)),
              file=sys.stderr)
    diagram_id = diagram_hash(diagram)
    dims = _cache_get(cfg.cache_dir, "akh", diagram_id)
    if dims is None:
        dims = akh(diagram, cfg.crossing_limit)
        _cache_put(cfg.cache_dir, "akh", diagram_id, dims)
    _emit_dims(dims, cfg.output)
    return EXIT_OK


def _decide_pair_json(x: Event, y: Event, route: str, epsilon: float,
                      delta: float, limit: int) -> dict:
    if route == "both":
        rep_a = end_to_end(x, y, "akh", epsilon=epsilon, delta=delta,
                           crossing_limit=limit)
        rep_k = end_to_end(x, y, "kh", epsilon=epsilon, delta=delta,
                           crossing_limit=limit)
        payload = rep_a.to_json_dict()
        payload["kh_route"] = rep_k.verdict.to_json_dict()
        payload["routes_agree"] = rep_a.verdict.related == rep_k.verdict.related
        return payload
    return end_to_end(x, y, route, epsilon=epsilon, delta=delta,
                      crossing_limit=limit).to_json_dict()


def _batch_worker(job) -> dict:
    line, route, epsilon, delta, limit = job
    x, y = parse_event_pair(line)
    return _decide_pair_json(x, y, route, epsilon, delta, limit)


def cmd_causal(args) -> int:
    cfg = _config_from(args)
    if args.batch is not None:
        lines = [ln.strip() for ln in Path(args.batch).read_text().splitlines()
                 if ln.strip()]
        jobs = [(ln, cfg.route, cfg.epsilon, cfg.delta, cfg.crossing_limit)
                for ln in lines]
        if args.jobs > 1:
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                results = list(pool.map(_batch_worker, jobs))
        else:
            results = [_batch_worker(j) for j in jobs]
        for payload in results:
            print(json.dumps(payload, sort_keys=True))
        return EXIT_OK

    if args.events is not None:
        x, y = parse_event_pair(args.events)
        payload = _decide_pair_json(x, y, cfg.route, cfg.epsilon, cfg.delta,
                                    cfg.crossing_limit)
        _emit_verdict(payload, cfg.output)
        return EXIT_RELATED if payload["related"] else EXIT_OK

    if args.strands is None:
        raise ParseError("--braid requires --strands")
    pair = braid_closure(parse_braid(args.braid, args.strands))
    route = cfg.route if cfg.route != "both" else "akh"
    if cfg.route == "both":
        va = decide_akh(pair, cfg.crossing_limit)
        vk = decide_kh(pair, cfg.crossing_limit)
        payload = va.to_json_dict()
        payload["kh_route"] = vk.to_json_dict()
        payload["routes_agree"] = va.related == vk.related
    else:
        verdict = decide_akh(pair, cfg.crossing_limit) if route == "akh" \
            else decide_kh(pair, cfg.crossing_limit)
        payload = verdict.to_json_dict()
    _emit_verdict(payload, cfg.output)
    return EXIT_RELATED if payload["related"] else EXIT_OK


def cmd_verify(args) -> int:
    reports = run_all(suite=args.suite, pairs=args.pairs, seed=args.seed,
                      max_crossings=args.max_crossings,
                      crossing_limit=args.limit, words=args.words)
    ok = all(not r["failures"] for r in reports)
    print(json.dumps({"ok": ok, "reports": reports}, sort_keys=True))
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


# ---------------------------------------------------------------------------
# argument parsing


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--limit", type=int, default=DEFAULT_CROSSING_LIMIT,
                   help="crossing-count limit (default %(default)s)")
    p.add_argument("--output", choices=("json", "text"), default="json")
    p.add_argument("--cache-dir", default=None,
                   help=f"result cache directory (or ${CACHE_ENV})")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skylink",
        description="Causality of spacetime event pairs via link homology "
                    "of their skies.")
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_kh = sub.add_parser("kh", help="Khovanov homology dimensions")
    src = p_kh.add_mutually_exclusive_group(required=True)
    src.add_argument("--pd", help="PD code, e.g. 'X(1,3,2,4) X(3,1,4,2)'")
    src.add_argument("--braid", help="braid word, closure is used")
    p_kh.add_argument("--strands", type=int, default=None)
    p_kh.add_argument("--dump-complex", action="store_true",
                      help="dump the chain complex to stderr")
    _add_common(p_kh)
    p_kh.set_defaults(func=cmd_kh)

    p_akh = sub.add_parser("akh", help="annular homology of a braid closure")
    p_akh.add_argument("--braid", required=True)
    p_akh.add_argument("--strands", type=int, default=None)
    p_akh.add_argument("--dump-complex", action="store_true",
                       help="dump the chain complex to stderr")
    _add_common(p_akh)
    p_akh.set_defaults(func=cmd_akh)

    p_c = sub.add_parser("causal", help="decide causal relation")
    src = p_c.add_mutually_exclusive_group(required=True)
    src.add_argument("--events", help="'px,py,t;qx,qy,s'")
    src.add_argument("--braid", help="sky-pair braid word")
    src.add_argument("--batch", help="file with one event pair per line")
    p_c.add_argument("--strands", type=int, default=None)
    p_c.add_argument("--route", choices=("akh", "kh", "both"), default="akh")
    p_c.add_argument("--epsilon", type=float, default=DEFAULT_EPSILON)
    p_c.add_argument("--delta", type=float, default=DEFAULT_DELTA)
    p_c.add_argument("--jobs", type=int, default=1,
                     help="worker processes for --batch")
    _add_common(p_c)
    p_c.set_defaults(func=cmd_causal)

    p_v = sub.add_parser("verify", help="run the self-check suites")
    p_v.add_argument("--suite", default="all",
                     choices=("all", "euler", "oracle", "routes", "isotopy",
                              "integrity"))
    p_v.add_argument("--pairs", type=int, default=200)
    p_v.add_argument("--words", type=int, default=50)
    p_v.add_argument("--seed", type=int, default=0)
    p_v.add_argument("--max-crossings", type=int, default=12)
    p_v.add_argument("--limit", type=int, default=DEFAULT_CROSSING_LIMIT)
    p_v.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, HypothesisViolationError, DegenerateInputError,
            GenericityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
