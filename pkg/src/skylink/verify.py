"""Self-check suites and the reference diagram corpus.

Each suite returns a machine-readable report dict:
``{"suite", "cases", "failures", "elapsed"}``.  A nonempty failure list
means the build is unsound.  All randomness is seeded.
"""

from __future__ import annotations

import random
import time
from typing import Dict, List, Tuple

from . import cube
from .causality import decide_akh, decide_kh, validate_sky_pair
from .diagrams import (AnnularDiagram, BraidWord, Conjugate, InsertPair,
                       PlanarDiagram, annular_to_planar, apply_move,
                       braid_closure, augment_with_meridian, model_link,
                       parse_braid, parse_pd)
from .invariants import akh, chain_euler, graded_euler, kh
from .skies import Event, classify_metric, end_to_end, TIMELIKE, NULL

__all__ = [
    "corpus_braids", "corpus_planar", "random_event_pair",
    "run_euler_suite", "run_oracle_suite", "run_isotopy_suite",
    "run_routes_suite", "run_all",
]

_CORPUS_WORDS: Tuple[Tuple[str, int], ...] = (
    ("", 2), ("1", 2), ("1 1", 2), ("-1 -1", 2), ("1 -1", 2), ("1 1 1", 2),
    ("", 3), ("1 2", 3), ("1 -2", 3), ("2 2", 3), ("1 2 1", 3), ("-1 2 -1 2", 3),
)

_CORPUS_PD: Tuple[str, ...] = (
    "O(1)",
    "X(1,1,2,2)",
    "X(1,2,2,1)",
    "X(1,3,2,4) X(3,1,4,2)",
    "X(1,4,2,3) X(3,2,4,1)",
    "X(1,5,2,3) X(3,2,4,1) X(4,8,6,7) X(7,6,8,5)",
)


def corpus_braids() -> List[AnnularDiagram]:
    return [braid_closure(parse_braid(text, strands))
            for text, strands in _CORPUS_WORDS]


def corpus_planar(max_crossings: int = 20) -> List[PlanarDiagram]:
    diagrams = [parse_pd(text) for text in _CORPUS_PD]
    diagrams.extend(annular_to_planar(d) for d in corpus_braids())
    diagrams.append(model_link("P3"))
    diagrams.append(augment_with_meridian(
        braid_closure(parse_braid("1 1", 2))))
    return [d for d in diagrams if d.crossing_count <= max_crossings]


def random_event_pair(rng: random.Random, min_margin: float = 0.1
                      ) -> Tuple[Event, Event]:
    """Seeded event pair with metric margin above ``min_margin``."""
    while True:
        x = Event(rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3))
        y = Event(rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3))
        if (x.px, x.py, x.t) == (y.px, y.py, y.t):
            continue
        if classify_metric(x, y).margin > min_margin:
            return x, y


def _report(suite: str, cases: int, failures: List[str], started: float) -> Dict:
    return {"suite": suite, "cases": cases, "failures": failures,
            "elapsed": round(time.perf_counter() - started, 6)}


def run_euler_suite(max_crossings: int = 12, crossing_limit: int = 20) -> Dict:
    """graded_euler(kh(d)) must equal the state-sum chain_euler(d)."""
    started = time.perf_counter()
    failures = []
    diagrams = corpus_planar(max_crossings)
    for d in diagrams:
        lhs = graded_euler(kh(d, crossing_limit))
        rhs = chain_euler(d, crossing_limit)
        if lhs != rhs:
            failures.append(f"euler mismatch on {d.crossing_count}-crossing "
                            f"diagram: {lhs} != {rhs}")
    return _report("euler", len(diagrams), failures, started)


def run_oracle_suite(pairs: int = 200, seed: int = 0,
                     crossing_limit: int = 20) -> Dict:
    """Homology verdict must match the exact flat-metric oracle."""
    started = time.perf_counter()
    failures = []
    rng = random.Random(seed)
    for idx in range(pairs):
        x, y = random_event_pair(rng)
        report = end_to_end(x, y, route="akh", crossing_limit=crossing_limit)
        expect = report.oracle.kind in (TIMELIKE, NULL)
        if report.verdict.related != expect:
            failures.append(
                f"pair {idx}: verdict related={report.verdict.related} but "
                f"oracle is {report.oracle.kind} ({x}, {y})")
    return _report("oracle", pairs, failures, started)


def run_routes_suite(pairs: int = 200, seed: int = 0,
                     crossing_limit: int = 20) -> Dict:
    """The annular and meridian routes must return the same verdict."""
    started = time.perf_counter()
    failures = []
    rng = random.Random(seed)
    cases = 0
    for idx in range(pairs):
        x, y = random_event_pair(rng)
        rep_a = end_to_end(x, y, route="akh", crossing_limit=crossing_limit)
        rep_k = end_to_end(x, y, route="kh", crossing_limit=crossing_limit)
        cases += 1
        if rep_a.verdict.related != rep_k.verdict.related:
            failures.append(f"pair {idx}: akh={rep_a.verdict.related} "
                            f"kh={rep_k.verdict.related} ({x}, {y})")
    for d in corpus_braids():
        if validate_sky_pair(d):
            continue
        cases += 1
        va = decide_akh(d, crossing_limit)
        vk = decide_kh(d, crossing_limit)
        if va.related != vk.related:
            failures.append(f"corpus word {d.presentation.letters}: "
                            f"akh={va.related} kh={vk.related}")
    return _report("routes", cases, failures, started)


def random_word(rng: random.Random, max_letters: int = 8) -> BraidWord:
    strands = rng.choice((2, 3))
    length = rng.randint(0, max_letters)
    letters = []
    for _ in range(length):
        g = rng.randint(1, strands - 1)
        letters.append(g if rng.random() < 0.5 else -g)
    return BraidWord(strands, tuple(letters))


def perturb(rng: random.Random, word: BraidWord) -> BraidWord:
    g = rng.randint(1, word.strand_count - 1)
    if rng.random() < 0.5:
        g = -g
    if rng.random() < 0.5:
        return apply_move(word, Conjugate(g))
    pos = rng.randint(0, len(word.letters))
    return apply_move(word, InsertPair(pos, g))


def run_isotopy_suite(words: int = 50, seed: int = 0, moves: int = 3,
                      crossing_limit: int = 20) -> Dict:
    """Graded dims must be unchanged by conjugation and free insertion."""
    started = time.perf_counter()
    failures = []
    rng = random.Random(seed)
    for idx in range(words):
        word = random_word(rng)
        base = braid_closure(word)
        base_kh = kh(annular_to_planar(base), crossing_limit)
        base_akh = akh(base, crossing_limit)
        moved = word
        for _ in range(moves):
            moved = perturb(rng, moved)
        closed = braid_closure(moved)
        if not kh(annular_to_planar(closed), crossing_limit).same_dims(base_kh):
            failures.append(f"word {idx}: kh changed under moves "
                            f"{word.letters} -> {moved.letters}")
        if not akh(closed, crossing_limit).same_dims(base_akh):
            failures.append(f"word {idx}: akh changed under moves "
                            f"{word.letters} -> {moved.letters}")
    return _report("isotopy", words, failures, started)


def run_integrity_suite(crossing_limit: int = 20) -> Dict:
    """d*d = 0 in every block of every corpus complex."""
    started = time.perf_counter()
    failures = []
    cases = 0
    for d in corpus_planar(10):
        cases += 1
        try:
            cube.build_kh_complex(d, crossing_limit).check_integrity()
        except Exception as exc:  # noqa: BLE001 - report, do not crash
            failures.append(f"kh complex integrity: {exc}")
    for d in corpus_braids():
        cases += 1
        try:
            cube.build_akh_complex(d, crossing_limit).check_integrity()
        except Exception as exc:  # noqa: BLE001
            failures.append(f"akh complex integrity: {exc}")
    return _report("integrity", cases, failures, started)


_SUITES = {
    "euler": run_euler_suite,
    "oracle": run_oracle_suite,
    "routes": run_routes_suite,
    "isotopy": run_isotopy_suite,
    "integrity": run_integrity_suite,
}


def run_all(suite: str = "all", pairs: int = 200, seed: int = 0,
            max_crossings: int = 12, crossing_limit: int = 20,
            words: int = 50) -> List[Dict]:
    reports = []
    names = list(_SUITES) if suite == "all" else [suite]
    for name in names:
        if name == "euler":
            reports.append(run_euler_suite(max_crossings, crossing_limit))
        elif name == "oracle":
            reports.append(run_oracle_suite(pairs, seed, crossing_limit))
        elif name == "routes":
            reports.append(run_routes_suite(pairs, seed, crossing_limit))
        elif name == "isotopy":
            reports.append(run_isotopy_suite(words, seed, crossing_limit=crossing_limit))
        elif name == "integrity":
            reports.append(run_integrity_suite(crossing_limit))
        else:
            raise ValueError(f"unknown suite {name!r}; expected one of "
                             f"{', '.join(_SUITES)} or 'all'")
    return reports
