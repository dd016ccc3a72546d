"""Sky pairs of events in flat (2+1)-dimensional spacetime.

The space of unparameterized future-directed light rays of Minkowski
space with Cauchy surface R^2 is the solid torus R^2 x S^1: the ray
through surface point q with direction angle theta.  The rays through an
event (p, t) hit the surface at q(theta) = p - t*(cos theta, sin theta),
so each sky is a circle winding the S^1 factor once.

A projection direction e flattens a sky pair to a 2-strand annular
diagram: the strand height of event x at angle theta is e . q_x(theta),
the depth deciding over/under is the component along the left normal of
e.  Crossings solve (t_y - t_x)(e . u(theta)) = e . (p_y - p_x), which
has 0 or 2 solutions; near-tangent projections are retried along a
deterministic golden-angle schedule.

The exact flat-metric oracle: events are causally related iff
|p_y - p_x| <= |t_y - t_x|, with the equality case being exactly when
the skies intersect.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Tuple, Union

from .causality import (ROUTE_INTERSECTION, Verdict, decide_akh, decide_kh)
from .cube import DEFAULT_CROSSING_LIMIT
from .diagrams import BraidWord, braid_closure
from .errors import DegenerateInputError, GenericityError, ParseError

__all__ = [
    "Event", "SkyCurve", "CausalClass", "IntersectionDetected",
    "EndToEndReport", "sky", "classify_metric", "skies_to_braid",
    "end_to_end", "TIMELIKE", "NULL", "SPACELIKE",
    "DEFAULT_EPSILON", "DEFAULT_DELTA", "GOLDEN_ANGLE",
]

TIMELIKE = "timelike"
NULL = "null"
SPACELIKE = "spacelike"

DEFAULT_EPSILON = 1e-9
DEFAULT_DELTA = 1e-9
GOLDEN_ANGLE = math.pi * (3.0 - math.sqrt(5.0))
MAX_ROTATIONS = 32


@dataclass(frozen=True)
class Event:
    """A spacetime point: Cauchy-surface coordinates and time, light speed 1."""

    px: float
    py: float
    t: float

    def __post_init__(self):
        for v in (self.px, self.py, self.t):
            if not math.isfinite(v):
                raise ParseError(f"event coordinate {v!r} is not finite")

    @property
    def p(self) -> Tuple[float, float]:
        return (self.px, self.py)


@dataclass(frozen=True)
class SkyCurve:
    """The circle of light rays through an event, as a section over S^1."""

    event: Event

    def point(self, theta: float) -> Tuple[float, float, float]:
        """(qx, qy, theta): where the theta-ray through the event meets the
        Cauchy surface."""
        e = self.event
        return (e.px - e.t * math.cos(theta),
                e.py - e.t * math.sin(theta),
                theta)

    @property
    def radius(self) -> float:
        return abs(self.event.t)


def sky(e: Event) -> SkyCurve:
    return SkyCurve(e)


@dataclass(frozen=True)
class CausalClass:
    """Exact metric classification with the distance-to-null margin."""

    kind: str
    margin: float


def _deltas(x: Event, y: Event):
    dpx = y.px - x.px
    dpy = y.py - x.py
    dt = y.t - x.t
    dp = math.hypot(dpx, dpy)
    return dpx, dpy, dt, dp


def classify_metric(x: Event, y: Event,
                    epsilon: float = DEFAULT_EPSILON) -> CausalClass:
    """timelike / null / spacelike by comparing |dp| with |dt|; the null
    band has width epsilon relative to |dp| + |dt|."""
    dpx, dpy, dt, dp = _deltas(x, y)
    scale = dp + abs(dt)
    if scale == 0.0:
        raise DegenerateInputError("events are identical")
    margin = abs(dp - abs(dt))
    if margin <= epsilon * scale:
        kind = NULL
    elif dp < abs(dt):
        kind = TIMELIKE
    else:
        kind = SPACELIKE
    return CausalClass(kind, margin)


@dataclass(frozen=True)
class IntersectionDetected:
    """The two skies meet at ray angle theta (events on a common light ray)."""

    theta: float


def skies_to_braid(x: Event, y: Event,
                   direction: Tuple[float, float] = (1.0, 0.0),
                   epsilon: float = DEFAULT_EPSILON,
                   delta: float = DEFAULT_DELTA,
                   ) -> Union[BraidWord, IntersectionDetected]:
    """Project the two skies to a 2-strand braid word, or detect that they
    intersect.

    The crossings are sorted by theta; a letter is +1 when the strand
    rising past the other passes over it.  If the projection along
    ``direction`` is tangential or has coincident crossings, the direction
    is rotated through multiples of the golden angle until generic.
    """
    dpx, dpy, dt, dp = _deltas(x, y)
    scale = dp + abs(dt)
    if scale == 0.0:
        raise DegenerateInputError("events are identical")
    if abs(dp - abs(dt)) <= epsilon * scale:
        if dp == 0.0:
            theta = 0.0
        else:
            s = 1.0 if dt > 0 else -1.0
            theta = math.atan2(s * dpy, s * dpx) % (2.0 * math.pi)
        return IntersectionDetected(theta)

    ex0, ey0 = direction
    norm = math.hypot(ex0, ey0)
    if norm == 0.0:
        raise DegenerateInputError("projection direction is the zero vector")
    ex0, ey0 = ex0 / norm, ey0 / norm

    for attempt in range(MAX_ROTATIONS + 1):
        rot = attempt * GOLDEN_ANGLE
        cr, sr = math.cos(rot), math.sin(rot)
        ex, ey = ex0 * cr - ey0 * sr, ex0 * sr + ey0 * cr
        word = _project(x, y, ex, ey, dpx, dpy, dt, delta)
        if word is not None:
            return word
    margin = abs(dp - abs(dt))
    raise GenericityError(
        f"no generic projection after {MAX_ROTATIONS} rotations; "
        f"margin {margin:.3g} suggests a near-null pair")


def _project(x: Event, y: Event, ex: float, ey: float,
             dpx: float, dpy: float, dt: float,
             delta: float) -> Optional[BraidWord]:
    """One projection attempt; None means the direction is not generic."""
    c_e = ex * dpx + ey * dpy
    if dt == 0.0:
        if abs(c_e) <= delta:
            return None
        return BraidWord(2, ())

    disc = dt * dt - c_e * c_e
    if abs(disc) <= delta * delta:
        return None
    if disc < 0.0:
        return BraidWord(2, ())

    phi = math.atan2(ey, ex)
    alpha = math.acos(max(-1.0, min(1.0, c_e / dt)))
    crossings = sorted([((phi + alpha) % (2.0 * math.pi), +1.0),
                        ((phi - alpha) % (2.0 * math.pi), -1.0)])

    nx, ny = -ey, ex
    letters = []
    for theta, branch in crossings:
        # height difference g = h_y - h_x has derivative dt*sin(theta-phi),
        # and sin(theta-phi) = branch * sin(alpha) with sin(alpha) > 0.
        slope = dt * branch
        depth_x = nx * x.px + ny * x.py - x.t * (nx * math.cos(theta) + ny * math.sin(theta))
        depth_y = nx * y.px + ny * y.py - y.t * (nx * math.cos(theta) + ny * math.sin(theta))
        gap = depth_y - depth_x
        if abs(gap) <= delta:
            return None
        lower_is_y = slope > 0
        lower_depth_excess = gap if lower_is_y else -gap
        letters.append(1 if lower_depth_excess > 0 else -1)
    return BraidWord(2, tuple(letters))


@dataclass(frozen=True)
class EndToEndReport:
    """Verdict plus the exact metric classification for comparison."""

    verdict: Verdict
    oracle: CausalClass
    word: Optional[BraidWord]

    def to_json_dict(self) -> dict:
        out = self.verdict.to_json_dict()
        out["oracle"] = {"class": self.oracle.kind, "margin": self.oracle.margin}
        out["braid"] = None if self.word is None else list(self.word.letters)
        return out


def end_to_end(x: Event, y: Event, route: str = "akh",
               direction: Tuple[float, float] = (1.0, 0.0),
               epsilon: float = DEFAULT_EPSILON,
               delta: float = DEFAULT_DELTA,
               crossing_limit: int = DEFAULT_CROSSING_LIMIT) -> EndToEndReport:
    """Full pipeline: skies -> braid closure -> homology verdict.

    Intersecting skies short-circuit to related.  The metric oracle is
    bundled in the report for comparison but never influences the verdict.
    """
    if route not in ("akh", "kh"):
        raise ValueError(f"route must be 'akh' or 'kh', got {route!r}")
    oracle = classify_metric(x, y, epsilon)
    projected = skies_to_braid(x, y, direction, epsilon, delta)
    if isinstance(projected, IntersectionDetected):
        verdict = Verdict(related=True, route=ROUTE_INTERSECTION,
                          model_name="none",
                          intersection_theta=projected.theta)
        return EndToEndReport(verdict, oracle, None)
    pair = braid_closure(projected)
    if route == "akh":
        verdict = decide_akh(pair, crossing_limit)
    else:
        verdict = decide_kh(pair, crossing_limit)
    return EndToEndReport(verdict, oracle, projected)
