"""Causality decision procedures for sky pairs.

A sky pair is an annular link with exactly two components, each winding
the axis once.  Two events are causally unrelated exactly when their sky
pair is the trivial two-braid closure, which the graded homology
dimensions detect:

* annular route: compare the annular homology of the pair with that of
  the trivial two-braid closure U2;
* planar route: add the meridian and compare Khovanov homology with that
  of the connected sum of two Hopf links P3.

Both are if-and-only-if criteria, so the routes always agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional

from .cube import DEFAULT_CROSSING_LIMIT
from .diagrams import AnnularDiagram, augment_with_meridian, model_link
from .errors import HypothesisViolationError
from .invariants import GradedDims, akh, kh

__all__ = ["Verdict", "validate_sky_pair", "decide_akh", "decide_kh"]

ROUTE_AKH = "akh"
ROUTE_KH = "kh"
ROUTE_INTERSECTION = "sky_intersection"


@dataclass(frozen=True)
class Verdict:
    """Outcome of a causality decision, with its evidence.

    ``computed`` and ``model_dims`` hold the compared homology dimensions
    for the homology routes; ``intersection_theta`` holds the witness ray
    angle when the skies intersect.
    """

    related: bool
    route: str
    model_name: str
    computed: Optional[GradedDims] = None
    model_dims: Optional[GradedDims] = None
    intersection_theta: Optional[float] = None

    def to_json_dict(self) -> dict:
        out = {
            "related": self.related,
            "route": self.route,
            "model": self.model_name,
            "computed": None if self.computed is None else self.computed.to_entries(),
            "model_dims": None if self.model_dims is None else self.model_dims.to_entries(),
        }
        if self.intersection_theta is not None:
            out["theta"] = self.intersection_theta
        return out


def validate_sky_pair(d: AnnularDiagram) -> List[str]:
    """Check the sky-pair hypotheses; returns a list of violations
    (empty = valid): exactly 2 components, each winding the axis once."""
    violations = []
    if d.component_count != 2:
        violations.append(f"{d.component_count} components, expected 2")
    for w in d.component_windings:
        if w != 1:
            violations.append(f"component winding {w}, expected 1")
    return violations


def _require_sky_pair(d: AnnularDiagram) -> None:
    violations = validate_sky_pair(d)
    if violations:
        raise HypothesisViolationError(violations)


@lru_cache(maxsize=None)
def _u2_dims() -> GradedDims:
    return akh(model_link("U2"))


@lru_cache(maxsize=None)
def _p3_dims() -> GradedDims:
    return kh(model_link("P3"))


def decide_akh(d: AnnularDiagram,
               crossing_limit: int = DEFAULT_CROSSING_LIMIT) -> Verdict:
    """Annular route: related iff the pair's annular homology differs from
    the trivial two-braid closure's."""
    _require_sky_pair(d)
    computed = akh(d, crossing_limit)
    model = _u2_dims()
    return Verdict(
        related=not computed.same_dims(model),
        route=ROUTE_AKH,
        model_name="U2",
        computed=computed,
        model_dims=model,
    )


def decide_kh(d: AnnularDiagram,
              crossing_limit: int = DEFAULT_CROSSING_LIMIT) -> Verdict:
    """Planar route: related iff the meridian-augmented pair's Khovanov
    homology differs from the connected sum of two Hopf links'."""
    _require_sky_pair(d)
    computed = kh(augment_with_meridian(d), crossing_limit)
    model = _p3_dims()
    return Verdict(
        related=not computed.same_dims(model),
        route=ROUTE_KH,
        model_name="P3",
        computed=computed,
        model_dims=model,
    )
