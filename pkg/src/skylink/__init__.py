"""Causality of event pairs in (2+1)-dimensional spacetime, decided by
Khovanov and annular Khovanov homology over Z/2 of the pair of sky curves,
with an exact flat-metric oracle for self-verification."""

from .diagrams import (AnnularDiagram, BraidWord, Conjugate, Crossing,
                       DeletePair, InsertPair, BraidRelation, PlanarDiagram,
                       annular_to_planar, apply_move, augment_with_meridian,
                       braid_closure, free_reduce, model_link, parse_braid,
                       parse_pd, serialize, serialize_braid)
from .cube import (ChainComplex, StateCircles, build_akh_complex,
                   build_kh_complex, smooth)
from .gf2 import SparseBitMatrix, homology_dims, rank
from .invariants import (CONVENTION, GradedDims, LaurentPolynomial, akh,
                         chain_euler, diagram_hash, graded_euler, kh)
from .causality import Verdict, decide_akh, decide_kh, validate_sky_pair
from .skies import (CausalClass, Event, IntersectionDetected, SkyCurve,
                    classify_metric, end_to_end, skies_to_braid, sky)
from . import errors

__version__ = "0.1.0"

__all__ = [
    "AnnularDiagram", "BraidWord", "Crossing", "PlanarDiagram",
    "Conjugate", "InsertPair", "DeletePair", "BraidRelation",
    "annular_to_planar", "apply_move", "augment_with_meridian",
    "braid_closure", "free_reduce", "model_link", "parse_braid", "parse_pd",
    "serialize", "serialize_braid",
    "ChainComplex", "StateCircles", "build_akh_complex", "build_kh_complex",
    "smooth",
    "SparseBitMatrix", "homology_dims", "rank",
    "CONVENTION", "GradedDims", "LaurentPolynomial", "akh", "chain_euler",
    "diagram_hash", "graded_euler", "kh",
    "Verdict", "decide_akh", "decide_kh", "validate_sky_pair",
    "CausalClass", "Event", "IntersectionDetected", "SkyCurve",
    "classify_metric", "end_to_end", "skies_to_braid", "sky",
    "errors",
    "__version__",
]
