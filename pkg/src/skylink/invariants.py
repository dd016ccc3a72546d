"""Graded homology dimensions and Euler-characteristic polynomials.

The homology of a braid closure or planar diagram is reported as a map
from grading tuples to dimensions (``GradedDims``).  Over Z/2 two graded
modules are isomorphic exactly when these maps agree, so equality of
``GradedDims`` is the comparison used by the causality procedures.

``chain_euler`` evaluates the state-sum form of the graded Euler
characteristic directly from smoothing circle counts, bypassing all rank
computations; agreement with ``graded_euler(kh(d))`` is a soundness check
on the linear algebra.
"""

from __future__ import annotations

import hashlib
from typing import Dict, Iterable, List, Mapping, Tuple

from . import cube
from .cube import DEFAULT_CROSSING_LIMIT, ChainComplex, _union_circles
from .diagrams import (AnnularDiagram, PlanarDiagram, annular_to_planar,
                       serialize, serialize_braid, simplify_planar)
from .errors import IntegrityError, ResourceLimitError
from .gf2 import multiply, rank

__all__ = [
    "CONVENTION", "GradedDims", "LaurentPolynomial",
    "kh", "akh", "graded_euler", "chain_euler", "diagram_token",
    "diagram_hash",
]

# Identifies the grading conventions baked into this build; values computed
# under a different tag must never be compared or reused from cache.
CONVENTION = "kh-z2-cube-v1"


def diagram_token(d) -> str:
    """Canonical text form of a diagram, used for hashing and cache keys."""
    if isinstance(d, AnnularDiagram):
        return (f"closure[{d.presentation.strand_count}] "
                f"{serialize_braid(d.presentation)}").strip()
    if isinstance(d, PlanarDiagram):
        return serialize(d)
    raise TypeError(f"cannot tokenize {type(d).__name__}")


def diagram_hash(d) -> str:
    return hashlib.sha256(diagram_token(d).encode()).hexdigest()


class GradedDims:
    """Map from grading tuple (i, j) or (i, j, k) to a positive dimension.

    Carries the convention tag and the source diagram hash so that values
    from incompatible builds are rejected instead of silently compared.
    """

    __slots__ = ("_dims", "convention", "diagram_id")

    def __init__(self, dims: Mapping[Tuple[int, ...], int],
                 convention: str = CONVENTION, diagram_id: str = ""):
        clean = {}
        for key, dim in dims.items():
            if dim < 0:
                raise ValueError(f"negative dimension at {key}")
            if dim:
                clean[tuple(key)] = int(dim)
        self._dims = clean
        self.convention = convention
        self.diagram_id = diagram_id

    @property
    def dims(self) -> Dict[Tuple[int, ...], int]:
        return dict(self._dims)

    def total_dim(self) -> int:
        return sum(self._dims.values())

    def items(self):
        return self._dims.items()

    def __getitem__(self, key):
        return self._dims.get(tuple(key), 0)

    def __bool__(self):
        return bool(self._dims)

    def same_dims(self, other: "GradedDims") -> bool:
        """Dimension comparison; refuses to compare across conventions."""
        if self.convention != other.convention:
            raise IntegrityError(
                f"convention mismatch: {self.convention!r} vs {other.convention!r}")
        return self._dims == other._dims

    def __eq__(self, other):
        if not isinstance(other, GradedDims):
            return NotImplemented
        return self.convention == other.convention and self._dims == other._dims

    def __repr__(self):
        body = ", ".join(f"{k}:{v}" for k, v in sorted(self._dims.items()))
        return f"GradedDims({{{body}}})"

    def to_entries(self) -> List[dict]:
        """Stable JSON form: [{"i":..,"j":..,"k":..,"dim":..}, ...] sorted
        lexicographically; k is null for bigraded values."""
        out = []
        for key in sorted(self._dims):
            entry = {"i": key[0], "j": key[1],
                     "k": key[2] if len(key) == 3 else None,
                     "dim": self._dims[key]}
            out.append(entry)
        return out

    @classmethod
    def from_entries(cls, entries: Iterable[dict],
                     convention: str = CONVENTION,
                     diagram_id: str = "") -> "GradedDims":
        dims = {}
        for e in entries:
            key = (e["i"], e["j"]) if e.get("k") is None else (e["i"], e["j"], e["k"])
            dims[key] = e["dim"]
        return cls(dims, convention, diagram_id)


def _homology_of(cc: ChainComplex) -> Dict[Tuple[int, ...], int]:
    """Per-block homology dims; each differential is composition-checked
    against its neighbor and ranked exactly once."""
    out: Dict[Tuple[int, ...], int] = {}
    for key, block in cc.blocks.items():
        ranks: Dict[int, int] = {}
        for i, m in block.maps.items():
            if m.row_count != block.dims.get(i, 0):
                raise IntegrityError("chain rank does not match differential")
            nxt = block.maps.get(i + 1)
            if nxt is not None and m.nnz() and nxt.nnz():
                if multiply(m, nxt).nnz():
                    raise IntegrityError(
                        f"composite differential nonzero in block {key} at i={i}")
            ranks[i] = rank(m)
        for i in sorted(block.dims):
            dim = block.dims[i]
            if not dim:
                continue
            h = dim - ranks.get(i, 0) - ranks.get(i - 1, 0)
            if h < 0:
                raise IntegrityError("negative homology dimension")
            if h:
                grading = (i, key) if not cc.annular else (i, key[0], key[1])
                out[grading] = h
    return out


def kh(d: PlanarDiagram, crossing_limit: int = DEFAULT_CROSSING_LIMIT,
       simplify: bool = True) -> GradedDims:
    """Khovanov homology dimensions of a planar diagram, keyed (i, j).

    Kinks and reducible bigons are collapsed first (an isotopy, so the
    dimensions are unchanged); pass simplify=False to build the cube of
    the diagram exactly as given.
    """
    if len(d.crossings) > crossing_limit:
        raise ResourceLimitError(
            f"diagram has {len(d.crossings)} crossings, exceeding the "
            f"configured limit of {crossing_limit}")
    diagram_id = diagram_hash(d)
    if simplify:
        d = simplify_planar(d)
    cc = cube.build_kh_complex(d, crossing_limit)
    return GradedDims(_homology_of(cc), CONVENTION, diagram_id)


def akh(d: AnnularDiagram, crossing_limit: int = DEFAULT_CROSSING_LIMIT,
        simplify: bool = True) -> GradedDims:
    """Annular homology dimensions of a braid closure, keyed (i, j, k).

    The closure is planarized with axis marks; kinks and reducible bigons
    are collapsed first (an isotopy in the annulus) unless simplify=False.
    """
    if d.crossing_count > crossing_limit:
        raise ResourceLimitError(
            f"diagram has {d.crossing_count} crossings, exceeding the "
            f"configured limit of {crossing_limit}")
    diagram_id = diagram_hash(d)
    marked = annular_to_planar(d, mark_axis=True)
    if simplify:
        marked = simplify_planar(marked)
    cc = cube.build_annular_blocks(marked, crossing_limit)
    return GradedDims(_homology_of(cc), CONVENTION, diagram_id)


# ---------------------------------------------------------------------------
# Laurent polynomials in one variable q


class LaurentPolynomial:
    """Integer Laurent polynomial; zero coefficients are never stored."""

    __slots__ = ("_coefs",)

    def __init__(self, coefs: Mapping[int, int] | None = None):
        self._coefs = {e: c for e, c in (coefs or {}).items() if c}

    @classmethod
    def monomial(cls, coef: int, exp: int) -> "LaurentPolynomial":
        return cls({exp: coef})

    @property
    def coefs(self) -> Dict[int, int]:
        return dict(self._coefs)

    def is_zero(self) -> bool:
        return not self._coefs

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        out = dict(self._coefs)
        for e, c in other._coefs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(out)

    def __mul__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        out: Dict[int, int] = {}
        for e1, c1 in self._coefs.items():
            for e2, c2 in other._coefs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPolynomial(out)

    def scaled(self, coef: int, exp: int = 0) -> "LaurentPolynomial":
        return LaurentPolynomial({e + exp: c * coef for e, c in self._coefs.items()})

    def __pow__(self, n: int) -> "LaurentPolynomial":
        if n < 0:
            raise ValueError("negative power")
        out = LaurentPolynomial({0: 1})
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._coefs == other._coefs

    def __repr__(self):
        if not self._coefs:
            return "0"
        terms = []
        for e in sorted(self._coefs, reverse=True):
            c = self._coefs[e]
            base = "1" if e == 0 else ("q" if e == 1 else f"q^{e}")
            if e != 0 and abs(c) == 1:
                txt = base if c > 0 else f"-{base}"
            else:
                txt = f"{c}" if e == 0 else f"{c}*{base}"
            terms.append(txt)
        return " + ".join(terms).replace("+ -", "- ")


def graded_euler(g: GradedDims) -> LaurentPolynomial:
    """Sum of (-1)^i q^j dim over all gradings; k is marginalized away."""
    coefs: Dict[int, int] = {}
    for key, dim in g.items():
        i, j = key[0], key[1]
        sign = -1 if i % 2 else 1
        coefs[j] = coefs.get(j, 0) + sign * dim
    return LaurentPolynomial(coefs)


def chain_euler(d: PlanarDiagram,
                crossing_limit: int = DEFAULT_CROSSING_LIMIT) -> LaurentPolynomial:
    """State-sum Euler characteristic, independent of any rank computation:

        (-1)^{n-} q^{n+ - 2 n-} * sum_r (-q)^{|r|} (q + 1/q)^{circles(r)}
    """
    n = len(d.crossings)
    if n > crossing_limit:
        raise ResourceLimitError(
            f"diagram has {n} crossings, exceeding the configured limit of "
            f"{crossing_limit}")
    arcs = [c.arcs for c in d.crossings]
    counts: Dict[Tuple[int, int], int] = {}
    for r in range(1 << n):
        _, reps = _union_circles(arcs, d.arc_count, r)
        key = (r.bit_count(), len(reps) + d.free_circles)
        counts[key] = counts.get(key, 0) + 1

    loop = LaurentPolynomial({1: 1, -1: 1})
    powers = [LaurentPolynomial({0: 1})]
    max_c = max((c for _, c in counts), default=0)
    for _ in range(max_c):
        powers.append(powers[-1] * loop)

    total = LaurentPolynomial()
    for (w, c), mult in sorted(counts.items()):
        sign = -1 if w % 2 else 1
        total = total + powers[c].scaled(mult * sign, w)
    return total.scaled((-1) ** d.n_minus, d.n_plus - 2 * d.n_minus)
