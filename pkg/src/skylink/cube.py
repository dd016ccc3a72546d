"""Cube-of-resolutions chain complexes over Z/2.

A resolution of an n-crossing diagram is an n-bit integer; bit c picks the
smoothing at crossing c.  With the PD convention (arcs counterclockwise
from the incoming under-arc) the 0-smoothing joins slots (0,1) and (2,3),
the 1-smoothing joins (0,3) and (1,2); for a positive crossing the
0-smoothing is the one compatible with the orientation.

A generator labels every circle of a resolution with v_plus or v_minus
(label bitmask: bit set = v_minus).  Its gradings, writing w for the
number of 1-smoothings and deg for (#v_plus - #v_minus):

    i = w - n_minus
    j = deg + w + n_plus - 2*n_minus
    k = (#v_plus - #v_minus) counted over essential circles only

The differential merges or splits circles along cube edges with the usual
Frobenius rules (over Z/2 no edge signs are needed):

    merge: ++ -> +,  +- and -+ -> -,  -- -> 0
    split: + -> +- and -+,  - -> --

It preserves j, and changes k by 0 or -2 on every matrix entry.  The
annular complex keeps only the k-preserving entries and grades blocks by
(j, k); the plain complex grades by j alone.

Complexes are materialized block by block; the full cube is never held as
one matrix.  Building walks the cube level by level, so at most two
weight levels of smoothing data are alive at once.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from .diagrams import AnnularDiagram, PlanarDiagram, annular_to_planar
from .errors import IntegrityError, ResourceLimitError
from .gf2 import SparseBitMatrix, multiply

__all__ = [
    "DEFAULT_CROSSING_LIMIT", "StateCircles", "Block", "ChainComplex",
    "smooth", "build_kh_complex", "build_akh_complex",
    "build_annular_blocks", "dump_complex",
]

DEFAULT_CROSSING_LIMIT = 20


@dataclass(frozen=True)
class StateCircles:
    """Circles of a fully smoothed diagram.

    ``arc_to_circle[a]`` is the circle index of arc ``a``; crossingless
    circles take the trailing indices and have no arcs.  ``essential[ci]``
    is True when circle ``ci`` winds the annulus axis (odd number of
    closure arcs on it)."""

    count: int
    arc_to_circle: Tuple[int, ...]
    essential: Tuple[bool, ...]


def _union_circles(crossing_arcs, arc_count: int, resolution: int):
    """Union-find pass: returns (arc_to_circle list, representative arcs)."""
    parent = list(range(arc_count))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for idx, (a, b, c, d) in enumerate(crossing_arcs):
        if resolution >> idx & 1:
            pairs = ((a, d), (b, c))
        else:
            pairs = ((a, b), (c, d))
        for u, v in pairs:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv

    arc2circ = [0] * arc_count
    reps: List[int] = []
    index: Dict[int, int] = {}
    for arc in range(arc_count):
        root = find(arc)
        ci = index.get(root)
        if ci is None:
            ci = len(reps)
            index[root] = ci
            reps.append(arc)
        arc2circ[arc] = ci
    return arc2circ, reps


def smooth(d: PlanarDiagram, resolution: int) -> StateCircles:
    """Circles of the diagram smoothed according to ``resolution``."""
    n = len(d.crossings)
    if resolution < 0 or resolution >> n:
        raise ValueError(f"resolution {resolution:#b} out of range for {n} crossings")
    arcs = [c.arcs for c in d.crossings]
    arc2circ, reps = _union_circles(arcs, d.arc_count, resolution)
    ncirc = len(reps)
    parity = [0] * ncirc
    for arc in d.axis_arcs:
        parity[arc2circ[arc]] ^= 1
    essential = [bool(p) for p in parity]
    essential.extend([True] * d.essential_free_circles)
    essential.extend([False] * (d.free_circles - d.essential_free_circles))
    return StateCircles(
        count=ncirc + d.free_circles,
        arc_to_circle=tuple(arc2circ),
        essential=tuple(essential),
    )


@dataclass
class Block:
    """One graded piece of a complex: chain ranks and differentials by i."""

    dims: Dict[int, int] = field(default_factory=dict)
    maps: Dict[int, SparseBitMatrix] = field(default_factory=dict)

    def map_out_of(self, i: int) -> SparseBitMatrix:
        m = self.maps.get(i)
        if m is not None:
            return m
        return SparseBitMatrix.zeros(self.dims.get(i, 0), self.dims.get(i + 1, 0))


@dataclass
class ChainComplex:
    """Blocks keyed by quantum grading j, or by (j, k) for annular input."""

    blocks: Dict[object, Block]
    annular: bool

    def total_generators(self) -> int:
        return sum(sum(b.dims.values()) for b in self.blocks.values())

    def check_integrity(self) -> None:
        """Verify d*d = 0 in every block; raises IntegrityError otherwise."""
        for key, block in self.blocks.items():
            for i in block.maps:
                if i + 1 in block.maps:
                    if multiply(block.maps[i], block.maps[i + 1]).nnz():
                        raise IntegrityError(
                            f"d*d != 0 in block {key} between i={i} and i={i + 2}")


class _Vertex:
    __slots__ = ("count", "arc_circles", "ess_mask", "arc2circ", "reps",
                 "loc", "keys")

    def __init__(self, count, arc_circles, ess_mask, arc2circ, reps, loc, keys):
        self.count = count
        self.arc_circles = arc_circles
        self.ess_mask = ess_mask
        self.arc2circ = arc2circ
        self.reps = reps
        self.loc = loc
        self.keys = keys


def build_kh_complex(d: PlanarDiagram,
                     crossing_limit: int = DEFAULT_CROSSING_LIMIT) -> ChainComplex:
    """Khovanov chain complex of a planar diagram, blocks keyed by j."""
    return _build(d, annular=False, crossing_limit=crossing_limit)


def build_akh_complex(d: AnnularDiagram,
                      crossing_limit: int = DEFAULT_CROSSING_LIMIT) -> ChainComplex:
    """Annular chain complex of a braid closure, blocks keyed by (j, k).

    Same generators as the planar complex of the closure; entries whose
    source and target k differ are dropped (they all drop k by exactly 2,
    which is asserted entry by entry)."""
    planar = annular_to_planar(d, mark_axis=True)
    return build_annular_blocks(planar, crossing_limit)


def build_annular_blocks(marked: PlanarDiagram,
                         crossing_limit: int = DEFAULT_CROSSING_LIMIT) -> ChainComplex:
    """Annular complex of an axis-marked planar diagram (a closure
    planarized with mark_axis=True, possibly simplified)."""
    return _build(marked, annular=True, crossing_limit=crossing_limit)


def _build(d: PlanarDiagram, annular: bool, crossing_limit: int) -> ChainComplex:
    n = len(d.crossings)
    if n > crossing_limit:
        raise ResourceLimitError(
            f"diagram has {n} crossings, exceeding the configured limit of "
            f"{crossing_limit}")

    n_minus = d.n_minus
    jshift = d.n_plus - 2 * n_minus
    crossing_arcs = [c.arcs for c in d.crossings]
    free_total = d.free_circles
    free_ess = d.essential_free_circles
    arc_count = d.arc_count
    axis = tuple(d.axis_arcs)

    counters: Dict[Tuple[object, int], int] = {}

    def materialize(resolution: int, weight: int) -> _Vertex:
        arc2circ, reps = _union_circles(crossing_arcs, arc_count, resolution)
        arc_circles = len(reps)
        count = arc_circles + free_total
        parity = [0] * arc_circles
        for arc in axis:
            parity[arc2circ[arc]] ^= 1
        ess_mask = 0
        for ci, p in enumerate(parity):
            if p:
                ess_mask |= 1 << ci
        ess_mask |= ((1 << free_ess) - 1) << arc_circles
        ess_total = ess_mask.bit_count()

        i = weight - n_minus
        size = 1 << count
        loc = [0] * size
        keys: List[object] = [None] * size
        base_j = count + weight + jshift
        # all labels with the same popcount (and, annularly, the same
        # essential popcount) share a block key; assign indices per class
        if annular:
            key_of = [[(base_j - 2 * pc, ess_total - 2 * epc)
                       for epc in range(ess_total + 1)]
                      for pc in range(count + 1)]
            run = [[counters.get((key_of[pc][epc], i), 0)
                    for epc in range(ess_total + 1)]
                   for pc in range(count + 1)]
            start = [row[:] for row in run]
            for label in range(size):
                pc = label.bit_count()
                epc = (label & ess_mask).bit_count()
                row = run[pc]
                loc[label] = row[epc]
                row[epc] += 1
                keys[label] = key_of[pc][epc]
            for pc in range(count + 1):
                for epc in range(ess_total + 1):
                    if run[pc][epc] != start[pc][epc]:
                        counters[(key_of[pc][epc], i)] = run[pc][epc]
        else:
            key_of = [base_j - 2 * pc for pc in range(count + 1)]
            run = [counters.get((key_of[pc], i), 0) for pc in range(count + 1)]
            start = run[:]
            for label in range(size):
                pc = label.bit_count()
                loc[label] = run[pc]
                run[pc] += 1
                keys[label] = key_of[pc]
            for pc in range(count + 1):
                if run[pc] != start[pc]:
                    counters[(key_of[pc], i)] = run[pc]
        return _Vertex(count, arc_circles, ess_mask, arc2circ, reps, loc, keys)

    blocks: Dict[object, Block] = {}
    cur_level: Dict[int, _Vertex] = {0: materialize(0, 0)}

    for weight in range(n + 1):
        i = weight - n_minus
        next_level: Dict[int, _Vertex] = {}
        # per-block rows of the i -> i+1 differential, filled in place;
        # source dims are final once the current level is materialized
        rows_by_key: Dict[object, List[int]] = {}

        def rows_for(key):
            rows = rows_by_key.get(key)
            if rows is None:
                rows = rows_by_key[key] = [0] * counters[(key, i)]
            return rows

        for resolution, vx in cur_level.items():
            for c in range(n):
                bit = 1 << c
                if resolution & bit:
                    continue
                target = resolution | bit
                vy = next_level.get(target)
                if vy is None:
                    vy = next_level[target] = materialize(target, weight + 1)
                _emit_edge(vx, vy, crossing_arcs[c], annular, rows_for)

        for key, rows in rows_by_key.items():
            cols_n = counters.get((key, i + 1), 0)
            block = blocks.setdefault(key, Block())
            block.maps[i] = SparseBitMatrix.from_bit_rows(len(rows), cols_n, rows)
        cur_level = next_level

    for (key, i), cnt in counters.items():
        blocks.setdefault(key, Block()).dims[i] = cnt
    return ChainComplex(blocks=blocks, annular=annular)


def _check_dropped(ks, kd, annular: bool) -> None:
    # the only grading-moving entries allowed are annular k-drops by 2
    if not annular or ks[0] != kd[0] or ks[1] - kd[1] != 2:
        raise IntegrityError(f"differential entry moves grading {ks} -> {kd}")


def _emit_edge(vx: _Vertex, vy: _Vertex, arcs, annular: bool, rows_for) -> None:
    a, b, c, d = arcs
    a2x = vx.arc2circ
    a2y = vy.arc2circ
    p = a2x[a]
    q = a2x[c]
    merge = p != q

    sls = [0]
    dls = [0]
    for s in range(vx.count):
        if s == p or s == q:
            continue
        if s < vx.arc_circles:
            t = a2y[vx.reps[s]]
        else:
            t = s - vx.arc_circles + vy.arc_circles
        bs = 1 << s
        bt = 1 << t
        sls = sls + [sl | bs for sl in sls]
        dls = dls + [dl | bt for dl in dls]

    locx, keysx = vx.loc, vx.keys
    locy, keysy = vy.loc, vy.keys

    if merge:
        t = a2y[a]
        bp, bq, bt = 1 << p, 1 << q, 1 << t
        variants = ((0, 0), (bp, bt), (bq, bt))
    else:
        t1 = a2y[a]
        t2 = a2y[b]
        if t1 == t2:
            raise IntegrityError("split produced a single circle; diagram not planar?")
        bp, b1, b2 = 1 << p, 1 << t1, 1 << t2
        variants = ((0, b2), (0, b1), (bp, b1 | b2))

    for base_s, base_d in variants:
        rows = None
        key = None
        for n in range(len(sls)):
            s2 = sls[n] | base_s
            d2 = dls[n] | base_d
            ks = keysx[s2]
            if ks == keysy[d2]:
                if ks != key:
                    key = ks
                    rows = rows_for(ks)
                rows[locx[s2]] |= 1 << locy[d2]
            else:
                _check_dropped(ks, keysy[d2], annular)


def dump_complex(cc: ChainComplex) -> str:
    """Human-readable dump: per-block chain ranks and matrix triplets."""
    lines = []
    for key in sorted(cc.blocks, key=repr):
        block = cc.blocks[key]
        label = f"j={key[0]} k={key[1]}" if cc.annular else f"j={key}"
        dims = " ".join(f"i={i}:{block.dims[i]}" for i in sorted(block.dims))
        lines.append(f"block {label}  [{dims}]")
        for i in sorted(block.maps):
            m = block.maps[i]
            ent = []
            for r, row in enumerate(m.bit_rows()):
                while row:
                    low = row & -row
                    ent.append(f"({r},{low.bit_length() - 1})")
                    row ^= low
            lines.append(f"  d[{i}->{i + 1}] {m.row_count}x{m.col_count}: "
                         + (" ".join(ent) if ent else "0"))
    return "\n".join(lines)
