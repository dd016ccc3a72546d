"""Oriented link diagrams in the plane and in the annulus.

Annular links are kept in braid-closure form: a word in the Artin
generators, closed around the axis of the solid torus.  Planar diagrams
use PD notation: each crossing is a tuple ``(a, b, c, d)`` of arc ids
listed counterclockwise starting from the incoming under-arc, so the
under-strand runs ``a -> c``.  A crossing is positive exactly when its
over-strand runs ``d -> b``.

Conventions fixed here and relied on everywhere else:

* a positive braid letter ``i`` is the positive crossing (strand at
  position ``i`` passes over strand ``i+1``, strands oriented upward);
* braid closures orient every component the same way around the axis;
* the meridian added by :func:`augment_with_meridian` is inserted in the
  closure region, over all strands on one pass and under them on the
  return pass;
* arc ids are dense integers assigned in traversal order along each
  component, which makes serialization canonical and hashing stable.

All values are immutable after construction and safe to share between
threads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Sequence, Tuple, Union

from .errors import IntegrityError, ParseError, PlanarityError

__all__ = [
    "BraidWord", "AnnularDiagram", "Crossing", "PlanarDiagram",
    "parse_braid", "braid_closure", "annular_to_planar",
    "augment_with_meridian", "parse_pd", "serialize", "serialize_braid",
    "simplify_planar", "model_link", "apply_move", "free_reduce",
    "Conjugate", "InsertPair", "DeletePair", "BraidRelation",
]


# ---------------------------------------------------------------------------
# braid words


@dataclass(frozen=True)
class BraidWord:
    """A word in the braid group on ``strand_count`` strands.

    Letters are nonzero integers; letter ``g`` with ``|g| = i`` is the
    generator crossing strands ``i`` and ``i+1``, positive for sigma_i and
    negative for its inverse.  The empty word is the trivial braid.
    """

    strand_count: int
    letters: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.strand_count < 1:
            raise ParseError(f"strand count must be positive, got {self.strand_count}")
        object.__setattr__(self, "letters", tuple(self.letters))
        for g in self.letters:
            if g == 0:
                raise ParseError("0 is not a braid generator")
            if abs(g) >= self.strand_count:
                raise ParseError(
                    f"generator {g} needs at least {abs(g) + 1} strands, "
                    f"word has {self.strand_count}")

    def __len__(self):
        return len(self.letters)

    def permutation(self) -> Tuple[int, ...]:
        """Where each strand ends up: position p (0-based) maps to perm[p]."""
        perm = list(range(self.strand_count))
        for g in self.letters:
            i = abs(g) - 1
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
        # perm tracks which strand sits at each position; invert it so that
        # entry s is the final position of the strand starting at s.
        inv = [0] * self.strand_count
        for pos, strand in enumerate(perm):
            inv[strand] = pos
        return tuple(inv)

    def cycles(self) -> List[List[int]]:
        """Cycles of the underlying permutation, each ordered from its
        smallest strand, cycles sorted by that smallest strand."""
        perm = self.permutation()
        seen = [False] * self.strand_count
        out = []
        for s in range(self.strand_count):
            if seen[s]:
                continue
            cyc = []
            cur = s
            while not seen[cur]:
                seen[cur] = True
                cyc.append(cur)
                cur = perm[cur]
            out.append(cyc)
        return out

    def writhe(self) -> int:
        return sum(1 if g > 0 else -1 for g in self.letters)


def parse_braid(text: str, strands: int) -> BraidWord:
    """Parse whitespace-separated signed generator indices."""
    letters = []
    for token in text.split():
        try:
            g = int(token)
        except ValueError:
            raise ParseError(f"braid letter {token!r} is not an integer") from None
        if g == 0:
            raise ParseError("braid letter 0 is not allowed")
        if abs(g) >= strands:
            raise ParseError(
                f"braid letter {g} out of range for {strands} strands")
        letters.append(g)
    return BraidWord(strands, tuple(letters))


def serialize_braid(b: BraidWord) -> str:
    return " ".join(str(g) for g in b.letters)


# ---------------------------------------------------------------------------
# annular diagrams (braid closures)


@dataclass(frozen=True)
class AnnularDiagram:
    """A link in the solid torus, presented as the closure of a braid.

    ``component_windings`` lists, per closure component, how many times it
    winds around the axis (the length of the corresponding permutation
    cycle), ordered by the smallest strand in each cycle.
    """

    presentation: BraidWord
    component_windings: Tuple[int, ...]

    @property
    def component_count(self) -> int:
        return len(self.component_windings)

    @property
    def crossing_count(self) -> int:
        return len(self.presentation.letters)


def braid_closure(b: BraidWord) -> AnnularDiagram:
    windings = tuple(len(c) for c in b.cycles())
    return AnnularDiagram(b, windings)


# ---------------------------------------------------------------------------
# planar diagrams


@dataclass(frozen=True)
class Crossing:
    """PD crossing: arcs counterclockwise from the incoming under-arc."""

    arcs: Tuple[int, int, int, int]
    sign: int

    def over_in_slot(self) -> int:
        return 3 if self.sign > 0 else 1

    def over_out_slot(self) -> int:
        return 1 if self.sign > 0 else 3


@dataclass(frozen=True)
class PlanarDiagram:
    """A validated oriented link diagram in the plane.

    Built by :func:`parse_pd`, :func:`annular_to_planar`,
    :func:`augment_with_meridian` or :func:`model_link`; not meant to be
    constructed by hand.  ``axis_arcs`` marks arcs that run once around the
    annulus axis (nonempty only for braid-closure planarizations that keep
    the axis), and ``essential_free_circles`` counts crossingless
    components that wind the axis.
    """

    crossings: Tuple[Crossing, ...]
    arc_count: int
    free_circles: int
    component_count: int
    axis_arcs: frozenset = field(default_factory=frozenset)
    essential_free_circles: int = 0

    @property
    def n_plus(self) -> int:
        return sum(1 for c in self.crossings if c.sign > 0)

    @property
    def n_minus(self) -> int:
        return sum(1 for c in self.crossings if c.sign < 0)

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    def writhe(self) -> int:
        return self.n_plus - self.n_minus


def serialize(d: PlanarDiagram) -> str:
    """Emit the PD text grammar; arcs are printed 1-based."""
    parts = [f"X({c.arcs[0] + 1},{c.arcs[1] + 1},{c.arcs[2] + 1},{c.arcs[3] + 1})"
             for c in d.crossings]
    parts.extend(f"O({d.arc_count + k + 1})" for k in range(d.free_circles))
    return " ".join(parts)


# --- construction internals ------------------------------------------------


def _build_planar(raw: Sequence[Tuple[Tuple[int, int, int, int], int]],
                  free_circles: int,
                  axis_arcs: Iterable[int] = (),
                  essential_free: int = 0) -> PlanarDiagram:
    """Normalize signed raw crossings into a canonical PlanarDiagram.

    Renumbers arcs densely in traversal order, counts components, and
    validates arity, orientation roles and planarity.  Components that
    never pass under anything carry no orientation information, so they
    are flipped, if needed, to the canonical direction (head of their
    smallest arc at its first listed endpoint); this preserves n_plus and
    n_minus because such a component has no self-crossings and its
    crossing signs with every other component balance.
    """
    tuples = [tuple(arcs) for arcs, _sign in raw]
    signs = [sign for _arcs, sign in raw]
    occ: Dict[int, List[Tuple[int, int]]] = {}
    for ci, arcs in enumerate(tuples):
        for slot, arc in enumerate(arcs):
            occ.setdefault(arc, []).append((ci, slot))
    for arc, places in occ.items():
        if len(places) != 2:
            raise ParseError(f"arc {arc} appears {len(places)} times, expected 2")

    def compute_roles():
        # role of each arc endpoint: head = the arc arrives there
        heads: Dict[int, Tuple[int, int]] = {}
        tails: Dict[int, Tuple[int, int]] = {}
        for ci, arcs in enumerate(tuples):
            over_in = 3 if signs[ci] > 0 else 1
            over_out = 1 if signs[ci] > 0 else 3
            for slot in (0, over_in):
                arc = arcs[slot]
                if arc in heads:
                    raise IntegrityError(f"arc {arc} has two incoming endpoints")
                heads[arc] = (ci, slot)
            for slot in (2, over_out):
                arc = arcs[slot]
                if arc in tails:
                    raise IntegrityError(f"arc {arc} has two outgoing endpoints")
                tails[arc] = (ci, slot)
        return heads, tails

    def trace_components(heads):
        # successor: follow the arc to its head, exit on the same strand
        def successor(arc: int) -> int:
            ci, slot = heads[arc]
            if slot == 0:
                return tuples[ci][2]
            return tuples[ci][1 if signs[ci] > 0 else 3]

        comps: List[List[int]] = []
        seen: Dict[int, int] = {}
        for start in sorted(occ):
            if start in seen:
                continue
            comp = []
            cur = start
            while cur not in seen:
                seen[cur] = len(comps)
                comp.append(cur)
                cur = successor(cur)
            if cur != start:
                raise IntegrityError("strand traversal does not close up")
            comps.append(comp)
        return comps

    heads, _tails = compute_roles()
    comps = trace_components(heads)
    flipped = False
    for comp in comps:
        slots = [s for arc in comp for (_ci, s) in occ[arc]]
        if 0 in slots or 2 in slots:
            continue
        a_min = comp[0]
        if heads[a_min] != occ[a_min][0]:
            for ci in {ci for arc in comp for (ci, _s) in occ[arc]}:
                signs[ci] = -signs[ci]
            flipped = True
    if flipped:
        heads, _tails = compute_roles()
        comps = trace_components(heads)

    renum: Dict[int, int] = {}
    for comp in comps:
        for arc in comp:
            renum[arc] = len(renum)
    components = len(comps)

    crossings = tuple(
        Crossing(tuple(renum[a] for a in arcs), sign)
        for arcs, sign in zip(tuples, signs))
    diagram = PlanarDiagram(
        crossings=crossings,
        arc_count=len(renum),
        free_circles=free_circles,
        component_count=components + free_circles,
        axis_arcs=frozenset(renum[a] for a in axis_arcs),
        essential_free_circles=essential_free,
    )
    _check_planarity(diagram)
    return diagram


def _check_planarity(d: PlanarDiagram) -> None:
    """Euler-formula check V - E + F = 2 on every connected component."""
    n = len(d.crossings)
    if n == 0:
        return
    occ: Dict[int, List[Tuple[int, int]]] = {}
    for ci, cr in enumerate(d.crossings):
        for slot, arc in enumerate(cr.arcs):
            occ.setdefault(arc, []).append((ci, slot))

    # darts: (arc, end) traverses the arc toward occurrence `end`.
    visited = set()
    face_of_crossing: Dict[int, set] = {}
    faces = 0
    for arc in occ:
        for end in (0, 1):
            if (arc, end) in visited:
                continue
            faces += 1
            members = set()
            dart = (arc, end)
            while dart not in visited:
                visited.add(dart)
                a, e = dart
                ci, slot = occ[a][e]
                members.add(ci)
                nslot = (slot + 1) % 4
                narc = d.crossings[ci].arcs[nslot]
                nend = 1 if occ[narc][0] == (ci, nslot) else 0
                dart = (narc, nend)
            for ci in members:
                face_of_crossing.setdefault(ci, set()).add(faces)

    # connected components of the crossing graph via shared arcs
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for places in occ.values():
        r0 = find(places[0][0])
        r1 = find(places[1][0])
        if r0 != r1:
            parent[r0] = r1

    comp_v: Dict[int, int] = {}
    comp_e: Dict[int, int] = {}
    comp_f: Dict[int, set] = {}
    for ci in range(n):
        root = find(ci)
        comp_v[root] = comp_v.get(root, 0) + 1
        comp_f.setdefault(root, set()).update(face_of_crossing.get(ci, ()))
    for places in occ.values():
        root = find(places[0][0])
        comp_e[root] = comp_e.get(root, 0) + 1

    for root, v in comp_v.items():
        e = comp_e.get(root, 0)
        f = len(comp_f.get(root, ()))
        if v - e + f != 2:
            raise PlanarityError(
                f"crossing incidence is not planar (V-E+F = {v}-{e}+{f})")


# --- braid planarization ---------------------------------------------------


def _braid_raw(b: BraidWord):
    """Scan a braid word bottom-to-top, emitting signed PD tuples.

    Returns (raw crossings, bottom arc per position, top arc per position,
    next free arc id).  Bottom arcs are 0..m-1.
    """
    m = b.strand_count
    cur = list(range(m))
    nxt = m
    raw = []
    for g in b.letters:
        i = abs(g) - 1
        left_out, right_out = nxt, nxt + 1
        nxt += 2
        li, ri = cur[i], cur[i + 1]
        if g > 0:
            raw.append(((ri, right_out, left_out, li), 1))
        else:
            raw.append(((li, ri, right_out, left_out), -1))
        cur[i], cur[i + 1] = left_out, right_out
    return raw, list(range(m)), cur, nxt


def annular_to_planar(d: AnnularDiagram, *, mark_axis: bool = False) -> PlanarDiagram:
    """Standard closed-braid planar diagram of an annular link.

    By default the axis is forgotten.  With ``mark_axis=True`` the arcs
    running through the closure region are recorded in ``axis_arcs`` and
    crossingless closure components are counted as essential free circles,
    which is what the annular chain complex needs.
    """
    b = d.presentation
    raw, bottoms, tops, _ = _braid_raw(b)
    ident = {}
    axis = []
    free = 0
    ess_free = 0
    for j in range(b.strand_count):
        if tops[j] == bottoms[j]:
            free += 1
            ess_free += 1
        else:
            ident[tops[j]] = bottoms[j]
            axis.append(bottoms[j])
    raw = [(tuple(ident.get(a, a) for a in arcs), sign) for arcs, sign in raw]
    if not mark_axis:
        axis = []
        ess_free = 0
    return _build_planar(raw, free, axis_arcs=axis, essential_free=ess_free)


def augment_with_meridian(d: AnnularDiagram) -> PlanarDiagram:
    """Embed the solid torus standardly in the 3-sphere and add the meridian.

    The meridian circles the band of closure arcs: one pass over all
    strands, the return pass under them, giving 2m extra crossings for an
    m-strand presentation.  Every crossing with the meridian is negative
    under the fixed orientation conventions.
    """
    b = d.presentation
    m = b.strand_count
    raw, bottoms, tops, nxt = _braid_raw(b)
    mid = [nxt + j for j in range(m)]
    nxt += m
    mer = [nxt + k for k in range(2 * m)]

    # columns 1..m left to right hold braid positions m-1..0; the closure
    # arcs descend, the meridian runs east over them, returns west under.
    for col in range(1, m + 1):
        pos = m - col
        raw.append(((tops[pos], mer[col - 1], mid[pos], mer[col]), -1))
    for col in range(1, m + 1):
        east = mer[m + (m - col)]
        west = mer[(m + (m - col + 1)) % (2 * m)]
        pos = m - col
        raw.append(((east, mid[pos], west, bottoms[pos]), -1))
    return _build_planar(raw, 0)


# --- PD text ----------------------------------------------------------------


_PD_TOKEN = re.compile(r"^([XO])\(([0-9,\s]*)\)$")


def parse_pd(text: str) -> PlanarDiagram:
    """Parse PD text: ``X(a,b,c,d)`` crossings plus optional ``O(id)``
    crossingless circles.  Orientations are inferred by arc-chasing from
    the under-strand directions; components never passing under anything
    carry no orientation information and get the canonical one (smallest
    arc pointed at its first listed endpoint)."""
    tuples: List[Tuple[int, int, int, int]] = []
    frees: List[int] = []
    for token in text.split():
        match = _PD_TOKEN.match(token)
        if not match:
            raise ParseError(f"unrecognized PD token {token!r}")
        kind, body = match.groups()
        try:
            nums = [int(p.strip()) for p in body.split(",")] if body.strip() else []
        except ValueError:
            raise ParseError(f"non-integer arc id in {token!r}") from None
        if kind == "X":
            if len(nums) != 4:
                raise ParseError(f"crossing {token!r} needs 4 arc ids")
            tuples.append(tuple(nums))
        else:
            if len(nums) != 1:
                raise ParseError(f"circle {token!r} needs exactly 1 id")
            frees.append(nums[0])

    occ: Dict[int, List[Tuple[int, int]]] = {}
    for ci, arcs in enumerate(tuples):
        for slot, arc in enumerate(arcs):
            occ.setdefault(arc, []).append((ci, slot))
    for arc, places in occ.items():
        if len(places) != 2:
            raise ParseError(f"arc {arc} appears {len(places)} times, expected 2")
    if len(frees) != len(set(frees)):
        raise ParseError("duplicate crossingless circle id")
    for fid in frees:
        if fid in occ:
            raise ParseError(f"circle id {fid} also appears at a crossing")

    signs = _infer_orientations(tuples, occ)
    raw = list(zip(tuples, signs))
    return _build_planar(raw, len(frees))


def _infer_orientations(tuples, occ) -> List[int]:
    """Assign in/out roles to every crossing slot and derive signs.

    Roles: slot 0 is always incoming under, slot 2 outgoing under; the two
    over slots (1 and 3) are opposite to each other.  Under-strand roles
    seed the propagation; an arc's two endpoints take opposite roles.
    """
    role: Dict[Tuple[int, int], bool] = {}  # True = incoming

    def other_occurrence(arc, place):
        a, b = occ[arc]
        return b if place == a else a

    def assign(place, incoming, queue):
        prev = role.get(place)
        if prev is not None:
            if prev != incoming:
                ci, slot = place
                raise ParseError(
                    f"inconsistent orientation at crossing {ci}, slot {slot}")
            return
        role[place] = incoming
        queue.append(place)

    queue: List[Tuple[int, int]] = []
    for ci, arcs in enumerate(tuples):
        assign((ci, 0), True, queue)
        assign((ci, 2), False, queue)

    def propagate():
        while queue:
            ci, slot = queue.pop()
            incoming = role[(ci, slot)]
            arc = tuples[ci][slot]
            assign(other_occurrence(arc, (ci, slot)), not incoming, queue)
            if slot in (1, 3):
                partner = 4 - slot
                assign((ci, partner), not incoming, queue)

    propagate()

    # pure-over components carry no forced orientation: point the smallest
    # arc at its first listed endpoint (same canonical rule as _build_planar)
    while True:
        unset = [arc for arc in sorted(occ)
                 if role.get(occ[arc][0]) is None and role.get(occ[arc][1]) is None]
        if not unset:
            break
        assign(occ[unset[0]][0], True, queue)
        propagate()

    signs = []
    for ci in range(len(tuples)):
        over_in_3 = role.get((ci, 3))
        if over_in_3 is None:
            raise IntegrityError("orientation inference left a slot unset")
        signs.append(1 if over_in_3 else -1)
    return signs


# ---------------------------------------------------------------------------
# diagram simplification


def simplify_planar(d: PlanarDiagram) -> PlanarDiagram:
    """Collapse kinks and reducible bigons until none remain.

    A bigon collapses only when one strand passes over the other at both
    crossings (a poke); clasps, where each strand goes over once, are
    linked and survive.  For axis-marked diagrams every arc carries its
    number of closure-region passes, and a kink or bigon is collapsed
    only when its consumed arcs never pass the closure region; the move's
    supporting disk then avoids the axis, so the result is isotopic to
    the input in the annulus, not just the plane.  Splicing arcs adds
    their pass counts, keeping essential flags exact.
    """
    crossings = [list(c.arcs) for c in d.crossings]
    signs = [c.sign for c in d.crossings]
    alive = [True] * len(crossings)
    weight = {arc: 0 for cr in crossings for arc in cr}
    for arc in d.axis_arcs:
        weight[arc] = 1
    free = d.free_circles
    free_ess = d.essential_free_circles

    def splice_out(kill):
        nonlocal free, free_ess
        parent = {}

        def find(x):
            while parent.get(x, x) != x:
                parent[x] = parent.get(parent[x], parent[x])
                x = parent[x]
            return x

        for ci in kill:
            alive[ci] = False
            a, b, c, cd = crossings[ci]
            for u, v in ((a, c), (b, cd)):
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[ru] = rv
        classes = {}
        for arc in list(weight):
            classes.setdefault(find(arc), []).append(arc)
        for root, members in classes.items():
            if len(members) == 1:
                continue
            total = sum(weight.pop(m) for m in members)
            weight[root] = total
        for ci, cr in enumerate(crossings):
            if alive[ci]:
                crossings[ci] = [find(arc) for arc in cr]
        referenced = {arc for ci, cr in enumerate(crossings) if alive[ci]
                      for arc in cr}
        for arc in list(weight):
            if arc not in referenced:
                free += 1
                free_ess += weight.pop(arc) & 1

    def is_over(ci, arc):
        slots = [s for s, a in enumerate(crossings[ci]) if a == arc]
        return all(s in (1, 3) for s in slots)

    def is_under(ci, arc):
        slots = [s for s, a in enumerate(crossings[ci]) if a == arc]
        return all(s in (0, 2) for s in slots)

    changed = True
    while changed:
        changed = False
        for ci, cr in enumerate(crossings):
            if not alive[ci]:
                continue
            loops = [cr[s] for s in range(4) if cr[s] == cr[(s + 1) % 4]]
            if loops and weight[loops[0]] == 0:
                splice_out([ci])
                changed = True
                break
        if changed:
            continue
        occ = {}
        for ci, cr in enumerate(crossings):
            if not alive[ci]:
                continue
            for arc in set(cr):
                occ.setdefault(arc, []).append(ci)
        seen_pairs = set()
        for arc, places in occ.items():
            if len(places) != 2 or places[0] == places[1]:
                continue
            ci, cj = places
            if (ci, cj) in seen_pairs:
                continue
            seen_pairs.add((ci, cj))
            shared = [a for a in set(crossings[ci]) if a in crossings[cj]]
            if len(shared) < 2 or signs[ci] == signs[cj]:
                continue
            over_side = any(is_over(ci, a) and is_over(cj, a)
                            and weight[a] == 0 for a in shared)
            under_side = any(is_under(ci, a) and is_under(cj, a)
                             and weight[a] == 0 for a in shared)
            if over_side and under_side:
                splice_out([ci, cj])
                changed = True
                break

    raw = [(tuple(cr), signs[ci]) for ci, cr in enumerate(crossings)
           if alive[ci]]
    axis = [arc for arc, w in weight.items() if w & 1]
    return _build_planar(raw, free, axis_arcs=axis, essential_free=free_ess)


# ---------------------------------------------------------------------------
# moves on braid presentations


@dataclass(frozen=True)
class Conjugate:
    """Replace w by g^-1 w g (an isotopy of the closure in the annulus)."""
    generator: int


@dataclass(frozen=True)
class InsertPair:
    """Insert the cancelling pair (g, g^-1) at the given position."""
    position: int
    generator: int


@dataclass(frozen=True)
class DeletePair:
    """Delete the cancelling pair at positions (p, p+1)."""
    position: int


@dataclass(frozen=True)
class BraidRelation:
    """Rewrite sigma_i sigma_j sigma_i -> sigma_j sigma_i sigma_j at p
    (|i-j| = 1, equal signs)."""
    position: int


Move = Union[Conjugate, InsertPair, DeletePair, BraidRelation]


def free_reduce(word: BraidWord) -> BraidWord:
    """Cancel adjacent inverse pairs until none remain."""
    out: List[int] = []
    for g in word.letters:
        if out and out[-1] == -g:
            out.pop()
        else:
            out.append(g)
    return BraidWord(word.strand_count, tuple(out))


def apply_move(word: BraidWord, move: Move) -> BraidWord:
    """Apply one closure-preserving move; the result is isotopic to the
    input's closure in the annulus."""
    letters = list(word.letters)
    if isinstance(move, Conjugate):
        g = move.generator
        if g == 0 or abs(g) >= word.strand_count:
            raise ValueError(f"generator {g} out of range")
        return free_reduce(BraidWord(word.strand_count,
                                     (-g, *letters, g)))
    if isinstance(move, InsertPair):
        g = move.generator
        if g == 0 or abs(g) >= word.strand_count:
            raise ValueError(f"generator {g} out of range")
        p = move.position
        if not 0 <= p <= len(letters):
            raise ValueError(f"insert position {p} out of range")
        return BraidWord(word.strand_count,
                         tuple(letters[:p]) + (g, -g) + tuple(letters[p:]))
    if isinstance(move, DeletePair):
        p = move.position
        if not 0 <= p <= len(letters) - 2:
            raise ValueError(f"delete position {p} out of range")
        if letters[p] != -letters[p + 1]:
            raise ValueError(f"letters at {p},{p + 1} do not cancel")
        return BraidWord(word.strand_count,
                         tuple(letters[:p]) + tuple(letters[p + 2:]))
    if isinstance(move, BraidRelation):
        p = move.position
        if not 0 <= p <= len(letters) - 3:
            raise ValueError(f"relation position {p} out of range")
        g1, g2, g3 = letters[p:p + 3]
        same_sign = (g1 > 0) == (g2 > 0) == (g3 > 0)
        if g1 != g3 or not same_sign or abs(abs(g1) - abs(g2)) != 1:
            raise ValueError(f"letters at {p}..{p + 2} do not match the relation")
        return BraidWord(word.strand_count,
                         tuple(letters[:p]) + (g2, g1, g2) + tuple(letters[p + 3:]))
    raise TypeError(f"unknown move {move!r}")


# ---------------------------------------------------------------------------
# model links


MODEL_NAMES = ("U2", "P3", "unknot", "hopf_positive", "hopf_negative")


def model_link(name: str):
    """Fixed reference diagrams used by the causality decision procedures."""
    if name == "U2":
        return braid_closure(BraidWord(2, ()))
    if name == "P3":
        return augment_with_meridian(model_link("U2"))
    if name == "unknot":
        return parse_pd("O(1)")
    if name == "hopf_positive":
        return parse_pd("X(1,3,2,4) X(3,1,4,2)")
    if name == "hopf_negative":
        return parse_pd("X(1,4,2,3) X(3,2,4,1)")
    raise ParseError(f"unknown model link {name!r}; expected one of {MODEL_NAMES}")
