"""Finite posets over ring elements: covers, bounds, SSC, orthomodularity, ortho-isomorphism."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import orders, rickart
from .report import CheckReport, skipped
from .ring import FiniteStarRing, RingError

EXHAUSTIVE_CAP = 8


class NotPartialOrderError(RingError):
    pass


class Poset:
    """A validated partial order on a list of ring element indices.

    ``leq`` is local: ``leq[i, j]`` compares ``elements[i]`` and ``elements[j]``.
    All public methods speak in element indices.
    """

    def __init__(self, elements, leq):
        self.elements = tuple(int(e) for e in elements)
        self.leq = np.asarray(leq, dtype=bool)
        self._pos = {e: i for i, e in enumerate(self.elements)}
        k = len(self.elements)
        strict = self.leq & ~np.eye(k, dtype=bool)
        si = strict.astype(np.int64)
        cover = strict & ~((si @ si) > 0)
        self.covers = sorted((self.elements[i], self.elements[j]) for i, j in np.argwhere(cover).tolist())
        self.bottom = self._extreme(self.leq)
        self.top = self._extreme(self.leq.T)

    def _extreme(self, rel):
        hits = np.flatnonzero(rel.all(axis=1))
        return self.elements[hits[0]] if hits.size else None

    def __len__(self):
        return len(self.elements)

    def __contains__(self, e):
        return e in self._pos

    def pos(self, e) -> int:
        return self._pos[e]

    def le(self, a, b) -> bool:
        return bool(self.leq[self._pos[a], self._pos[b]])

    def lower_bounds(self, subset) -> frozenset:
        idx = [self._pos[s] for s in subset]
        mask = self.leq[:, idx].all(axis=1) if idx else np.ones(len(self), dtype=bool)
        return frozenset(self.elements[i] for i in np.flatnonzero(mask))

    def upper_bounds(self, subset) -> frozenset:
        idx = [self._pos[s] for s in subset]
        mask = self.leq[idx, :].all(axis=0) if idx else np.ones(len(self), dtype=bool)
        return frozenset(self.elements[i] for i in np.flatnonzero(mask))

    def meet(self, a, b):
        lb = [self._pos[x] for x in self.lower_bounds((a, b))]
        best = [i for i in lb if self.leq[lb, i].all()]
        return self.elements[best[0]] if best else None

    def join(self, a, b):
        ub = [self._pos[x] for x in self.upper_bounds((a, b))]
        best = [i for i in ub if self.leq[i, ub].all()]
        return self.elements[best[0]] if best else None

    def transitive_closure(self) -> np.ndarray:
        """Reflexive-transitive closure of the cover relation, as a local matrix."""
        k = len(self)
        reach = np.eye(k, dtype=bool)
        for lo, hi in self.covers:
            reach[self._pos[lo], self._pos[hi]] = True
        ri = reach.astype(np.int64)
        while True:
            nxt = (ri @ ri) > 0
            if np.array_equal(nxt, reach):
                return reach
            reach = nxt
            ri = reach.astype(np.int64)


def make_poset(matrix: orders.RelationMatrix, elements=None) -> Poset:
    if not orders.check_partial_order(matrix).passed:
        raise NotPartialOrderError(f"the {matrix.kind} relation is not a partial order")
    if elements is None:
        elements = range(matrix.size)
    return Poset(elements, matrix.bits)


def natural_poset(ring: FiniteStarRing) -> Poset:
    return ring.cached("natural_poset", lambda: make_poset(orders.natural_matrix(ring)))


def hasse_dot(poset: Poset, names=None) -> str:
    """Canonical DOT text: nodes by index, edges lower -> upper, both sorted."""
    lines = ["digraph hasse {"]
    for e in sorted(poset.elements):
        label = str(e) if names is None else names[e]
        label = label.replace("\\", "\\\\").replace('"', '\\"')
        lines.append(f'  n{e} [label="{label}"];')
    for lo, hi in sorted(poset.covers):
        lines.append(f"  n{lo} -> n{hi};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def lower_bounds(poset: Poset, subset) -> frozenset:
    return poset.lower_bounds(subset)


def meet(poset: Poset, a, b):
    return poset.meet(a, b)


def join(poset: Poset, a, b):
    return poset.join(a, b)


def is_ssc(poset: Poset, strict: bool = False) -> CheckReport:
    """Sectional semi-complementation.

    Default: for every 0 < a < b some c with 0 < c <= b has {a, c}^l = {0}.
    ``strict=True`` uses the literal form: every a < b (a = 0 included) needs
    0 < c < b.
    """
    if poset.bottom is None:
        raise RingError("poset has no bottom element")
    zero = poset.bottom
    report = CheckReport("ssc-strict" if strict else "ssc")
    k = len(poset)
    z = poset.pos(zero)
    L = poset.leq
    Li = L.astype(np.int64)
    disjoint = (Li.T @ Li) == 1  # only the bottom lies below both
    nonzero = np.ones(k, dtype=bool)
    nonzero[z] = False
    witness = None
    for i, j in np.argwhere(L & ~np.eye(k, dtype=bool)).tolist():
        if i == z and not strict:
            continue
        below_b = L[:, j] & nonzero
        if strict:
            below_b[j] = False
        if not (below_b & disjoint[i]).any():
            witness = (poset.elements[i], poset.elements[j])
            break
    report.add("semi-complemented", witness is None, witness)
    return report


def ssc_complement(poset: Poset, a, b, strict: bool = False):
    """Least c usable for the pair a < b, or None."""
    zero = poset.bottom
    for c in poset.elements:
        if c == zero or not poset.le(c, b) or (strict and c == b):
            continue
        if poset.lower_bounds((a, c)) == {zero}:
            return c
    return None


# -- orthostructures -------------------------------------------------------------------


@dataclass(frozen=True)
class OrthoStructure:
    poset: Poset
    comp: dict  # element -> element
    ring: FiniteStarRing | None = None
    kind: str = ""  # "interval" | "projections" | ""
    anchor: int | None = None  # x for [0, x]; x'' for projection intervals
    closed: bool = True  # comp maps the carrier into itself


def interval(ring: FiniteStarRing, x) -> OrthoStructure:
    """[0, x] in the natural order with complement y -> x - y."""
    L = orders.natural_matrix(ring).bits
    elems = np.flatnonzero(L[:, x]).tolist()
    poset = Poset(elems, L[np.ix_(elems, elems)])
    comp = {y: int(ring.sub(x, y)) for y in elems}
    closed = all(c in poset for c in comp.values())
    return OrthoStructure(poset, comp, ring, "interval", int(x), closed)


def projection_interval(ring: FiniteStarRing, x) -> OrthoStructure:
    """{e in P(R) : e <= x''} in the projection order, complement e -> x'' - e."""
    _, top = rickart.double_prime(ring, x)
    projs = rickart.projections(ring)
    P = rickart.projection_order(ring, projs)
    t = projs.index(top)
    keep = [i for i in range(len(projs)) if P[i, t]]
    elems = [projs[i] for i in keep]
    poset = Poset(elems, P[np.ix_(keep, keep)])
    comp = {e: int(ring.sub(top, e)) for e in elems}
    closed = all(c in poset for c in comp.values())
    return OrthoStructure(poset, comp, ring, "projections", int(top), closed)


def is_orthomodular_poset(ortho: OrthoStructure, lattice: bool = False) -> CheckReport:
    """Axioms (i)-(v) of an orthomodular poset, optionally plus all meets/joins."""
    P, comp = ortho.poset, ortho.comp
    report = CheckReport("orthomodular-lattice" if lattice else "orthomodular-poset")
    report.add("complement-closed", ortho.closed)
    report.add("bounded", P.bottom is not None and P.top is not None)
    if not report.passed:
        return report
    zero, one = P.bottom, P.top
    E = P.elements
    pairs = [(a, b) for a in E for b in E]

    def first(pred):
        for a, b in pairs:
            if not pred(a, b):
                return a, b
        return None

    w = first(lambda a, b: not P.le(a, b) or P.le(comp[b], comp[a]))
    report.add("i-antitone", w is None, w)
    w = next(((a,) for a in E if comp[comp[a]] != a), None)
    report.add("ii-involutive", w is None, w)
    w = next(((a,) for a in E if P.join(a, comp[a]) != one or P.meet(a, comp[a]) != zero), None)
    report.add("iii-complemented", w is None, w)
    w = first(lambda a, b: not P.le(a, comp[b]) or P.join(a, b) is not None)
    report.add("iv-orthogonal-joins", w is None, w)

    def orthomodular(a, b):
        if not P.le(a, b):
            return True
        inner = P.join(a, comp[b])
        if inner is None:
            return False
        outer = P.join(a, comp[inner])
        return outer == b

    w = first(orthomodular)
    report.add("v-orthomodular", w is None, w)
    if lattice:
        w = first(lambda a, b: P.join(a, b) is not None and P.meet(a, b) is not None)
        report.add("lattice", w is None, w)
    return report


def is_orthomodular_lattice(ortho: OrthoStructure) -> CheckReport:
    return is_orthomodular_poset(ortho, lattice=True)


@dataclass(frozen=True)
class IsoResult:
    outcome: str  # "found" | "absent" | "inconclusive"
    mapping: dict | None = None
    via: str = ""

    @property
    def found(self) -> bool:
        return self.outcome == "found"


def is_ortho_isomorphism(A: OrthoStructure, B: OrthoStructure, mapping) -> bool:
    """Bijection preserving and reflecting order and commuting with complements."""
    if set(mapping) != set(A.poset.elements) or sorted(mapping.values()) != sorted(B.poset.elements):
        return False
    for a in A.poset.elements:
        if mapping[A.comp[a]] != B.comp[mapping[a]]:
            return False
        for b in A.poset.elements:
            if A.poset.le(a, b) != B.poset.le(mapping[a], mapping[b]):
                return False
    return True


def ortho_isomorphic(A: OrthoStructure, B: OrthoStructure, cap: int = EXHAUSTIVE_CAP) -> IsoResult:
    """Find an ortho-isomorphism A -> B.

    The right-projection map a -> RP(a) is tried first when A is a ring interval
    and B a projection interval of the same Rickart ring; otherwise (or if it
    fails) bijections are enumerated when |A| <= ``cap``.
    """
    if len(A.poset) != len(B.poset):
        return IsoResult("absent")
    if (
        A.kind == "interval" and B.kind == "projections" and A.ring is B.ring
        and A.ring is not None and rickart.rickart_certificate(A.ring).is_rickart
    ):
        rp = rickart.rickart_certificate(A.ring).rp
        candidate = {a: rp[a] for a in A.poset.elements}
        if is_ortho_isomorphism(A, B, candidate):
            return IsoResult("found", candidate, "rp")
    if len(A.poset) > cap:
        return IsoResult("inconclusive")
    src = A.poset.elements
    for image in itertools.permutations(B.poset.elements):
        mapping = dict(zip(src, image))
        if is_ortho_isomorphism(A, B, mapping):
            return IsoResult("found", mapping, "search")
    return IsoResult("absent")


def check_intervals(ring: FiniteStarRing) -> CheckReport:
    """Every [0, x] is an orthomodular lattice ortho-isomorphic to the projections under x''."""
    if not orders.is_abelian_rickart(ring):
        return skipped("intervals", "ring is not an abelian Rickart *-ring")
    report = CheckReport("intervals")
    bad_oml = bad_iso = None
    for x in ring.elements:
        iv = interval(ring, x)
        if bad_oml is None and not is_orthomodular_lattice(iv).passed:
            bad_oml = (x,)
        if bad_iso is None and not ortho_isomorphic(iv, projection_interval(ring, x)).found:
            bad_iso = (x,)
    report.add("orthomodular-lattice", bad_oml is None, bad_oml)
    report.add("ortho-isomorphic-to-projections", bad_iso is None, bad_iso)
    return report


def check_ssc(ring: FiniteStarRing) -> CheckReport:
    report = is_ssc(natural_poset(ring))
    report.name = "ssc"
    return report


def check_orthogonal_join_lemma(ring: FiniteStarRing) -> CheckReport:
    """In an abelian Rickart ring, a ⊥ b gives meet 0 and join a + b."""
    if not orders.is_abelian_rickart(ring):
        return skipped("orthogonal-join", "ring is not an abelian Rickart *-ring")
    P = natural_poset(ring)
    O = orders.orthogonal_matrix(ring).bits
    report = CheckReport("orthogonal-join")
    witness = None
    for a, b in np.argwhere(O).tolist():
        if P.meet(a, b) != ring.zero or P.join(a, b) != ring.add[a, b]:
            witness = (a, b)
            break
    report.add("meet-zero-join-sum", witness is None, witness)
    return report
