"""Equivalence, dominance, and the GC / PC comparability axioms for elements.

``a ~ b`` needs x, y with aa* = xx*, bb* = yy*, a*a = y*y, b*b = x*x,
x = ax = xb and y = by = ya. The x- and y-conditions never mention each
other, and the y-condition for (a, b) is the x-condition for (b, a), so the
whole relation is ``X & X.T`` for one witness matrix X.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import orders, rickart
from .orders import NO_WITNESS, RelationMatrix, _frozen_bits
from .report import CheckReport, skipped
from .ring import FiniteStarRing, build_corner, build_quotient, ideal_closure, is_star_ideal


@dataclass(frozen=True)
class EquivWitness:
    x: int
    y: int


@dataclass(frozen=True)
class GcDecomposition:
    x: int
    y: int
    z: int
    w: int


def _norms(ring):
    e = np.arange(ring.size)
    return ring.mul[e, ring.star], ring.mul[ring.star, e]  # a a*, a* a


# -- equivalence -------------------------------------------------------------------------


def _x_witness(ring, a, b):
    """Least x with x = ax = xb, aa* = xx*, b*b = x*x."""
    right, left = _norms(ring)
    mul = ring.mul
    for x in range(ring.size):
        if mul[a, x] == x and mul[x, b] == x and right[x] == right[a] and left[x] == left[b]:
            return x
    return None


def equiv(ring: FiniteStarRing, a, b):
    """Least witnesses (x, y) for a ~ b, or None."""
    x = _x_witness(ring, a, b)
    if x is None:
        return None
    y = _x_witness(ring, b, a)
    if y is None:
        return None
    return EquivWitness(x, y)


def _x_witness_matrix(ring) -> np.ndarray:
    def compute():
        n = ring.size
        right, left = _norms(ring)
        mul = ring.mul
        wit = np.full((n, n), NO_WITNESS, dtype=np.intp)
        for x in range(n):
            rows = (mul[:, x] == x) & (right == right[x])
            cols = (mul[x, :] == x) & (left == left[x])
            block = rows[:, None] & cols[None, :] & (wit == NO_WITNESS)
            wit[block] = x
        wit.setflags(write=False)
        return wit

    return ring.cached("equiv_x", compute)


def equiv_matrix(ring: FiniteStarRing) -> RelationMatrix:
    """~ as a matrix; ``witnesses`` holds the least x (y is the transpose entry)."""

    def compute():
        xw = _x_witness_matrix(ring)
        bits = (xw != NO_WITNESS) & (xw.T != NO_WITNESS)
        return RelationMatrix("equiv", *_frozen_bits(bits, np.where(bits, xw, NO_WITNESS)))

    return ring.cached("equiv", compute)


def equiv_witness(ring: FiniteStarRing, a, b):
    xw = _x_witness_matrix(ring)
    if xw[a, b] == NO_WITNESS or xw[b, a] == NO_WITNESS:
        return None
    return EquivWitness(int(xw[a, b]), int(xw[b, a]))


def _drazin_x_matrix(ring) -> np.ndarray:
    """Least x in aRb with aa* = xx* and b*b = x*x."""

    def compute():
        n = ring.size
        right, left = _norms(ring)
        mul = ring.mul
        wit = np.full((n, n), NO_WITNESS, dtype=np.intp)
        for a in range(n):
            arb = mul[mul[a, :], :]  # [r, b] = a r b
            ok = (right[arb] == right[a]) & (left[arb] == left[None, :])
            best = np.where(ok, arb, n).min(axis=0)
            wit[a] = np.where(best < n, best, NO_WITNESS)
        wit.setflags(write=False)
        return wit

    return ring.cached("drazin_x", compute)


def drazin_equiv(ring: FiniteStarRing, a, b):
    """Least (x, y) with x in aRb, y in bRa and the four norm identities, or None."""
    xw = _drazin_x_matrix(ring)
    if xw[a, b] == NO_WITNESS or xw[b, a] == NO_WITNESS:
        return None
    return int(xw[a, b]), int(xw[b, a])


def drazin_matrix(ring: FiniteStarRing) -> RelationMatrix:
    xw = _drazin_x_matrix(ring)
    return RelationMatrix("drazin", *_frozen_bits((xw != NO_WITNESS) & (xw.T != NO_WITNESS)))


def equiv_definition_divergence(ring: FiniteStarRing) -> list:
    """Pairs on which the two equivalence definitions disagree (data, not failure)."""
    diff = equiv_matrix(ring).bits != drazin_matrix(ring).bits
    return [tuple(p) for p in np.argwhere(diff).tolist()]


def non_self_equivalent(ring: FiniteStarRing) -> list:
    return np.flatnonzero(~np.diag(equiv_matrix(ring).bits)).tolist()


def check_equiv_relation(ring: FiniteStarRing) -> CheckReport:
    """Symmetry and transitivity of ~ (reflexivity is reported, not required)."""
    E = equiv_matrix(ring).bits
    report = CheckReport("equiv")
    report.add("symmetric", *orders._ok(E != E.T))
    Ei = E.astype(np.int64)
    bad = ((Ei @ Ei) > 0) & ~E
    witness = None
    if bad.any():
        a, c = orders._first(bad)
        witness = (a, int(np.argmax(E[a] & E[:, c])), c)
    report.add("transitive", witness is None, witness)
    lonely = non_self_equivalent(ring)
    report.add("reflexivity-data", True,
               note=f"{len(lonely)} elements are not self-equivalent" + (f": {lonely}" if lonely else ""))
    return report


# -- dominance ----------------------------------------------------------------------------


def dominance_matrix(ring: FiniteStarRing) -> RelationMatrix:
    """a ≲ b iff a ~ c <= b for some c; witnesses are the least such c."""

    def compute():
        n = ring.size
        E = equiv_matrix(ring).bits
        L = orders.natural_matrix(ring).bits
        wit = np.full((n, n), NO_WITNESS, dtype=np.intp)
        for a in range(n):
            cs = np.flatnonzero(E[a])
            if cs.size == 0:
                continue
            reach = L[cs, :]
            has = reach.any(axis=0)
            wit[a, has] = cs[np.argmax(reach[:, has], axis=0)]
        return RelationMatrix("dominance", *_frozen_bits(wit != NO_WITNESS, wit))

    return ring.cached("dominance", compute)


def dominated(ring: FiniteStarRing, a, b):
    """Least c with a ~ c and c <= b, or None."""
    return dominance_matrix(ring).witness(a, b)


def check_dominance_central(ring: FiniteStarRing) -> CheckReport:
    """a ≲ b implies ha ≲ hb for each central projection h."""
    D = dominance_matrix(ring).bits
    report = CheckReport("dominance")
    witness = None
    for h in rickart.central_projections(ring):
        hrow = ring.mul[h, :]
        bad = D & ~D[hrow[:, None], hrow[None, :]]
        if bad.any():
            witness = (h,) + orders._first(bad)
            break
    report.add("central-projection-scaling", witness is None, witness)

    E = equiv_matrix(ring).bits
    L = orders.natural_matrix(ring).bits
    selfeq = np.diag(E)
    report.add("equiv-implies-dominated", *orders._ok(E & ~D))
    report.add("below-implies-dominated", *orders._ok(L & selfeq[:, None] & ~D),
               note="restricted to self-equivalent a")
    return report


# -- very orthogonality ----------------------------------------------------------------


def check_very_orthogonal_annihilates(ring: FiniteStarRing) -> CheckReport:
    VO = orders.very_orthogonal_matrix(ring).bits
    report = CheckReport("very-orthogonal")
    report.add("symmetric", *orders._ok(VO != VO.T))
    report.add("aRb-zero", *orders._ok(VO & aRb_nonzero(ring)))
    return report


def aRb_nonzero(ring: FiniteStarRing) -> np.ndarray:
    """Mask of pairs with a r b != 0 for some r."""

    def compute():
        n = ring.size
        out = np.zeros((n, n), dtype=bool)
        for a in range(n):
            out[a] = (ring.mul[ring.mul[a, :], :] != ring.zero).any(axis=0)
        out.setflags(write=False)
        return out

    return ring.cached("aRb_nonzero", compute)


# -- PC -------------------------------------------------------------------------------------


def _pc_bits(ring) -> np.ndarray:
    def compute():
        L = orders.natural_matrix(ring).bits.astype(np.int64)
        L[ring.zero, :] = 0
        E = equiv_matrix(ring).bits.astype(np.int64)
        out = (L.T @ E @ L) > 0
        out.setflags(write=False)
        return out

    return ring.cached("pc", compute)


def partially_comparable(ring: FiniteStarRing, a, b):
    """Lexicographically least nonzero (c, d) with c <= a, d <= b and c ~ d, or None."""
    L = orders.natural_matrix(ring).bits
    E = equiv_matrix(ring).bits
    for c in np.flatnonzero(L[:, a]).tolist():
        if c == ring.zero:
            continue
        ds = np.flatnonzero(L[:, b] & E[c])
        ds = ds[ds != ring.zero]
        if ds.size:
            return c, int(ds[0])
    return None


def has_pc(ring: FiniteStarRing) -> CheckReport:
    report = CheckReport("pc")
    report.add("aRb-nonzero-implies-comparable", *orders._ok(aRb_nonzero(ring) & ~_pc_bits(ring)))
    return report


# -- GC -------------------------------------------------------------------------------------


def _gc_witness(ring) -> np.ndarray:
    def compute():
        n = ring.size
        D = dominance_matrix(ring).bits
        wit = np.full((n, n), NO_WITNESS, dtype=np.intp)
        for h in rickart.central_projections(ring):
            hx = ring.mul[h, :]
            cx = ring.mul[ring.sub(ring.one, h), :]
            ok = D[hx[:, None], hx[None, :]] & D[cx[None, :], cx[:, None]]
            wit[ok & (wit == NO_WITNESS)] = h
        wit.setflags(write=False)
        return wit

    return ring.cached("gc", compute)


def gc_pair(ring: FiniteStarRing, a, b):
    """Least central projection h with ha ≲ hb and (1-h)b ≲ (1-h)a, or None."""
    h = _gc_witness(ring)[a, b]
    return None if h == NO_WITNESS else int(h)


def gc_matrix(ring: FiniteStarRing) -> np.ndarray:
    return _gc_witness(ring) != NO_WITNESS


def has_gc(ring: FiniteStarRing) -> CheckReport:
    report = CheckReport("gc")
    report.add("all-pairs-generalized-comparable", *orders._ok(~gc_matrix(ring)))
    return report


def _splittings(ring) -> list:
    """splits[a] = array of x with x ⊥ (a - x)."""

    def compute():
        O = orders.orthogonal_matrix(ring).bits
        e = np.arange(ring.size)
        rest = ring.add[:, ring.neg]  # rest[a, x] = a - x
        return [e[O[e, rest[a]]] for a in range(ring.size)]

    return ring.cached("splittings", compute)


def gc_decomposition(ring: FiniteStarRing, a, b):
    """Orthogonal splits a = x + y, b = z + w with x ~ z and y, w very orthogonal.

    Returns the one with lexicographically least (x, z), or None.
    """
    found = _decomposition_search(ring, a, b)
    if found is None:
        return None
    x, z = found
    return GcDecomposition(x, int(ring.sub(a, x)), z, int(ring.sub(b, z)))


def _decomposition_search(ring, a, b):
    splits = _splittings(ring)
    E = equiv_matrix(ring).bits
    VO = orders.very_orthogonal_matrix(ring).bits
    xs, zs = splits[a], splits[b]
    ok = E[np.ix_(xs, zs)] & VO[np.ix_(ring.sub(a, xs), ring.sub(b, zs))]
    if not ok.any():
        return None
    i, j = orders._first(ok)
    return int(xs[i]), int(zs[j])


def check_gc_decomposition_theorem(ring: FiniteStarRing) -> CheckReport:
    """Generalized comparability of (a, b) iff a very-orthogonal decomposition exists."""
    G = gc_matrix(ring)
    report = CheckReport("decomposition")
    w_fwd = w_back = None
    for a in range(ring.size):
        for b in range(ring.size):
            dec = _decomposition_search(ring, a, b) is not None
            if G[a, b] and not dec and w_fwd is None:
                w_fwd = (a, b)
            if dec and not G[a, b] and w_back is None:
                w_back = (a, b)
    report.add("gc-implies-decomposition", w_fwd is None, w_fwd)
    report.add("decomposition-implies-gc", w_back is None, w_back)
    return report


def check_gc_implies_pc(ring: FiniteStarRing) -> CheckReport:
    report = CheckReport("gc-implies-pc")
    gc = has_gc(ring)
    if not gc.passed:
        report.vacuous = True
        report.add("premise", True, gc.items[0].witness, note="ring lacks GC")
        return report
    pc = has_pc(ring)
    report.add("pc", pc.passed, pc.items[0].witness)
    return report


def check_gc_pc_equivalence(ring: FiniteStarRing) -> CheckReport:
    if not orders.is_abelian_rickart(ring):
        return skipped("gc-pc", "ring is not an abelian Rickart *-ring")
    gc, pc = has_gc(ring), has_pc(ring)
    report = CheckReport("gc-pc")
    report.add("gc-iff-pc", gc.passed == pc.passed, note=f"gc={gc.passed} pc={pc.passed}")
    return report


# -- abelian Rickart lemmas -----------------------------------------------------------


def check_rp_orthogonality(ring: FiniteStarRing) -> CheckReport:
    """a ⊥ b iff RP(a)RP(b) = 0, and ab = 0 iff RP(a)RP(b) = 0."""
    if not orders.is_abelian_rickart(ring):
        return skipped("rp-ortho", "ring is not an abelian Rickart *-ring")
    rp = np.array(rickart.rickart_certificate(ring).rp, dtype=np.intp)
    killed = ring.mul[rp[:, None], rp[None, :]] == ring.zero
    O = orders.orthogonal_matrix(ring).bits
    report = CheckReport("rp-ortho")
    report.add("orthogonal-iff-rp-product-zero", *orders._ok(O != killed))
    report.add("product-zero-iff-rp-product-zero", *orders._ok((ring.mul == ring.zero) != killed))
    report.add("rp-equals-lp", *orders._ok(np.array(rickart.rickart_certificate(ring).lp) != rp))
    return report


def check_additivity(ring: FiniteStarRing) -> CheckReport:
    """a1 ⊥ a2, b1 ⊥ b2, a1 ~ b1, a2 ~ b2 imply a1 + a2 ~ b1 + b2."""
    if not orders.is_abelian_rickart(ring):
        return skipped("additivity", "ring is not an abelian Rickart *-ring")
    E = equiv_matrix(ring).bits
    O = orders.orthogonal_matrix(ring).bits
    add = ring.add
    report = CheckReport("additivity")
    witness = None
    checked = 0
    for a1, b1 in np.argwhere(E).tolist():
        a2s, b2s = np.flatnonzero(O[a1]), np.flatnonzero(O[b1])
        premise = E[np.ix_(a2s, b2s)]
        if not premise.any():
            continue
        checked += int(premise.sum())
        concl = E[np.ix_(add[a1, a2s], add[b1, b2s])]
        bad = premise & ~concl
        if bad.any():
            i, j = orders._first(bad)
            witness = (a1, int(a2s[i]), b1, int(b2s[j]))
            break
    report.add("finitely-additive", witness is None, witness, note=f"{checked} quadruples")
    return report


# -- corners, quotients, matrix rings ----------------------------------------------------


def star_ideals(ring: FiniteStarRing) -> list:
    """Distinct star-closed ideals generated by single elements, smallest first."""
    seen = set()
    for a in ring.elements:
        ideal = ideal_closure(ring, [a])
        if ideal not in seen and is_star_ideal(ring, ideal):
            seen.add(ideal)
    return sorted(seen, key=lambda s: (len(s), sorted(s)))


def check_corner_gc(ring: FiniteStarRing) -> CheckReport:
    """If R has GC then so does eRe for every projection e."""
    report = CheckReport("corner-gc")
    if not has_gc(ring).passed:
        report.vacuous = True
        report.add("premise", True, note="ring lacks GC")
        return report
    bad = next(((e,) for e in rickart.projections(ring) if not has_gc(build_corner(ring, e)).passed), None)
    report.add("corners-have-gc", bad is None, bad)
    return report


def check_quotient_gc(ring: FiniteStarRing, ideal=None) -> CheckReport:
    """If R has GC then so does R/I (for one ideal, or every single-generator star ideal)."""
    ideals = star_ideals(ring) if ideal is None else [frozenset(ideal)]
    if ideal is not None and not is_star_ideal(ring, ideal):
        raise ValueError("ideal is not closed under the involution")
    report = CheckReport("quotient-gc")
    ring_gc = has_gc(ring).passed
    converse = []
    bad = None
    for I in ideals:
        q_gc = has_gc(build_quotient(ring, I)).passed
        if ring_gc and not q_gc and bad is None:
            bad = tuple(sorted(I))
        if q_gc and not ring_gc:
            converse.append(len(I))
    if not ring_gc:
        report.vacuous = True
        report.add("premise", True, note="ring lacks GC")
    else:
        report.add("quotients-have-gc", bad is None, bad)
    if converse:
        report.add("converse-counterexamples", True,
                   note=f"R/I has GC while R does not, for ideals of sizes {converse}")
    return report


def check_matrix_corollary(matrix_ring: FiniteStarRing, base: FiniteStarRing) -> CheckReport:
    """If M_n(R) has GC then R has GC."""
    report = CheckReport("matrix-gc")
    if not has_gc(matrix_ring).passed:
        report.vacuous = True
        report.add("premise", True, note="matrix ring lacks GC")
        return report
    report.add("base-has-gc", has_gc(base).passed)
    return report
