"""The natural partial order, the *-order and orthogonality, with witnesses.

``a <= b`` holds when some x gives ``a = xa = xb = ax* = bx*``; ``a ⊥ b`` when
some x gives ``xa = a = ax*`` and ``xb = 0 = bx*``. Witnesses are always the
least admissible index.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import rickart
from .report import CheckReport, skipped
from .ring import FiniteStarRing, RingError, is_central

NO_WITNESS = -1


@dataclass(frozen=True)
class RelationMatrix:
    kind: str
    bits: np.ndarray
    witnesses: np.ndarray | None = None  # least witness index, NO_WITNESS where absent

    @property
    def size(self) -> int:
        return self.bits.shape[0]

    def __call__(self, a, b) -> bool:
        return bool(self.bits[a, b])

    def witness(self, a, b):
        if self.witnesses is None or not self.bits[a, b]:
            return None
        return int(self.witnesses[a, b])

    def pairs(self) -> list:
        return [tuple(p) for p in np.argwhere(self.bits).tolist()]


def _frozen_bits(bits, witnesses=None):
    bits = np.asarray(bits, dtype=bool)
    bits.setflags(write=False)
    if witnesses is not None:
        witnesses = np.asarray(witnesses, dtype=np.intp)
        witnesses.setflags(write=False)
    return bits, witnesses


# -- pointwise deciders ------------------------------------------------------------


def natural_leq(ring: FiniteStarRing, a, b):
    """Least x with a = xa = xb = ax* = bx*, or None."""
    mul, star = ring.mul, ring.star
    for x in range(ring.size):
        s = star[x]
        if mul[x, a] == a and mul[x, b] == a and mul[a, s] == a and mul[b, s] == a:
            return x
    return None


def star_leq(ring: FiniteStarRing, a, b) -> bool:
    """a*a = a*b and aa* = ba*."""
    mul, s = ring.mul, ring.star[a]
    return bool(mul[s, a] == mul[s, b] and mul[a, s] == mul[b, s])


def orthogonal(ring: FiniteStarRing, a, b):
    """Least x with xa = a = ax* and xb = 0 = bx*, or None."""
    mul, star, z = ring.mul, ring.star, ring.zero
    for x in range(ring.size):
        s = star[x]
        if mul[x, a] == a and mul[a, s] == a and mul[x, b] == z and mul[b, s] == z:
            return x
    return None


def very_orthogonal(ring: FiniteStarRing, a, b):
    """Least central projection h with ha = a and hb = 0, or None."""
    for h in rickart.central_projections(ring):
        if ring.mul[h, a] == a and ring.mul[h, b] == ring.zero:
            return h
    return None


def principal_ideal(ring: FiniteStarRing, a) -> frozenset:
    """(a] = {x : x <= a}."""
    return frozenset(np.flatnonzero(natural_matrix(ring).bits[:, a]).tolist())


# -- full matrices -------------------------------------------------------------------


def _fixed_by(ring, x) -> np.ndarray:
    """Mask of a with xa = a = ax*."""
    e = np.arange(ring.size)
    return (ring.mul[x, :] == e) & (ring.mul[:, ring.star[x]] == e)


def natural_matrix(ring: FiniteStarRing) -> RelationMatrix:
    """Full natural-order matrix; O(size^2) by sweeping witnesses x in increasing order."""

    def compute():
        n = ring.size
        wit = np.full((n, n), NO_WITNESS, dtype=np.intp)
        cols = np.arange(n)
        for x in range(n):
            s = ring.star[x]
            a_of_b = ring.mul[x, :]  # xb, the only candidate a for column b
            ok = (ring.mul[:, s] == a_of_b) & _fixed_by(ring, x)[a_of_b]
            b = cols[ok]
            a = a_of_b[ok]
            fresh = wit[a, b] == NO_WITNESS
            wit[a[fresh], b[fresh]] = x
        return RelationMatrix("natural", *_frozen_bits(wit != NO_WITNESS, wit))

    return ring.cached("natural", compute)


def star_matrix(ring: FiniteStarRing) -> RelationMatrix:
    def compute():
        mul, star = ring.mul, ring.star
        e = np.arange(ring.size)
        sa = star[:, None]
        first = mul[sa, e[None, :]] == mul[star, e][:, None]  # a*b == a*a
        second = mul[e[None, :], sa] == mul[e, star][:, None]  # b a* == a a*
        return RelationMatrix("star", *_frozen_bits(first & second))

    return ring.cached("star", compute)


def marovt_star_matrix(ring: FiniteStarRing) -> RelationMatrix:
    """*-order decided through projections: a = pb = bq for projections p, q.

    Valid as a decision procedure for the *-order on Rickart rings only.
    """

    def compute():
        n = ring.size
        e = np.arange(n)
        left = np.zeros((n, n), dtype=bool)
        right = np.zeros((n, n), dtype=bool)
        for p in rickart.projections(ring):
            left[ring.mul[p, :], e] = True
            right[ring.mul[:, p], e] = True
        return RelationMatrix("star", *_frozen_bits(left & right))

    return ring.cached("marovt", compute)


def orthogonal_matrix(ring: FiniteStarRing) -> RelationMatrix:
    def compute():
        n = ring.size
        wit = np.full((n, n), NO_WITNESS, dtype=np.intp)
        for x in range(n):
            s = ring.star[x]
            kills = (ring.mul[x, :] == ring.zero) & (ring.mul[:, s] == ring.zero)
            block = _fixed_by(ring, x)[:, None] & kills[None, :] & (wit == NO_WITNESS)
            wit[block] = x
        return RelationMatrix("orthogonal", *_frozen_bits(wit != NO_WITNESS, wit))

    return ring.cached("orthogonal", compute)


def very_orthogonal_matrix(ring: FiniteStarRing) -> RelationMatrix:
    def compute():
        n = ring.size
        e = np.arange(n)
        wit = np.full((n, n), NO_WITNESS, dtype=np.intp)
        for h in rickart.central_projections(ring):
            block = (ring.mul[h, :] == e)[:, None] & (ring.mul[h, :] == ring.zero)[None, :]
            wit[block & (wit == NO_WITNESS)] = h
        return RelationMatrix("very_orthogonal", *_frozen_bits(wit != NO_WITNESS, wit))

    return ring.cached("very_orthogonal", compute)


def relation_matrix(ring: FiniteStarRing, kind: str) -> RelationMatrix:
    if kind == "natural":
        return natural_matrix(ring)
    if kind == "star":
        return star_matrix(ring)
    if kind == "orthogonal":
        return orthogonal_matrix(ring)
    if kind in ("equiv", "dominance"):
        from . import comparability

        return comparability.equiv_matrix(ring) if kind == "equiv" else comparability.dominance_matrix(ring)
    raise ValueError(f"unknown relation kind {kind!r}")


# -- order axioms -----------------------------------------------------------------------


def _first(mask):
    hits = np.argwhere(mask)
    return None if hits.size == 0 else tuple(int(v) for v in hits[0])


def check_partial_order(matrix: RelationMatrix) -> CheckReport:
    """Reflexivity, antisymmetry, transitivity, each with its least counterexample."""
    r = matrix.bits
    n = r.shape[0]
    report = CheckReport(f"partial-order[{matrix.kind}]")
    w = _first(~np.diag(r))
    report.add("reflexive", w is None, w)
    w = _first(r & r.T & ~np.eye(n, dtype=bool))
    report.add("antisymmetric", w is None, w)
    ri = r.astype(np.int64)
    witness = None
    for a in range(n):
        bad = ((ri[a] @ ri) > 0) & ~r[a]
        if bad.any():
            c = int(np.argmax(bad))
            b = int(np.argmax(r[a] & r[:, c]))
            witness = (a, b, c)
            break
    report.add("transitive", witness is None, witness)
    return report


# -- Theorem-level checks --------------------------------------------------------------


def _regular(ring) -> np.ndarray:
    e = np.arange(ring.size)
    return (ring.mul[ring.mul[e, :], e[:, None]] == e[:, None]).any(axis=1)


def units_right(ring) -> np.ndarray:
    """Mask of elements having a right inverse."""
    return (ring.mul == ring.one).any(axis=1)


def units_left(ring) -> np.ndarray:
    return (ring.mul == ring.one).any(axis=0)


def maximal_elements(ring: FiniteStarRing) -> list:
    leq = natural_matrix(ring).bits
    strict = leq & ~np.eye(ring.size, dtype=bool)
    return np.flatnonzero(~strict.any(axis=1)).tolist()


def check_order_properties(ring: FiniteStarRing) -> CheckReport:
    """Seven structural properties of the natural order, checked over all pairs."""
    n = ring.size
    L = natural_matrix(ring).bits
    e = np.arange(n)
    star = ring.star
    report = CheckReport("order-properties")

    bad = np.flatnonzero(~L[ring.zero, :])
    report.add("1-zero-least", bad.size == 0, None if bad.size == 0 else (int(bad[0]),))

    proj = np.zeros(n, dtype=bool)
    proj[rickart.projections(ring)] = True
    report.add("2-below-projection-is-projection", *_ok(L & proj[None, :] & ~proj[:, None]))

    report.add("3-star-duality", *_ok(L != L[star[:, None], star[None, :]]))

    Z = (ring.mul == ring.zero).astype(np.int64)
    NZ = 1 - Z
    # viol_r[b, a] > 0 iff some x has bx = 0 but ax != 0
    viol_r = Z @ NZ.T
    viol_l = Z.T @ NZ
    report.add("4-annihilator-monotone", *_ok(L & ((viol_r.T > 0) | (viol_l.T > 0))))

    reg = _regular(ring)
    report.add("5-regular-inherited", *_ok(L & reg[None, :] & ~reg[:, None]))

    invertible = units_right(ring) | units_left(ring)
    report.add("6-one-sided-units-maximal", *_ok(L & invertible[:, None] & (e[:, None] != e[None, :])))

    report.add("7-multiplier-symmetry", *_multiplier_symmetry(ring, L))
    return report


def _ok(violations):
    w = _first(violations)
    return w is None, w


def _multiplier_symmetry(ring, L):
    """For a <= b: (ac <= bc for every c) iff (ca <= cb for every c)."""
    mul = ring.mul
    for a, b in np.argwhere(L).tolist():
        right_all = bool(L[mul[a, :], mul[b, :]].all())
        left_all = bool(L[mul[:, a], mul[:, b]].all())
        if right_all != left_all:
            return False, (a, b)
    return True, None


def multiplier_symmetry_per_element(ring: FiniteStarRing):
    """First (a, b, c) with a <= b where ac <= bc and ca <= cb disagree, or None."""
    L = natural_matrix(ring).bits
    mul = ring.mul
    for a, b in np.argwhere(L).tolist():
        diff = L[mul[a, :], mul[b, :]] != L[mul[:, a], mul[:, b]]
        if diff.any():
            return a, b, int(np.argmax(diff))
    return None


def _meet_is_zero(ring, L):
    Li = L.astype(np.int64)
    common = Li.T @ Li  # number of common lower bounds
    return common == 1


def check_orthogonality_properties(ring: FiniteStarRing) -> CheckReport:
    n = ring.size
    L = natural_matrix(ring).bits
    O = orthogonal_matrix(ring).bits
    add, neg = ring.add, ring.neg
    e = np.arange(n)
    sub = add[e[:, None], neg[None, :]]  # sub[a, b] = a - b
    report = CheckReport("orthogonality-properties")

    bad = np.flatnonzero(np.diag(O) & (e != ring.zero))
    report.add("1-self-orthogonal-is-zero", bad.size == 0, None if bad.size == 0 else (int(bad[0]),))

    report.add("2-symmetric-and-sign", *_ok((O != O.T) | (O != O[:, neg])))

    witness = None
    reach = (L.astype(np.int64) @ O.astype(np.int64)) > 0  # [c, b]: some a >= c with a ⊥ b
    bad3 = reach & ~O
    if bad3.any():
        c, b = _first(bad3)
        a = int(np.argmax(L[c, :] & O[:, b]))
        witness = (a, b, c)
    report.add("3-orthogonality-descends", witness is None, witness)

    report.add("4-orthogonal-iff-below-difference", *_ok(O != L[e[:, None], sub]))

    # a <= b  =>  b - a <= b and b - a ⊥ a
    diff = sub.T  # diff[a, b] = b - a
    report.add("5-difference-complement", *_ok(L & ~(L[diff, e[None, :]] & O[diff, e[:, None]])))

    total = add
    upper = L[e[:, None], total] & L[e[None, :], total]
    report.add("6-meet-zero-sum-upper-bound", *_ok(O & ~(_meet_is_zero(ring, L) & upper)))

    witness = None
    for a in range(n):
        bs = np.flatnonzero(O[a])
        if bs.size == 0:
            continue
        premise = O[add[a, bs], :]  # (a + b) ⊥ c
        concl = O[a][add[bs, :]]  # a ⊥ (b + c)
        bad7 = premise & ~concl
        if bad7.any():
            i, c = _first(bad7)
            witness = (a, int(bs[i]), c)
            break
    report.add("7-orthogonal-sum", witness is None, witness)
    return report


def check_commutative_implies_star(ring: FiniteStarRing) -> CheckReport:
    report = CheckReport("commutative-natural-implies-star")
    if not np.array_equal(ring.mul, ring.mul.T):
        return skipped(report.name, "ring is not commutative")
    report.add("natural-implies-star", *_ok(natural_matrix(ring).bits & ~star_matrix(ring).bits))
    return report


def check_projection_restriction(ring: FiniteStarRing) -> CheckReport:
    """On projections the natural order is e = ef = fe."""
    projs = rickart.projections(ring)
    report = CheckReport("projection-restriction")
    L = natural_matrix(ring).bits[np.ix_(projs, projs)]
    P = rickart.projection_order(ring, projs)
    w = _first(L != P)
    report.add("agrees-with-projection-order", w is None, None if w is None else (projs[w[0]], projs[w[1]]))
    return report


# -- abelian Rickart rings -------------------------------------------------------------


def require_abelian_rickart(ring: FiniteStarRing):
    if not rickart.is_abelian(ring):
        raise RingError(f"{ring.label} is not abelian")
    if not rickart.rickart_certificate(ring).is_rickart:
        raise rickart.NotRickartError(f"{ring.label} is not a Rickart *-ring")


def is_abelian_rickart(ring: FiniteStarRing) -> bool:
    return rickart.is_abelian(ring) and rickart.rickart_certificate(ring).is_rickart


def abelian_rickart_characterization(ring: FiniteStarRing, a, b):
    """Truth of (a <= b, some projection e has a = ae = be, ab = a^2 = ba)."""
    require_abelian_rickart(ring)
    mul = ring.mul
    first = natural_matrix(ring)(a, b)
    second = any(mul[a, p] == a and mul[b, p] == a for p in rickart.projections(ring))
    third = bool(mul[a, b] == mul[a, a] == mul[b, a])
    return first, second, third


def characterization_projection(ring: FiniteStarRing, a, b):
    for p in rickart.projections(ring):
        if ring.mul[a, p] == a and ring.mul[b, p] == a:
            return p
    return None


def check_abelian_rickart_characterization(ring: FiniteStarRing) -> CheckReport:
    if not is_abelian_rickart(ring):
        return skipped("abelian-rickart", "ring is not an abelian Rickart *-ring")
    report = CheckReport("abelian-rickart")
    n = ring.size
    mul = ring.mul
    L = natural_matrix(ring).bits
    second = np.zeros((n, n), dtype=bool)
    e = np.arange(n)
    for p in rickart.projections(ring):
        # pairs (a, b) with ap = a and bp = a
        second |= (mul[:, p] == e)[:, None] & (mul[None, :, p] == e[:, None])
    third = (mul == np.diag(mul)[:, None]) & (mul.T == np.diag(mul)[:, None])
    report.add("triple-agreement", *_ok((L != second) | (L != third)))
    report.add("natural-equals-star", *_ok(L != star_matrix(ring).bits))
    return report


def check_compatibility(ring: FiniteStarRing) -> CheckReport:
    """If xa = ax* for all a, x then a <= b implies ca <= cb and ac <= bc."""
    report = CheckReport("compatibility")
    mul = ring.mul
    hyp = mul.T == mul[:, ring.star]  # hyp[a, x]: xa == ax*
    w = _first(~hyp)
    if w is not None:
        a, x = w
        report.applicable = False
        report.reason = f"hypothesis fails: x={x}, a={a} has xa != ax*"
        report.add("hypothesis", False, (x, a))
        return report
    L = natural_matrix(ring).bits
    witness = None
    for a, b in np.argwhere(L).tolist():
        bad = ~(L[mul[:, a], mul[:, b]] & L[mul[a, :], mul[b, :]])
        if bad.any():
            witness = (a, b, int(np.argmax(bad)))
            break
    report.add("hypothesis", True)
    report.add("multiplication-compatible", witness is None, witness)
    return report


compatibility_check = check_compatibility


@dataclass(frozen=True)
class PrincipalIdealIsomorphism:
    t: int
    s: int
    mapping: dict  # (a] -> (b], x -> xt


def principal_ideal_isomorphism(ring: FiniteStarRing, a, b):
    """Order isomorphism (a] -> (b], x -> xt, for central a, b with Ra = Rb.

    Returns None if the constructed map fails to be an order isomorphism.
    """
    if not (is_central(ring, a) and is_central(ring, b)):
        raise RingError("a and b must be central")
    if set(ring.mul[:, a].tolist()) != set(ring.mul[:, b].tolist()):
        raise RingError("Ra and Rb differ")
    mul = ring.mul
    t = int(np.argmax(mul[a, :] == b))
    s = int(np.argmax(mul[b, :] == a))
    L = natural_matrix(ring).bits
    down_a = np.flatnonzero(L[:, a]).tolist()
    down_b = set(np.flatnonzero(L[:, b]).tolist())
    phi = {x: int(mul[x, t]) for x in down_a}
    if set(phi.values()) != down_b or len(down_b) != len(down_a):
        return None
    for x in down_a:
        for y in down_a:
            if L[x, y] != L[phi[x], phi[y]]:
                return None
    return PrincipalIdealIsomorphism(t, s, phi)


def check_principal_ideal_isomorphisms(ring: FiniteStarRing) -> CheckReport:
    """Every pair of central elements generating the same ideal has isomorphic down-sets."""
    report = CheckReport("principal-ideal-isomorphism")
    central = np.flatnonzero((ring.mul == ring.mul.T).all(axis=1)).tolist()
    ideals = {c: frozenset(ring.mul[:, c].tolist()) for c in central}
    witness = None
    for a in central:
        for b in central:
            if ideals[a] == ideals[b] and principal_ideal_isomorphism(ring, a, b) is None:
                witness = (a, b)
                break
        if witness:
            break
    report.add("isomorphic-down-sets", witness is None, witness)
    return report
