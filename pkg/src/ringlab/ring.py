"""Finite rings with involution stored as full operation tables.

Elements are dense indices ``0..size-1``; every operation is a table lookup.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

DEFAULT_SIZE_CAP = 4096


class RingError(ValueError):
    pass


class SizeCapError(RingError):
    pass


def _frozen(table) -> np.ndarray:
    arr = np.array(table, dtype=np.intp)
    arr.setflags(write=False)
    return arr


class FiniteStarRing:
    """A finite associative unital ring with involution.

    ``add`` and ``mul`` are ``size x size`` tables, ``neg`` and ``star`` are
    length-``size`` tables. Instances are treated as immutable; derived data
    (relation matrices and the like) is memoised in ``cache``.
    """

    def __init__(self, add, mul, star, zero, one, label="ring", element_names=None, neg=None):
        self.add = _frozen(add)
        self.mul = _frozen(mul)
        self.star = _frozen(star)
        n = self.add.shape[0]
        if n < 1:
            raise RingError("ring must have at least one element")
        if self.add.shape != (n, n) or self.mul.shape != (n, n) or self.star.shape != (n,):
            raise RingError(f"table shapes do not match size {n}")
        for name, t in (("add", self.add), ("mul", self.mul), ("star", self.star)):
            if t.min() < 0 or t.max() >= n:
                raise RingError(f"{name} table has entries outside 0..{n - 1}")
        if not (0 <= zero < n and 0 <= one < n):
            raise RingError("zero/one index out of range")
        self.size = n
        self.zero = int(zero)
        self.one = int(one)
        if neg is None:
            # the first b with a + b = 0; validate() catches rows with none
            neg = np.argmax(self.add == self.zero, axis=1)
        self.neg = _frozen(neg)
        self.label = label
        if element_names is None:
            element_names = [str(i) for i in range(n)]
        if len(element_names) != n:
            raise RingError("element_names must have one entry per element")
        self.element_names = list(element_names)
        self.cache: dict = {}

    def __repr__(self):
        return f"FiniteStarRing({self.label!r}, size={self.size})"

    def __len__(self):
        return self.size

    @property
    def elements(self) -> range:
        return range(self.size)

    def sub(self, a, b):
        return self.add[a, self.neg[b]]

    def name(self, a) -> str:
        return self.element_names[a]

    def index(self, name: str) -> int:
        """Look an element up by its display name."""
        try:
            return self.element_names.index(name)
        except ValueError:
            raise KeyError(name) from None

    def same_tables(self, other: FiniteStarRing) -> bool:
        return (
            self.size == other.size
            and self.zero == other.zero
            and self.one == other.one
            and np.array_equal(self.add, other.add)
            and np.array_equal(self.mul, other.mul)
            and np.array_equal(self.star, other.star)
        )

    def cached(self, key, compute):
        """Memoise ``compute()`` under ``key``; safe to race, the result is deterministic."""
        try:
            return self.cache[key]
        except KeyError:
            value = compute()
            self.cache[key] = value
            return value


# -- constructors ---------------------------------------------------------------


def _check_cap(size: int, size_cap: int):
    if size > size_cap:
        raise SizeCapError(f"ring of size {size} exceeds size cap {size_cap}")


def build_zn(n: int, size_cap: int = DEFAULT_SIZE_CAP) -> FiniteStarRing:
    """Integers mod ``n`` with the identity involution."""
    if n < 1:
        raise RingError("n must be positive")
    _check_cap(n, size_cap)
    r = np.arange(n)
    add = (r[:, None] + r[None, :]) % n
    mul = (r[:, None] * r[None, :]) % n
    return FiniteStarRing(add, mul, r, 0, 1 % n, label=f"Z{n}", neg=(-r) % n)


def _mixed_radix(size: int, digits: int, base: int) -> np.ndarray:
    """Digit matrix, most significant digit first."""
    idx = np.arange(size)
    out = np.empty((size, digits), dtype=np.intp)
    for pos in range(digits - 1, -1, -1):
        out[:, pos] = idx % base
        idx = idx // base
    return out


def build_matrix_ring(base: FiniteStarRing, k: int, size_cap: int = DEFAULT_SIZE_CAP) -> FiniteStarRing:
    """k x k matrices over ``base``; involution is entrywise star then transpose.

    Matrices are indexed row-major in mixed radix over the base indices, the
    (0, 0) entry being the most significant digit.
    """
    if k < 1:
        raise RingError("k must be positive")
    m = base.size
    if m ** (k * k) > size_cap:
        raise SizeCapError(f"ring of size {m}^{k * k} exceeds size cap {size_cap}")
    size = m ** (k * k)
    digits = _mixed_radix(size, k * k, m)
    mats = digits.reshape(size, k, k)
    weights = m ** np.arange(k * k - 1, -1, -1)

    def encode(entries):
        return entries.reshape(*entries.shape[:-2], k * k) @ weights

    add = encode(base.add[mats[:, None], mats[None, :]])
    mul = np.empty((size, size), dtype=np.intp)
    # row chunks keep the (chunk, size, k, k) intermediates bounded
    chunk = max(1, 2_000_000 // (size * k * k * k))
    for lo in range(0, size, chunk):
        a = mats[lo:lo + chunk, None, :, :, None]  # [A, 1, i, l, 1]
        b = mats[None, :, None, :, :]  # [1, B, 1, l, j]
        prods = base.mul[a, b]  # [A, B, i, l, j]
        acc = prods[:, :, :, 0, :]
        for l in range(1, k):
            acc = base.add[acc, prods[:, :, :, l, :]]
        mul[lo:lo + chunk] = encode(acc)
    star = encode(np.swapaxes(base.star[mats], 1, 2))
    neg = encode(base.neg[mats])
    ident = np.full((k, k), base.zero, dtype=np.intp)
    np.fill_diagonal(ident, base.one)
    names = [
        "[" + ",".join("[" + ",".join(base.element_names[e] for e in row) + "]" for row in mat) + "]"
        for mat in mats
    ]
    return FiniteStarRing(
        add, mul, star, int(encode(np.full((k, k), base.zero))), int(encode(ident)),
        label=f"M{k}({base.label})", element_names=names, neg=neg,
    )


def matrix_index(ring: FiniteStarRing, rows) -> int:
    """Index of the matrix whose entries are given by display names, e.g. ``[[1, 2], [1, 2]]``."""
    return ring.index("[" + ",".join("[" + ",".join(str(e) for e in row) + "]" for row in rows) + "]")


def build_product(factors, size_cap: int = DEFAULT_SIZE_CAP) -> FiniteStarRing:
    """Direct product with componentwise operations; first factor is the most significant digit."""
    factors = list(factors)
    if not factors:
        raise RingError("product needs at least one factor")
    sizes = [f.size for f in factors]
    size = 1
    for s in sizes:
        size *= s
    _check_cap(size, size_cap)
    idx = np.arange(size)
    comps = []
    for s in reversed(sizes):
        comps.append(idx % s)
        idx = idx // s
    comps.reverse()
    weights = []
    w = 1
    for s in reversed(sizes):
        weights.append(w)
        w *= s
    weights.reverse()

    add = np.zeros((size, size), dtype=np.intp)
    mul = np.zeros((size, size), dtype=np.intp)
    star = np.zeros(size, dtype=np.intp)
    neg = np.zeros(size, dtype=np.intp)
    zero = one = 0
    for f, c, wt in zip(factors, comps, weights):
        add += f.add[c[:, None], c[None, :]] * wt
        mul += f.mul[c[:, None], c[None, :]] * wt
        star += f.star[c] * wt
        neg += f.neg[c] * wt
        zero += f.zero * wt
        one += f.one * wt
    names = ["(" + ",".join(f.element_names[c[i]] for f, c in zip(factors, comps)) + ")" for i in range(size)]
    label = "x".join(f.label for f in factors)
    return FiniteStarRing(add, mul, star, zero, one, label=label, element_names=names, neg=neg)


# -- validation -----------------------------------------------------------------


@dataclass
class ValidationReport:
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def axioms_failed(self) -> list:
        return [name for name, _ in self.failures]


def _first_true(mask: np.ndarray):
    """Lexicographically first index where ``mask`` holds, or None."""
    flat = np.flatnonzero(mask)
    if flat.size == 0:
        return None
    return tuple(int(i) for i in np.unravel_index(flat[0], mask.shape))


def validate(ring: FiniteStarRing) -> ValidationReport:
    """Exhaustively check the ring and involution axioms.

    Each failed axiom is reported once, with its first witness in index order.
    """
    n = ring.size
    add, mul, star, neg = ring.add, ring.mul, ring.star, ring.neg
    e = np.arange(n)
    failures = []

    def check(name, violated):
        w = _first_true(violated)
        if w is not None:
            failures.append((name, w))

    def check_triples(name, lhs, rhs):
        # lhs/rhs map a -> (n, n) arrays indexed [b, c]
        for a in range(n):
            bad = lhs(a) != rhs(a)
            if bad.any():
                failures.append((name, (a,) + _first_true(bad)))
                return

    check("add_commutative", add != add.T)
    check_triples("add_associative", lambda a: add[add[a]], lambda a: add[a][add])
    check("add_identity", (add[:, ring.zero] != e) | (add[ring.zero, :] != e))
    check("add_inverse", add[e, neg] != ring.zero)
    check_triples("mul_associative", lambda a: mul[mul[a]], lambda a: mul[a][mul])
    check_triples("left_distributive", lambda a: mul[a][add], lambda a: add[mul[a][:, None], mul[a][None, :]])
    check_triples("right_distributive", lambda a: mul[add[a]], lambda a: add[mul[a][None, :], mul])
    check("mul_identity", (mul[:, ring.one] != e) | (mul[ring.one, :] != e))
    check("star_additive", star[add] != add[star[:, None], star[None, :]])
    check("star_antimultiplicative", star[mul] != mul[star[None, :], star[:, None]])
    check("star_involutive", star[star] != e)
    return ValidationReport(failures)


# -- ideals, quotients, corners ------------------------------------------------


def ideal_closure(ring: FiniteStarRing, generators) -> frozenset:
    """Smallest two-sided ideal containing ``generators`` (worklist saturation)."""
    members = {ring.zero}
    work = [int(g) for g in generators]
    while work:
        s = work.pop()
        if s in members:
            continue
        members.add(s)
        new = set(ring.mul[s].tolist()) | set(ring.mul[:, s].tolist()) | {int(ring.neg[s])}
        new.update(int(ring.add[s, t]) for t in members)
        work.extend(x for x in new if x not in members)
    return frozenset(members)


def is_ideal(ring: FiniteStarRing, subset) -> bool:
    s = sorted(set(subset))
    if not s or ring.zero not in s:
        return False
    inside = np.zeros(ring.size, dtype=bool)
    inside[s] = True
    return bool(
        inside[ring.add[np.ix_(s, s)]].all()
        and inside[ring.neg[s]].all()
        and inside[ring.mul[:, s]].all()
        and inside[ring.mul[s, :]].all()
    )


def is_star_ideal(ring: FiniteStarRing, subset) -> bool:
    if not is_ideal(ring, subset):
        raise RingError("subset is not a two-sided ideal")
    s = set(subset)
    return all(int(ring.star[a]) in s for a in s)


def build_quotient(ring: FiniteStarRing, ideal) -> FiniteStarRing:
    """Coset ring R/I; cosets are ordered and named by their minimal-index representative."""
    if not is_star_ideal(ring, ideal):
        raise RingError("ideal is not closed under the involution")
    members = np.array(sorted(set(ideal)), dtype=np.intp)
    # coset of a is {a + i : i in I}; its representative is the minimum
    rep_of = ring.add[:, members].min(axis=1)
    reps = np.unique(rep_of)
    pos = np.full(ring.size, -1, dtype=np.intp)
    pos[reps] = np.arange(reps.size)
    cls = pos[rep_of]
    add = cls[ring.add[np.ix_(reps, reps)]]
    mul = cls[ring.mul[np.ix_(reps, reps)]]
    star = cls[ring.star[reps]]
    neg = cls[ring.neg[reps]]
    names = [ring.element_names[r] for r in reps]
    return FiniteStarRing(
        add, mul, star, cls[ring.zero], cls[ring.one],
        label=f"{ring.label}/I{members.size}", element_names=names, neg=neg,
    )


def is_projection(ring: FiniteStarRing, e) -> bool:
    return ring.mul[e, e] == e and ring.star[e] == e


def build_corner(ring: FiniteStarRing, e) -> FiniteStarRing:
    """The corner ring eRe with unity ``e``; elements keep their parent names."""
    if not is_projection(ring, e):
        raise RingError(f"element {e} is not a projection")
    universe = np.unique(ring.mul[ring.mul[e, :], e])
    pos = np.full(ring.size, -1, dtype=np.intp)
    pos[universe] = np.arange(universe.size)
    sub = np.ix_(universe, universe)
    add, mul, star = pos[ring.add[sub]], pos[ring.mul[sub]], pos[ring.star[universe]]
    if (add < 0).any() or (mul < 0).any() or (star < 0).any():
        raise RingError("corner is not closed")  # unreachable for a projection
    return FiniteStarRing(
        add, mul, star, pos[ring.zero], pos[e],
        label=f"{ring.name(e)}{ring.label}{ring.name(e)}",
        element_names=[ring.element_names[u] for u in universe],
        neg=pos[ring.neg[universe]],
    )


def corner_elements(ring: FiniteStarRing, e) -> list:
    """Parent-ring indices of the corner eRe, in the corner's own order."""
    return np.unique(ring.mul[ring.mul[e, :], e]).tolist()


# -- commutation and the involution --------------------------------------------


def is_commutative(ring: FiniteStarRing) -> bool:
    return bool(np.array_equal(ring.mul, ring.mul.T))


def center(ring: FiniteStarRing) -> frozenset:
    return frozenset(np.flatnonzero((ring.mul == ring.mul.T).all(axis=1)).tolist())


def is_central(ring: FiniteStarRing, a) -> bool:
    return bool(np.array_equal(ring.mul[a, :], ring.mul[:, a]))


def noncommuting_pair(ring: FiniteStarRing):
    return _first_true(ring.mul != ring.mul.T)


def is_proper_involution(ring: FiniteStarRing):
    """Return ``(True, None)`` or ``(False, a)`` with the least nonzero a having a a* = 0."""
    e = np.arange(ring.size)
    bad = (ring.mul[e, ring.star] == ring.zero) & (e != ring.zero)
    hits = np.flatnonzero(bad)
    if hits.size:
        return False, int(hits[0])
    return True, None


def isomorphic_via(r1: FiniteStarRing, r2: FiniteStarRing, mapping) -> bool:
    """True iff ``mapping`` (r1 index -> r2 index) is a *-ring isomorphism."""
    f = np.asarray(mapping, dtype=np.intp)
    if r1.size != r2.size or np.unique(f).size != r1.size:
        return False
    return bool(
        np.array_equal(f[r1.add], r2.add[f[:, None], f[None, :]])
        and np.array_equal(f[r1.mul], r2.mul[f[:, None], f[None, :]])
        and np.array_equal(f[r1.star], r2.star[f])
        and f[r1.one] == r2.one
    )
