"""Projections, annihilators, the Rickart property and the projection lattice."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .ring import FiniteStarRing, RingError


class NotRickartError(RingError):
    pass


def idempotents(ring: FiniteStarRing) -> frozenset:
    e = np.arange(ring.size)
    return frozenset(np.flatnonzero(ring.mul[e, e] == e).tolist())


def projections(ring: FiniteStarRing) -> list:
    """Sorted list of e with e = e^2 = e*."""

    def compute():
        e = np.arange(ring.size)
        return np.flatnonzero((ring.mul[e, e] == e) & (ring.star == e)).tolist()

    return ring.cached("projections", compute)


def central_projections(ring: FiniteStarRing) -> list:
    def compute():
        central = (ring.mul == ring.mul.T).all(axis=1)
        return [p for p in projections(ring) if central[p]]

    return ring.cached("central_projections", compute)


def is_abelian(ring: FiniteStarRing) -> bool:
    central = (ring.mul == ring.mul.T).all(axis=1)
    return all(central[i] for i in idempotents(ring))


def _as_list(a):
    if isinstance(a, (int, np.integer)):
        return [int(a)]
    return sorted(int(x) for x in a)


def right_annihilator(ring: FiniteStarRing, a) -> frozenset:
    """r(B) = {x : bx = 0 for all b in B}; ``a`` may be one element or a set."""
    rows = ring.mul[_as_list(a), :] == ring.zero
    return frozenset(np.flatnonzero(rows.all(axis=0)).tolist())


def left_annihilator(ring: FiniteStarRing, a) -> frozenset:
    cols = ring.mul[:, _as_list(a)] == ring.zero
    return frozenset(np.flatnonzero(cols.all(axis=1)).tolist())


@dataclass(frozen=True)
class RickartCertificate:
    is_rickart: bool
    rp: tuple | None = None
    lp: tuple | None = None
    annihilator_generator: tuple | None = None
    failure_witness: int | None = None


def rickart_certificate(ring: FiniteStarRing) -> RickartCertificate:
    """Decide the Rickart property by searching, per element, for a projection generator.

    r(a) = gR determines ``rp(a) = 1 - g``; the left side is searched
    independently (l(a) = Rg') to produce ``lp``.
    """
    return ring.cached("rickart", lambda: _certificate(ring))


def _certificate(ring: FiniteStarRing) -> RickartCertificate:
    n = ring.size
    kills = ring.mul == ring.zero
    right_ideal = {}
    left_ideal = {}
    for g in projections(ring):
        gr = np.zeros(n, dtype=bool)
        gr[ring.mul[g, :]] = True
        right_ideal.setdefault(gr.tobytes(), g)
        rg = np.zeros(n, dtype=bool)
        rg[ring.mul[:, g]] = True
        left_ideal.setdefault(rg.tobytes(), g)
    gen, lgen = [], []
    for a in range(n):
        g = right_ideal.get(kills[a, :].tobytes())
        h = left_ideal.get(np.ascontiguousarray(kills[:, a]).tobytes())
        if g is None or h is None:
            return RickartCertificate(False, failure_witness=a)
        gen.append(g)
        lgen.append(h)
    rp = tuple(int(ring.sub(ring.one, g)) for g in gen)
    lp = tuple(int(ring.sub(ring.one, h)) for h in lgen)
    return RickartCertificate(True, rp=rp, lp=lp, annihilator_generator=tuple(gen))


def _require(ring) -> RickartCertificate:
    cert = rickart_certificate(ring)
    if not cert.is_rickart:
        raise NotRickartError(f"{ring.label} is not a Rickart *-ring (witness {cert.failure_witness})")
    return cert


def rp(ring: FiniteStarRing, a) -> int:
    return _require(ring).rp[a]


def lp(ring: FiniteStarRing, a) -> int:
    return _require(ring).lp[a]


def right_projection_scan(ring: FiniteStarRing, a) -> list:
    """All projections e with ae = a and (ax = 0 iff ex = 0); unique in a Rickart ring."""
    kills = ring.mul == ring.zero
    return [e for e in projections(ring)
            if ring.mul[a, e] == a and np.array_equal(kills[a], kills[e])]


def double_prime(ring: FiniteStarRing, x):
    """Return ``(x', x'')`` where x' generates r(x) and x'' generates r(x')."""
    cert = _require(ring)
    x1 = cert.annihilator_generator[x]
    return x1, cert.annihilator_generator[x1]


@dataclass(frozen=True)
class ProjectionLattice:
    projections: tuple
    leq: np.ndarray  # over positions in ``projections``
    join: np.ndarray  # position table, values are ring elements
    meet: np.ndarray

    def pos(self, e) -> int:
        return self.projections.index(e)

    def join_of(self, e, f) -> int:
        return int(self.join[self.pos(e), self.pos(f)])

    def meet_of(self, e, f) -> int:
        return int(self.meet[self.pos(e), self.pos(f)])


def projection_order(ring: FiniteStarRing, projs) -> np.ndarray:
    """leq[i, j] iff projs[i] = projs[i] projs[j] = projs[j] projs[i]."""
    p = np.asarray(projs, dtype=np.intp)
    return (ring.mul[p[:, None], p[None, :]] == p[:, None]) & (ring.mul[p[None, :], p[:, None]] == p[:, None])


def _order_lub(leq: np.ndarray, i, j):
    ub = np.flatnonzero(leq[i] & leq[j])
    least = [u for u in ub if leq[u, ub].all()]
    return least[0] if least else None


def _order_glb(leq: np.ndarray, i, j):
    lb = np.flatnonzero(leq[:, i] & leq[:, j])
    greatest = [u for u in lb if leq[lb, u].all()]
    return greatest[0] if greatest else None


def projection_lattice(ring: FiniteStarRing) -> ProjectionLattice:
    """Lattice of projections with e v f = f + RP(e(1-f)) and e ^ f = e - LP(e(1-f)).

    The formula tables are cross-checked against order-theoretic bounds;
    a mismatch raises ``AssertionError``.
    """
    cert = _require(ring)
    projs = tuple(projections(ring))
    leq = projection_order(ring, projs)
    k = len(projs)
    join = np.empty((k, k), dtype=np.intp)
    meet = np.empty((k, k), dtype=np.intp)
    for i, e in enumerate(projs):
        for j, f in enumerate(projs):
            t = ring.mul[e, ring.sub(ring.one, f)]
            join[i, j] = ring.add[f, cert.rp[t]]
            meet[i, j] = ring.sub(e, cert.lp[t])
            lub, glb = _order_lub(leq, i, j), _order_glb(leq, i, j)
            assert lub is not None and projs[lub] == join[i, j], f"join formula disagrees at ({e}, {f})"
            assert glb is not None and projs[glb] == meet[i, j], f"meet formula disagrees at ({e}, {f})"
    return ProjectionLattice(projs, leq, join, meet)
