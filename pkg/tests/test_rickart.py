import itertools

import pytest

from ringlab.rickart import (
    NotRickartError,
    central_projections,
    double_prime,
    idempotents,
    is_abelian,
    left_annihilator,
    lp,
    projection_lattice,
    projections,
    rickart_certificate,
    right_annihilator,
    right_projection_scan,
    rp,
)

from conftest import mat, ring

ALL = ["Z1", "Z2", "Z3", "Z6", "Z10", "Z12", "Z2xZ5", "Z2xZ2", "M2Z2", "M2Z3"]
RICKART = {"Z1", "Z2", "Z3", "Z6", "Z10", "Z2xZ5", "Z2xZ2", "M2Z3"}


def brute_projections(r):
    return [e for e in range(r.size) if r.mul[e, e] == e and r.star[e] == e]


def brute_rickart(r):
    """Does every r(a) equal gR for some projection g?"""
    projs = brute_projections(r)
    for a in range(r.size):
        ann = {x for x in range(r.size) if r.mul[a, x] == r.zero}
        if not any({int(r.mul[g, x]) for x in range(r.size)} == ann for g in projs):
            return False, a
    return True, None


def brute_rp(r, a):
    kills = lambda y: {x for x in range(r.size) if r.mul[y, x] == r.zero}
    found = [e for e in brute_projections(r) if r.mul[a, e] == a and kills(e) == kills(a)]
    assert len(found) == 1
    return found[0]


@pytest.mark.parametrize("name", ALL)
def test_projection_scan_matches_brute_force(name):
    r = ring(name)
    assert projections(r) == brute_projections(r)
    idem = {e for e in range(r.size) if r.mul[e, e] == e}
    assert idempotents(r) == idem
    central = [e for e in brute_projections(r) if all(r.mul[e, x] == r.mul[x, e] for x in range(r.size))]
    assert central_projections(r) == central


def test_projection_examples(z10, m23):
    assert projections(z10) == [0, 1, 5, 6]
    assert is_abelian(z10) and not is_abelian(ring("M2Z2")) and not is_abelian(m23)
    assert central_projections(m23) == [m23.zero, m23.one]
    assert len(idempotents(ring("Z2xZ2"))) == 4


@pytest.mark.parametrize("name", ALL)
def test_certificate_matches_brute_force(name):
    r = ring(name)
    cert = rickart_certificate(r)
    ok, witness = brute_rickart(r)
    assert cert.is_rickart == ok
    assert (name in RICKART) == ok
    if not ok:
        assert cert.failure_witness == witness
        with pytest.raises(NotRickartError):
            rp(r, 0)
        return
    for a in range(r.size):
        assert cert.rp[a] == brute_rp(r, a)
        assert right_projection_scan(r, a) == [cert.rp[a]]
        assert cert.lp[a] == r.star[cert.rp[r.star[a]]]
        g = cert.annihilator_generator[a]
        assert set(right_annihilator(r, a)) == {int(r.mul[g, x]) for x in range(r.size)}


def test_z10_rp_and_z12_failure(z10, z12):
    assert rickart_certificate(z10).rp == (0, 1, 6, 1, 6, 5, 6, 1, 6, 1)
    assert [lp(z10, a) for a in range(10)] == [rp(z10, a) for a in range(10)]
    cert = rickart_certificate(z12)
    assert not cert.is_rickart and cert.failure_witness == 2


def test_annihilators(z10, m23):
    assert right_annihilator(z10, 2) == {0, 5}
    assert left_annihilator(z10, 5) == {0, 2, 4, 6, 8}
    assert right_annihilator(z10, [2, 5]) == {0}
    e11 = mat(m23, [[1, 0], [0, 0]])
    e22 = mat(m23, [[0, 0], [0, 1]])
    assert e22 in right_annihilator(m23, e11) and e22 in left_annihilator(m23, e11)
    assert rp(m23, e11) == e11


@pytest.mark.parametrize("name", sorted(RICKART))
def test_double_prime_recovers_rp(name):
    r = ring(name)
    for x in range(r.size):
        x1, x2 = double_prime(r, x)
        assert {int(v) for v in r.mul[x1]} == set(right_annihilator(r, x))
        assert {int(v) for v in r.mul[x2]} == set(right_annihilator(r, x1))
        assert x2 == rp(r, x)


@pytest.mark.parametrize("name", sorted(RICKART))
def test_projection_lattice_is_lub_glb(name):
    r = ring(name)
    lat = projection_lattice(r)
    projs = list(lat.projections)
    le = lambda e, f: r.mul[e, f] == e and r.mul[f, e] == e
    for e, f in itertools.product(projs, repeat=2):
        j, m = lat.join_of(e, f), lat.meet_of(e, f)
        ub = [u for u in projs if le(e, u) and le(f, u)]
        lb = [u for u in projs if le(u, e) and le(u, f)]
        assert j in ub and all(le(j, u) for u in ub)
        assert m in lb and all(le(u, m) for u in lb)


def test_z10_lattice_values(z10):
    lat = projection_lattice(z10)
    assert lat.join_of(5, 6) == 1 and lat.meet_of(5, 6) == 0
    assert lat.join_of(0, 6) == 6 and lat.meet_of(1, 5) == 5
