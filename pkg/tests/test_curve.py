import numpy as np
import pytest

from skabelund import (
    OutOfDomain,
    UnsupportedS,
    contains,
    make_params,
    phi,
    phi1,
    phi2,
    pole_order_table,
    profile_from_generators,
    quartic_apery,
    quartic_apery_stats,
    quartic_generators,
    quartic_multiplicity,
    rational_apery,
    rational_apery_stats,
    rational_generators,
)
from skabelund.curve import phi_values


def test_make_params_small():
    p = make_params(1)
    assert (p.s, p.q0, p.q, p.genus, p.two_g_minus_2) == (1, 2, 8, 196, 390)
    assert make_params(2).genus == 15376
    assert make_params(3).genus == 1032256  # 128 * 127^2 / 2


@pytest.mark.parametrize("bad", [0, 7, -1, "2", 2.0])
def test_make_params_rejects(bad):
    with pytest.raises(UnsupportedS):
        make_params(bad)


def test_genus_formula_all_sizes():
    for s in range(1, 7):
        p = make_params(s)
        assert p.q == 2 * p.q0**2 and p.q0 == 2**s
        assert 2 * p.genus == p.q**3 - 2 * p.q**2 + p.q
        assert p.two_g_minus_2 == 2 * p.genus - 2


def test_rational_generators():
    assert rational_generators(make_params(1)).gens == (40, 50, 60, 64, 65)
    assert rational_generators(make_params(2)).gens == (800, 900, 1000, 1024, 1025)
    for s in range(1, 7):
        p = make_params(s)
        gens = rational_generators(p).gens
        assert gens[-2:] == (p.q**2, p.q**2 + 1)
        assert len(gens) == 5


def test_rational_apery_size_one():
    p = make_params(1)
    ap = rational_apery(p)
    assert len(ap) == 40
    assert 0 in ap
    assert max(ap) == 50 + 60 + 4 * 64 + 65 == 431
    assert max(ap) - 40 == 2 * p.genus - 1


def test_rational_apery_size_two():
    p = make_params(2)
    ap = rational_apery(p)
    assert len(ap) == 800
    assert sum(a // 800 for a in ap) == 15376


def test_quartic_generators():
    p = make_params(1)
    gens = quartic_generators(p).gens
    assert gens == (57, 61, 63, 64, 65, 112, 113, 162, 211)
    assert len(gens) == 3 * p.q0 + 3
    p2 = make_params(2)
    g0 = quartic_multiplicity(p2)
    assert g0 == 993
    assert 4 * 993 - 1 == 3971 in quartic_generators(p2).gens
    for s in range(1, 5):
        pp = make_params(s)
        assert len(quartic_generators(pp).gens) == 3 * pp.q0 + 3


def test_phi1_values():
    p = make_params(1)
    assert phi1(p, 0) == 0
    assert phi1(p, 1) == 5
    assert phi1(p, 2) == 3
    prof = profile_from_generators(quartic_generators(p))
    assert contains(prof, 5 * 57 + 1)   # 286 = 113 + 112 + 61
    assert contains(prof, 3 * 57 + 2)   # 173 = 112 + 61


def test_phi2_values():
    p = make_params(1)
    assert phi2(p, 56) == 1
    assert 1 * 57 + 56 == 113  # a generator
    assert phi2(p, 49) == 7
    assert 7 * 57 + 49 == p.q**2 * (p.q - 1) == 2 * p.genus - 1 + 57
    prof = profile_from_generators(quartic_generators(p))
    assert contains(prof, phi2(p, 25) * 57 + 25)


def test_phi_domains():
    p = make_params(1)
    split = p.q * (p.q - 2) // 2
    g0 = quartic_multiplicity(p)
    with pytest.raises(OutOfDomain):
        phi1(p, split + 1)
    with pytest.raises(OutOfDomain):
        phi1(p, -1)
    with pytest.raises(OutOfDomain):
        phi2(p, split)
    with pytest.raises(OutOfDomain):
        phi2(p, g0)
    with pytest.raises(OutOfDomain):
        phi(p, g0)
    assert phi(p, split) == phi1(p, split)
    assert phi(p, split + 1) == phi2(p, split + 1)


def test_phi_antisymmetry_small():
    for s in (1, 2, 3):
        p = make_params(s)
        top = (p.q - 1) ** 2
        assert all(phi(p, i) + phi(p, top - i) == p.q - 1 for i in range(top + 1))


def test_quartic_apery():
    p = make_params(1)
    ap = quartic_apery(p)
    assert len(ap) == 57
    assert 0 in ap
    assert sum(phi(p, i) for i in range(57)) == 196
    p2 = make_params(2)
    assert len(quartic_apery(p2)) == 993


def test_apery_sets_match_engine():
    for s in (1, 2):
        p = make_params(s)
        assert rational_apery(p) == frozenset(profile_from_generators(rational_generators(p)).apery)
        assert quartic_apery(p) == frozenset(profile_from_generators(quartic_generators(p)).apery)


def test_pole_order_table_identities():
    for s in range(1, 7):
        p = make_params(s)
        q0, q = p.q0, p.q
        t = pole_order_table(p)
        ram = q - 2 * q0 + 1  # ramification degree of the cyclic cover
        assert t.x == (1, q * ram)
        assert t.y == (q0, (q + q0) * ram)
        assert t.z == (2 * q0, (q + 2 * q0) * ram)
        assert t.w == (q, (q + 2 * q0 + 1) * ram)
        assert t.w[1] == q * q + 1 == t.pi[1]
        assert t.pi[0] == q * q
        assert len(t.h) == 2 * q0 - 2
        assert len(t.g) == q0 - 1
        big = q * q + 1
        for n, (val, pole) in enumerate(t.h, start=1):
            assert val == (n + 1) * q0 * q
            assert pole == ((n + 1) * q0 - n) * big
            assert pole <= (q - 2) * big
        assert t.f1 == (q0 * q + q0, q0 * big)
        assert t.f2 == (2 * q0 * q + 2 * q0 + 1, 2 * q0 * big)
        for n, (val, pole) in enumerate(t.g):
            assert val == (2 * n + 1) * q0 * q + n + 1
            assert pole == ((2 * n + 1) * q0 - n) * big
            assert pole <= (q - 2) * big


def test_phi_vectorised_matches_scalar():
    for s in (1, 2):
        p = make_params(s)
        g0 = quartic_multiplicity(p)
        idx = np.arange(g0, dtype=np.int64)
        assert (phi_values(p, idx) == np.array([phi(p, int(i)) for i in range(g0)])).all()


def test_chunked_stats_match_engine():
    for s in (1, 2, 3):
        p = make_params(s)
        pr = profile_from_generators(rational_generators(p))
        pq = profile_from_generators(quartic_generators(p))
        sr = rational_apery_stats(p)
        sq = quartic_apery_stats(p)
        assert (sr.multiplicity, sr.genus, sr.conductor) == (pr.multiplicity, pr.genus, pr.conductor)
        assert (sq.multiplicity, sq.genus, sq.conductor) == (pq.multiplicity, pq.genus, pq.conductor)
        assert sr.symmetric and sq.symmetric


def test_chunked_stats_large_sizes():
    for s in (4, 5):
        p = make_params(s)
        sr = rational_apery_stats(p)
        sq = quartic_apery_stats(p)
        assert sr.genus == p.genus == sq.genus
        assert sr.conductor == 2 * p.genus == sq.conductor
