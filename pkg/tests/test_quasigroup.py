import pytest

from mnaq.errors import NotInS, NotInSigma, TooLarge
from mnaq.quasigroup import (
    SigmaPair,
    SPair,
    cayley_table,
    enumerate_S,
    enumerate_sigma,
    is_idempotent,
    is_latin_square,
    is_s_pair,
    is_sigma_pair,
    least_nonsquare,
    multiplier_is_isomorphism,
    opposite_and_iso_checks,
    phi_map,
    psi,
    psi_map,
    qmul,
    sigma_cardinality,
)

from conftest import field


def test_is_sigma_pair_edges():
    F = field(13)
    assert not is_sigma_pair(F, 0, 5)
    assert not is_sigma_pair(F, 5, 1)
    assert not is_sigma_pair(F, 5, 5)


@pytest.mark.parametrize("q,count", [(13, 20), (11, 12), (9, 6)])
def test_sigma_counts(q, count):
    F = field(q)
    pairs = enumerate_sigma(F)
    assert len(pairs) == count == sigma_cardinality(q)
    assert all(is_sigma_pair(F, a, b) for a, b in pairs)
    assert pairs == sorted(pairs)


@pytest.mark.parametrize("q", [9, 11, 13, 17])
def test_s_count_closed_form(q):
    m = (q - 3) // 2
    spairs = enumerate_S(field(q))
    assert len(spairs) == m * m - m == sigma_cardinality(q)
    assert spairs == sorted(spairs)


def test_quasigroup_wrapper():
    from mnaq.quasigroup import Quasigroup

    F = field(13)
    Q = Quasigroup(F, SigmaPair(2, 5))
    assert Q.mul(0, 4) == psi(F, Q.params, 4)
    assert is_latin_square(Q.table())


def test_psi_basics():
    F = field(13)
    pair = SigmaPair(2, 5)
    assert psi(F, pair, 0) == 0
    for u in range(1, 13):
        expect = F.mul(2 if F.chi(u) == 1 else 5, u)
        assert psi(F, pair, u) == expect


def test_psi_is_orthomorphism_all_pairs_f13():
    F = field(13)
    for pair in enumerate_sigma(F):
        images = [psi(F, pair, u) for u in range(13)]
        diffs = [F.sub(images[u], u) for u in range(13)]
        assert len(set(images)) == 13
        assert len(set(diffs)) == 13


def test_qmul_idempotent_and_left_zero():
    F = field(13)
    for pair in enumerate_sigma(F):
        for u in range(13):
            assert qmul(F, pair, u, u) == u
            assert qmul(F, pair, 0, u) == psi(F, pair, u)


@pytest.mark.parametrize("q", [9, 11, 13, 25])
def test_latin_square_and_idempotent(q):
    F = field(q)
    for pair in enumerate_sigma(F):
        t = cayley_table(F, pair)
        assert is_latin_square(t)
        assert is_idempotent(t)


def test_cayley_guard():
    with pytest.raises(TooLarge):
        cayley_table(field(1009), SigmaPair(2, 3))


def test_bijection_roundtrip_f13():
    F = field(13)
    pairs = enumerate_sigma(F)
    images = set()
    for pair in pairs:
        sp = psi_map(F, pair)
        assert is_s_pair(F, *sp)
        assert phi_map(F, sp) == pair
        images.add(sp)
    assert len(images) == len(pairs)
    for sp in enumerate_S(F):
        assert psi_map(F, phi_map(F, sp)) == sp


def test_psi_map_frozen_value():
    # regression constant computed at first build
    F = field(13)
    assert enumerate_sigma(F)[0] == SigmaPair(2, 5)
    assert psi_map(F, SigmaPair(2, 5)) == SPair(3, 10)


def test_phi_map_inverse_identities():
    F = field(17)
    for sp in enumerate_S(F):
        x, y = sp
        a, b = phi_map(F, sp)
        d = F.inv(F.sub(y, x))
        assert F.sub(1, a) == F.mul(F.mul(y, F.sub(1, x)), d)
        assert F.sub(1, b) == F.mul(F.sub(1, x), d)


def test_map_domain_errors():
    F = field(13)
    with pytest.raises(NotInSigma):
        psi_map(F, SigmaPair(0, 5))
    with pytest.raises(NotInS):
        phi_map(F, SPair(2, 2))


def test_least_nonsquare():
    assert least_nonsquare(field(13)) == 2
    F = field(9)
    z = least_nonsquare(F)
    assert F.chi(z) == -1
    assert all(F.chi(u) >= 0 for u in range(z))


@pytest.mark.parametrize("q", [13, 11])
def test_opposite_and_iso_all_pairs(q):
    F = field(q)
    for pair in enumerate_sigma(F):
        rep = opposite_and_iso_checks(F, pair)
        assert rep.iso_ok, (q, pair, rep.iso_witness)
        assert rep.opposite_ok, (q, pair, rep.opposite_witness)


def test_square_multiplier_is_not_swap_isomorphism():
    # guards against a vacuously-true checker: with zeta^2 (a square) the
    # swap-isomorphism check must fail for some pair with a != b
    F = field(13)
    z2 = F.mul(least_nonsquare(F), least_nonsquare(F))
    failures = [
        pair
        for pair in enumerate_sigma(F)
        if not multiplier_is_isomorphism(F, pair, SigmaPair(pair.b, pair.a), z2)[0]
    ]
    assert failures
