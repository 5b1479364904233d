import pytest

from mnaq.assoc import ALL_CLASSES, solutions_E
from mnaq.charside import (
    is_regular_pair,
    count_good_slice_params,
    exceptional_pairs,
    f1,
    f2,
    f3,
    f4,
    g1,
    g2,
    g3,
    g4,
    s_class_member,
    sigma_count_D,
    slice_counters,
    t_grid,
    t_partition,
)
from mnaq.errors import BadSliceParam, IrregularPair, NotInS
from mnaq.quasigroup import SPair, enumerate_S, phi_map
from mnaq.weil import slice_param_admissible

from conftest import field


@pytest.mark.parametrize("q", [13, 19, 27])
def test_poly_swap_identities_pointwise(q):
    F = field(q)
    for x in range(q):
        for y in range(q):
            assert f2(F, x, y) == f1(F, y, x)
            assert f3(F, x, y) == f4(F, y, x)
            assert g2(F, x, y) == g1(F, y, x)
            assert g4(F, x, y) == g3(F, y, x)


@pytest.mark.parametrize("q", [13, 27])
def test_reciprocal_identities_on_squares(q):
    F = field(q)
    for x in range(2, q):
        for y in range(2, q):
            if F.chi(x) != 1 or F.chi(y) != 1:
                continue
            xi, yi = F.inv(x), F.inv(y)
            assert F.chi(f3(F, x, y)) == F.chi(F.neg(f1(F, xi, yi)))
            assert F.chi(g3(F, x, y)) == F.chi(g1(F, xi, yi))


def test_membership_validates_input():
    F = field(13)
    with pytest.raises(NotInS):
        s_class_member(F, SPair(0, 3), (0, 0, 0, 0))


def test_exceptional_pair_raises():
    F = field(11)
    exc = exceptional_pairs(F)
    assert exc  # x^2 - x - 1 splits mod 11 with square roots
    with pytest.raises(IrregularPair):
        s_class_member(F, exc[0], (0, 0, 0, 0))


@pytest.mark.parametrize("q", [11, 13, 59, 61])
def test_exceptional_pairs_limited_and_in_union(q):
    F = field(q)
    exc = exceptional_pairs(F)
    assert len(exc) <= 4
    for sp in exc:
        assert not is_regular_pair(F, *sp)
        # counted as non-MNA: the parameter side must agree
        assert not solutions_E(F, phi_map(F, sp)).is_empty


@pytest.mark.parametrize("q", [13, 17, 19, 23])
def test_membership_matches_e_side(q):
    F = field(q)
    for sp in enumerate_S(F):
        if not is_regular_pair(F, *sp):
            continue
        truth = {tuple(c) for c in solutions_E(F, phi_map(F, sp)).classes_present()}
        for cls in ALL_CLASSES:
            assert s_class_member(F, sp, cls) == (tuple(cls) in truth), (sp, cls)


def test_mod1_class_0000_rule():
    # chi(1-x) = chi(1-y) = chi(x-y) puts (x, y) in the identity class
    F = field(13)
    for sp in enumerate_S(F):
        if not is_regular_pair(F, *sp):
            continue
        x, y = sp
        eps = F.chi(F.sub(x, y))
        expected = F.chi(F.sub(1, x)) == eps and F.chi(F.sub(1, y)) == eps
        assert s_class_member(F, sp, (0, 0, 0, 0)) == expected
        assert s_class_member(F, sp, (1, 1, 1, 1)) == expected


def test_mod3_identity_classes_empty():
    F = field(19)
    for sp in enumerate_S(F):
        if not is_regular_pair(F, *sp):
            continue
        for cls in ((0, 0, 0, 0), (0, 0, 1, 1), (1, 1, 0, 0), (1, 1, 1, 1)):
            assert not s_class_member(F, sp, cls)
        assert s_class_member(F, sp, (0, 1, 1, 0)) == s_class_member(
            F, sp, (1, 0, 0, 1)
        )


@pytest.mark.parametrize("q", [9, 11, 13, 17, 19, 23, 25, 27, 29, 31])
def test_sigma_d_matches_method_c(q, sigma_small):
    from mnaq.assoc import sigma_count

    F = field(q)
    d = sigma_count_D(F)
    assert d == sigma_count(F, "C")
    if q in sigma_small:
        assert d == sigma_small[q]


def test_sigma_d_jobs_matches_serial():
    F = field(31)
    assert sigma_count_D(F, jobs=2) == sigma_count_D(F)


@pytest.mark.parametrize("q", [13, 17, 25, 11, 19, 27])
def test_t_partition_identities(q):
    F = field(q)
    rep = t_partition(F)
    assert rep.ok, rep.violations
    assert rep.total == sigma_count_D(F)
    if q % 4 == 1:
        assert rep.parts["t1"] + 2 * rep.parts["t2"] == rep.total
        for rho, (r_all, _, _) in rep.r_counts.items():
            if (rho[0], rho[1]) == (-1, -1) or (rho[2], rho[3]) == (-1, -1):
                assert r_all == 0
        c1 = rep.r_counts[(1, 1, 1, -1)][1]
        assert (
            c1
            == rep.r_counts[(1, 1, -1, 1)][1]
            == rep.r_counts[(1, -1, 1, 1)][1]
            == rep.r_counts[(-1, 1, 1, 1)][1]
        )


@pytest.mark.parametrize("q", [11, 19, 23, 27, 31])
def test_good_slice_count(q):
    assert count_good_slice_params(field(q)) == (q - 3) // 4


def test_slice_counters_validation():
    F = field(31)
    with pytest.raises(BadSliceParam):
        slice_counters(F, 0)
    nonsquare = next(c for c in range(2, 31) if F.chi(c) == -1)
    with pytest.raises(BadSliceParam):
        slice_counters(F, nonsquare)
    bad = next(
        c for c in range(2, 31) if F.chi(c) == 1 and F.chi(F.sub(1, c)) == -1
    )
    with pytest.raises(BadSliceParam):
        slice_counters(F, bad)


@pytest.mark.parametrize("q", [31, 43, 29, 37])
def test_slice_bounds_hold(q):
    F = field(q)
    n_adm = 0
    for c in range(2, q):
        if F.chi(c) != 1:
            continue
        if q % 4 == 3 and F.chi(F.sub(1, c)) != 1:
            continue
        sc = slice_counters(F, c)
        assert sc.admissible == slice_param_admissible(F, c)[0]
        if sc.admissible:
            n_adm += 1
            assert sc.bounds_ok
    assert n_adm > 0


@pytest.mark.parametrize("q", [29, 31])
def test_slice_sums_reconcile_with_partition(q):
    F = field(q)
    part = t_partition(F)
    sums = {}
    for c in range(2, q):
        if F.chi(c) != 1:
            continue
        if q % 4 == 3 and F.chi(F.sub(1, c)) != 1:
            continue
        for key, val in slice_counters(F, c).counts.items():
            sums[key] = sums.get(key, 0) + val
    for key, val in sums.items():
        assert val == part.parts[key]


@pytest.mark.parametrize("q", [13, 19])
def test_t_closed_under_swap_and_inversion(q):
    import numpy as np

    F = field(q)
    grid = t_grid(F)
    assert grid.sum() == sigma_count_D(F)
    assert (grid == grid.T).all()
    inv_idx = np.array([0] + [F.inv(u) for u in range(1, q)])
    assert (grid == grid[np.ix_(inv_idx, inv_idx)]).all()
