import numpy as np
import pytest

from mnaq.errors import DivisionByZero, NotOddPrimePower, TooLarge
from mnaq.field import least_irreducible, make_field, odd_prime_powers

from conftest import field


def brute_least_irreducible_quadratic(p):
    """Independent oracle: first rootless monic quadratic, constant-first order."""
    for c0 in range(p):
        for c1 in range(p):
            if all((x * x + c1 * x + c0) % p != 0 for x in range(p)):
                return (c0, c1, 1)
    raise AssertionError("no irreducible quadratic found")


def test_make_field_prime():
    F = field(7)
    assert (F.q, F.p, F.k) == (7, 7, 1)
    assert F.modulus == (0, 1)


def test_make_field_nine_modulus_matches_oracle():
    F = field(9)
    assert (F.p, F.k) == (3, 2)
    assert F.modulus == brute_least_irreducible_quadratic(3)
    assert F.modulus == (1, 0, 1)  # frozen: t^2 + 1


@pytest.mark.parametrize("k", [2, 3])
def test_least_irreducible_has_no_small_factors(k):
    # oracle: the winner must not share a root with any linear polynomial
    for p in (3, 5):
        mod = least_irreducible(p, k)
        for x in range(p):
            val = sum(c * x**i for i, c in enumerate(mod)) % p
            assert val != 0


@pytest.mark.parametrize("q", [8, 12, 1, 2, 15, 21])
def test_make_field_rejects_bad_orders(q):
    with pytest.raises(NotOddPrimePower):
        make_field(q)


def test_make_field_rejects_huge_order():
    with pytest.raises(TooLarge):
        make_field(3**13)  # odd prime power above the ceiling


@pytest.mark.parametrize("q", [13, 9, 27, 25])
def test_field_axioms_exhaustive(q):
    F = field(q)
    elems = range(q)
    for u in elems:
        assert F.add(u, 0) == u
        assert F.mul(u, 1) == u
        assert F.add(u, F.neg(u)) == 0
        if u:
            assert F.mul(u, F.inv(u)) == 1
    for u in elems:
        for v in elems:
            assert F.add(u, v) == F.add(v, u)
            assert F.mul(u, v) == F.mul(v, u)
            for w in elems:
                assert F.mul(u, F.mul(v, w)) == F.mul(F.mul(u, v), w)
                assert F.add(u, F.add(v, w)) == F.add(F.add(u, v), w)
                assert F.mul(u, F.add(v, w)) == F.add(F.mul(u, v), F.mul(u, w))


def test_field_axioms_all_small_fields_vectorized():
    # exhaustive triple checks for every field up to 49, via the vector ops
    # (the vector ops themselves are pinned to the scalar ops elsewhere)
    for q in odd_prime_powers(3, 49):
        F = field(q)
        U = F.codes[:, None, None]
        V = F.codes[None, :, None]
        W = F.codes[None, None, :]
        assert (F.vmul(F.vmul(U, V), W) == F.vmul(U, F.vmul(V, W))).all()
        assert (F.vadd(F.vadd(U, V), W) == F.vadd(U, F.vadd(V, W))).all()
        assert (
            F.vmul(U, F.vadd(V, W)) == F.vadd(F.vmul(U, V), F.vmul(U, W))
        ).all()
        A = F.codes[:, None]
        B = F.codes[None, :]
        prod = F.vmul(A, B)
        total = F.vadd(A, B)
        assert (prod == prod.T).all() and (total == total.T).all()
        assert (F.chi_table[prod] == F.chi_table[A] * F.chi_table[B]).all()


def test_field_axioms_random_large():
    F = field(10007)
    rng = np.random.default_rng(7)
    for u, v, w in rng.integers(0, F.q, size=(100_000, 3)):
        u, v, w = int(u), int(v), int(w)
        assert F.mul(u, F.add(v, w)) == F.add(F.mul(u, v), F.mul(u, w))


def test_inv_zero_raises():
    with pytest.raises(DivisionByZero):
        field(13).inv(0)


def test_specific_arithmetic_f13():
    F = field(13)
    assert F.add(5, 9) == 1
    assert F.inv(2) == 7


@pytest.mark.parametrize("q", [7, 13, 9, 27, 49, 121])
def test_chi_table_properties(q):
    F = field(q)
    chi = F.chi_table
    assert chi[0] == 0
    assert (chi == 1).sum() == (q - 1) // 2
    assert (chi == -1).sum() == (q - 1) // 2
    # chi(u) = 1 iff u is a nonzero square
    squares = {F.mul(u, u) for u in range(1, q)}
    for u in range(1, q):
        assert (chi[u] == 1) == (u in squares)
    assert F.chi(F.neg(1)) == (1 if q % 4 == 1 else -1)


@pytest.mark.parametrize("q", [13, 9, 27])
def test_chi_multiplicative_exhaustive(q):
    F = field(q)
    for u in range(q):
        for v in range(q):
            assert F.chi(F.mul(u, v)) == F.chi(u) * F.chi(v)


def test_chi_multiplicative_random_large():
    F = field(10009)
    rng = np.random.default_rng(3)
    for u, v in rng.integers(0, F.q, size=(100_000, 2)):
        u, v = int(u), int(v)
        assert F.chi(F.mul(u, v)) == F.chi(u) * F.chi(v)


def test_chi_f7_value():
    # squares mod 7 are {1, 2, 4} by enumeration
    F = field(7)
    assert sorted({(u * u) % 7 for u in range(1, 7)}) == [1, 2, 4]
    assert F.chi(3) == -1


def test_rebuild_is_identical():
    a = make_field(27)
    b = make_field(27)
    assert a.modulus == b.modulus
    assert np.array_equal(a.chi_table, b.chi_table)
    assert np.array_equal(a.sqrt_table, b.sqrt_table)


@pytest.mark.parametrize("q", [13, 81])
def test_vector_ops_match_scalar(q):
    F = field(q)
    rng = np.random.default_rng(11)
    U = rng.integers(0, q, size=200).astype(np.int64)
    V = rng.integers(0, q, size=200).astype(np.int64)
    assert all(F.vadd(U, V)[i] == F.add(int(U[i]), int(V[i])) for i in range(200))
    assert all(F.vsub(U, V)[i] == F.sub(int(U[i]), int(V[i])) for i in range(200))
    assert all(F.vmul(U, V)[i] == F.mul(int(U[i]), int(V[i])) for i in range(200))
    assert all(F.vneg(U)[i] == F.neg(int(U[i])) for i in range(200))


def test_pow_and_logs():
    F = field(81)
    log, antilog = F.logs
    for u in range(1, F.q):
        assert antilog[log[u]] == u
        assert F.pow(u, F.q - 1) == 1
    assert F.pow(0, 0) == 1
    assert F.pow(5, -1) == F.inv(5)


def test_sqrt_table():
    for q in (13, 27):
        F = field(q)
        for u in range(q):
            if F.chi(u) >= 0:
                r = F.sqrt(u)
                assert F.mul(r, r) == u


def test_odd_prime_powers_list():
    assert odd_prime_powers(3, 30) == [3, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29]
