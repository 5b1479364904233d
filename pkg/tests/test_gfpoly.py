import pytest

from mnaq.errors import ZeroPolynomial
from mnaq.gfpoly import (
    degree,
    factorize,
    monic,
    normalize,
    poly_derivative,
    poly_divmod,
    poly_eval,
    poly_gcd,
    poly_mul,
    poly_pow_mod,
)
from mnaq.rng import SplitMix64

from conftest import field


def test_normalize_and_degree():
    assert normalize([1, 2, 0, 0]) == (1, 2)
    assert normalize([0, 0]) == ()
    assert degree(()) == -1
    assert degree((5,)) == 0


def test_divmod_roundtrip():
    F = field(13)
    a = (3, 1, 4, 1, 5)
    b = (2, 7, 1)
    q, r = poly_divmod(F, a, b)
    assert normalize(poly_mul(F, q, b)) != a  # remainder is nonzero here
    from mnaq.gfpoly import poly_add

    assert poly_add(F, poly_mul(F, q, b), r) == a
    assert degree(r) < degree(b)


def test_divide_by_zero_poly():
    with pytest.raises(ZeroPolynomial):
        poly_divmod(field(13), (1, 2), ())


def test_gcd_monic():
    F = field(7)
    # (x-1)(x-2) and (x-1)(x-3) share x-1
    a = poly_mul(F, (6, 1), (5, 1))
    b = poly_mul(F, (6, 1), (4, 1))
    assert poly_gcd(F, a, b) == (6, 1)


def test_pow_mod():
    F = field(7)
    mod = (1, 0, 1)  # x^2 + 1, irreducible over F_7
    # x^(q^2) = x mod any irreducible quadratic
    assert poly_pow_mod(F, (0, 1), 7**2, mod) == (0, 1)


def test_derivative_char_p():
    F = field(9)  # char 3
    assert poly_derivative(F, (5, 0, 0, 1)) == ()  # d/dx (x^3 + c) = 0
    assert poly_derivative(F, (1, 2, 1)) == (2, 2)


def test_factor_x2_minus_1_over_f7():
    fac = factorize(field(7), (6, 0, 1))
    assert fac.unit == 1
    assert fac.factors == (((1, 1), 1), ((6, 1), 1))


def test_factor_x2_plus_1_over_f7_irreducible():
    # -1 is a nonsquare mod 7, so x^2 + 1 has no roots
    fac = factorize(field(7), (1, 0, 1))
    assert fac.factors == (((1, 0, 1), 1),)


def test_factor_repeated_roots():
    F = field(7)
    p = poly_mul(F, poly_mul(F, (0, 1), (0, 1)), (6, 1))  # x^2 (x - 1)
    fac = factorize(F, p)
    assert dict(fac.factors) == {(0, 1): 2, (6, 1): 1}


def test_factor_pth_power():
    F = field(9)
    # (x + 1)^3 = x^3 + 1 in characteristic 3
    fac = factorize(F, (1, 0, 0, 1))
    assert fac.factors == (((1, 1), 3),)


def test_factor_zero_raises():
    with pytest.raises(ZeroPolynomial):
        factorize(field(7), ())


def test_factor_constant():
    fac = factorize(field(7), (5,))
    assert fac.unit == 5 and fac.factors == ()


@pytest.mark.parametrize("q", [13, 27, 49])
def test_factor_roundtrip_random(q):
    F = field(q)
    rng = SplitMix64(0xBEEF ^ q)
    for _ in range(500):
        p = normalize([rng.below(q) for _ in range(6)] + [1 + rng.below(q - 1)])
        fac = factorize(F, p)
        assert fac.rebuild(F) == p
        for poly, _mult in fac.factors:
            assert poly == monic(F, poly)


def test_factorization_deterministic():
    F = field(13)
    p = (1, 2, 3, 4, 5, 6, 1)
    assert factorize(F, p) == factorize(F, p)


def test_irreducible_factors_have_no_roots_when_deg2():
    F = field(27)
    rng = SplitMix64(99)
    for _ in range(100):
        p = normalize([rng.below(27) for _ in range(5)] + [1])
        for poly, _ in factorize(F, p).factors:
            if degree(poly) == 2:
                assert all(poly_eval(F, poly, x) != 0 for x in range(27))
