"""Dense univariate polynomial arithmetic and factorization over a Field.

Polynomials are tuples of element codes, constant term first, with no
trailing zeros; () is the zero polynomial.  Factorization runs square-free
decomposition, then distinct-degree splitting, then Cantor-Zassenhaus
equal-degree splitting driven by a fixed-seed SplitMix64 stream, so the
same input always factors the same way.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ZeroPolynomial
from .field import Field
from .rng import SplitMix64

Poly = tuple[int, ...]

X = (0, 1)
ONE = (1,)

FACTOR_SEED = 0x5EEDFACE0DDF00D5


def normalize(coeffs) -> Poly:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def degree(p: Poly) -> int:
    return len(p) - 1


def is_zero(p: Poly) -> bool:
    return not p


def poly_add(F: Field, a: Poly, b: Poly) -> Poly:
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        ai = a[i] if i < len(a) else 0
        bi = b[i] if i < len(b) else 0
        out.append(F.add(ai, bi))
    return normalize(out)


def poly_neg(F: Field, a: Poly) -> Poly:
    return tuple(F.neg(c) for c in a)


def poly_sub(F: Field, a: Poly, b: Poly) -> Poly:
    return poly_add(F, a, poly_neg(F, b))


def poly_scale(F: Field, c: int, a: Poly) -> Poly:
    if c == 0:
        return ()
    return normalize([F.mul(c, x) for x in a])


def poly_mul(F: Field, a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = F.add(out[i + j], F.mul(ai, bj))
    return normalize(out)


def poly_divmod(F: Field, a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroPolynomial("division by the zero polynomial")
    if len(a) < len(b):
        return (), a
    inv_lead = F.inv(b[-1])
    rem = list(a)
    quot = [0] * (len(a) - len(b) + 1)
    for shift in range(len(a) - len(b), -1, -1):
        coef = rem[shift + len(b) - 1]
        if coef:
            factor = F.mul(coef, inv_lead)
            quot[shift] = factor
            for i, bi in enumerate(b):
                if bi:
                    rem[shift + i] = F.sub(rem[shift + i], F.mul(factor, bi))
    return normalize(quot), normalize(rem)


def poly_mod(F: Field, a: Poly, b: Poly) -> Poly:
    return poly_divmod(F, a, b)[1]


def poly_div(F: Field, a: Poly, b: Poly) -> Poly:
    quot, rem = poly_divmod(F, a, b)
    assert not rem, "exact division expected"
    return quot


def monic(F: Field, a: Poly) -> Poly:
    if not a:
        return a
    if a[-1] == 1:
        return a
    return poly_scale(F, F.inv(a[-1]), a)


def poly_gcd(F: Field, a: Poly, b: Poly) -> Poly:
    while b:
        a, b = b, poly_mod(F, a, b)
    return monic(F, a)


def poly_pow_mod(F: Field, base: Poly, e: int, mod: Poly) -> Poly:
    out: Poly = ONE
    base = poly_mod(F, base, mod)
    while e:
        if e & 1:
            out = poly_mod(F, poly_mul(F, out, base), mod)
        base = poly_mod(F, poly_mul(F, base, base), mod)
        e >>= 1
    return out


def poly_derivative(F: Field, a: Poly) -> Poly:
    out = []
    for i in range(1, len(a)):
        out.append(F.mul(F.embed(i), a[i]))
    return normalize(out)


def poly_eval(F: Field, a: Poly, x: int) -> int:
    y = 0
    for c in reversed(a):
        y = F.add(F.mul(y, x), c)
    return y


def poly_eval_vec(F: Field, a: Poly, X: np.ndarray) -> np.ndarray:
    Y = np.zeros(X.shape, dtype=np.int64)
    for c in reversed(a):
        Y = F.vadd(F.vmul(Y, X), c)
    return Y


def _pth_root(F: Field, a: Poly) -> Poly:
    """Inverse of x |-> x^p on polynomials of the form h(x^p)."""
    p = F.p
    e = F.p ** (F.k - 1)  # c^(1/p) = c^(p^(k-1)) via Frobenius
    out = []
    for i in range(0, len(a), p):
        out.append(F.pow(a[i], e))
    return normalize(out)


def squarefree_decomposition(F: Field, f: Poly) -> list[tuple[Poly, int]]:
    """Monic square-free parts with multiplicities; product rebuilds f (monic)."""
    out: list[tuple[Poly, int]] = []
    fp = poly_derivative(F, f)
    if not fp:
        for h, m in squarefree_decomposition(F, _pth_root(F, f)):
            out.append((h, m * F.p))
        return out
    g = poly_gcd(F, f, fp)
    w = poly_div(F, f, g)
    i = 1
    while w != ONE:
        y = poly_gcd(F, w, g)
        z = poly_div(F, w, y)
        if degree(z) > 0:
            out.append((z, i))
        i += 1
        w = y
        g = poly_div(F, g, y)
    if g != ONE:
        for h, m in squarefree_decomposition(F, _pth_root(F, g)):
            out.append((h, m * F.p))
    return out


def _distinct_degree(F: Field, f: Poly) -> list[tuple[Poly, int]]:
    """(product of irreducibles of degree d, d) for monic square-free f."""
    out = []
    h: Poly = X
    d = 0
    while degree(f) > 0:
        d += 1
        if 2 * d > degree(f):
            out.append((f, degree(f)))
            break
        h = poly_pow_mod(F, h, F.q, f)
        g = poly_gcd(F, poly_sub(F, h, X), f)
        if degree(g) > 0:
            out.append((g, d))
            f = poly_div(F, f, g)
            h = poly_mod(F, h, f)
    return out


def _random_poly(F: Field, max_deg: int, rng: SplitMix64) -> Poly:
    while True:
        cand = normalize([rng.below(F.q) for _ in range(max_deg + 1)])
        if degree(cand) >= 1:
            return cand


def _equal_degree(F: Field, f: Poly, d: int, rng: SplitMix64) -> list[Poly]:
    """Cantor-Zassenhaus split of a monic product of degree-d irreducibles."""
    n = degree(f)
    if n == d:
        return [f]
    exp = (F.q**d - 1) // 2
    while True:
        r = _random_poly(F, n - 1, rng)
        h = poly_pow_mod(F, r, exp, f)
        g = poly_gcd(F, poly_sub(F, h, ONE), f)
        if 0 < degree(g) < n:
            return _equal_degree(F, g, d, rng) + _equal_degree(
                F, poly_div(F, f, g), d, rng
            )


def _factor_squarefree(F: Field, f: Poly, rng: SplitMix64) -> list[Poly]:
    if degree(f) == 1:
        return [f]
    if degree(f) == 2:
        return _factor_quadratic(F, f)
    out = []
    for prod, d in _distinct_degree(F, f):
        out.extend(_equal_degree(F, prod, d, rng))
    return out


def _factor_quadratic(F: Field, f: Poly) -> list[Poly]:
    """Monic x^2 + Bx + C via the discriminant (q is always odd here)."""
    c0, b1, _ = f
    disc = F.sub(F.mul(b1, b1), F.mul(F.embed(4), c0))
    chi = F.chi(disc)
    if chi == -1:
        return [f]
    inv2 = F.inv(F.embed(2))
    s = F.sqrt(disc)
    r1 = F.mul(F.sub(s, b1), inv2)
    r2 = F.mul(F.sub(F.neg(s), b1), inv2)
    return [(F.neg(r1), 1), (F.neg(r2), 1)]


@dataclass(frozen=True)
class Factorization:
    """unit * product(poly^mult) over monic pairwise-distinct irreducibles."""

    unit: int
    factors: tuple[tuple[Poly, int], ...]

    def rebuild(self, F: Field) -> Poly:
        out: Poly = (self.unit,)
        for poly, mult in self.factors:
            for _ in range(mult):
                out = poly_mul(F, out, poly)
        return out


def factorize(F: Field, p: Poly, seed: int = FACTOR_SEED) -> Factorization:
    """Complete factorization into monic irreducibles over F_q."""
    p = normalize(p)
    if not p:
        raise ZeroPolynomial("cannot factor the zero polynomial")
    unit = p[-1]
    f = monic(F, p)
    if degree(f) == 0:
        return Factorization(unit, ())
    rng = SplitMix64(seed)
    counts: dict[Poly, int] = {}
    for part, mult in squarefree_decomposition(F, f):
        for irr in _factor_squarefree(F, part, rng):
            counts[irr] = counts.get(irr, 0) + mult
    ordered = tuple(sorted(counts.items(), key=lambda kv: (degree(kv[0]), kv[0])))
    return Factorization(unit, ordered)
