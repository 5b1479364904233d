"""Finite fields F_q for odd prime powers q, with a precomputed quadratic character.

Elements are represented by integer codes in [0, q).  For prime q the code is
the least nonnegative residue.  For q = p^k the element sum(c_i t^i) modulo the
field's irreducible polynomial is encoded as sum(c_i p^i) with 0 <= c_i < p,
so codes are stable across runs as long as the modulus is.  The modulus is
always the lexicographically least monic irreducible of degree k over F_p
(coefficients compared constant term first), which makes element codes
reproducible across implementations.

The quadratic character chi maps nonzero squares to +1, nonsquares to -1 and
0 to 0.  It is built once per field by marking u*u for every nonzero u, giving
O(1) lookups for any q, including extension fields.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import DivisionByZero, NotOddPrimePower, TooLarge

MAX_FIELD_ORDER = 1 << 20  # tables are O(q) and the counters are O(q^2)


def factor_prime_power(q: int) -> tuple[int, int]:
    """Return (p, k) with q = p^k, or raise NotOddPrimePower."""
    if q < 3 or q % 2 == 0:
        raise NotOddPrimePower(f"q must be an odd prime power >= 3, got {q}")
    p = 3
    while p * p <= q:
        if q % p == 0:
            break
        p += 2
    else:
        return q, 1
    k = 0
    m = q
    while m % p == 0:
        m //= p
        k += 1
    if m != 1:
        raise NotOddPrimePower(f"{q} is not a prime power")
    return p, k


# ----------------------------------------------------------------------
# Dense polynomial helpers over F_p (coefficient lists, constant term first).
# Only used for modulus selection and scalar extension-field arithmetic.
# ----------------------------------------------------------------------

def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_rem_monic(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    """Remainder of a modulo monic m over F_p."""
    r = list(a)
    dm = len(m) - 1
    while len(r) - 1 >= dm and r:
        lead = r[-1]
        shift = len(r) - 1 - dm
        if lead:
            for i in range(dm + 1):
                r[shift + i] = (r[shift + i] - lead * m[i]) % p
        r.pop()
        _poly_trim(r)
    return r


def _poly_is_irreducible(m: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg(m)/2."""
    k = len(m) - 1
    if k <= 0:
        return False
    if k == 1:
        return True
    for d in range(1, k // 2 + 1):
        # monic divisors t^d + sum(c_i t^i); enumerate coefficient vectors
        for idx in range(p**d):
            c = []
            x = idx
            for _ in range(d):
                c.append(x % p)
                x //= p
            divisor = c + [1]
            if not _poly_rem_monic(m, divisor, p):
                return False
    return True


def least_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically least (constant-first) monic irreducible of degree k over F_p."""
    if k == 1:
        return (0, 1)
    for idx in range(p**k):
        c = []
        x = idx
        for _ in range(k):
            c.append(x % p)
            x //= p
        # reversing puts idx's slowest-varying digit at the constant term,
        # so increasing idx walks candidates in constant-first lex order
        c.reverse()
        cand = c + [1]
        if _poly_is_irreducible(cand, p):
            return tuple(cand)
    raise RuntimeError(f"no irreducible of degree {k} over F_{p}")  # unreachable


class Field:
    """Immutable arithmetic context for F_q; shareable across workers."""

    def __init__(self, q: int, p: int, k: int, modulus: tuple[int, ...]) -> None:
        self.q = q
        self.p = p
        self.k = k
        self.modulus = modulus
        if k > 1:
            # row i holds the coefficient vector of t^(k+i) mod modulus
            self._red_rows = self._reduction_rows()
        self.chi_table, self.sqrt_table = self._build_chi()
        self._logs: tuple[np.ndarray, np.ndarray] | None = None

    # -- construction helpers ------------------------------------------------

    def _reduction_rows(self) -> list[list[int]]:
        p, k, m = self.p, self.k, self.modulus
        rows = []
        # t^k = -(m_0 + m_1 t + ... + m_{k-1} t^{k-1})
        cur = [(-m[i]) % p for i in range(k)]
        rows.append(cur[:])
        for _ in range(k - 2):
            nxt = [0] + cur[:-1]
            lead = cur[-1]
            if lead:
                for i in range(k):
                    nxt[i] = (nxt[i] + lead * rows[0][i]) % p
            rows.append(nxt)
            cur = nxt
        return rows

    def _build_chi(self) -> tuple[np.ndarray, np.ndarray]:
        q = self.q
        chi = np.full(q, -1, dtype=np.int8)
        chi[0] = 0
        sqrt = np.zeros(q, dtype=np.int64)
        if self.k == 1:
            u = np.arange(1, q, dtype=np.int64)
            sq = (u * u) % q
            chi[sq] = 1
            # duplicate-index assignment keeps the last write, so feed the
            # roots largest-first and the least root wins
            sqrt[sq[::-1]] = u[::-1]
        else:
            for u in range(q - 1, 0, -1):
                s = self.mul(u, u)
                chi[s] = 1
                sqrt[s] = u
        return chi, sqrt

    # -- scalar element arithmetic (codes in [0, q)) ---------------------------

    def digits(self, u: int) -> list[int]:
        p = self.p
        out = []
        for _ in range(self.k):
            out.append(u % p)
            u //= p
        return out

    def add(self, u: int, v: int) -> int:
        if self.k == 1:
            return (u + v) % self.q
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.k):
            out += ((u + v) % p) * mult
            u //= p
            v //= p
            mult *= p
        return out

    def neg(self, u: int) -> int:
        if self.k == 1:
            return (-u) % self.q
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.k):
            out += ((-u) % p) * mult
            u //= p
            mult *= p
        return out

    def sub(self, u: int, v: int) -> int:
        return self.add(u, self.neg(v))

    def mul(self, u: int, v: int) -> int:
        if self.k == 1:
            return (u * v) % self.q
        p, k = self.p, self.k
        du = self.digits(u)
        dv = self.digits(v)
        conv = [0] * (2 * k - 1)
        for i, a in enumerate(du):
            if a:
                for j, b in enumerate(dv):
                    conv[i + j] = (conv[i + j] + a * b) % p
        out = conv[:k]
        for i in range(k, 2 * k - 1):
            c = conv[i]
            if c:
                row = self._red_rows[i - k]
                for j in range(k):
                    out[j] = (out[j] + c * row[j]) % p
        code = 0
        mult = 1
        for c in out:
            code += c * mult
            mult *= p
        return code

    def inv(self, u: int) -> int:
        if u == 0:
            raise DivisionByZero("0 has no multiplicative inverse")
        if self.k == 1:
            return pow(u, self.q - 2, self.q)
        return self.pow(u, self.q - 2)

    def div(self, u: int, v: int) -> int:
        return self.mul(u, self.inv(v))

    def pow(self, u: int, n: int) -> int:
        if n < 0:
            u = self.inv(u)
            n = -n
        if self.k == 1:
            return pow(u, n, self.q)
        out = 1
        base = u
        while n:
            if n & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            n >>= 1
        return out

    def embed(self, n: int) -> int:
        """Code of the prime-subfield element n mod p."""
        return n % self.p

    def chi(self, u: int) -> int:
        return int(self.chi_table[u])

    def sqrt(self, u: int) -> int:
        """A square root of u; valid only when chi(u) >= 0."""
        if u == 0:
            return 0
        if self.chi_table[u] < 0:
            raise ValueError(f"{u} is not a square in F_{self.q}")
        return int(self.sqrt_table[u])

    # -- log/antilog tables (built on demand, keyed to the least generator) ----

    @property
    def logs(self) -> tuple[np.ndarray, np.ndarray]:
        """(log, antilog) for the least multiplicative generator by code."""
        if self._logs is None:
            g = self._least_generator()
            q = self.q
            antilog = np.zeros(q - 1, dtype=np.int64)
            log = np.full(q, -1, dtype=np.int64)
            x = 1
            for e in range(q - 1):
                antilog[e] = x
                log[x] = e
                x = self.mul(x, g)
            self._logs = (log, antilog)
        return self._logs

    def _least_generator(self) -> int:
        n = self.q - 1
        fac = []
        m = n
        d = 2
        while d * d <= m:
            if m % d == 0:
                fac.append(d)
                while m % d == 0:
                    m //= d
            d += 1
        if m > 1:
            fac.append(m)
        for g in range(2, self.q):
            if all(self.pow(g, n // r) != 1 for r in fac):
                return g
        raise RuntimeError("no generator found")  # unreachable for a field

    # -- vectorized arithmetic on int64 code arrays ----------------------------

    @property
    def codes(self) -> np.ndarray:
        return np.arange(self.q, dtype=np.int64)

    def vadd(self, U, V) -> np.ndarray:
        if self.k == 1:
            return (np.asarray(U, dtype=np.int64) + V) % self.q
        U = np.asarray(U, dtype=np.int64)
        V = np.asarray(V, dtype=np.int64)
        out = np.zeros(np.broadcast(U, V).shape, dtype=np.int64)
        p = self.p
        mult = 1
        for _ in range(self.k):
            out += ((U + V) % p) * mult
            U = U // p
            V = V // p
            mult *= p
        return out

    def vneg(self, U) -> np.ndarray:
        if self.k == 1:
            return (-np.asarray(U, dtype=np.int64)) % self.q
        U = np.asarray(U, dtype=np.int64)
        out = np.zeros(U.shape, dtype=np.int64)
        p = self.p
        mult = 1
        for _ in range(self.k):
            out += ((-U) % p) * mult
            U = U // p
            mult *= p
        return out

    def vsub(self, U, V) -> np.ndarray:
        return self.vadd(U, self.vneg(np.asarray(V, dtype=np.int64)))

    def vmul(self, U, V) -> np.ndarray:
        if self.k == 1:
            return (np.asarray(U, dtype=np.int64) * V) % self.q
        U = np.asarray(U, dtype=np.int64)
        V = np.asarray(V, dtype=np.int64)
        U, V = np.broadcast_arrays(U, V)
        log, antilog = self.logs
        out = np.zeros(U.shape, dtype=np.int64)
        nz = (U != 0) & (V != 0)
        out[nz] = antilog[(log[U[nz]] + log[V[nz]]) % (self.q - 1)]
        return out

    # -- misc -------------------------------------------------------------

    def __repr__(self) -> str:
        return f"Field(q={self.q}, p={self.p}, k={self.k})"

    def elements(self) -> range:
        return range(self.q)


def make_field(q: int) -> Field:
    """Construct F_q for an odd prime power q in [3, 2^20]."""
    p, k = factor_prime_power(q)
    if q > MAX_FIELD_ORDER:
        raise TooLarge(f"q={q} exceeds the field ceiling {MAX_FIELD_ORDER}")
    modulus = least_irreducible(p, k)
    return Field(q, p, k, modulus)


def odd_prime_powers(lo: int, hi: int) -> list[int]:
    """All odd prime powers in [lo, hi], ascending."""
    out = []
    for q in range(lo | 1, hi + 1, 2):
        try:
            factor_prime_power(q)
        except NotOddPrimePower:
            continue
        out.append(q)
    return out
