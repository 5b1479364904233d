"""Quadratic orthomorphisms, the quasigroups they define, and the Σ/S bijection.

For a parameter pair (a, b) the orthomorphism maps squares u to a*u and
nonsquares to b*u; the quasigroup operation is u * v = u + psi(v - u).
Valid parameter pairs (the set Sigma) have a, b outside {0, 1}, a != b, and
both a*b and (1-a)(1-b) nonzero squares.  The square-pair set S consists of
distinct nonzero, non-one squares (x, y); psi_map sends (a, b) to
(a/b, (1-a)/(1-b)) and phi_map inverts it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import NotInS, NotInSigma, TooLarge
from .field import Field

CAYLEY_LIMIT = 512  # materialized q x q tables above this are not allowed


class SigmaPair(NamedTuple):
    a: int
    b: int


class SPair(NamedTuple):
    x: int
    y: int


def sigma_cardinality(q: int) -> int:
    """Closed form (q^2 - 8q + 15)/4 for |Sigma| = |S|."""
    return (q * q - 8 * q + 15) // 4 if q >= 5 else 0


def is_sigma_pair(F: Field, a: int, b: int) -> bool:
    if a in (0, 1) or b in (0, 1) or a == b:
        return False
    if F.chi(F.mul(a, b)) != 1:
        return False
    one_minus = F.mul(F.sub(1, a), F.sub(1, b))
    return F.chi(one_minus) == 1


def is_s_pair(F: Field, x: int, y: int) -> bool:
    if x in (0, 1) or y in (0, 1) or x == y:
        return False
    return F.chi(x) == 1 and F.chi(y) == 1


def psi(F: Field, pair: SigmaPair, u: int) -> int:
    """a*u when chi(u) >= 0 (so psi(0) = 0), b*u when u is a nonsquare."""
    return F.mul(pair[0] if F.chi_table[u] >= 0 else pair[1], u)


def qmul(F: Field, pair: SigmaPair, u: int, v: int) -> int:
    return F.add(u, psi(F, pair, F.sub(v, u)))


def psi_vec(F: Field, pair: SigmaPair, W: np.ndarray) -> np.ndarray:
    a, b = pair
    return np.where(F.chi_table[W] >= 0, F.vmul(a, W), F.vmul(b, W))


def psi_map(F: Field, pair: SigmaPair) -> SPair:
    """The bijection Sigma -> S, (a, b) |-> (a/b, (1-a)/(1-b))."""
    a, b = pair
    if not is_sigma_pair(F, a, b):
        raise NotInSigma(f"({a}, {b}) is not in Sigma(F_{F.q})")
    x = F.div(a, b)
    y = F.div(F.sub(1, a), F.sub(1, b))
    return SPair(x, y)


def phi_map(F: Field, sp: SPair) -> SigmaPair:
    """The inverse S -> Sigma, (x, y) |-> (x(1-y)/(x-y), (1-y)/(x-y))."""
    x, y = sp
    if not is_s_pair(F, x, y):
        raise NotInS(f"({x}, {y}) is not in S(F_{F.q})")
    d = F.inv(F.sub(x, y))
    b = F.mul(F.sub(1, y), d)
    a = F.mul(x, b)
    return SigmaPair(a, b)


def enumerate_sigma(F: Field) -> list[SigmaPair]:
    """All of Sigma in ascending (code(a), code(b)) order."""
    q = F.q
    codes = np.arange(2, q, dtype=np.int64)
    A = codes[:, None]
    B = codes[None, :]
    mask = A != B
    mask &= F.chi_table[F.vmul(A, B)] == 1
    mask &= F.chi_table[F.vmul(F.vsub(1, A), F.vsub(1, B))] == 1
    ia, ib = np.nonzero(mask)
    return [SigmaPair(int(a), int(b)) for a, b in zip(codes[ia], codes[ib])]


def enumerate_S(F: Field) -> list[SPair]:
    """All of S in ascending (code(x), code(y)) order."""
    sq = [u for u in range(2, F.q) if F.chi_table[u] == 1]
    return [SPair(x, y) for x in sq for y in sq if x != y]


def least_nonsquare(F: Field) -> int:
    """The nonsquare with the least element code (shared convention zeta)."""
    return int(np.nonzero(F.chi_table == -1)[0][0])


def cayley_table(F: Field, pair: SigmaPair) -> np.ndarray:
    """Materialized q x q operation table; guarded to q <= CAYLEY_LIMIT."""
    if F.q > CAYLEY_LIMIT:
        raise TooLarge(f"Cayley tables are materialized only for q <= {CAYLEY_LIMIT}")
    U = F.codes[:, None]
    V = F.codes[None, :]
    return F.vadd(U, psi_vec(F, pair, F.vsub(V, U)))


def is_latin_square(table: np.ndarray) -> bool:
    q = table.shape[0]
    want = np.arange(q, dtype=table.dtype)
    rows_ok = bool((np.sort(table, axis=1) == want[None, :]).all())
    cols_ok = bool((np.sort(table, axis=0) == want[:, None]).all())
    return rows_ok and cols_ok


def is_idempotent(table: np.ndarray) -> bool:
    q = table.shape[0]
    return bool((np.diagonal(table) == np.arange(q, dtype=table.dtype)).all())


@dataclass(frozen=True)
class Quasigroup:
    """The quasigroup on F_q defined by a parameter pair."""

    field: Field
    params: SigmaPair

    def mul(self, u: int, v: int) -> int:
        return qmul(self.field, self.params, u, v)

    def table(self) -> np.ndarray:
        return cayley_table(self.field, self.params)


@dataclass(frozen=True)
class OppositeIsoReport:
    """Outcome of the multiplier-isomorphism and opposite checks for one pair."""

    pair: SigmaPair
    zeta: int
    iso_ok: bool
    opposite_ok: bool
    iso_witness: tuple[int, int] | None
    opposite_witness: tuple[int, int] | None


def _row_chunks(q: int) -> list[np.ndarray]:
    step = min(q, CAYLEY_LIMIT)
    codes = np.arange(q, dtype=np.int64)
    return [codes[i : i + step] for i in range(0, q, step)]


def multiplier_is_isomorphism(
    F: Field, pair: SigmaPair, target: SigmaPair, mult: int
) -> tuple[bool, tuple[int, int] | None]:
    """Does u |-> u*mult carry Q_pair onto Q_target? Returns (ok, witness).

    Streams in row chunks so no q x q table is ever materialized.
    """
    V = F.codes[None, :]
    MV = F.vmul(mult, V)
    for rows in _row_chunks(F.q):
        U = rows[:, None]
        left = F.vmul(mult, F.vadd(U, psi_vec(F, pair, F.vsub(V, U))))
        MU = F.vmul(mult, U)
        right = F.vadd(MU, psi_vec(F, target, F.vsub(MV, MU)))
        bad = np.nonzero(left != right)
        if bad[0].size:
            return False, (int(rows[bad[0][0]]), int(bad[1][0]))
    return True, None


def opposite_and_iso_checks(F: Field, pair: SigmaPair) -> OppositeIsoReport:
    """Verify u |-> u*zeta : Q_{a,b} ~ Q_{b,a}, and the opposite-quasigroup identity.

    The opposite of Q_{a,b} equals Q_{1-a,1-b} when q = 1 mod 4 and
    Q_{1-b,1-a} when q = 3 mod 4, checked elementwise.
    """
    a, b = pair
    zeta = least_nonsquare(F)
    iso_ok, iso_wit = multiplier_is_isomorphism(F, pair, SigmaPair(b, a), zeta)

    if F.q % 4 == 1:
        opp_params = SigmaPair(F.sub(1, a), F.sub(1, b))
    else:
        opp_params = SigmaPair(F.sub(1, b), F.sub(1, a))
    opp_ok, opp_wit = True, None
    V = F.codes[None, :]
    for rows in _row_chunks(F.q):
        U = rows[:, None]
        # row block of Q^op: entry (u, v) is v * u in Q_{a,b}
        got = F.vadd(V, psi_vec(F, pair, F.vsub(U, V)))
        want = F.vadd(U, psi_vec(F, opp_params, F.vsub(V, U)))
        bad = np.nonzero(got != want)
        if bad[0].size:
            opp_ok, opp_wit = False, (int(rows[bad[0][0]]), int(bad[1][0]))
            break
    return OppositeIsoReport(pair, zeta, iso_ok, opp_ok, iso_wit, opp_wit)
