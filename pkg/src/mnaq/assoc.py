"""Deciding maximal nonassociativity and counting sigma(q) on the parameter side.

Four mutually cross-checking methods:

  A        full scan of all q^3 triples of the quasigroup operation;
  B        scan of the pair equation psi(psi(u)-v) = psi(-v) + psi(u-v-psi(-v))
           over all (u, v) != (0, 0);
  Bscaled  the same scan restricted to scaling representatives u in {1, zeta}
           (v free) plus u = 0, v in {1, zeta}, valid because solutions are
           closed under (u, v) |-> (c^2 u, c^2 v);
  C        per-class linear solve: fixing the sign pattern (i, j, r, s) of
           (u, -v, psi(u)-v, u-v-psi(-v)) turns the equation into
           (c_r c_i - c_s) u = (c_r - c_j - c_s + c_s c_j) v with
           c_* in {a, b} chosen by bit, so each of the 16 classes needs O(1)
           work except for a rare doubly-degenerate case that falls back to a
           class-restricted scan.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from typing import Iterable, NamedTuple

import numpy as np

from .errors import TooLarge
from .field import Field
from .quasigroup import (
    SigmaPair,
    cayley_table,
    enumerate_sigma,
    least_nonsquare,
    psi,
    psi_vec,
    qmul,
)


class ClassIndex(NamedTuple):
    i: int
    j: int
    r: int
    s: int


ALL_CLASSES = tuple(
    ClassIndex(i, j, r, s)
    for i in (0, 1)
    for j in (0, 1)
    for r in (0, 1)
    for s in (0, 1)
)

A_SCAN_LIMIT = 64  # is_mna_A guard
A_COUNT_LIMIT = 27  # sigma_count(method="A") guard
B_COUNT_LIMIT = 512
BSCALED_COUNT_LIMIT = 4096


def assoc_eq_holds(
    F: Field, pair: SigmaPair, u: int, v: int, verify_vs_qmul: bool = False
) -> bool:
    """psi(psi(u)-v) == psi(-v) + psi(u-v-psi(-v)) at (u, v)."""
    pnv = psi(F, pair, F.neg(v))
    lhs = psi(F, pair, F.sub(psi(F, pair, u), v))
    rhs = F.add(pnv, psi(F, pair, F.sub(F.sub(u, v), pnv)))
    holds = lhs == rhs
    if verify_vs_qmul:
        # the equation must coincide with v * (0 * u) == (v * 0) * u
        direct = qmul(F, pair, v, qmul(F, pair, 0, u)) == qmul(
            F, pair, qmul(F, pair, v, 0), u
        )
        assert holds == direct, (pair, u, v)
    return holds


def assoc_eq_vec(F: Field, pair: SigmaPair, U: np.ndarray, V: np.ndarray) -> np.ndarray:
    """Vectorized associativity-equation test; U and V broadcast together."""
    psi_u = psi_vec(F, pair, np.asarray(U, dtype=np.int64))
    neg_v = F.vneg(np.asarray(V, dtype=np.int64))
    psi_neg_v = psi_vec(F, pair, neg_v)
    lhs = psi_vec(F, pair, F.vsub(psi_u, V))
    rhs = F.vadd(psi_neg_v, psi_vec(F, pair, F.vsub(F.vsub(U, V), psi_neg_v)))
    return lhs == rhs


def assoc_eq_grid(F: Field, pair: SigmaPair) -> np.ndarray:
    """Boolean q x q grid G[u, v] of associativity-equation solutions."""
    U = F.codes[:, None]
    V = F.codes[None, :]
    return assoc_eq_vec(F, pair, U, V)


def classify(F: Field, pair: SigmaPair, u: int, v: int) -> ClassIndex:
    """Class (i, j, r, s) of a solution; bits flag nonsquares."""
    e_r = F.sub(psi(F, pair, u), v)
    e_s = F.sub(F.sub(u, v), psi(F, pair, F.neg(v)))
    quads = (u, F.neg(v), e_r, e_s)
    if any(w == 0 for w in quads):
        raise ValueError(f"({u}, {v}) has a vanishing classifier value")
    return ClassIndex(*(0 if F.chi(w) == 1 else 1 for w in quads))


@dataclass(frozen=True)
class SolutionSet:
    """E(a, b): the nontrivial solutions, each labeled with its class."""

    pair: SigmaPair
    entries: tuple[tuple[int, int, ClassIndex], ...]

    @property
    def is_empty(self) -> bool:
        return not self.entries

    def classes_present(self) -> frozenset[ClassIndex]:
        return frozenset(c for _, _, c in self.entries)

    def by_class(self) -> dict[ClassIndex, list[tuple[int, int]]]:
        out: dict[ClassIndex, list[tuple[int, int]]] = {}
        for u, v, c in self.entries:
            out.setdefault(c, []).append((u, v))
        return out


def solutions_E(F: Field, pair: SigmaPair) -> SolutionSet:
    grid = assoc_eq_grid(F, pair)
    grid[0, 0] = False
    us, vs = np.nonzero(grid)
    entries = tuple(
        (int(u), int(v), classify(F, pair, int(u), int(v))) for u, v in zip(us, vs)
    )
    return SolutionSet(pair, entries)


def class_code_grid(F: Field, pair: SigmaPair) -> np.ndarray:
    """(q, q) int8 grid: class code 8i+4j+2r+s at solutions, -1 elsewhere."""
    holds = assoc_eq_grid(F, pair)
    holds[0, 0] = False
    U = F.codes[:, None]
    V = F.codes[None, :]
    psi_u = psi_vec(F, pair, U)
    neg_v = F.vneg(V)
    psi_neg_v = psi_vec(F, pair, neg_v)
    e_r = F.vsub(psi_u, V)
    e_s = F.vsub(F.vsub(U, V), psi_neg_v)
    # nontrivial solutions never have a vanishing classifier value
    assert not (holds & ((U == 0) | (neg_v == 0) | (e_r == 0) | (e_s == 0))).any()
    chi = F.chi_table
    code = (
        (chi[U] != 1).astype(np.int8) * 8
        + (chi[neg_v] != 1).astype(np.int8) * 4
        + (chi[e_r] != 1).astype(np.int8) * 2
        + (chi[e_s] != 1).astype(np.int8)
    )
    return np.where(holds, code, np.int8(-1))


def count_associative_triples(F: Field, pair: SigmaPair, force: bool = False) -> int:
    """Number of triples with (u*v)*w == u*(v*w); q of them are u=v=w."""
    if F.q > A_SCAN_LIMIT and not force:
        raise TooLarge(f"full triple scan guarded to q <= {A_SCAN_LIMIT}")
    T = cayley_table(F, pair)
    return int((T[T, :] == T[:, T]).sum())


def is_mna_A(F: Field, pair: SigmaPair, force: bool = False) -> bool:
    """Ground-truth oracle: only the diagonal triples associate."""
    return count_associative_triples(F, pair, force=force) == F.q


def is_mna_B(F: Field, pair: SigmaPair) -> bool:
    """No (u, v) != (0, 0) satisfies the associativity equation."""
    return int(assoc_eq_grid(F, pair).sum()) == 1  # (0, 0) always holds


def is_mna_Bscaled(F: Field, pair: SigmaPair) -> bool:
    """Method B on scaling representatives only: u in {1, zeta} with v free,
    plus u = 0 with v in {1, zeta}."""
    q = F.q
    zeta = least_nonsquare(F)
    U = np.concatenate(
        [
            np.ones(q, dtype=np.int64),
            np.full(q, zeta, dtype=np.int64),
            np.zeros(2, dtype=np.int64),
        ]
    )
    V = np.concatenate([F.codes, F.codes, np.array([1, zeta], dtype=np.int64)])
    return not bool(assoc_eq_vec(F, pair, U, V).any())


# ----------------------------------------------------------------------
# Method C
# ----------------------------------------------------------------------

def class_linear_coeffs(F: Field, pair: SigmaPair, cls: ClassIndex) -> tuple[int, int]:
    """(A, B) with A*u = B*v the class-restricted associativity equation."""
    a, b = pair
    ci = a if cls.i == 0 else b
    cj = a if cls.j == 0 else b
    cr = a if cls.r == 0 else b
    cs = a if cls.s == 0 else b
    A = F.sub(F.mul(cr, ci), cs)
    B = F.sub(F.sub(cr, cj), F.mul(cs, F.sub(1, cj)))
    return A, B


def _class_signs(cls: ClassIndex) -> tuple[int, int, int, int]:
    return tuple(1 if bit == 0 else -1 for bit in cls)  # type: ignore[return-value]


def _class_witness_ok(
    F: Field, pair: SigmaPair, cls: ClassIndex, u: int, v: int
) -> bool:
    """Do (u, v) carry exactly the sign pattern of cls? Zeros always fail."""
    a, b = pair
    si, sj, sr, ss = _class_signs(cls)
    if F.chi(u) != si:
        return False
    if F.chi(F.neg(v)) != sj:
        return False
    ci = a if cls.i == 0 else b
    cj = a if cls.j == 0 else b
    if F.chi(F.sub(F.mul(ci, u), v)) != sr:
        return False
    return F.chi(F.sub(u, F.mul(F.sub(1, cj), v))) == ss


def class_nonempty_C(
    F: Field, pair: SigmaPair, cls: ClassIndex, zeta: int | None = None
) -> bool:
    """Is E_ij^rs(a, b) nonempty, decided by the linear solve."""
    if zeta is None:
        zeta = least_nonsquare(F)
    A, B = class_linear_coeffs(F, pair, cls)
    if (A == 0) != (B == 0):
        # the equation forces u = 0 or v = 0, excluded for solutions
        return False
    if A != 0:
        ratio = F.div(A, B)  # v = (A/B) u
        for u in (1, zeta):
            v = F.mul(ratio, u)
            if _class_witness_ok(F, pair, cls, u, v):
                return True
        return False
    # A == B == 0: every (u, v) matching the sign pattern solves the equation
    for u in (1, zeta):
        for v in range(1, F.q):
            if _class_witness_ok(F, pair, cls, u, v):
                assert assoc_eq_holds(F, pair, u, v)
                return True
    return False


def is_mna_C(F: Field, pair: SigmaPair) -> bool:
    zeta = least_nonsquare(F)
    return not any(class_nonempty_C(F, pair, cls, zeta) for cls in ALL_CLASSES)


# ----------------------------------------------------------------------
# sigma(q)
# ----------------------------------------------------------------------

_METHOD_GUARDS = {
    "A": A_COUNT_LIMIT,
    "B": B_COUNT_LIMIT,
    "Bscaled": BSCALED_COUNT_LIMIT,
    "C": None,
}


def _is_mna(F: Field, pair: SigmaPair, method: str, force: bool) -> bool:
    if method == "A":
        return is_mna_A(F, pair, force=force)
    if method == "B":
        return is_mna_B(F, pair)
    if method == "Bscaled":
        return is_mna_Bscaled(F, pair)
    if method == "C":
        return is_mna_C(F, pair)
    raise ValueError(f"unknown method {method!r}")


def _count_chunk(args: tuple[Field, str, list[SigmaPair], bool]) -> int:
    F, method, pairs, force = args
    return sum(1 for pair in pairs if _is_mna(F, pair, method, force))


def sigma_count(
    F: Field,
    method: str = "C",
    jobs: int = 1,
    force: bool = False,
    pairs: Iterable[SigmaPair] | None = None,
) -> int:
    """Number of (a, b) in Sigma whose quasigroup is maximally nonassociative."""
    guard = _METHOD_GUARDS.get(method, None)
    if method not in _METHOD_GUARDS:
        raise ValueError(f"unknown method {method!r}")
    if guard is not None and F.q > guard and not force:
        raise TooLarge(f"method {method} guarded to q <= {guard}")
    plist = list(pairs) if pairs is not None else enumerate_sigma(F)
    if jobs <= 1 or len(plist) < 4 * jobs:
        return _count_chunk((F, method, plist, force))
    chunk = (len(plist) + 4 * jobs - 1) // (4 * jobs)
    tasks = [
        (F, method, plist[i : i + chunk], force) for i in range(0, len(plist), chunk)
    ]
    with multiprocessing.get_context("fork").Pool(jobs) as pool:
        return sum(pool.map(_count_chunk, tasks))
