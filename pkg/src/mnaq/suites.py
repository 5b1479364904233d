"""Named verification suites driven by the CLI and the acceptance tests.

Each suite sweeps fields up to qmax, runs one family of checks, and returns a
report with one record per check.  Suites are pure recomputation: they never
consult fixtures, so they stay an independent oracle for the library.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .assoc import (
    ALL_CLASSES,
    class_code_grid,
    sigma_count,
    solutions_E,
)
from .charside import (
    is_regular_pair,
    exceptional_pairs,
    s_class_member,
    sigma_count_D,
    slice_counters,
    count_good_slice_params,
    t_grid,
    t_partition,
)
from .field import Field, make_field, odd_prime_powers
from .gfpoly import factorize, normalize
from .quasigroup import (
    SigmaPair,
    enumerate_S,
    enumerate_sigma,
    is_latin_square,
    is_idempotent,
    cayley_table,
    least_nonsquare,
    multiplier_is_isomorphism,
    opposite_and_iso_checks,
    phi_map,
    psi,
    psi_map,
    sigma_cardinality,
)
from .rng import SplitMix64
from .weil import run_weil_trials, verify_slice_lists

SLICE_FIELDS_MOD3 = (31, 43, 47, 59, 71)
SLICE_FIELDS_MOD1 = (29, 37, 41, 53)
MEMBERSHIP_FIELDS = (13, 17, 19, 23, 25, 27)


@dataclass
class Check:
    name: str
    q: int
    ok: bool
    detail: str = ""


@dataclass
class SuiteReport:
    suite: str
    qmax: int
    checks: list[Check] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name: str, q: int, ok: bool, detail: str = "") -> None:
        self.checks.append(Check(name, q, bool(ok), detail))

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "qmax": self.qmax,
            "ok": self.ok,
            "checks": [vars(c) for c in self.checks],
        }


_FIELD_CACHE: dict[int, Field] = {}


def _field(q: int) -> Field:
    if q not in _FIELD_CACHE:
        _FIELD_CACHE[q] = make_field(q)
    return _FIELD_CACHE[q]


def suite_bijection(qmax: int, jobs: int = 1) -> SuiteReport:
    rep = SuiteReport("bijection", qmax)
    for q in odd_prime_powers(3, qmax):
        F = _field(q)
        sigma = enumerate_sigma(F)
        spairs = enumerate_S(F)
        want = sigma_cardinality(q)
        rep.add("cardinality", q, len(sigma) == want == len(spairs),
                f"|Sigma|={len(sigma)} |S|={len(spairs)} formula={want}")
        images = set()
        ok_round = True
        ok_inverse_ids = True
        for pair in sigma:
            sp = psi_map(F, pair)
            images.add(sp)
            if phi_map(F, sp) != pair:
                ok_round = False
            a, b = pair
            x, y = sp
            d = F.inv(F.sub(y, x))
            if F.sub(1, a) != F.mul(F.mul(y, F.sub(1, x)), d):
                ok_inverse_ids = False
            if F.sub(1, b) != F.mul(F.sub(1, x), d):
                ok_inverse_ids = False
        rep.add("phi_after_psi", q, ok_round)
        rep.add("psi_injective", q, len(images) == len(sigma))
        rep.add("inverse_identities", q, ok_inverse_ids)
        ok_back = all(psi_map(F, phi_map(F, sp)) == sp for sp in spairs)
        rep.add("psi_after_phi", q, ok_back)
        # orthomorphism property and Latin/idempotent structure
        ok_perm = True
        ok_latin = True
        for pair in sigma:
            psis = [psi(F, pair, u) for u in range(q)]
            diffs = [F.sub(psis[u], u) for u in range(q)]
            if len(set(psis)) != q or len(set(diffs)) != q:
                ok_perm = False
            t = cayley_table(F, pair)
            if not (is_latin_square(t) and is_idempotent(t)):
                ok_latin = False
        rep.add("orthomorphism", q, ok_perm)
        rep.add("latin_idempotent", q, ok_latin)
    return rep


def _permute_code(code: int, perm: str) -> int:
    i, j, r, s = (code >> 3) & 1, (code >> 2) & 1, (code >> 1) & 1, code & 1
    if perm == "swap_ij_rs":       # (j, i, s, r)
        i, j, r, s = j, i, s, r
    elif perm == "complement":     # (1-i, 1-j, 1-r, 1-s)
        i, j, r, s = 1 - i, 1 - j, 1 - r, 1 - s
    elif perm == "swap_complement":  # (1-j, 1-i, 1-s, 1-r)
        i, j, r, s = 1 - j, 1 - i, 1 - s, 1 - r
    else:
        raise ValueError(perm)
    return (i << 3) | (j << 2) | (r << 1) | s


def _expected_codes(grid: np.ndarray, perm: str) -> np.ndarray:
    lut = np.array([_permute_code(c, perm) for c in range(16)], dtype=np.int8)
    lut = np.concatenate([lut, np.array([-1], dtype=np.int8)])  # map -1 to -1
    return lut[grid]


def suite_symmetry(qmax: int, jobs: int = 1) -> SuiteReport:
    rep = SuiteReport("symmetry", qmax)
    for q in odd_prime_powers(7, qmax):
        F = _field(q)
        sigma = enumerate_sigma(F)
        zeta = least_nonsquare(F)
        grids = {pair: class_code_grid(F, pair) for pair in sigma}
        zmap = np.asarray(F.vmul(zeta, F.codes))
        minus_one_is_square = F.q % 4 == 1
        ok_scaling = ok_opposite = ok_sigma_level = True
        for pair in sigma:
            a, b = pair
            g = grids[pair]
            swapped = grids[SigmaPair(b, a)]
            expect = _expected_codes(g, "complement")
            if not (swapped[np.ix_(zmap, zmap)] == expect).all():
                ok_scaling = False
            comp = SigmaPair(F.sub(1, a), F.sub(1, b))
            g_comp = grids[comp]
            if minus_one_is_square:
                expect = _expected_codes(g, "swap_ij_rs")
                if not (g_comp.T == expect).all():
                    ok_opposite = False
            else:
                other = grids[SigmaPair(F.sub(1, b), F.sub(1, a))]
                expect = _expected_codes(g, "swap_complement")
                if not (other.T == expect).all():
                    ok_opposite = False
            present = {c for c in np.unique(g) if c >= 0}
            present_comp = {c for c in np.unique(g_comp) if c >= 0}
            present_swap = {c for c in np.unique(swapped) if c >= 0}
            if present_comp != {_permute_code(c, "swap_ij_rs") for c in present}:
                ok_sigma_level = False
            if present_swap != {_permute_code(c, "complement") for c in present}:
                ok_sigma_level = False
        rep.add("transport_scaling", q, ok_scaling)
        rep.add("transport_opposite", q, ok_opposite)
        rep.add("class_presence_symmetry", q, ok_sigma_level)
        ok_structure = all(
            (r := opposite_and_iso_checks(F, pair)).iso_ok and r.opposite_ok
            for pair in sigma
        )
        rep.add("iso_and_opposite", q, ok_structure)
    if qmax >= 13:
        F = _field(13)
        zeta2 = F.mul(least_nonsquare(F), least_nonsquare(F))
        witness = any(
            a != b and not multiplier_is_isomorphism(F, SigmaPair(a, b),
                                                     SigmaPair(b, a), zeta2)[0]
            for a, b in enumerate_sigma(F)
        )
        rep.add("square_multiplier_fails", 13, witness,
                "a square multiplier must not pass the swap-isomorphism check")
    return rep


def suite_methods(qmax: int, jobs: int = 1) -> SuiteReport:
    rep = SuiteReport("methods", qmax)
    for q in odd_prime_powers(7, qmax):
        F = _field(q)
        values = {}
        if q <= 27:
            values["A"] = sigma_count(F, "A", jobs=jobs)
        if q <= 49:
            values["B"] = sigma_count(F, "B", jobs=jobs)
        if q <= 125:
            values["Bscaled"] = sigma_count(F, "Bscaled", jobs=jobs)
        values["C"] = sigma_count(F, "C", jobs=jobs)
        values["D"] = sigma_count_D(F, jobs=jobs)
        distinct = set(values.values())
        rep.add("cross_method", q, len(distinct) == 1,
                " ".join(f"{k}={v}" for k, v in values.items()))
    return rep


def _poly_grids(F: Field) -> dict[str, np.ndarray]:
    X = F.codes[:, None]
    Y = F.codes[None, :]
    XX = F.vmul(X, X)
    YY = F.vmul(Y, Y)
    XY = F.vmul(X, Y)
    two_x = F.vadd(X, X)
    two_xy = F.vadd(XY, XY)
    return {
        "f1": F.vsub(F.vsub(F.vadd(XX, YY), XY), X),
        "f2": F.vsub(F.vsub(F.vadd(XX, YY), XY), Y),
        "f3": F.vsub(F.vsub(F.vadd(F.vmul(YY, X), XY), XX), YY),
        "f4": F.vsub(F.vsub(F.vadd(F.vmul(XX, Y), XY), XX), YY),
        "g1": F.vsub(F.vadd(XX, Y), two_x),
        "g2": F.vsub(F.vadd(YY, X), F.vadd(Y, Y)),
        "g3": F.vsub(F.vadd(XX, Y), two_xy),
        "g4": F.vsub(F.vadd(YY, X), two_xy),
    }


def suite_charset(qmax: int, jobs: int = 1) -> SuiteReport:
    rep = SuiteReport("charset", qmax)
    for q in odd_prime_powers(7, min(qmax, 49)):
        F = _field(q)
        g = _poly_grids(F)
        ok_sym = bool(
            (g["f2"] == g["f1"].T).all()
            and (g["f3"] == g["f4"].T).all()
            and (g["g2"] == g["g1"].T).all()
            and (g["g4"] == g["g3"].T).all()
        )
        # chi(f3(x,y)) = chi(-f1(1/x,1/y)) and chi(g3(x,y)) = chi(g1(1/x,1/y))
        # on pairs of nonzero squares
        inv_idx = np.array([0] + [F.inv(u) for u in range(1, q)], dtype=np.int64)
        sq = F.chi_table == 1
        mask = sq[:, None] & sq[None, :]
        chi = F.chi_table
        f1_inv = chi[F.vneg(g["f1"][np.ix_(inv_idx, inv_idx)])]
        g1_inv = chi[g["g1"][np.ix_(inv_idx, inv_idx)]]
        ok_recip = bool(
            (chi[g["f3"]][mask] == f1_inv[mask]).all()
            and (chi[g["g3"]][mask] == g1_inv[mask]).all()
        )
        rep.add("poly_symmetry", q, ok_sym)
        rep.add("poly_reciprocal", q, ok_recip)
    for q in MEMBERSHIP_FIELDS:
        if q > qmax:
            continue
        F = _field(q)
        ok = True
        for sp in enumerate_S(F):
            if not is_regular_pair(F, *sp):
                continue
            truth = {tuple(c) for c in solutions_E(F, phi_map(F, sp)).classes_present()}
            for cls in ALL_CLASSES:
                if s_class_member(F, sp, cls) != (tuple(cls) in truth):
                    ok = False
        rep.add("membership_vs_e_side", q, ok)
    for q in odd_prime_powers(7, qmax):
        F = _field(q)
        exc = exceptional_pairs(F)
        rep.add("few_exceptional_pairs", q, len(exc) <= 4, f"{len(exc)} pairs")
        if q >= 47 and exc:
            in_union = all(
                not solutions_E(F, phi_map(F, sp)).is_empty for sp in exc
            )
            rep.add("exceptional_in_union", q, in_union)
    for q in odd_prime_powers(7, min(qmax, 49)):
        F = _field(q)
        grid = t_grid(F)
        inv_idx = np.array([0] + [F.inv(u) for u in range(1, q)], dtype=np.int64)
        ok_t_sym = bool(
            (grid == grid.T).all()
            and (grid == grid[np.ix_(inv_idx, inv_idx)]).all()
        )
        rep.add("t_closed_under_symmetries", q, ok_t_sym)
    return rep


def suite_weil(qmax: int, jobs: int = 1) -> SuiteReport:
    rep = SuiteReport("weil", qmax)
    for q in odd_prime_powers(3, qmax):
        if _field(q).k != 1:
            continue  # the sweep covers prime fields
        rep_q = run_weil_trials(_field(q), 200, seed=0xA5C0FFEE ^ q)
        rep.add("sign_pattern_bound", q, rep_q.ok,
                f"200 lists, max |N - q/2^k|/bound = {rep_q.max_ratio:.3f}")
    for q in (13, 27, 49):
        if q > qmax:
            continue
        F = _field(q)
        rng = SplitMix64(0xFAC70 + q)
        ok = True
        for _ in range(500):
            p = normalize([rng.below(q) for _ in range(6)] + [1])
            if factorize(F, p).rebuild(F) != p:
                ok = False
        rep.add("factor_roundtrip", q, ok, "500 seeded monic degree-6 inputs")
    return rep


def suite_slice_lists(qmax: int, jobs: int = 1) -> SuiteReport:
    rep = SuiteReport("thm31", qmax)
    for q in odd_prime_powers(3, qmax):
        F = _field(q)
        r = verify_slice_lists(F, jobs=jobs)
        rep.add("squarefree_and_rset", q, r.ok,
                f"admissible={r.admissible_count} violations={len(r.violations)}")
        nonzero_inadmissible = r.inadmissible_count - 1  # c = 0 always fails
        rep.add("avoided_at_most_51", q, nonzero_inadmissible <= 51,
                f"{nonzero_inadmissible} nonzero c excluded")
        if q % 4 == 3:
            rep.add("good_slice_exclusions_at_most_22", q,
                    r.inadmissible_good_slice_count <= 22,
                    f"{r.inadmissible_good_slice_count}")
        else:
            rep.add("square_exclusions_at_most_49", q,
                    r.inadmissible_square_count <= 49,
                    f"{r.inadmissible_square_count}")
    return rep


def suite_slices(qmax: int, jobs: int = 1) -> SuiteReport:
    rep = SuiteReport("slices", qmax)
    for q in SLICE_FIELDS_MOD3 + SLICE_FIELDS_MOD1:
        if q > qmax:
            continue
        F = _field(q)
        mod3 = q % 4 == 3
        bound_ok = True
        admissible = 0
        sums = {}
        for c in range(2, q):
            if F.chi(c) != 1:
                continue
            if mod3 and F.chi(F.sub(1, c)) != 1:
                continue
            sc = slice_counters(F, c)
            for key, val in sc.counts.items():
                sums[key] = sums.get(key, 0) + val
            if sc.admissible:
                admissible += 1
                if not sc.bounds_ok:
                    bound_ok = False
        rep.add("slice_bounds", q, bound_ok, f"{admissible} admissible c")
        part = t_partition(F)
        if mod3:
            recon = sums.get("t2", 0) == part.parts["t2"] and \
                sums.get("t11", 0) == part.parts["t11"]
        else:
            recon = sums.get("t1", 0) == part.parts["t1"] and \
                sums.get("t2", 0) == part.parts["t2"]
        rep.add("slice_sums_match_partition", q, recon, str(sums))
    return rep


def suite_partitions(qmax: int, jobs: int = 1) -> SuiteReport:
    rep = SuiteReport("partitions", qmax)
    for q in odd_prime_powers(7, qmax):
        F = _field(q)
        part = t_partition(F)
        rep.add("partition_identities", q, part.ok,
                "; ".join(part.violations) if part.violations else "")
        rep.add("total_is_sigma", q, part.total == sigma_count_D(F, jobs=jobs),
                f"|T|={part.total}")
        if q % 4 == 3:
            rep.add("good_slice_count", q,
                    count_good_slice_params(F) == (q - 3) // 4)
    for q in odd_prime_powers(7, min(qmax, 49)):
        F = _field(q)
        ok = _partition_maps_hold(F)
        rep.add("partition_maps_elementwise", q, ok)
    return rep


def _partition_maps_hold(F: Field) -> bool:
    """Elementwise swap/inversion behaviour of the T partition pieces."""
    q = F.q
    grid = t_grid(F)
    Xg = F.codes[:, None]
    Yg = F.codes[None, :]
    chi = F.chi_table
    d = chi[F.vsub(Xg, Yg)]
    c1x = np.broadcast_to(chi[F.vsub(1, F.codes)][:, None], (q, q))
    c1y = np.broadcast_to(chi[F.vsub(1, F.codes)][None, :], (q, q))
    inv_idx = np.array([0] + [F.inv(u) for u in range(1, q)], dtype=np.int64)

    def inv_perm(mask: np.ndarray) -> np.ndarray:
        return mask[np.ix_(inv_idx, inv_idx)]

    if q % 4 == 3:
        t0 = grid & (d == -1)  # chi(y - x) = 1
        t0p = grid & (d == 1)
        m = {
            "t11": t0 & (c1x == 1) & (c1y == 1),
            "t1m1": t0 & (c1x == -1) & (c1y == -1),
            "t2": t0 & (c1x == -1) & (c1y == 1),
            "t11p": t0p & (c1x == 1) & (c1y == 1),
            "t1m1p": t0p & (c1x == -1) & (c1y == -1),
            "t2p": t0p & (c1x == 1) & (c1y == -1),
        }
        ok = (m["t11"].T == m["t11p"]).all() and (m["t1m1"].T == m["t1m1p"]).all()
        ok &= (m["t2"].T == m["t2p"]).all()
        ok &= (inv_perm(m["t11"]) == m["t1m1p"]).all()
        ok &= (inv_perm(m["t1m1"]) == m["t11p"]).all()
        ok &= (inv_perm(m["t2"]) == m["t2p"]).all()
        return bool(ok)

    eps = d
    t1 = grid & (c1x == -eps) & (c1y == -eps)
    t2 = grid & (c1x == eps) & (c1y == -eps)
    t2p = grid & (c1x == -eps) & (c1y == eps)
    ok = (t1.T == t1).all() and (t2.T == t2p).all()
    ok &= (inv_perm(t1) == t1).all()
    ok &= (inv_perm(t2) == t2).all() and (inv_perm(t2p) == t2p).all()
    # f-character grids for the R(rho) identities
    XX = F.vmul(Xg, Xg)
    YY = F.vmul(Yg, Yg)
    XY = F.vmul(Xg, Yg)
    fgrids = [
        chi[F.vsub(F.vsub(F.vadd(XX, YY), XY), Xg)],              # f1
        chi[F.vsub(F.vsub(F.vadd(XX, YY), XY), Yg)],              # f2
        chi[F.vsub(F.vsub(F.vadd(F.vmul(YY, Xg), XY), XX), YY)],  # f3
        chi[F.vsub(F.vsub(F.vadd(F.vmul(XX, Yg), XY), XX), YY)],  # f4
    ]
    rho = [eps * f for f in fgrids]
    valid = (rho[0] != 0) & (rho[1] != 0) & (rho[2] != 0) & (rho[3] != 0)
    for signs in [(s1, s2, s3, s4) for s1 in (-1, 1) for s2 in (-1, 1)
                  for s3 in (-1, 1) for s4 in (-1, 1)]:
        r_mask = grid & valid
        for j in range(4):
            r_mask = r_mask & (rho[j] == signs[j])
        r1_mask = r_mask & t1
        # swap sends R_i(s1,s2,s3,s4) to R_i(s2,s1,s4,s3); inversion to
        # R_i(s3,s4,s1,s2)
        sw = (signs[1], signs[0], signs[3], signs[2])
        iv = (signs[2], signs[3], signs[0], signs[1])
        r_sw = grid & valid
        r_iv = grid & valid
        for j in range(4):
            r_sw = r_sw & (rho[j] == sw[j])
            r_iv = r_iv & (rho[j] == iv[j])
        if not (r_mask.T == r_sw).all():
            return False
        if not (inv_perm(r_mask) == r_iv).all():
            return False
        if not (r1_mask.T == (r_sw & t1)).all():
            return False
        if not (inv_perm(r_mask & t2) == (r_iv & t2)).all():
            return False
    return True


SUITES = {
    "bijection": suite_bijection,
    "symmetry": suite_symmetry,
    "methods": suite_methods,
    "charset": suite_charset,
    "weil": suite_weil,
    "thm31": suite_slice_lists,
    "slices": suite_slices,
    "partitions": suite_partitions,
}


def run_suite(name: str, qmax: int, jobs: int = 1) -> SuiteReport:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return SUITES[name](qmax, jobs=jobs)
