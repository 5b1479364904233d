"""Square-free polynomial lists, sign-pattern counts, and their bound checks.

A list of univariate polynomials is square-free when no nonempty sub-collection
multiplies to a square over the algebraic closure.  Because irreducibles over
F_q are separable, a product is a closure-square exactly when every irreducible
factor appears with even multiplicity, so the test reduces to GF(2) linear
independence of the factor-multiplicity parity vectors.

count_sign_pattern scans every field element and counts those where each
polynomial hits its prescribed character sign; for a square-free list the
count N must satisfy |N - q/2^k| < (sqrt(q)+1) D / 2 with D the total degree.

The admissibility conditions on a slice parameter c (ten of them) guarantee
square-freeness of the fixed 15-polynomial list used by all slice estimates;
verify_slice_lists confirms this exhaustively for a field, along with the size of
the root set R(c) and the root-separation facts the argument leans on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field

from .errors import ZeroPolynomial
from .field import Field
from .gfpoly import (
    Poly,
    degree,
    factorize,
    normalize,
    poly_derivative,
    poly_eval,
    poly_eval_vec,
    poly_gcd,
)
from .rng import SplitMix64


@dataclass(frozen=True)
class PolySpec:
    """A polynomial paired with the character sign it must attain."""

    poly: Poly
    sign: int

    def __post_init__(self) -> None:
        if self.sign not in (-1, 1):
            raise ValueError("sign must be -1 or +1")
        if degree(self.poly) < 1:
            raise ValueError("PolySpec needs degree >= 1")


@dataclass(frozen=True)
class SquarefreeResult:
    squarefree: bool
    witness: tuple[int, ...] | None  # 0-based positions whose product is a square


def is_squarefree_list(F: Field, polys: list[Poly]) -> SquarefreeResult:
    """GF(2) independence test of factor-multiplicity parity vectors."""
    columns: dict[Poly, int] = {}
    pivots: dict[int, tuple[int, int]] = {}
    for idx, p in enumerate(polys):
        if not normalize(p):
            raise ZeroPolynomial(f"list entry {idx} is the zero polynomial")
        bits = 0
        for irr, mult in factorize(F, p).factors:
            if mult % 2:
                col = columns.setdefault(irr, len(columns))
                bits |= 1 << col
        mask = 1 << idx
        while bits:
            top = bits.bit_length() - 1
            if top not in pivots:
                pivots[top] = (bits, mask)
                break
            pb, pm = pivots[top]
            bits ^= pb
            mask ^= pm
        else:
            witness = tuple(i for i in range(idx + 1) if (mask >> i) & 1)
            return SquarefreeResult(False, witness)
    return SquarefreeResult(True, None)


@dataclass(frozen=True)
class WeilCount:
    """Sign-pattern count plus the character-sum inequality it must satisfy."""

    n: int
    k: int
    total_degree: int
    bound: float
    squarefree: bool | None
    within_bound: bool

    @property
    def holds(self) -> bool:
        return self.squarefree is False or self.within_bound


def count_sign_pattern(
    F: Field, specs: list[PolySpec], assume_squarefree: bool = False
) -> WeilCount:
    """Exact N = #{alpha : chi(p_i(alpha)) = eps_i for all i} with bound check."""
    if not specs:
        raise ValueError("need at least one PolySpec")
    ok = None
    for spec in specs:
        vals = poly_eval_vec(F, spec.poly, F.codes)
        hit = F.chi_table[vals] == spec.sign
        ok = hit if ok is None else (ok & hit)
    n = int(ok.sum())
    k = len(specs)
    total = sum(degree(s.poly) for s in specs)
    bound = (math.sqrt(F.q) + 1) * total / 2
    sf: bool | None
    if assume_squarefree:
        sf = True
    else:
        sf = is_squarefree_list(F, [s.poly for s in specs]).squarefree
    within = abs(n - F.q / 2**k) < bound
    return WeilCount(n, k, total, bound, sf, within)


# ----------------------------------------------------------------------
# The slice-parameter conditions and the fixed 15-polynomial list
# ----------------------------------------------------------------------

def _int_poly_value(F: Field, coeffs: tuple[int, ...], c: int) -> int:
    """Evaluate a polynomial with small integer coefficients at c."""
    y = 0
    for co in reversed(coeffs):
        y = F.add(F.mul(y, c), F.embed(co))
    return y


# each label names its condition by the first polynomial (or value set) it
# excludes; the second entry of a pair is always the reciprocal partner
_COND_POLYS: dict[str, tuple[tuple[int, ...], ...]] = {
    # constant-first integer coefficient tuples
    "x2+-x+-1": ((1, 1, 1), (-1, 1, 1), (1, -1, 1), (-1, -1, 1)),
    "x2-3x+1": ((1, -3, 1),),
    "x2-3x+3": ((3, -3, 1), (1, -3, 3)),
    "x3+x2-1": ((-1, 0, 1, 1), (-1, -1, 0, 1)),
    "x2+1": ((1, 0, 1),),
    "x2-2x+2": ((2, -2, 1), (1, -2, 2)),
    "x3-x2+2x-1": ((-1, 2, -1, 1), (-1, 1, -2, 1)),
    "x3-2x2+3x-1": ((-1, 3, -2, 1), (-1, 2, -3, 1)),
}

CONDITION_LABELS = ("excluded-values", *_COND_POLYS, "third-ratios")


def slice_param_admissible(F: Field, c: int) -> tuple[bool, list[str]]:
    """Evaluate the ten slice-parameter conditions; returns (ok, failed labels)."""
    failed = []
    two = F.embed(2)
    if c in {F.embed(-1), 0, 1, F.inv(two), two}:
        failed.append("excluded-values")
    for label, polys in _COND_POLYS.items():
        if any(_int_poly_value(F, p, c) == 0 for p in polys):
            failed.append(label)
    if F.p != 3:
        three = F.embed(3)
        four = F.embed(4)
        ratios = {
            F.neg(F.inv(three)),
            F.neg(three),
            F.div(two, three),
            F.div(three, two),
            F.inv(three),
            three,
            F.div(four, three),
            F.div(three, four),
        }
        if c in ratios:
            failed.append("third-ratios")
    failed.sort(key=CONDITION_LABELS.index)
    return not failed, failed


def slice_poly_list(F: Field, c: int) -> list[Poly]:
    """The 15 fixed polynomials in x at parameter c, in their canonical order."""
    m = F.mul
    s = F.sub
    n = F.neg
    a = F.add
    two = F.embed(2)
    cc = m(c, c)
    return [
        normalize(p)
        for p in [
            (0, 1),                       # x
            (n(1), 1),                    # x - 1
            (n(c), 1),                    # x - c
            (n(a(1, c)), 1),              # x - 1 - c
            (s(1, c), 1),                 # x + 1 - c
            (n(c), s(1, c)),              # (1-c) x - c
            (n(c), a(1, c)),              # (1+c) x - c
            (c, n(two), 1),               # g1 = x^2 - 2x + c
            (s(cc, m(two, c)), 1),        # g2 = x + c^2 - 2c
            (c, n(m(two, c)), 1),         # g3 = x^2 - 2cx + c
            (cc, s(1, m(two, c))),        # g4 = (1-2c) x + c^2
            (cc, n(a(c, 1)), 1),          # f1 = x^2 - (c+1)x + c^2
            (s(cc, c), n(c), 1),          # f2 = x^2 - cx + c^2 - c
            (n(cc), a(cc, c), n(1)),      # f3 = -x^2 + (c^2+c)x - c^2
            (n(cc), c, s(c, 1)),          # f4 = (c-1)x^2 + cx - c^2
        ]
    ]


def r_set(F: Field, c: int) -> list[int]:
    """Roots of the seven degree-one members of the fixed list (with duplicates)."""
    m = F.mul
    s = F.sub
    a = F.add
    return [
        c,
        a(c, 1),
        s(c, 1),
        F.div(c, s(1, c)),
        F.div(c, a(1, c)),
        m(c, s(F.embed(2), c)),
        F.div(m(c, c), s(m(F.embed(2), c), 1)),
    ]


@dataclass
class SliceListReport:
    q: int
    admissible_count: int = 0
    inadmissible_count: int = 0
    inadmissible_good_slice_count: int = 0  # inadmissible c with chi(c)=chi(1-c)=1
    inadmissible_square_count: int = 0      # inadmissible square c outside {0,1}
    violations: list[str] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _root_separation_violations(F: Field, c: int) -> list[str]:
    """Consequence checks at an admissible c: double roots, R(c) hits, shared roots."""
    out = []
    polys = slice_poly_list(F, c)
    g1, g3 = polys[7], polys[9]
    fs = polys[11:15]
    for name, p in zip(("g1", "g3", "f1", "f2", "f3", "f4"), [g1, g3, *fs]):
        if degree(poly_gcd(F, p, poly_derivative(F, p))) > 0:
            out.append(f"double root in {name} at c={c}")
    roots = r_set(F, c)
    for name, p in zip(("g1", "g3", "f1", "f2", "f3", "f4"), [g1, g3, *fs]):
        if any(poly_eval(F, p, r) == 0 for r in roots):
            out.append(f"{name} vanishes on R(c) at c={c}")
    for i in range(4):
        for j in range(i + 1, 4):
            if degree(poly_gcd(F, fs[i], fs[j])) > 0:
                out.append(f"f{i+1}/f{j+1} share a root at c={c}")
    return out


def _slice_list_chunk(args: tuple[Field, range, bool]) -> SliceListReport:
    F, cs, check_consequences = args
    rep = SliceListReport(F.q)
    for c in cs:
        adm, _failed = slice_param_admissible(F, c)
        if not adm:
            rep.inadmissible_count += 1
            if c not in (0, 1) and F.chi(c) == 1:
                rep.inadmissible_square_count += 1
                if F.chi(F.sub(1, c)) == 1:
                    rep.inadmissible_good_slice_count += 1
            continue
        rep.admissible_count += 1
        res = is_squarefree_list(F, slice_poly_list(F, c))
        if not res.squarefree:
            rep.violations.append(f"list not square-free at c={c}: {res.witness}")
        if len(set(r_set(F, c))) != 7:
            rep.violations.append(f"|R(c)| != 7 at c={c}")
        if check_consequences:
            rep.violations.extend(_root_separation_violations(F, c))
    return rep


def verify_slice_lists(F: Field, check_consequences: bool = True, jobs: int = 1) -> SliceListReport:
    """Square-freeness of the fixed list and |R(c)| = 7 at every admissible c."""
    if jobs <= 1 or F.q < 4 * jobs:
        return _slice_list_chunk((F, range(F.q), check_consequences))
    import multiprocessing

    step = (F.q + jobs - 1) // jobs
    tasks = [
        (F, range(i, min(i + step, F.q)), check_consequences)
        for i in range(0, F.q, step)
    ]
    with multiprocessing.get_context("fork").Pool(jobs) as pool:
        parts = pool.map(_slice_list_chunk, tasks)
    rep = SliceListReport(F.q)
    for part in parts:
        rep.admissible_count += part.admissible_count
        rep.inadmissible_count += part.inadmissible_count
        rep.inadmissible_good_slice_count += part.inadmissible_good_slice_count
        rep.inadmissible_square_count += part.inadmissible_square_count
        rep.violations.extend(part.violations)
    return rep


# ----------------------------------------------------------------------
# Seeded random square-free lists for the sign-pattern bound sweep
# ----------------------------------------------------------------------

def random_squarefree_specs(
    F: Field,
    rng: SplitMix64,
    max_k: int = 4,
    max_total_degree: int = 8,
    max_tries: int = 200,
) -> list[PolySpec] | None:
    """Draw a square-free list of signed polynomials, or None if unlucky."""
    for _ in range(max_tries):
        k = 1 + rng.below(max_k)
        budget = max_total_degree - k  # one degree reserved per polynomial
        polys = []
        for i in range(k):
            extra = rng.below(budget + 1)
            budget -= extra
            d = 1 + extra
            coeffs = [rng.below(F.q) for _ in range(d)] + [1 + rng.below(F.q - 1)]
            polys.append(normalize(coeffs))
        if not is_squarefree_list(F, polys).squarefree:
            continue
        return [PolySpec(p, rng.choice_sign()) for p in polys]
    return None


@dataclass(frozen=True)
class WeilTrialReport:
    q: int
    trials: int
    violations: int
    max_ratio: float  # max of |N - q/2^k| / bound over the trials

    @property
    def ok(self) -> bool:
        return self.violations == 0


def run_weil_trials(F: Field, n_lists: int, seed: int) -> WeilTrialReport:
    """n_lists seeded random square-free lists, each checked against the bound."""
    rng = SplitMix64(seed)
    violations = 0
    worst = 0.0
    done = 0
    while done < n_lists:
        specs = random_squarefree_specs(F, rng)
        if specs is None:
            raise RuntimeError(f"could not draw a square-free list over F_{F.q}")
        res = count_sign_pattern(F, specs, assume_squarefree=True)
        gap = abs(res.n - F.q / 2**res.k)
        worst = max(worst, gap / res.bound)
        if not res.within_bound:
            violations += 1
        done += 1
    return WeilTrialReport(F.q, n_lists, violations, worst)
