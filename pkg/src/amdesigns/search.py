"""Diophantine searches for dual weights promoted beyond the base strength.

For an applicable code with (d', t) = (4, 2), (4, 1) or (6, 3), a dual
support design D'_w gets promoted to a (t+1)-design exactly when an explicit
alternating binomial sum vanishes.  The closed-form clauses below solve those
vanishing conditions: two quadratics and a quartic in (n, d), plus root
formulas for the narrow gaps n - 2d = 6 and n - 2d = 8.  A parameter pair
only counts when the five-weight constraint system admits a positive integer
alpha (and, for dual distance 6, the same alpha from both routes), which is
the integrality filter applied by the scans.

Certified weights at w = n, or mirrored into n - w < d' when every code
weight is even (so the dual contains the all-ones vector and those dual
weights are empty), certify nothing and are dropped from scan records.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, isqrt

from .amcore import am_applicability, solve_weight_params
from .designs import BlockDesign, design_strength
from .gf2 import BinaryCode

CASE_41 = (4, 1)
CASE_63 = (6, 3)
CASE_42 = (4, 2)


def _sqrt_exact(x: int) -> int | None:
    if x < 0:
        return None
    r = isqrt(x)
    return r if r * r == x else None


# ---- the bracket sums ------------------------------------------------------

def bracket_t13(w: int, n: int, d: int) -> int:
    """Vanishing certificate for case (4, 2): promotes D'_{2w+4} to a 3-design."""
    if d < 3 or n <= 2 * d or w < 0:
        raise ValueError("need d >= 3, n > 2d, w >= 0")
    total = 0
    for i in range(w + 1):
        if w - i <= d - 3:
            total += (-1) ** (w - i) * comb(d - 3, w - i) * comb(n - 2 * d, 2 * i + 1)
    return total


def bracket_t12(w: int, n: int, d: int, t: int) -> int:
    """Vanishing certificate for cases (4, 1) and (6, 3).

    Zero promotes D'_{2w+t+1} to a (t+1)-design.  (w = 0 cancels identically
    and is outside the admissible weight range.)
    """
    if t not in (1, 3):
        raise ValueError("t must be 1 or 3")
    if n % 2 or d < t + 1 or n <= 2 * d or w < 0:
        raise ValueError("need n even, d >= t+1, n > 2d, w >= 0")
    total = 0
    for i in range(w + 1):
        if w - i <= d - (t + 1):
            total += (-1) ** (w - i) * comb(d - (t + 1), w - i) * comb(n - 2 * d, 2 * i)
    total += (-1) ** (w + 1) * comb(n // 2 - (t + 1), w)
    return total


# ---- closed-form clauses ---------------------------------------------------

@dataclass(frozen=True)
class CertifiedWeight:
    weight: int
    clause: str


def prop52_closed_forms(n: int, d: int, case: tuple[int, int]) -> list[CertifiedWeight]:
    """Evaluate every applicable closed-form clause at (n, d).

    Returns the certified dual weights within [d', n], tagged with the clause
    that fired.  Weights are exactly the roots of the corresponding bracket
    sum (a cross-checked invariant of the test suite).
    """
    if case not in (CASE_41, CASE_63):
        raise ValueError(f"case must be {CASE_41} or {CASE_63}")
    if n % 2 or not 0 < d < n // 2:
        raise ValueError("need n even and 0 < d < n/2")
    t = case[1]
    d_perp = case[0]
    m = n - 2 * d
    out: list[CertifiedWeight] = []

    def emit(weight: int, clause: str) -> None:
        if d_perp <= weight <= n:
            out.append(CertifiedWeight(weight, clause))

    # low-weight quadratic: m^2 = 6n - 32 (resp. 6n - 56)
    low = 6 if t == 1 else 8
    if m * m == 6 * n - (32 if t == 1 else 56):
        emit(low, "low-weight quadratic")
        if n % 4 == 0:
            emit(n - low, "low-weight quadratic (mirror)")
    # near-top quadratic: m^2 = 2n - 8 (resp. 2n - 16); needs n = 2 mod 4, d even
    if n % 4 == 2 and d % 2 == 0 and m * m == 2 * n - (8 if t == 1 else 16):
        emit(n - 4 if t == 1 else n - 6, "near-top quadratic")
    # quartic: certifies weight 8 (resp. 10) together with its mirror
    qlow = 8 if t == 1 else 10
    c0, c1, c2 = (100, 570, 1744) if t == 1 else (160, 930, 4744)
    if m**4 - 15 * m * m * n + c0 * m * m + 45 * n * n - c1 * n + c2 == 0:
        emit(qlow, "quartic")
        emit(n - qlow, "quartic (mirror)")
    # narrow gap m = 6: integer roots of a quadratic in the coefficient index
    if m == 6:
        arg = 3 * d + 1 if t == 1 else 3 * d - 5
        root = _sqrt_exact(arg)
        if root is not None:
            base = 3 * d - 9 if t == 1 else 3 * d - 15
            for sign in (1, -1):
                num = base + sign * root
                if num > 0 and num % 4 == 0:
                    emit(2 * (num // 4) + (8 if t == 1 else 10), "gap-6 root")
    # narrow gap m = 8: d (resp. d - 2) must be a perfect square
    if m == 8:
        root = _sqrt_exact(d if t == 1 else d - 2)
        if root is not None:
            for sign in (1, -1):
                idx = d - 4 + sign * root
                if idx > 0 and idx % 2 == 0:
                    emit(d + 4 + sign * root, "gap-8 root")
    return out


def _clause_candidates(n: int, case: tuple[int, int]) -> set[int]:
    """All d that can fire some clause at this n, solved in m = n - 2d."""
    t = case[1]
    cands: set[int] = set()

    def add_from_m(m: int | None) -> None:
        if m is not None and m > 0 and m % 2 == 0 and m < n - 2:
            cands.add((n - m) // 2)

    add_from_m(_sqrt_exact(6 * n - (32 if t == 1 else 56)))
    if n % 4 == 2:
        add_from_m(_sqrt_exact(2 * n - (8 if t == 1 else 16)))
    c0, c1, c2 = (100, 570, 1744) if t == 1 else (160, 930, 4744)
    disc = _sqrt_exact((15 * n - c0) ** 2 - 4 * (45 * n * n - c1 * n + c2))
    if disc is not None:
        for sign in (1, -1):
            num = 15 * n - c0 + sign * disc
            if num > 0 and num % 2 == 0:
                add_from_m(_sqrt_exact(num // 2))
    for m in (6, 8):
        if n - m > 2:  # d = (n - m)/2 >= 2
            cands.add((n - m) // 2)
    return {d for d in cands if d >= 2}


# ---- integrality filters ---------------------------------------------------

def feasible_dimensions(n: int, d: int, k_max: int | None = None) -> list[int]:
    """Dimensions k in [2, n-1] making alpha = n(2^(k-1) - n)/(n-2d)^2 a
    positive integer (the dual-distance-4 integrality filter)."""
    den = (n - 2 * d) ** 2
    residue = n % den
    target = (n * n) % den
    k_hi = n - 1 if k_max is None else min(k_max, n - 1)
    out = []
    pow_mod = 2 % den  # 2^(k-1) mod den, starting at k = 2
    pow_exact: int | None = 2
    for k in range(2, k_hi + 1):
        if pow_exact is not None and pow_exact <= n:
            positive = False
        else:
            positive = True
            pow_exact = None
        if positive and (residue * pow_mod - target) % den == 0:
            out.append(k)
        pow_mod = (pow_mod * 2) % den
        if pow_exact is not None:
            pow_exact *= 2
    return out


def joint_filter_63(n: int, d: int) -> bool:
    """Both integrality conditions for dual distance 6, with one shared alpha.

    The second constraint pins alpha; the dimension relation then demands
    that (alpha (n-2d)^2 + n^2)/n be a power of two 2^(k-1), 2 <= k <= n-1.
    """
    params = solve_weight_params(n, d, dperp_min=6)
    if not params.alpha_is_positive_integer:
        return False
    alpha = int(params.alpha)
    q = alpha * (n - 2 * d) ** 2 + n * n
    if q % n:
        return False
    p = q // n
    if p < 2 or p & (p - 1):
        return False
    return p.bit_length() - 1 <= n - 2


# ---- scans ------------------------------------------------------------------

@dataclass(frozen=True)
class SearchRecord:
    """One surviving parameter pair with its certified dual weights."""

    n: int
    d: int
    case: tuple[int, int]
    weights: tuple[int, ...]
    provenance: tuple[str, ...]


def _trim_empty_weights(n: int, d: int, d_perp: int, certs: list[CertifiedWeight]):
    both_even = d % 2 == 0 and (n // 2) % 2 == 0
    kept = []
    for c in certs:
        if c.weight >= n:
            continue  # the full-support design never witnesses extra strength
        if both_even and n - c.weight < d_perp:
            continue  # dual weight provably empty: mirrors below the dual distance
        kept.append(c)
    return kept


def scan_case(case: tuple[int, int], max_n: int, collect_prefilter: bool = False):
    """Scan all even n <= max_n; returns (records, prefilter_candidates).

    prefilter_candidates are the clause hits before the integrality filters,
    kept only when requested.
    """
    records: list[SearchRecord] = []
    prefilter: list[SearchRecord] = []
    for n in range(6, max_n + 1, 2):
        for d in sorted(_clause_candidates(n, case)):
            certs = prop52_closed_forms(n, d, case)
            certs = _trim_empty_weights(n, d, case[0], certs)
            if not certs:
                continue
            weights = tuple(sorted({c.weight for c in certs}))
            provenance = tuple(dict.fromkeys(c.clause for c in certs))
            rec = SearchRecord(n, d, case, weights, provenance)
            if collect_prefilter:
                prefilter.append(rec)
            if case == CASE_41:
                if not feasible_dimensions(n, d):
                    continue
            else:
                if not joint_filter_63(n, d):
                    continue
            records.append(rec)
    return records, prefilter


def reproduce_table_b(max_n: int) -> list[SearchRecord]:
    """All (4, 1) parameter pairs with promoted dual weights, n <= max_n."""
    if max_n < 6:
        return []
    return scan_case(CASE_41, max_n)[0]


def search_case_63(max_n: int) -> list[SearchRecord]:
    """The (6, 3) scan; comes back empty for every n <= 10000."""
    if max_n < 6:
        return []
    return scan_case(CASE_63, max_n)[0]


# ---- uniqueness of the gap-3, dual-distance-8 parameters --------------------

@dataclass(frozen=True)
class UniquenessTrial:
    m: int
    n: Fraction
    status: str


@dataclass(frozen=True)
class UniquenessCertificate:
    trials: tuple[UniquenessTrial, ...]
    survivors: tuple[dict, ...]

    @property
    def is_singleton(self) -> bool:
        return len(self.survivors) == 1


def golay_uniqueness() -> UniquenessCertificate:
    """Enumerate the finitely many parameter sets allowed at dual distance 8.

    Integrality of alpha forces 640/m^2 to be a positive integer, so
    m in {1, 2, 4, 8}; n = (m^2 + 8)/3 where integral, n > 8, and positive
    integer alpha, beta then leave exactly the [24, 12, 8] parameters
    alpha = 759, beta = 2576.
    """
    trials = []
    survivors = []
    for m in range(1, isqrt(640) + 1):
        if 640 % (m * m):
            continue
        n_frac = Fraction(m * m + 8, 3)
        if n_frac.denominator != 1:
            trials.append(UniquenessTrial(m, n_frac, "rejected: n not an integer"))
            continue
        n = int(n_frac)
        if n % 2:
            trials.append(UniquenessTrial(m, n_frac, "rejected: n odd"))
            continue
        if n <= 8:
            trials.append(UniquenessTrial(m, n_frac, "rejected: n must exceed the dual distance 8"))
            continue
        params = solve_weight_params(n, dperp_min=8)
        if not params.feasible or params.d is None:
            trials.append(UniquenessTrial(m, n_frac, "rejected: non-integral parameters"))
            continue
        alpha, beta = int(params.alpha), int(params.beta)
        size = 2 * alpha + beta + 2
        if size & (size - 1):
            trials.append(UniquenessTrial(m, n_frac, "rejected: code size not a power of two"))
            continue
        trials.append(UniquenessTrial(m, n_frac, "survives"))
        survivors.append(
            {
                "n": n,
                "d": params.d,
                "alpha": alpha,
                "beta": beta,
                "k": size.bit_length() - 1,
                "code_size": size,
            }
        )
    return UniquenessCertificate(tuple(trials), tuple(survivors))


# ---- bridging predictions to an actual code ---------------------------------

@dataclass(frozen=True)
class WeightCertification:
    weight: int
    dual_count: int
    strength: int | None
    promoted: bool


@dataclass(frozen=True)
class CodeCertification:
    case: tuple[int, int] | None
    t: int | None
    predicted_weights: tuple[int, ...]
    checks: tuple[WeightCertification, ...]
    delta: int
    s: int
    dual_delta: int
    dual_s: int

    @property
    def all_consistent(self) -> bool:
        return all(c.promoted for c in self.checks if c.dual_count)


def certify_with_code(code: BinaryCode, cap: int | None = None) -> CodeCertification:
    """Check bracket predictions against the dual support designs of a code.

    Every weight whose bracket vanishes must carry a dual support design of
    strength at least t + 1 (vacuously when that dual weight is empty).
    """
    status = am_applicability(code, cap)
    if status.t_equality is None:
        raise ValueError("code does not meet the equality condition; nothing to certify")
    t = status.t_equality
    n = code.n
    d = code.minimum_distance(cap)
    case = (status.d_perp, t)
    predicted: list[int] = []
    if case == CASE_42 and d >= 3 and n > 2 * d:
        for w in range(0, (n - 4) // 2 + 1):
            weight = 2 * w + 4
            if status.d_perp <= weight < n and bracket_t13(w, n, d) == 0:
                predicted.append(weight)
    elif case in (CASE_41, CASE_63) and d >= t + 1 and n > 2 * d:
        for w in range(1, (n - t - 1) // 2 + 1):
            weight = 2 * w + t + 1
            if status.d_perp <= weight < n and bracket_t12(w, n, d, t) == 0:
                predicted.append(weight)
    dual = code.dual()
    dual_by_weight = dual.supports_by_weight(cap)
    checks = []
    for weight in predicted:
        sups = dual_by_weight.get(weight, [])
        if not sups:
            checks.append(WeightCertification(weight, 0, None, True))
            continue
        strength = design_strength(BlockDesign(n, tuple(sups)), max_t=t + 1)
        checks.append(WeightCertification(weight, len(sups), strength, strength >= t + 1))
    from .designs import delta_s  # local import avoids a cycle at module load

    report = delta_s(code, cap)
    dual_report = delta_s(dual, cap)
    return CodeCertification(
        case=case,
        t=t,
        predicted_weights=tuple(predicted),
        checks=tuple(checks),
        delta=report.delta,
        s=report.s,
        dual_delta=dual_report.delta,
        dual_s=dual_report.s,
    )
