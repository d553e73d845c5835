"""Theorem-level verifiers: dominance checks, injection tables, refinements,
lecture-hall correspondences, and exception sweeps.

Dominance verdicts for the primary and dual inequalities are confirmed by
a second, independent route whenever an injection exists: the domain
partitions of each small norm are enumerated, mapped, and required to land
injectively among the codomain partitions, with all counts tied back to
the series coefficients.  A disagreement between the two routes is an
implementation bug and aborts with CrossCheckError rather than returning
a verdict.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .injection import Diagnostics, inject, invert
from .partitions import (
    CODOMAIN,
    DOMAIN,
    DUAL,
    GEN,
    MAIN,
    Params,
    Partition,
    enumerate_flat_constrained,
    enumerate_partitions,
    flat_norm,
    norm,
    product_spec,
)
from .series import (
    HOLDS,
    SKIPPED,
    VIOLATED,
    ProductSpec,
    Series,
    Verdict,
    coefficients_equal,
    dominance,
    expand_product,
    qbinom,
    series_add,
    stabilized_length,
)

__all__ = [
    "HOLDS", "VIOLATED", "SKIPPED", "Verdict", "CrossCheckError",
    "verify_main", "verify_dual", "verify_gen", "verify_bg",
    "verify_refinement1", "verify_refinement2", "verify_refinement3",
    "refinement_side_series", "flat_component_series", "check_flat_refinement",
    "InjectionRecord", "injection_table",
    "lecture_hall_check", "LECTURE_HALL_VARIANTS",
    "SearchReport", "search_exceptions", "sweep_ranges",
    "bg_expected_nonnegative",
]

# Norm bound for the enumeration cross-check when the caller does not pick one.
DEFAULT_CROSS_CHECK_LIMIT = 24


class CrossCheckError(RuntimeError):
    """Series arithmetic and the injection argument disagreed."""


def _cross_check(params: Params, mode: str, lhs: Series, rhs: Series, limit: int) -> None:
    for x in range(limit + 1):
        domain = enumerate_partitions(DOMAIN, mode, x, params)
        if len(domain) != rhs[x]:
            raise CrossCheckError(
                f"{params.as_tuple()} {mode} x={x}: enumerated {len(domain)} domain "
                f"partitions but series says {rhs[x]}")
        codomain = set(enumerate_partitions(CODOMAIN, mode, x, params))
        if len(codomain) != lhs[x]:
            raise CrossCheckError(
                f"{params.as_tuple()} {mode} x={x}: enumerated {len(codomain)} codomain "
                f"partitions but series says {lhs[x]}")
        images = set()
        for p2 in domain:
            p1 = inject(p2, params, mode)
            if norm(p1, params) != x:
                raise CrossCheckError(
                    f"{params.as_tuple()} {mode} x={x}: image norm {norm(p1, params)} != {x}")
            if p1 not in codomain:
                raise CrossCheckError(
                    f"{params.as_tuple()} {mode} x={x}: image not a codomain partition")
            images.add(p1)
        if len(images) != len(domain):
            raise CrossCheckError(
                f"{params.as_tuple()} {mode} x={x}: injection collided "
                f"({len(images)} images for {len(domain)} domain partitions)")


def _verify_injective_mode(params: Params, degree: int, mode: str,
                           cross_check_limit: int | None,
                           allow_gcd: bool, allow_k_lt_l: bool) -> Verdict:
    params.validate(mode, allow_gcd=allow_gcd, allow_k_lt_l=allow_k_lt_l)
    lhs = expand_product(product_spec(CODOMAIN, mode, params), degree)
    rhs = expand_product(product_spec(DOMAIN, mode, params), degree)
    verdict = dominance(lhs, rhs)
    relaxed = math.gcd(params.n, params.y) != 1 or params.K < params.L
    if not relaxed:
        limit = DEFAULT_CROSS_CHECK_LIMIT if cross_check_limit is None else cross_check_limit
        limit = min(limit, degree)
        if limit > 0:
            _cross_check(params, mode, lhs, rhs, limit)
            if verdict.status == VIOLATED and verdict.first_violation[0] <= limit:
                raise CrossCheckError(
                    f"{params.as_tuple()} {mode}: dominance violated at "
                    f"x={verdict.first_violation[0]} yet the injection succeeded there")
    return verdict


def verify_main(params: Params, degree: int, cross_check_limit: int | None = None,
                *, allow_gcd: bool = False, allow_k_lt_l: bool = False) -> Verdict:
    """Coefficientwise dominance for the primary product inequality.

    Checks expansion of 1/((q^z;q^m)_K (q^nyz;q^nm)_L) against
    1/((q^yz;q^m)_K (q^nz;q^nm)_L) up to q^degree, and cross-checks the
    forward injection on every norm up to ``cross_check_limit`` (skipped
    for relaxed parameter tuples, where no injection is defined).
    """
    return _verify_injective_mode(params, degree, MAIN, cross_check_limit,
                                  allow_gcd, allow_k_lt_l)


def verify_dual(params: Params, degree: int, cross_check_limit: int | None = None,
                *, allow_gcd: bool = False, allow_k_lt_l: bool = False) -> Verdict:
    """Dominance for the dual inequality (K and L swapped on the right)."""
    return _verify_injective_mode(params, degree, DUAL, cross_check_limit,
                                  allow_gcd, allow_k_lt_l)


def verify_gen(params: Params, degree: int) -> Verdict:
    """Dominance for the (S, T) generalization; series comparison only."""
    params.validate(GEN)
    lhs = expand_product(product_spec(CODOMAIN, GEN, params), degree)
    rhs = expand_product(product_spec(DOMAIN, GEN, params), degree)
    return dominance(lhs, rhs)


def bg_expected_nonnegative(m: int, r: int) -> bool:
    """Divisibility criterion for the two-parameter congruence-pair race."""
    return (m - r) % r != 0 and r % (m - r) != 0


def verify_bg(length: int | None, m: int, r: int, degree: int) -> Verdict:
    """Dominance of 1/(q, q^(m-r'); q^m)_L races, r' = 1 vs r.

    Compares 1/((q, q^{m-1}; q^m)_L) against 1/((q^r, q^{m-r}; q^m)_L) up
    to q^degree.  ``length=None`` means the infinite product, realized by
    a stabilized truncation.  When the divisibility criterion predicts a
    violation but none appears below the degree bound, the verdict is
    SKIPPED: absence at finite degree proves nothing.
    """
    if not 1 < r < m - 1:
        raise ValueError(f"need 1 < r < m-1, got r={r}, m={m}")
    if length is not None and length < 1:
        raise ValueError("length must be positive (or None for the infinite product)")
    eff = stabilized_length(m, degree) if length is None else length
    lhs = expand_product(ProductSpec.of((1, m, eff), (m - 1, m, eff)), degree)
    rhs = expand_product(ProductSpec.of((r, m, eff), (m - r, m, eff)), degree)
    verdict = dominance(lhs, rhs)
    if verdict.status == HOLDS and not bg_expected_nonnegative(m, r):
        return Verdict(SKIPPED, None, degree)
    return verdict


def _box_series(box: int, count: int, step: int, degree: int) -> Series | None:
    """Gaussian binomial [box-1+count choose count] in q^step.

    Generating function for multisets of ``count`` indices drawn from a
    box of ``box`` slots.  An empty box admits only count = 0 (returns
    None for count > 0, meaning a vanishing term).
    """
    if box == 0:
        return Series.one(degree) if count == 0 else None
    return qbinom(box - 1 + count, count, step, degree)


def _binomial_pair_sum(pairs: Iterable[tuple[int, int]], box_s: int, box_t: int,
                       t_step: int, degree: int) -> Series:
    total = Series.zero(degree)
    for s, t in pairs:
        left = _box_series(box_s, s, 1, degree)
        right = _box_series(box_t, t, t_step, degree)
        if left is None or right is None:
            continue
        total = series_add(total, left * right)
    return total


def _pairs_lhs(n: int, y: int, f: int) -> list[tuple[int, int]]:
    # s + n*y*t = f
    return [(f - n * y * t, t) for t in range(f // (n * y) + 1)]


def _pairs_rhs(n: int, y: int, f: int) -> list[tuple[int, int]]:
    # s*y + n*t = f
    out = []
    for t in range(f // n + 1):
        rem = f - n * t
        if rem % y == 0:
            out.append((rem // y, t))
    return out


def refinement_side_series(side: str, n: int, y: int, box_s: int, box_t: int,
                           f: int, degree: int) -> Series:
    """One side of a fixed-flat-norm refinement as a q-binomial sum."""
    pairs = _pairs_lhs(n, y, f) if side == "lhs" else _pairs_rhs(n, y, f)
    return _binomial_pair_sum(pairs, box_s, box_t, n, degree)


def _validate_refinement_params(n: int, y: int, K: int, L: int, f: int) -> None:
    if min(n, y) < 1:
        raise ValueError("n and y must be positive")
    if math.gcd(n, y) != 1:
        raise ValueError(f"gcd(n, y) = gcd({n}, {y}) != 1")
    if not K >= L >= 0:
        raise ValueError(f"need K >= L >= 0, got K={K}, L={L}")
    if f < 0:
        raise ValueError("f must be nonnegative")


def verify_refinement1(n: int, y: int, K: int, L: int, f: int, degree: int) -> Verdict:
    """Dominance between the two q-binomial sums at fixed flat parameter f.

    Left: sum over s + n*y*t = f of [K-1+s, s]_q [L-1+t, t]_{q^n};
    right: the same binomials summed over s*y + n*t = f.
    """
    _validate_refinement_params(n, y, K, L, f)
    lhs = refinement_side_series("lhs", n, y, K, L, f, degree)
    rhs = refinement_side_series("rhs", n, y, K, L, f, degree)
    return dominance(lhs, rhs)


def verify_refinement2(n: int, y: int, K: int, L: int, f: int, degree: int) -> Verdict:
    """Like verify_refinement1, but the right side swaps the box sizes:
    sum over s*y + n*t = f of [L-1+s, s]_q [K-1+t, t]_{q^n}."""
    _validate_refinement_params(n, y, K, L, f)
    lhs = refinement_side_series("lhs", n, y, K, L, f, degree)
    rhs = _binomial_pair_sum(_pairs_rhs(n, y, f), L, K, n, degree)
    return dominance(lhs, rhs)


def verify_refinement3(L: int, m: int, r: int, f: int, degree: int) -> Verdict:
    """Fixed-flat refinement of the congruence-pair race.

    Left: sum over s + (m-1)t = f of [L-1+s, s]_q [L-1+t, t]_q;
    right: the same summed over s*r + (m-r)t = f.  Requires L > 0,
    1 < r < m - r and r not dividing m - r.
    """
    if L < 1:
        raise ValueError("L must be positive")
    if not 1 < r < m - r:
        raise ValueError(f"need 1 < r < m-r, got r={r}, m={m}")
    if (m - r) % r == 0:
        raise ValueError(f"r={r} divides m-r={m - r}; refinement not applicable")
    if f < 0:
        raise ValueError("f must be nonnegative")
    lhs_pairs = [(f - (m - 1) * t, t) for t in range(f // (m - 1) + 1)]
    rhs_pairs = []
    for t in range(f // (m - r) + 1):
        rem = f - (m - r) * t
        if rem % r == 0:
            rhs_pairs.append((rem // r, t))
    lhs = _binomial_pair_sum(lhs_pairs, L, L, 1, degree)
    rhs = _binomial_pair_sum(rhs_pairs, L, L, 1, degree)
    return dominance(lhs, rhs)


def flat_component_series(side: str, mode: str, f: int, params: Params,
                          degree: int) -> Series:
    """Series of fixed-flat-norm partition counts via q^m-binomials.

    Equals q^{z f} times the binomial pair sum in the variables q^m and
    q^{n m}; the x-coefficient counts the side's partitions of norm x
    with flattened norm z*f.
    """
    n, y, m, z = params.n, params.y, params.m, params.z
    if side == CODOMAIN:
        pairs = _pairs_lhs(n, y, f)
        box_s, box_t = params.K, params.L
    else:
        pairs = _pairs_rhs(n, y, f)
        if mode == MAIN:
            box_s, box_t = params.K, params.L
        elif mode == DUAL:
            box_s, box_t = params.L, params.K
        else:
            raise ValueError(f"unsupported mode {mode!r}")
    total = Series.zero(degree)
    for s, t in pairs:
        left = _box_series(box_s, s, m, degree)
        right = _box_series(box_t, t, n * m, degree)
        if left is None or right is None:
            continue
        total = series_add(total, left * right)
    return total.shift(params.z * f) if params.z * f <= degree else Series.zero(degree)


def check_flat_refinement(side: str, mode: str, f: int, params: Params,
                          degree: int) -> Verdict:
    """Equality of flat-constrained enumeration counts and the binomial series."""
    predicted = flat_component_series(side, mode, f, params, degree)
    counted = Series(tuple(
        len(enumerate_flat_constrained(side, mode, x, f, params))
        for x in range(degree + 1)))
    return coefficients_equal(counted, predicted)


@dataclass(frozen=True)
class InjectionRecord:
    """One table row: pre-image (None when unmatched), image, diagnostics."""

    pre: Partition | None
    image: Partition
    mu: int
    a: int
    b: int


def injection_table(params: Params, x: int, mode: str = MAIN) -> list[InjectionRecord]:
    """Invert every codomain partition of norm x into a table of records.

    Mapped records come first, then the unmatched ones; each group keeps
    the canonical enumeration order of the image partitions.
    """
    params.validate(mode)
    mapped: list[InjectionRecord] = []
    unmatched: list[InjectionRecord] = []
    for p1 in enumerate_partitions(CODOMAIN, mode, x, params):
        pre, diag = invert(p1, params, mode)
        rec = InjectionRecord(pre, p1, diag.mu, diag.a, diag.b)
        (mapped if pre is not None else unmatched).append(rec)
    return mapped + unmatched


LECTURE_HALL_VARIANTS = (
    "lhp", "savage-odd", "savage-even", "dual-savage-even", "dual-savage-odd",
)


def _lecture_hall_layout(variant: str, size: int, u: int, v: int):
    """Chain length, per-position weights, parity mask, and product spec.

    Positions are 1-based; ``weights[p]`` multiplies b_p in the exponent,
    ``even_required[p]`` forces b_p even.  The returned spec is the
    right-hand product under the substitution X = q^u, Y = q^v.
    """
    if variant == "lhp":
        length = size
        weights = {p: (u if (length - p) % 2 == 0 else v) for p in range(1, length + 1)}
        even = set()
        spec = ProductSpec.of((u, u + v, length))
    elif variant in ("savage-odd", "savage-even"):
        length = 2 * size
        weights = {p: (u if p % 2 == 1 else v) for p in range(1, length + 1)}
        if variant == "savage-odd":
            even = {p for p in range(1, length + 1) if p % 2 == 1}
            spec = ProductSpec.of((v, 2 * u + 2 * v, size), (2 * u + 4 * v, 4 * u + 4 * v, size))
        else:
            even = {p for p in range(1, length + 1) if p % 2 == 0}
            spec = ProductSpec.of((u + 2 * v, 2 * u + 2 * v, size), (2 * v, 4 * u + 4 * v, size))
    elif variant in ("dual-savage-even", "dual-savage-odd"):
        length = 2 * size + 1
        weights = {p: (u if p % 2 == 0 else v) for p in range(1, length + 1)}
        if variant == "dual-savage-even":
            even = {p for p in range(1, length + 1) if p % 2 == 0}
            spec = ProductSpec.of((v, 2 * u + 2 * v, size + 1), (2 * u + 4 * v, 4 * u + 4 * v, size))
        else:
            even = {p for p in range(1, length + 1) if p % 2 == 1}
            spec = ProductSpec.of((u + 2 * v, 2 * u + 2 * v, size), (2 * v, 4 * u + 4 * v, size + 1))
    else:
        raise ValueError(f"unknown variant {variant!r}; choose from {LECTURE_HALL_VARIANTS}")
    return length, weights, even, spec


def lecture_hall_check(variant: str, size: int, x_exp: int, y_exp: int,
                       degree: int) -> Verdict:
    """Exact equality of a constrained-chain sum and its product form.

    Enumerates chains b_1, ..., b_P with b_P/P >= ... >= b_1 >= 0 (plus
    the variant's parity constraint), weighting each b_p by x_exp or
    y_exp per the variant's alternation, and compares the resulting
    series with the product side under X = q^x_exp, Y = q^y_exp.  Both
    exponents must be positive so a chain's weight bounds every entry,
    which makes the truncated enumeration provably complete.
    """
    if size < 1:
        raise ValueError("size must be positive")
    if x_exp < 1 or y_exp < 1:
        raise ValueError("substitution exponents must be >= 1 for a sound truncation")
    length, weights, even, spec = _lecture_hall_layout(variant, size, x_exp, y_exp)
    counts = [0] * (degree + 1)

    def descend(pos: int, cap: int | None, weight: int) -> None:
        if pos == 0:
            counts[weight] += 1
            return
        w = weights[pos]
        step = 2 if pos in even else 1
        b = 0
        while (cap is None or b <= cap) and weight + w * b <= degree:
            descend(pos - 1, ((pos - 1) * b) // pos, weight + w * b)
            b += step

    descend(length, None, 0)
    return coefficients_equal(Series(tuple(counts)), expand_product(spec, degree))


@dataclass(frozen=True)
class SearchReport:
    """Verdicts of a parameter sweep, with the relaxations that were applied."""

    entries: tuple[tuple[Params, Verdict], ...]
    degree: int
    allow_gcd: bool
    allow_k_lt_l: bool

    def violations(self) -> list[tuple[Params, Verdict]]:
        return [(p, v) for p, v in self.entries if v.status == VIOLATED]


def sweep_ranges(k_values: Sequence[int], l_values: Sequence[int],
                 m_values: Sequence[int], n_values: Sequence[int],
                 y_values: Sequence[int], z_values: Sequence[int],
                 coprime_only: bool = False) -> list[Params]:
    """Deterministic (K, L, m, n, y, z) grid; optionally gcd(n, y) = 1 only."""
    out = []
    for K in k_values:
        for L in l_values:
            for m in m_values:
                for n in n_values:
                    for y in y_values:
                        if coprime_only and math.gcd(n, y) != 1:
                            continue
                        for z in z_values:
                            out.append(Params(K, L, m, n, y, z))
    return out


def search_exceptions(tuples: Iterable[Params], degree: int,
                      allow_gcd: bool = False, allow_k_lt_l: bool = False,
                      cross_check_limit: int = 0) -> SearchReport:
    """Run the primary verifier over a tuple list, collecting verdicts.

    Tuples needing a relaxation that was not granted raise rather than
    being skipped silently.  Exploration only: the report asserts
    nothing, and every VIOLATED entry can be reproduced by re-running
    the single-tuple verifier.
    """
    entries = []
    for params in tuples:
        if math.gcd(params.n, params.y) != 1 and not allow_gcd:
            raise ValueError(
                f"{params.as_tuple()} has gcd(n, y) > 1; pass allow_gcd to sweep it")
        if params.K < params.L and not allow_k_lt_l:
            raise ValueError(
                f"{params.as_tuple()} has K < L; pass allow_k_lt_l to sweep it")
        verdict = verify_main(params, degree, cross_check_limit,
                              allow_gcd=allow_gcd, allow_k_lt_l=allow_k_lt_l)
        entries.append((params, verdict))
    if not entries:
        raise ValueError("empty parameter sweep")
    return SearchReport(tuple(entries), degree, allow_gcd, allow_k_lt_l)
