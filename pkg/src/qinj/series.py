"""Truncated formal power series in q with exact integer coefficients.

Everything here is exact: coefficients are Python ints (arbitrary
precision, so overflow cannot occur silently), and every series carries
an explicit truncation degree.  Operations never extend a series past
its truncation degree, and refuse to combine series of different
degrees rather than guess.
"""

from __future__ import annotations

from dataclasses import dataclass

HOLDS = "HOLDS"
VIOLATED = "VIOLATED"
SKIPPED = "SKIPPED"


@dataclass(frozen=True)
class Verdict:
    """Outcome of a coefficientwise comparison up to a truncation degree.

    ``first_violation`` is ``(x, lhs_x, rhs_x)`` for the smallest exponent
    where the comparison fails, or None.  SKIPPED marks a search that
    exhausted its degree bound without settling the question.
    """

    status: str
    first_violation: tuple[int, int, int] | None
    checked_degree: int

    @property
    def holds(self) -> bool:
        return self.status == HOLDS


@dataclass(frozen=True)
class Series:
    """A power series in q truncated at a fixed degree N.

    ``coeffs[x]`` is the exact integer coefficient of q^x, for
    0 <= x <= N.  Instances are immutable and safe to share.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("a series needs at least the constant coefficient")

    @property
    def truncation_degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, exponent: int) -> int:
        return self.coeffs[exponent]

    def __mul__(self, other: "Series") -> "Series":
        return series_mul(self, other)

    def __add__(self, other: "Series") -> "Series":
        return series_add(self, other)

    def __sub__(self, other: "Series") -> "Series":
        return series_sub(self, other)

    def shift(self, offset: int) -> "Series":
        """Multiply by q^offset, truncating at the same degree."""
        if offset < 0:
            raise ValueError("shift offset must be nonnegative")
        n = len(self.coeffs)
        out = [0] * n
        for x in range(offset, n):
            out[x] = self.coeffs[x - offset]
        return Series(tuple(out))

    @staticmethod
    def zero(degree: int) -> "Series":
        return Series((0,) * (degree + 1))

    @staticmethod
    def one(degree: int) -> "Series":
        return Series((1,) + (0,) * degree)


def _check_same_degree(a: Series, b: Series) -> int:
    if a.truncation_degree != b.truncation_degree:
        raise ValueError(
            f"mismatched truncation degrees: {a.truncation_degree} vs {b.truncation_degree}"
        )
    return a.truncation_degree


def series_mul(a: Series, b: Series) -> Series:
    """Cauchy product of two series sharing a truncation degree."""
    n = _check_same_degree(a, b)
    ac, bc = a.coeffs, b.coeffs
    out = [0] * (n + 1)
    for i, ai in enumerate(ac):
        if ai == 0:
            continue
        for j in range(n + 1 - i):
            bj = bc[j]
            if bj:
                out[i + j] += ai * bj
    return Series(tuple(out))


def series_add(a: Series, b: Series) -> Series:
    _check_same_degree(a, b)
    return Series(tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))


def series_sub(a: Series, b: Series) -> Series:
    _check_same_degree(a, b)
    return Series(tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))


@dataclass(frozen=True)
class ProductSpec:
    """A finite product of geometric-progression Pochhammer factors.

    Each factor ``(base, step, length)`` stands for the reciprocal
    1/((q^base; q^step)_length), i.e. the generating function for
    partitions into parts base, base+step, ..., base+(length-1)*step.
    Parts contributed by different factors are counted as distinct even
    when their numeric values collide.  ``length == 0`` is the empty
    product 1.
    """

    factors: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        for base, step, length in self.factors:
            if base < 1 or step < 1 or length < 0:
                raise ValueError(f"bad factor (base={base}, step={step}, length={length})")

    @staticmethod
    def of(*factors: tuple[int, int, int]) -> "ProductSpec":
        return ProductSpec(tuple(factors))

    def parts(self, cap: int | None = None) -> list[int]:
        """All part values of the product, optionally only those <= cap."""
        out = []
        for base, step, length in self.factors:
            for j in range(length):
                p = base + j * step
                if cap is not None and p > cap:
                    break
                out.append(p)
        return out


def stabilized_length(step: int, degree: int) -> int:
    """Factor length after which an infinite product is stable below q^degree.

    A factor (1 - q^p) with p > degree is the identity at this truncation,
    so length floor(degree/step) + 1 already captures the infinite product.
    """
    if step < 1:
        raise ValueError("step must be positive")
    return degree // step + 1


def expand_product(spec: ProductSpec, degree: int) -> Series:
    """Expand the reciprocal Pochhammer product as a series up to q^degree.

    The coefficient of q^x counts multisets over the product's parts with
    total x (colored: parts of equal value from different factor slots
    stay distinct).  Uses one prefix-recurrence pass per part.
    """
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    coeffs = [0] * (degree + 1)
    coeffs[0] = 1
    for part in spec.parts(cap=degree):
        for x in range(part, degree + 1):
            coeffs[x] += coeffs[x - part]
    return Series(tuple(coeffs))


def _gauss_polynomial(top: int, bottom: int, cap: int) -> list[int]:
    """Coefficients (degree <= cap) of the Gaussian binomial [top, bottom] in q.

    Pascal-type recurrence [n, k] = [n-1, k-1] + q^k [n-1, k]; all
    intermediate values stay nonnegative integers.
    """
    size = cap + 1
    row = [[0] * size for _ in range(bottom + 1)]
    row[0][0] = 1
    for _ in range(top):
        new = [[0] * size for _ in range(bottom + 1)]
        new[0][0] = 1
        for k in range(1, bottom + 1):
            left, right, dst = row[k - 1], row[k], new[k]
            for e in range(size):
                v = left[e]
                if e >= k:
                    v += right[e - k]
                dst[e] = v
        row = new
    return row[bottom]


def qbinom(top: int, bottom: int, step: int, degree: int) -> Series:
    """Gaussian binomial [top choose bottom] in the variable q^step.

    Truncated at q^degree.  Requires 0 <= bottom <= top and step >= 1;
    coefficients are nonnegative.
    """
    if bottom < 0 or top < 0:
        raise ValueError("binomial arguments must be nonnegative")
    if bottom > top:
        raise ValueError(f"bottom={bottom} exceeds top={top}")
    if step < 1:
        raise ValueError("step must be positive")
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    cap = min(bottom * (top - bottom), degree // step)
    poly = _gauss_polynomial(top, bottom, cap)
    coeffs = [0] * (degree + 1)
    for e, c in enumerate(poly):
        coeffs[e * step] = c
    return Series(tuple(coeffs))


def dominance(a: Series, b: Series) -> Verdict:
    """Check a >= b coefficientwise; report the smallest failing exponent."""
    n = _check_same_degree(a, b)
    for x, (ax, bx) in enumerate(zip(a.coeffs, b.coeffs)):
        if ax < bx:
            return Verdict(VIOLATED, (x, ax, bx), n)
    return Verdict(HOLDS, None, n)


def coefficients_equal(a: Series, b: Series) -> Verdict:
    """Check a == b coefficientwise; report the smallest differing exponent."""
    n = _check_same_degree(a, b)
    for x, (ax, bx) in enumerate(zip(a.coeffs, b.coeffs)):
        if ax != bx:
            return Verdict(VIOLATED, (x, ax, bx), n)
    return Verdict(HOLDS, None, n)
