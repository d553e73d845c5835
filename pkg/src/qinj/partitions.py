"""Colored partitions over the four subscripted part families.

A part is identified by ``(family, index)``, never by its numeric value:
two parts with equal value but different family or index are distinct
("colored").  Given parameters (K, L, m, n, y, z), the part values are

    (Z, i)   = z   + (i-1)*m        codomain, 1 <= i <= K
    (NYZ, i) = nyz + (i-1)*n*m      codomain, 1 <= i <= L
    (YZ, i)  = yz  + (i-1)*m        domain
    (NZ, i)  = nz  + (i-1)*n*m      domain

Domain index ranges depend on the mode: YZ <= K and NZ <= L for the
primary inequality, YZ <= L and NZ <= K for its dual, and YZ <= S,
NZ <= T for the two-extra-parameter generalization.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, NamedTuple


class Family(str, Enum):
    Z = "Z"
    NZ = "NZ"
    YZ = "YZ"
    NYZ = "NYZ"


# Fixed family order used for canonical part ordering and enumeration.
_FAMILY_RANK = {Family.Z: 0, Family.NZ: 1, Family.YZ: 2, Family.NYZ: 3}

CODOMAIN = "codomain"
DOMAIN = "domain"

MAIN = "main"
DUAL = "dual"
GEN = "gen"


@dataclass(frozen=True)
class Params:
    """Parameter tuple (K, L, m, n, y, z) with optional (S, T).

    Theorem mode requires gcd(n, y) = 1 and K >= L >= 0; the generalized
    mode additionally requires max(S, T) <= K and 0 <= min(S, T) <= L.
    Relaxations (gcd > 1, K < L) must be requested explicitly.
    """

    K: int
    L: int
    m: int
    n: int
    y: int
    z: int
    S: int | None = None
    T: int | None = None

    def __post_init__(self) -> None:
        if self.K < 0 or self.L < 0:
            raise ValueError("K and L must be nonnegative")
        if min(self.m, self.n, self.y, self.z) < 1:
            raise ValueError("m, n, y, z must be positive")

    def validate(self, mode: str = MAIN, allow_gcd: bool = False,
                 allow_k_lt_l: bool = False) -> None:
        if mode not in (MAIN, DUAL, GEN):
            raise ValueError(f"unknown mode {mode!r}")
        if math.gcd(self.n, self.y) != 1 and not allow_gcd:
            raise ValueError(
                f"gcd(n, y) = gcd({self.n}, {self.y}) != 1 (pass allow_gcd to relax)")
        if self.K < self.L and not allow_k_lt_l:
            raise ValueError(
                f"K = {self.K} < L = {self.L} (pass allow_k_lt_l to relax)")
        if mode == GEN:
            if self.S is None or self.T is None:
                raise ValueError("generalized mode needs S and T")
            if self.S < 0 or self.T < 0:
                raise ValueError("S and T must be nonnegative")
            if max(self.S, self.T) > self.K:
                raise ValueError(f"max(S, T) = {max(self.S, self.T)} exceeds K = {self.K}")
            if min(self.S, self.T) > self.L:
                raise ValueError(f"min(S, T) = {min(self.S, self.T)} exceeds L = {self.L}")

    def family_base(self, family: Family) -> int:
        if family is Family.Z:
            return self.z
        if family is Family.YZ:
            return self.y * self.z
        if family is Family.NZ:
            return self.n * self.z
        return self.n * self.y * self.z

    def family_step(self, family: Family) -> int:
        return self.m if family in (Family.Z, Family.YZ) else self.n * self.m

    def part_value(self, family: Family, index: int) -> int:
        if index < 1:
            raise ValueError(f"part index must be >= 1, got {index}")
        return self.family_base(family) + (index - 1) * self.family_step(family)

    def as_tuple(self) -> tuple[int, int, int, int, int, int]:
        return (self.K, self.L, self.m, self.n, self.y, self.z)


class Part(NamedTuple):
    family: Family
    index: int
    mult: int


def _part_key(family: Family, index: int) -> tuple[int, int]:
    return (_FAMILY_RANK[family], index)


@dataclass(frozen=True)
class Partition:
    """A colored partition: positive multiplicities on (family, index) parts.

    ``parts`` is kept sorted in the canonical part order (family rank
    Z < NZ < YZ < NYZ, then index), so equal partitions compare and hash
    equal.
    """

    parts: tuple[Part, ...]

    def __post_init__(self) -> None:
        keys = [_part_key(p.family, p.index) for p in self.parts]
        if keys != sorted(keys) or len(set(keys)) != len(keys):
            raise ValueError("parts must be canonically sorted and distinct")
        for p in self.parts:
            if p.mult < 1:
                raise ValueError(f"multiplicity must be positive in {p}")
            if p.index < 1:
                raise ValueError(f"index must be >= 1 in {p}")

    @staticmethod
    def from_counts(counts: dict[tuple[Family, int], int]) -> "Partition":
        items = []
        for (family, index), mult in counts.items():
            if mult < 0:
                raise ValueError(f"negative multiplicity for ({family}, {index})")
            if mult > 0:
                items.append(Part(family, index, mult))
        items.sort(key=lambda p: _part_key(p.family, p.index))
        return Partition(tuple(items))

    def count_of(self, family: Family, index: int) -> int:
        for p in self.parts:
            if p.family is family and p.index == index:
                return p.mult
        return 0

    @property
    def is_empty(self) -> bool:
        return not self.parts


EMPTY_PARTITION = Partition(())


def nu_decompose(count: int, n: int) -> tuple[int, int]:
    """Split a multiplicity as count = n*Q + R with 0 <= R <= n-1."""
    if n < 1:
        raise ValueError("modulus n must be positive")
    if count < 0:
        raise ValueError("count must be nonnegative")
    return divmod(count, n)


def norm(partition: Partition, params: Params) -> int:
    """Sum of part values weighted by multiplicity."""
    return sum(p.mult * params.part_value(p.family, p.index) for p in partition.parts)


def flatten(partition: Partition) -> Partition:
    """Reduce every subscript to 1, merging multiplicities per family."""
    counts: dict[tuple[Family, int], int] = {}
    for p in partition.parts:
        key = (p.family, 1)
        counts[key] = counts.get(key, 0) + p.mult
    return Partition.from_counts(counts)


def flat_norm(partition: Partition, params: Params) -> int:
    """Norm of the flattened partition (drops the (i-1)*m offsets)."""
    return norm(flatten(partition), params)


def _domain_ranges(mode: str, params: Params) -> dict[Family, int]:
    if mode == MAIN:
        return {Family.NZ: params.L, Family.YZ: params.K}
    if mode == DUAL:
        return {Family.NZ: params.K, Family.YZ: params.L}
    if mode == GEN:
        if params.S is None or params.T is None:
            raise ValueError("generalized mode needs S and T")
        return {Family.NZ: params.T, Family.YZ: params.S}
    raise ValueError(f"unknown mode {mode!r}")


def side_ranges(side: str, mode: str, params: Params) -> dict[Family, int]:
    """Maximum index per family for one side of the inequality."""
    if side == CODOMAIN:
        return {Family.Z: params.K, Family.NYZ: params.L}
    if side == DOMAIN:
        return _domain_ranges(mode, params)
    raise ValueError(f"unknown side {side!r}")


def part_list(side: str, mode: str, params: Params) -> list[tuple[Family, int]]:
    """All (family, index) parts of a side, in canonical order."""
    ranges = side_ranges(side, mode, params)
    out = []
    for family in sorted(ranges, key=_FAMILY_RANK.get):
        for index in range(1, ranges[family] + 1):
            out.append((family, index))
    return out


def validate_partition(partition: Partition, side: str, mode: str, params: Params) -> None:
    """Raise if any part falls outside the side's family/index ranges."""
    ranges = side_ranges(side, mode, params)
    for p in partition.parts:
        limit = ranges.get(p.family)
        if limit is None:
            raise ValueError(f"family {p.family.value} is not a {side} family in {mode} mode")
        if p.index > limit:
            raise ValueError(
                f"part ({p.family.value}, {p.index}) out of range (max index {limit})")


def product_spec(side: str, mode: str, params: Params):
    """The ProductSpec whose expansion counts this side's partitions by norm."""
    from .series import ProductSpec

    ranges = side_ranges(side, mode, params)
    factors = []
    for family in sorted(ranges, key=_FAMILY_RANK.get):
        factors.append((params.family_base(family), params.family_step(family),
                        ranges[family]))
    return ProductSpec(tuple(factors))


def _iter_partitions(values: list[int], x: int) -> Iterator[list[int]]:
    """Multiplicity vectors over ``values`` with weighted sum exactly x.

    Yields in ascending lexicographic order of the multiplicity vector.
    """
    k = len(values)
    acc = [0] * k

    def rec(i: int, remaining: int) -> Iterator[list[int]]:
        if i == k - 1:
            q, r = divmod(remaining, values[i])
            if r == 0:
                acc[i] = q
                yield acc
                acc[i] = 0
            return
        v = values[i]
        for mult in range(remaining // v + 1):
            acc[i] = mult
            yield from rec(i + 1, remaining - mult * v)
        acc[i] = 0

    if k == 0:
        if x == 0:
            yield []
        return
    yield from rec(0, x)


def enumerate_partitions(side: str, mode: str, x: int, params: Params) -> list[Partition]:
    """All partitions of norm exactly x over the side's part set.

    Deterministic canonical order: ascending lexicographic on the
    multiplicity vector indexed by the canonical part list.
    """
    if x < 0:
        raise ValueError("norm must be nonnegative")
    parts = part_list(side, mode, params)
    values = [params.part_value(f, i) for f, i in parts]
    out = []
    for vec in _iter_partitions(values, x):
        out.append(Partition(tuple(
            Part(f, i, mult) for (f, i), mult in zip(parts, vec) if mult)))
    return out


def enumerate_flat_constrained(side: str, mode: str, x: int, f: int,
                               params: Params) -> list[Partition]:
    """Partitions of norm x whose flattened norm equals z*f."""
    if f < 0:
        raise ValueError("flat parameter must be nonnegative")
    target = params.z * f
    return [p for p in enumerate_partitions(side, mode, x, params)
            if flat_norm(p, params) == target]
