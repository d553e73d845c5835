"""Norm-preserving injections between the two colored-partition families.

The forward maps send a domain partition (parts YZ/NZ) to a codomain
partition (parts Z/NYZ) of the same norm; the inverse maps recover the
pre-image and decide membership in the image.  Membership hinges on the
diagnostic

    mu = count(Z, 1) - (y - 1) * (A + B)

and its unique decomposition mu = a*n + b*y with 0 <= b < n (unique
because gcd(n, y) = 1).  Non-members still get (mu, a, b) reported, with
a < 0; for them b is the least nonnegative residue of ybar*mu mod n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .partitions import (
    CODOMAIN,
    DOMAIN,
    DUAL,
    MAIN,
    Family,
    Params,
    Partition,
    nu_decompose,
    validate_partition,
)


def mod_inverse(y: int, n: int) -> int:
    """Multiplicative inverse of y modulo n, in [0, n-1]; 0 when n = 1."""
    if n < 1 or y < 1:
        raise ValueError("y and n must be positive")
    if math.gcd(y, n) != 1:
        raise ValueError(f"gcd({y}, {n}) != 1, no inverse")
    if n == 1:
        return 0
    return pow(y, -1, n)


@dataclass(frozen=True)
class Diagnostics:
    """Image-membership diagnostics for a codomain partition.

    A and B are the residue/count sums entering mu; C is the least
    nonnegative residue of ybar*mu mod n; (a, b) with b = C solves
    mu = a*n + b*y, a possibly negative for non-members.
    """

    mu: int
    A: int
    B: int
    C: int
    a: int
    b: int


def _decompose_mu(mu: int, params: Params) -> tuple[int, int]:
    """The (a, b) with mu = a*n + b*y, 0 <= b < n; a may be negative."""
    n, y = params.n, params.y
    c = (mod_inverse(y, n) * mu) % n
    a = (mu - y * c) // n
    return a, c


def inject_main(p2: Partition, params: Params) -> Partition:
    """Forward map for the primary inequality (domain YZ<=K, NZ<=L).

    For L = 0:
        count(Z, i) = count(YZ, i)                       for 1 < i <= K
        count(Z, 1) = y*count(YZ, 1) + (y-1)*sum_{i>1} count(YZ, i)
    For L > 0, with count(YZ, i) = n*Q_i + R_i:
        count(NYZ, i) = Q_i                              for 1 <= i <= L
        count(Z, i)   = count(YZ, i)                     for L < i <= K
        count(Z, i)   = n*count(NZ, i) + R_i             for 1 < i <= L
        count(Z, 1)   = n*count(NZ, 1) + y*R_1 + (y-1)*(A + B)
    where A = sum_{1 < j <= L} R_j and B = sum_{L < j <= K} count(YZ, j).
    """
    params.validate(MAIN)
    validate_partition(p2, DOMAIN, MAIN, params)
    K, L, n, y = params.K, params.L, params.n, params.y
    nu_yz = [p2.count_of(Family.YZ, i) for i in range(K + 1)]  # nu_yz[i], i >= 1
    out: dict[tuple[Family, int], int] = {}

    if L == 0:
        tail = sum(nu_yz[2:])
        out[(Family.Z, 1)] = y * nu_yz[1] if K else 0
        if K:
            out[(Family.Z, 1)] += (y - 1) * tail
        for i in range(2, K + 1):
            out[(Family.Z, i)] = nu_yz[i]
        return Partition.from_counts(out)

    qr = [nu_decompose(nu_yz[i], n) for i in range(K + 1)]
    a_sum = sum(qr[j][1] for j in range(2, L + 1))
    b_sum = sum(nu_yz[j] for j in range(L + 1, K + 1))
    for i in range(1, L + 1):
        out[(Family.NYZ, i)] = qr[i][0]
    for i in range(L + 1, K + 1):
        out[(Family.Z, i)] = nu_yz[i]
    for i in range(2, L + 1):
        out[(Family.Z, i)] = n * p2.count_of(Family.NZ, i) + qr[i][1]
    out[(Family.Z, 1)] = (n * p2.count_of(Family.NZ, 1) + y * qr[1][1]
                          + (y - 1) * (a_sum + b_sum))
    return Partition.from_counts(out)


def invert_main(p1: Partition, params: Params) -> tuple[Partition | None, Diagnostics]:
    """Inverse of the primary forward map, with membership diagnostics.

    For L > 0 the partition is in the image iff a >= 0 in the unique
    decomposition mu = a*n + b*y.  For L = 0 membership needs both
    mu >= 0 and y | mu, where mu = count(Z, 1) - (y-1)*sum_{i>1} count(Z, i);
    the pre-image count(YZ, 1) is then mu/y.
    """
    params.validate(MAIN)
    validate_partition(p1, CODOMAIN, MAIN, params)
    K, L, n, y = params.K, params.L, params.n, params.y
    nu_z = [p1.count_of(Family.Z, i) for i in range(K + 1)]

    if L == 0:
        a_sum = 0
        b_sum = sum(nu_z[2:])
        mu = (nu_z[1] if K else 0) - (y - 1) * b_sum
        a, c = _decompose_mu(mu, params)
        diag = Diagnostics(mu, a_sum, b_sum, c, a, c)
        if mu < 0 or mu % y != 0:
            return None, diag
        pre: dict[tuple[Family, int], int] = {}
        if K:
            pre[(Family.YZ, 1)] = mu // y
        for i in range(2, K + 1):
            pre[(Family.YZ, i)] = nu_z[i]
        return Partition.from_counts(pre), diag

    qr = [nu_decompose(nu_z[i], n) for i in range(K + 1)]
    a_sum = sum(qr[j][1] for j in range(2, L + 1))
    b_sum = sum(nu_z[j] for j in range(L + 1, K + 1))
    mu = nu_z[1] - (y - 1) * (a_sum + b_sum)
    a, c = _decompose_mu(mu, params)
    diag = Diagnostics(mu, a_sum, b_sum, c, a, c)
    if a < 0:
        return None, diag
    pre = {}
    for i in range(L + 1, K + 1):
        pre[(Family.YZ, i)] = nu_z[i]
    for i in range(2, L + 1):
        pre[(Family.YZ, i)] = n * p1.count_of(Family.NYZ, i) + qr[i][1]
        pre[(Family.NZ, i)] = qr[i][0]
    pre[(Family.YZ, 1)] = n * p1.count_of(Family.NYZ, 1) + c
    pre[(Family.NZ, 1)] = a
    return Partition.from_counts(pre), diag


def inject_dual(p2: Partition, params: Params) -> Partition:
    """Forward map for the dual inequality (domain YZ<=L, NZ<=K).

    For L = 0:  count(Z, i) = n*count(NZ, i) for 1 <= i <= K.
    For L > 0, with count(YZ, i) = n*Q_i + R_i:
        count(NYZ, i) = Q_i                              for 1 <= i <= L
        count(Z, i)   = n*count(NZ, i)                   for L < i <= K
        count(Z, i)   = n*count(NZ, i) + R_i             for 1 < i <= L
        count(Z, 1)   = n*count(NZ, 1) + y*R_1 + (y-1)*A
    where A = sum_{1 < j <= L} R_j (no B term).
    """
    params.validate(DUAL)
    validate_partition(p2, DOMAIN, DUAL, params)
    K, L, n, y = params.K, params.L, params.n, params.y
    out: dict[tuple[Family, int], int] = {}

    if L == 0:
        for i in range(1, K + 1):
            out[(Family.Z, i)] = n * p2.count_of(Family.NZ, i)
        return Partition.from_counts(out)

    qr = [nu_decompose(p2.count_of(Family.YZ, i), n) for i in range(L + 1)]
    a_sum = sum(qr[j][1] for j in range(2, L + 1))
    for i in range(1, L + 1):
        out[(Family.NYZ, i)] = qr[i][0]
    for i in range(L + 1, K + 1):
        out[(Family.Z, i)] = n * p2.count_of(Family.NZ, i)
    for i in range(2, L + 1):
        out[(Family.Z, i)] = n * p2.count_of(Family.NZ, i) + qr[i][1]
    out[(Family.Z, 1)] = (n * p2.count_of(Family.NZ, 1) + y * qr[1][1]
                          + (y - 1) * a_sum)
    return Partition.from_counts(out)


def invert_dual(p1: Partition, params: Params) -> tuple[Partition | None, Diagnostics]:
    """Inverse of the dual forward map, with membership diagnostics.

    Uses mu* = count(Z, 1) - (y-1)*sum_{1 < j <= L} R(count(Z, j)).
    For L = 0 membership requires every count(Z, i) to be divisible by n;
    for L > 0 it requires a >= 0 and additionally n | count(Z, i) for
    L < i <= K (those indices are produced only as n-fold blocks).
    """
    params.validate(DUAL)
    validate_partition(p1, CODOMAIN, DUAL, params)
    K, L, n, y = params.K, params.L, params.n, params.y
    nu_z = [p1.count_of(Family.Z, i) for i in range(K + 1)]
    qr = [nu_decompose(nu_z[i], n) for i in range(K + 1)]

    if L == 0:
        mu = nu_z[1] if K else 0
        a, c = _decompose_mu(mu, params)
        diag = Diagnostics(mu, 0, 0, c, a, c)
        if any(qr[i][1] for i in range(1, K + 1)):
            return None, diag
        pre = {(Family.NZ, i): qr[i][0] for i in range(1, K + 1)}
        return Partition.from_counts(pre), diag

    a_sum = sum(qr[j][1] for j in range(2, L + 1))
    mu = nu_z[1] - (y - 1) * a_sum
    a, c = _decompose_mu(mu, params)
    diag = Diagnostics(mu, a_sum, 0, c, a, c)
    if a < 0 or any(qr[i][1] for i in range(L + 1, K + 1)):
        return None, diag
    pre: dict[tuple[Family, int], int] = {}
    for i in range(L + 1, K + 1):
        pre[(Family.NZ, i)] = qr[i][0]
    for i in range(2, L + 1):
        pre[(Family.YZ, i)] = n * p1.count_of(Family.NYZ, i) + qr[i][1]
        pre[(Family.NZ, i)] = qr[i][0]
    pre[(Family.YZ, 1)] = n * p1.count_of(Family.NYZ, 1) + c
    pre[(Family.NZ, 1)] = a
    return Partition.from_counts(pre), diag


def inject(p2: Partition, params: Params, mode: str = MAIN) -> Partition:
    if mode == MAIN:
        return inject_main(p2, params)
    if mode == DUAL:
        return inject_dual(p2, params)
    raise ValueError(f"no injection for mode {mode!r}")


def invert(p1: Partition, params: Params, mode: str = MAIN) -> tuple[Partition | None, Diagnostics]:
    if mode == MAIN:
        return invert_main(p1, params)
    if mode == DUAL:
        return invert_dual(p1, params)
    raise ValueError(f"no injection for mode {mode!r}")
