# Copyright (C) 2024 IOTech Ltd
# SPDX-License-Identifier: Apache-2.0

"""
Totient-style counting functions.

Every function here has two implementations: a direct gcd count that is obviously correct, and a
factorization based one that is fast. The direct path is used for small arguments and the two are
compared by the test suite and the `verify` command. `totient_sieve` serves callers that need φ
over a whole range at once.

Functions:
    euler_totient(k: int) -> int: φ(k).
    totient_sieve(limit: int) -> list[int]: φ(0..limit) in one pass.
    legendre_totient(x: int, d: int) -> int: The count of 1 ≤ i ≤ x prime to d.
    psi_capital(n: int) -> int: Σ φ(i) over odd i ≤ n.
    psi_capital_mobius(n: int) -> int: The same sum through the Möbius reformulation.
    mobius(k: int) -> int: The Möbius function μ(k).
"""

import math
from functools import lru_cache

from .combinatorics import BigCount
from ..contracts import errors

TOTIENT_DIRECT_LIMIT = 10000
LEGENDRE_DIRECT_LIMIT = 64


def totient_by_gcd(k: int) -> BigCount:
    """
    Counts 1 ≤ i ≤ k with gcd(i, k) = 1 one by one.
    """
    return sum(1 for i in range(1, k + 1) if math.gcd(i, k) == 1)


@lru_cache(maxsize=None)
def prime_factors(k: int) -> tuple[int, ...]:
    """
    Returns the distinct prime factors of k in increasing order, by trial division.
    """
    factors = []
    p = 2
    while p * p <= k:
        if k % p == 0:
            factors.append(p)
            while k % p == 0:
                k //= p
        p += 1 if p == 2 else 2
    if k > 1:
        factors.append(k)
    return tuple(factors)


def totient_by_factorization(k: int) -> BigCount:
    """
    Evaluates k·Π(1 − 1/p) over the prime factors p of k.
    """
    result = k
    for p in prime_factors(k):
        result -= result // p
    return result


def totient_sieve(limit: int) -> list[BigCount]:
    """
    Returns φ(0), φ(1), ..., φ(limit) computed by a sieve over primes (φ(0) is stored as 0).
    """
    phi = list(range(limit + 1))
    for p in range(2, limit + 1):
        if phi[p] == p:
            for multiple in range(p, limit + 1, p):
                phi[multiple] -= phi[multiple] // p
    return phi


@lru_cache(maxsize=None)
def euler_totient(k: int, threshold: int = TOTIENT_DIRECT_LIMIT) -> BigCount:
    """
    Euler's totient φ(k) for k ≥ 1.

    Below `threshold` the value is counted directly, above it the factorization is used.

    Raises:
        CommonPolygonError: CONTRACT_INVALID when k < 1.
    """
    if k < 1:
        raise errors.new_common_error(errors.ErrKind.CONTRACT_INVALID,
                                      f"euler_totient requires k ≥ 1, got {k}")
    if k < threshold:
        return totient_by_gcd(k)
    return totient_by_factorization(k)


def legendre_totient_by_gcd(x: int, d: int) -> BigCount:
    """
    Counts 1 ≤ i ≤ x with gcd(i, d) = 1 one by one.
    """
    return sum(1 for i in range(1, x + 1) if math.gcd(i, d) == 1)


def legendre_totient_by_inclusion_exclusion(x: int, d: int) -> BigCount:
    """
    Evaluates Σ μ(e)·⌊x/e⌋ over the squarefree divisors e of d.
    """
    total = 0
    primes = prime_factors(d)
    # walk the subsets of the prime factors; each subset is a squarefree divisor
    for mask in range(1 << len(primes)):
        e = 1
        for bit, p in enumerate(primes):
            if mask >> bit & 1:
                e *= p
        sign = -1 if mask.bit_count() % 2 else 1
        total += sign * (x // e)
    return total


def legendre_totient(x: int, d: int) -> BigCount:
    """
    The Legendre totient φ(x, d): the number of positive integers ≤ x which are prime to d.

    Raises:
        CommonPolygonError: CONTRACT_INVALID when x < 0 or d < 1.
    """
    if x < 0 or d < 1:
        raise errors.new_common_error(errors.ErrKind.CONTRACT_INVALID,
                                      f"legendre_totient requires x ≥ 0 and d ≥ 1, got ({x}, {d})")
    if x <= LEGENDRE_DIRECT_LIMIT:
        return legendre_totient_by_gcd(x, d)
    return legendre_totient_by_inclusion_exclusion(x, d)


def mobius(k: int) -> int:
    """
    The Möbius function: 0 if k has a square factor, otherwise (−1)^(number of prime factors).
    """
    if k < 1:
        raise errors.new_common_error(errors.ErrKind.CONTRACT_INVALID,
                                      f"mobius requires k ≥ 1, got {k}")
    primes = prime_factors(k)
    if math.prod(primes) != k:
        return 0
    return -1 if len(primes) % 2 else 1


def _require_odd(n: int, name: str):
    if n < 1 or n % 2 == 0:
        raise errors.new_common_error(errors.ErrKind.CONTRACT_INVALID,
                                      f"{name} requires an odd n ≥ 1, got {n}")


def psi_capital(n: int) -> BigCount:
    """
    Ψ(n) = Σ φ(i) over odd 1 ≤ i ≤ n.

    Raises:
        CommonPolygonError: CONTRACT_INVALID for even n or n < 1.
    """
    _require_odd(n, "psi_capital")
    return sum(euler_totient(i) for i in range(1, n + 1, 2))


def psi_capital_mobius(n: int) -> BigCount:
    """
    Ψ(n) = Σ μ(d)·(⌊(⌊n/d⌋ − 1)/2⌋ + 1)² over odd d ≤ n, the form used to derive Ψ(n) ~ 2n²/π².
    """
    _require_odd(n, "psi_capital_mobius")
    total = 0
    for d in range(1, n + 1, 2):
        mu = mobius(d)
        if mu:
            total += mu * ((n // d - 1) // 2 + 1) ** 2
    return total
