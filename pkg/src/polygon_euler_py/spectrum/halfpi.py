# Copyright (C) 2024 IOTech Ltd
# SPDX-License-Identifier: Apache-2.0

"""
Locating π/2 in the critical spectrum.

The critical values above π/2 are exactly the fractions 2t/(2s + 1) with ⌊s/2⌋ + 1 ≤ t ≤ s. Their
number ψ(n) is a sum of Legendre totients, which gives the position k = Φ(n) − ψ(n) of π/2 among
the ζᵢ without building the spectrum.
"""

from dataclasses import dataclass

from .gamma import require_odd_n
from .levels import build_spectrum, phi_capital
from ..arith import PiFraction, BigCount, ZERO, reduce, legendre_totient
from ..contracts import errors

HALF = PiFraction(1, 2)


@dataclass(frozen=True)
class HalfPiPosition:
    """
    The interval (ζ_k, ζ_{k+1}) of the spectrum containing π/2.

    Attributes:
        k (int): Φ(n) − ψ(n); 0 means π/2 < ζ₁ and `low` is ZERO.
        low (PiFraction): ζ_k.
        high (PiFraction): ζ_{k+1}.
    """
    k: int
    low: PiFraction
    high: PiFraction


def psi(n: int) -> BigCount:
    """
    ψ(n) = Σ_{s=1}^{m} φ(2⌊(s + 1)/2⌋ − 1, 4s + 2).
    """
    m = require_odd_n(n)
    return sum(legendre_totient(2 * ((s + 1) // 2) - 1, 4 * s + 2) for s in range(1, m + 1))


def theta_set(n: int) -> frozenset[PiFraction]:
    """
    θ(n) = {2t/(2s + 1)·π : 1 ≤ s ≤ m, ⌊s/2⌋ + 1 ≤ t ≤ s}, reduced.
    """
    m = require_odd_n(n)
    return frozenset(reduce(2 * t, 2 * s + 1)
                     for s in range(1, m + 1)
                     for t in range(s // 2 + 1, s + 1))


def half_pi_interval(n: int) -> tuple[PiFraction, PiFraction]:
    """
    The closed form of (ζ_k, ζ_{k+1}) by the parity of m.
    """
    m = require_odd_n(n)
    if m % 2:
        return reduce(m - 1, 2 * m - 1), reduce(m + 1, 2 * m + 1)
    return reduce(m, 2 * m + 1), reduce(m, 2 * m - 1)


def half_pi_position(n: int) -> HalfPiPosition:
    """
    Returns k = Φ(n) − ψ(n) and the enclosing interval.

    The closed form is checked against the spectrum: ζ_k must be the largest critical value not in
    θ(n) (ZERO when there is none) and ζ_{k+1} the smallest one in θ(n).

    Raises:
        CommonPolygonError: VERIFICATION_FAILED when the closed form and the spectrum disagree.
    """
    k = phi_capital(n) - psi(n)
    low, high = half_pi_interval(n)

    theta = theta_set(n)
    values = build_spectrum(n).values
    below = [value for value in values if value not in theta]
    expected_low = max(below) if below else ZERO
    expected_high = min(theta)
    if (low, high) != (expected_low, expected_high) or len(below) != k:
        raise errors.new_common_error(
            errors.ErrKind.VERIFICATION_FAILED,
            f"π/2 interval for n={n}: closed form k={k} ({low}, {high}) but spectrum gives "
            f"k={len(below)} ({expected_low}, {expected_high})")
    if not low < HALF < high:
        raise errors.new_common_error(errors.ErrKind.VERIFICATION_FAILED,
                                      f"interval ({low}, {high}) does not bracket π/2")
    return HalfPiPosition(k=k, low=low, high=high)
