# Copyright (C) 2024 IOTech Ltd
# SPDX-License-Identifier: Apache-2.0

"""
Closed forms for the Euler characteristic near both ends of the spectrum and at a = π/2.

All formulas with a fractional prefactor are evaluated as Fractions and must come out integral;
a non-integral value means a formula or an index range is wrong and is raised as a verification
failure rather than rounded.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .descent import chi, omega_table
from ..arith import binomial, central_binomial
from ..contracts import errors
from ..contracts.logger import Logger
from ..spectrum import HALF, edge_bounds, phi_capital, require_odd_n


def _as_integer(value: Fraction, label: str) -> int:
    if value.denominator != 1:
        raise errors.new_common_error(errors.ErrKind.VERIFICATION_FAILED,
                                      f"{label} evaluated to the non-integer {value}")
    return value.numerator


def _require_range(i: int, upper: int, label: str):
    if not 0 <= i <= upper:
        raise errors.new_common_error(errors.ErrKind.CONTRACT_INVALID,
                                      f"{label} needs 0 ≤ i ≤ {upper}, got {i}")


def omega_closed_low(n: int, i: int) -> int:
    """
    Ωᵢ = (−1)^(m+1)·C(2m, m) + ((−1)^i·2i/(2m + 1))·C(2m + 1, i) for 0 ≤ i ≤ p = ⌊m/2⌋ + 1.
    """
    m = require_odd_n(n)
    p, _ = edge_bounds(n)
    _require_range(i, p, f"omega_closed_low(n={n})")
    tail = Fraction((-1) ** i * 2 * i, 2 * m + 1) * binomial(2 * m + 1, i)
    return (-1) ** (m + 1) * central_binomial(m) + _as_integer(tail, f"Ω_{i} low tail, n={n}")


def omega_closed_high(n: int, i: int) -> int:
    """
    Ω_{Φ(n)−1−i} = ((−1)^i·2(i + 1)/(2m + 1))·C(2m + 1, i + 1) for 0 ≤ i ≤ q = ⌊2m/3⌋.
    """
    m = require_odd_n(n)
    _, q = edge_bounds(n)
    _require_range(i, q, f"omega_closed_high(n={n})")
    value = Fraction((-1) ** i * 2 * (i + 1), 2 * m + 1) * binomial(2 * m + 1, i + 1)
    return _as_integer(value, f"Ω_(Φ-1-{i}), n={n}")


def sigma_sequence(n: int, length: int) -> list[int]:
    """
    σ₀ = (−1)^(m+1)·C(2m, m), σᵢ₊₁ = σᵢ + 2(−1)^(i+1)·C(n, i); returns σ₀..σ_{length−1}.
    """
    m = require_odd_n(n)
    values = [(-1) ** (m + 1) * central_binomial(m)]
    for i in range(length - 1):
        values.append(values[-1] + 2 * (-1) ** (i + 1) * binomial(n, i))
    return values[:length]


def tau_sequence(n: int, length: int) -> list[int]:
    """
    τ₀ = 2, τᵢ₊₁ = τᵢ + 2(−1)^(i+1)·C(n, i + 1); returns τ₀..τ_{length−1}.
    """
    require_odd_n(n)
    values = [2]
    for i in range(length - 1):
        values.append(values[-1] + 2 * (-1) ** (i + 1) * binomial(n, i + 1))
    return values[:length]


@dataclass
class RecurrenceReport:
    """
    Comparison of the σ and τ recurrences with the descent table.

    Attributes:
        n (int): The odd number of sides.
        checked (int): The number of compared entries.
        mismatches (list[str]): One line per disagreeing entry; empty when all agree.
    """
    n: int
    checked: int = 0
    mismatches: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        """ Whether every compared entry agreed. """
        return not self.mismatches


def recurrence_check(n: int) -> RecurrenceReport:
    """
    Confirms σᵢ = Ωᵢ for 0 ≤ i ≤ p and τᵢ = Ω_{Φ(n)−1−i} for 0 ≤ i ≤ q, within the table.
    """
    table = omega_table(n)
    p, q = edge_bounds(n)
    report = RecurrenceReport(n=n)
    low = min(p, len(table) - 1)
    for i, value in enumerate(sigma_sequence(n, low + 1)):
        report.checked += 1
        if value != table[i]:
            report.mismatches.append(f"σ_{i}={value} but Ω_{i}={table[i]}")
    high = min(q, len(table) - 1)
    for i, value in enumerate(tau_sequence(n, high + 1)):
        report.checked += 1
        subscript = len(table) - 1 - i
        if value != table[subscript]:
            report.mismatches.append(f"τ_{i}={value} but Ω_{subscript}={table[subscript]}")
    return report


def example_values(n: int) -> dict[str, tuple[int, int]]:
    """
    The explicit low-order values next to the descent, as label → (formula, descent).

    Ω₀, Ω₁, Ω₂, Ω_{Φ−1} and Ω_{Φ−2} are listed for n ≥ 5, Ω_{Φ−3} for n ≥ 7.
    """
    m = require_odd_n(n)
    table = omega_table(n)
    phi = phi_capital(n)
    base = (-1) ** (m + 1) * central_binomial(m)
    values = {}
    if n >= 5:
        values["Ω_0"] = (base, table[0])
        values["Ω_1"] = (base - 2, table[1])
        values["Ω_2"] = (base + 4 * m, table[2])
        values["Ω_(Φ-1)"] = (2, table[phi - 1])
        values["Ω_(Φ-2)"] = (-2 * n + 2, table[phi - 2])
    if n >= 7:
        values["Ω_(Φ-3)"] = (n * n - 3 * n + 2, table[phi - 3])
    return values


def floor_half_binomial_sum(m: int) -> int:
    """
    Σ_{i=0}^{m+1} (−1)^i·⌊i/2⌋·C(2m + 1, m + i), which equals 2^(2m−2) for m ≥ 1.
    """
    return sum((-1) ** i * (i // 2) * binomial(2 * m + 1, m + i) for i in range(m + 2))


@dataclass(frozen=True)
class HalfPiSums:
    """
    Three equivalent expressions for χ(Mₙ(π/2)) as alternating binomial sums.
    """
    by_theta_count: int
    by_ceiling_half: int
    by_floor_half: int


def half_pi_sums(n: int) -> HalfPiSums:
    """
    Evaluates
        2·Σ_{s=1}^{m} (−1)^(m+s)·(s − ⌊s/2⌋)·C(n, m − s),
        2(−1)^m·Σ_{s=1}^{m} (−1)^s·⌊(s + 1)/2⌋·C(2m + 1, m − s),
        2(−1)^(m+1)·Σ_{i=0}^{m+1} (−1)^i·⌊i/2⌋·C(2m + 1, m + i).
    """
    m = require_odd_n(n)
    first = 2 * sum((-1) ** (m + s) * (s - s // 2) * binomial(n, m - s) for s in range(1, m + 1))
    second = 2 * (-1) ** m * sum((-1) ** s * ((s + 1) // 2) * binomial(2 * m + 1, m - s)
                                 for s in range(1, m + 1))
    third = 2 * (-1) ** (m + 1) * floor_half_binomial_sum(m)
    return HalfPiSums(first, second, third)


def chi_half_pi(n: int, logger: Logger = None) -> int:
    """
    χ(Mₙ(π/2)) = (−1)^(m+1)·2^(2m−1), confirmed against the descent at a = π/2 and the alternating
    sums.

    Raises:
        CommonPolygonError: VERIFICATION_FAILED when any two computations disagree.
    """
    m = require_odd_n(n)
    closed = (-1) ** (m + 1) * 2 ** (2 * m - 1)
    descent = chi(n, HALF, logger).chi
    sums = half_pi_sums(n)
    candidates = {"closed form": closed, "descent": descent,
                  "theta-count sum": sums.by_theta_count,
                  "ceiling-half sum": sums.by_ceiling_half,
                  "floor-half sum": sums.by_floor_half}
    if len(set(candidates.values())) != 1:
        raise errors.new_common_error(errors.ErrKind.VERIFICATION_FAILED,
                                      f"χ(M_{n}(π/2)) disagrees: {candidates}")
    if logger is not None:
        logger.debug(f"χ(M_{n}(π/2)) = {closed} confirmed by {len(candidates)} computations")
    return closed
