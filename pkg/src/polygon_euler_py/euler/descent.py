# Copyright (C) 2024 IOTech Ltd
# SPDX-License-Identifier: Apache-2.0

"""
The Euler characteristic of Mₙ(a) by Morse surgery descent.

Mₙ(a) is the level set μ⁻¹(a). Above the largest critical value the level set is empty, so the
descent starts from χ = 0 on (ζ_Φ(n), π). Moving the level down through a non-degenerate critical
point of index r changes χ by 2(−1)^(r+1); stopping exactly on the critical level changes it by
(−1)^(r+1) relative to the level set just above. Levels carrying several critical points apply
these increments once per point.

Classes:
    PositionKind: Whether an angle is regular or critical.
    AnglePosition: Where an angle sits in the spectrum.
    Contribution: The increment of χ due to one stratum.
    ChiResult: χ(Mₙ(a)) together with the increments that produced it.
    LevelChi: χ just below, on and just above one critical level.

Functions:
    locate(n: int, a: PiFraction) -> AnglePosition
    chi(n: int, a: PiFraction, logger: Logger = None) -> ChiResult
    omega(n: int, i: int) -> int: Ωᵢ, χ on the interval (ζᵢ, ζᵢ₊₁).
    sample_point(n: int, i: int) -> PiFraction: The midpoint used by omega.
    chi_table(n: int) -> list[LevelChi]
    omega_table(n: int) -> list[int]: Ω₀, ..., Ω_{Φ(n)−1}.
    ascent_check(n: int) -> list[int]: The table rebuilt bottom-up from Ω₀.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from ..arith import PiFraction, midpoint, central_binomial
from ..contracts import errors
from ..contracts.logger import Logger
from ..spectrum import CriticalStratum, build_spectrum, require_odd_n

EMPTY_CHI = 0


class PositionKind(Enum):
    """ Regular angle inside an interval, or an angle equal to a critical value. """
    INTERVAL = "interval"
    AT_CRITICAL = "at-critical"


@dataclass(frozen=True)
class AnglePosition:
    """
    The position of an angle a in the spectrum.

    Attributes:
        kind (PositionKind): INTERVAL or AT_CRITICAL.
        interval (int): For INTERVAL, the i with a ∈ (ζᵢ, ζᵢ₊₁), where ζ₀ = 0 and ζ_{Φ+1} = π.
                        For AT_CRITICAL, the i with a = ζᵢ.
        value (PiFraction, optional): The critical value for AT_CRITICAL.
    """
    kind: PositionKind
    interval: int
    value: Optional[PiFraction] = None

    def __str__(self):
        if self.kind is PositionKind.AT_CRITICAL:
            return f"at-critical ζ_{self.interval} = {self.value.render()}"
        return f"interval {self.interval}"


@dataclass(frozen=True)
class Contribution:
    """
    The signed change of χ due to one stratum; `landing` marks the half increment of a level the
    angle sits on.
    """
    stratum: CriticalStratum
    increment: int
    landing: bool = False


@dataclass(frozen=True)
class ChiResult:
    """
    χ(Mₙ(a)), the position of a, and the increments from the empty top region down to a.
    """
    chi: int
    position: AnglePosition
    contributions: tuple[Contribution, ...]


@dataclass(frozen=True)
class LevelChi:
    """ χ on the interval below a level, on the singular level, and on the interval above it. """
    value: PiFraction
    below: int
    at: int
    above: int


def _require_angle(a: PiFraction):
    if not isinstance(a, PiFraction) or a.is_zero():
        raise errors.new_common_error(errors.ErrKind.CONTRACT_INVALID,
                                      f"side length must satisfy 0 < a < π, got {a}")


def locate(n: int, a: PiFraction) -> AnglePosition:
    """
    Places a in the spectrum of n.

    Raises:
        CommonPolygonError: CONTRACT_INVALID for ZERO (values ≥ π cannot be built).
    """
    _require_angle(a)
    spectrum = build_spectrum(n)
    position = spectrum.find(a)
    if position is not None:
        return AnglePosition(PositionKind.AT_CRITICAL, position, a)
    return AnglePosition(PositionKind.INTERVAL, spectrum.intervals_below(a))


def chi(n: int, a: PiFraction, logger: Logger = None) -> ChiResult:
    """
    Computes χ(Mₙ(a)) by descending from the empty region above ζ_Φ(n) to a.
    """
    position = locate(n, a)
    spectrum = build_spectrum(n)
    contributions = []
    for i in range(spectrum.level_count(), 0, -1):
        level = spectrum.level(i)
        if level.value < a:
            break
        landing = level.value == a
        for item in level.strata:
            increment = item.landing_increment() if landing else item.crossing_increment()
            contributions.append(Contribution(item, increment, landing))
        if logger is not None:
            logger.trace(f"n={n} {'landing on' if landing else 'crossing'} {level.value.render()}"
                         f" with {len(level.strata)} strata")
    value = EMPTY_CHI + sum(item.increment for item in contributions)
    if logger is not None:
        logger.debug(f"χ(M_{n}({a.render()})) = {value} at {position}")
    return ChiResult(chi=value, position=position, contributions=tuple(contributions))


def sample_point(n: int, i: int) -> PiFraction:
    """
    The midpoint of (ζᵢ, ζᵢ₊₁) for 0 ≤ i ≤ Φ(n) − 1.

    Raises:
        CommonPolygonError: CONTRACT_INVALID when i is out of range.
    """
    spectrum = build_spectrum(n)
    if not 0 <= i <= spectrum.level_count() - 1:
        raise errors.new_common_error(
            errors.ErrKind.CONTRACT_INVALID,
            f"Ω index for n={n} must satisfy 0 ≤ i ≤ {spectrum.level_count() - 1}, got {i}")
    return midpoint(spectrum.zeta(i), spectrum.zeta(i + 1))


def omega(n: int, i: int) -> int:
    """
    Ωᵢ = χ(Mₙ(a)) for any a ∈ (ζᵢ, ζᵢ₊₁), 0 ≤ i ≤ Φ(n) − 1.
    """
    return chi(n, sample_point(n, i)).chi


def chi_table(n: int) -> list[LevelChi]:
    """
    Runs the whole descent once and returns, for each level in ascending order, χ below, on and
    above it.
    """
    spectrum = build_spectrum(n)
    rows = []
    above = EMPTY_CHI
    for level in reversed(spectrum.levels):
        at = above + sum(item.landing_increment() for item in level.strata)
        below = above + sum(item.crossing_increment() for item in level.strata)
        rows.append(LevelChi(level.value, below, at, above))
        above = below
    rows.reverse()
    return rows


def omega_table(n: int) -> list[int]:
    """ Ω₀, ..., Ω_{Φ(n)−1}. """
    return [row.below for row in chi_table(n)]


def ascent_check(n: int) -> list[int]:
    """
    Rebuilds the interval values bottom-up, starting from Ω₀ = (−1)^(m+1)·C(2m, m) and undoing one
    level at a time. The returned list holds Ω₀, ..., Ω_{Φ(n)−1} followed by the value above the
    top level, which must be 0.
    """
    m = require_odd_n(n)
    current = (-1) ** (m + 1) * central_binomial(m)
    values = [current]
    for level in build_spectrum(n).levels:
        current -= sum(item.crossing_increment() for item in level.strata)
        values.append(current)
    return values
