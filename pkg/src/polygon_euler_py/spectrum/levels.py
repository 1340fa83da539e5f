# Copyright (C) 2024 IOTech Ltd
# SPDX-License-Identifier: Apache-2.0

"""
The critical spectrum of the side-length function μ for a fixed odd n = 2m + 1.

Each pair (α, β) of Γₙ contributes one critical stratum: C(n, m − s) non-degenerate critical
points, all of index m − s + 2t − 1, at the critical value (β/α)·π. Pairs whose fractions reduce
to the same value share one level of the spectrum, so a level may carry strata of different index.

Classes:
    CriticalStratum: The critical value, multiplicity and index of one pair.
    Level: A critical value together with all strata attaining it.
    Spectrum: All levels of a fixed n in ascending order.

Functions:
    stratum(n: int, pair: GammaPair) -> CriticalStratum
    gamma_arrays(n: int) -> tuple[np.ndarray, np.ndarray]: Γₙ as parallel (α, β) arrays.
    build_spectrum(n: int) -> Spectrum
    phi_capital(n: int) -> int: Φ(n), the number of critical values.
    count_critical_points(n: int) -> int: |Uₙ| by the closed form.
    count_critical_points_by_strata(n: int) -> int: |Uₙ| as Σ s·C(n, m − s).
"""

from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import factorial
from typing import Optional

import numpy as np

from .gamma import GammaPair, require_odd_n
from ..arith import PiFraction, ZERO, BigCount, binomial, totient_sieve
from ..contracts import errors


@dataclass(frozen=True)
class CriticalStratum:
    """
    All critical points sharing one (α, β).

    Attributes:
        pair (GammaPair): The indexing pair.
        value (PiFraction): The critical value (β/α)·π, reduced.
        count (int): The number of critical points, C(n, m − s).
        index (int): Their common Morse index, m − s + 2t − 1.
    """
    pair: GammaPair
    value: PiFraction
    count: BigCount
    index: int

    @property
    def sign(self) -> int:
        """ (−1)^(index + 1) """
        return -1 if self.index % 2 == 0 else 1

    def crossing_increment(self) -> int:
        """ The change of χ when the level set descends through all points of this stratum. """
        return 2 * self.sign * self.count

    def landing_increment(self) -> int:
        """ The change of χ from the level set just above to the singular level itself. """
        return self.sign * self.count


@dataclass(frozen=True)
class Level:
    """
    One critical value with the strata attaining it, in (α, β) order.
    """
    value: PiFraction
    strata: tuple[CriticalStratum, ...]

    def total_count(self) -> BigCount:
        """ The number of critical points on this level. """
        return sum(item.count for item in self.strata)

    def coprime_stratum(self) -> CriticalStratum:
        """ The unique stratum whose pair is coprime, i.e. equals the reduced value. """
        return next(item for item in self.strata if item.pair.is_coprime())


@dataclass(frozen=True, eq=False)
class Spectrum:
    """
    The critical values Vₙ = {ζ₁ < ... < ζ_Φ(n)} with their strata.

    Γₙ is held as parallel arrays sorted by critical value and then by α, so that counting the
    levels of a large n never builds one object per pair. `Level` and `CriticalStratum` objects
    are made on demand by `level(i)`; `levels` builds all of them once.

    Attributes:
        n (int): The odd number of sides.
        m (int): (n − 1)/2.
        alpha, beta (np.ndarray): The pairs of Γₙ in spectrum order.
        num, den (np.ndarray): The reduced critical value of each pair.
        starts (np.ndarray): Position of the first pair of each level.
        counts (tuple[int, ...]): C(n, m − s) for s = 0..m.
    """
    n: int
    m: int
    alpha: np.ndarray
    beta: np.ndarray
    num: np.ndarray
    den: np.ndarray
    starts: np.ndarray
    counts: tuple[BigCount, ...]

    def level_count(self) -> int:
        """ Φ(n) as counted on the spectrum. """
        return len(self.starts)

    def total_count(self) -> BigCount:
        """ |Uₙ| as the sum of all stratum counts, grouped by s. """
        pairs_per_s = np.bincount((self.alpha - 1) // 2, minlength=self.m + 1)
        return sum(int(pairs_per_s[s]) * self.counts[s] for s in range(1, self.m + 1))

    def _value_at(self, pos: int) -> tuple[int, int]:
        j = self.starts[pos]
        return int(self.num[j]), int(self.den[j])

    def level(self, i: int) -> Level:
        """
        The level of ζᵢ, 1 ≤ i ≤ Φ(n), with its strata in α order.
        """
        if not 1 <= i <= self.level_count():
            raise errors.new_common_error(errors.ErrKind.CONTRACT_INVALID,
                                          f"level index {i} outside 1..{self.level_count()}")
        built = self._built_levels.get(i)
        if built is not None:
            return built
        first = int(self.starts[i - 1])
        last = int(self.starts[i]) if i < self.level_count() else len(self.alpha)
        value = PiFraction(*self._value_at(i - 1))
        strata = []
        for j in range(first, last):
            pair = GammaPair(int(self.alpha[j]), int(self.beta[j]))
            strata.append(CriticalStratum(pair=pair, value=value, count=self.counts[pair.s],
                                          index=self.m - pair.s + 2 * pair.t - 1))
        built = self._built_levels[i] = Level(value, tuple(strata))
        return built

    @cached_property
    def _built_levels(self) -> dict[int, Level]:
        return {}

    @cached_property
    def levels(self) -> tuple[Level, ...]:
        """ Every level, strictly increasing in value. """
        return tuple(self.level(i) for i in range(1, self.level_count() + 1))

    @cached_property
    def values(self) -> list[PiFraction]:
        """ ζ₁, ..., ζ_Φ(n) """
        return [PiFraction(int(num), int(den))
                for num, den in zip(self.num[self.starts], self.den[self.starts])]

    @cached_property
    def _approximate_values(self) -> np.ndarray:
        return self.num[self.starts] / self.den[self.starts]

    def strata(self) -> list[CriticalStratum]:
        """ All strata, level by level. """
        return [item for level in self.levels for item in level.strata]

    def zeta(self, i: int) -> PiFraction:
        """
        ζᵢ for 0 ≤ i ≤ Φ(n), with ζ₀ = ZERO.
        """
        if i == 0:
            return ZERO
        if not 1 <= i <= self.level_count():
            raise errors.new_common_error(errors.ErrKind.CONTRACT_INVALID,
                                          f"ζ index {i} outside 0..{self.level_count()}")
        return PiFraction(*self._value_at(i - 1))

    def find(self, value: PiFraction) -> Optional[int]:
        """
        Returns the 1-based position i with ζᵢ = value, or None when value is not critical.
        """
        pos = self.intervals_below(value)
        if pos < self.level_count() and self._value_at(pos) == (value.num, value.den):
            return pos + 1
        return None

    def intervals_below(self, value: PiFraction) -> int:
        """
        Returns the number of critical values strictly below value.
        """
        def below(pos: int) -> bool:
            num, den = self._value_at(pos)
            return num * value.den < value.num * den

        # the float search only seeds the position; the exact comparisons settle it
        pos = int(np.searchsorted(self._approximate_values, value.num / value.den, side='left'))
        while pos > 0 and not below(pos - 1):
            pos -= 1
        while pos < self.level_count() and below(pos):
            pos += 1
        return pos


def stratum(n: int, pair: GammaPair) -> CriticalStratum:
    """
    Builds the critical stratum of pair for the given n.

    Raises:
        CommonPolygonError: CONTRACT_INVALID when pair is not in Γₙ.
    """
    m = require_odd_n(n)
    if not pair.belongs_to(n):
        raise errors.new_common_error(errors.ErrKind.CONTRACT_INVALID,
                                      f"pair {pair} is not in Γ_{n}")
    return CriticalStratum(pair=pair,
                           value=pair.value,
                           count=binomial(n, m - pair.s),
                           index=m - pair.s + 2 * pair.t - 1)


def gamma_arrays(n: int) -> tuple[np.ndarray, np.ndarray]:
    """
    Γₙ as two arrays (α, β) in (α, β) order, the same pairs as `enumerate_gamma`.
    """
    m = require_odd_n(n)
    alphas = np.arange(3, n + 1, 2, dtype=np.int64)
    sizes = np.arange(1, m + 1, dtype=np.int64)
    alpha = np.repeat(alphas, sizes)
    offsets = np.arange(len(alpha), dtype=np.int64) - np.repeat(np.cumsum(sizes) - sizes, sizes)
    return alpha, 2 * (offsets + 1)


@lru_cache(maxsize=64)
def build_spectrum(n: int) -> Spectrum:
    """
    Reduces every pair of Γₙ and groups the pairs by critical value in ascending order.
    """
    m = require_odd_n(n)
    alpha, beta = gamma_arrays(n)
    divisor = np.gcd(alpha, beta)
    num, den = beta // divisor, alpha // divisor
    # distinct values with denominators ≤ n differ by at least 1/n², far above float resolution
    order = np.lexsort((alpha, num / den))
    alpha, beta, num, den = alpha[order], beta[order], num[order], den[order]
    new_value = np.concatenate(([True], (num[1:] != num[:-1]) | (den[1:] != den[:-1])))
    return Spectrum(n=n, m=m, alpha=alpha, beta=beta, num=num, den=den,
                    starts=np.flatnonzero(new_value),
                    counts=tuple(binomial(n, m - s) for s in range(m + 1)))


@lru_cache(maxsize=None)
def phi_capital(n: int) -> BigCount:
    """
    Φ(n) = ½·Σ_{s=1}^{m} φ(2s + 1), with the totients of the whole range taken from one sieve.
    """
    m = require_odd_n(n)
    phi = totient_sieve(n)
    return sum(phi[2 * s + 1] for s in range(1, m + 1)) // 2


def count_critical_points(n: int) -> BigCount:
    """
    |Uₙ| = ½·(−4^m + (2m + 1)!/(m!)²).
    """
    m = require_odd_n(n)
    doubled = -4 ** m + factorial(2 * m + 1) // factorial(m) ** 2
    if doubled % 2:
        raise errors.new_common_error(errors.ErrKind.VERIFICATION_FAILED,
                                      f"|U_{n}| closed form is not an integer")
    return doubled // 2


def count_critical_points_by_strata(n: int) -> BigCount:
    """
    |Uₙ| = Σ_{s=1}^{m} s·C(n, m − s): s choices of β for α = 2s + 1, each a stratum of C(n, m − s).
    """
    m = require_odd_n(n)
    return sum(s * binomial(n, m - s) for s in range(1, m + 1))
