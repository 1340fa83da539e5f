# Copyright (C) 2024 IOTech Ltd
# SPDX-License-Identifier: Apache-2.0

"""
Ratios of the exact counts to their asymptotic expressions.

    |Uₙ| ~ 2^(2m−1)·(−1 + (2m + 1)/√(πm))
    Φ(n) ~ n²/π²
    Ψ(n) ~ 2n²/π²

Exact integers are divided as Fractions before converting to float, so the ratios stay finite for
any n even though |Uₙ| itself exceeds the float range.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .gamma import require_odd_n
from .levels import count_critical_points, phi_capital
from ..arith import BigCount, psi_capital_mobius


@dataclass(frozen=True)
class AsymptoticRow:
    """
    Exact counts for one n and their ratios to the asymptotic expressions.
    """
    n: int
    m: int
    critical_points: BigCount
    levels: BigCount
    psi_capital: BigCount
    ratio_critical_points: float
    ratio_levels: float
    ratio_psi_capital: float


def critical_points_ratio(m: int, critical_points: BigCount) -> float:
    """ |Uₙ| / (2^(2m−1)·(−1 + (2m + 1)/√(πm))) """
    scaled = float(Fraction(critical_points, 2 ** (2 * m - 1)))
    return scaled / (-1 + (2 * m + 1) / math.sqrt(math.pi * m))


def levels_ratio(n: int, levels: BigCount) -> float:
    """ Φ(n)·π²/n² """
    return levels * math.pi ** 2 / n ** 2


def psi_capital_ratio(n: int, value: BigCount) -> float:
    """ Ψ(n)·π²/(2n²) """
    return value * math.pi ** 2 / (2 * n ** 2)


def asymptotic_row(n: int) -> AsymptoticRow:
    """ Computes the exact counts of n and their ratios. """
    m = require_odd_n(n)
    critical_points = count_critical_points(n)
    levels = phi_capital(n)
    psi_value = psi_capital_mobius(n)
    return AsymptoticRow(n=n, m=m,
                         critical_points=critical_points,
                         levels=levels,
                         psi_capital=psi_value,
                         ratio_critical_points=critical_points_ratio(m, critical_points),
                         ratio_levels=levels_ratio(n, levels),
                         ratio_psi_capital=psi_capital_ratio(n, psi_value))


def log_spaced_odd(n_max: int, samples: int = 12) -> list[int]:
    """
    Returns up to `samples` distinct odd numbers between 3 and n_max, spaced logarithmically and
    always including n_max.
    """
    require_odd_n(n_max)
    raw = np.geomspace(3, n_max, num=samples)
    odd = {int(value) | 1 for value in np.rint(raw)}
    odd.add(n_max)
    return sorted(value for value in odd if 3 <= value <= n_max)


def asymptotics_table(n_max: int, samples: int = 12) -> list[AsymptoticRow]:
    """ One row per log-spaced odd n up to n_max. """
    return [asymptotic_row(n) for n in log_spaced_odd(n_max, samples)]
