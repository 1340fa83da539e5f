# Copyright (C) 2024 IOTech Ltd
# SPDX-License-Identifier: Apache-2.0
"""
Closed forms of the critical values at both ends of the spectrum.

Below 4/(2m + 1)·π the only critical values are 2/α·π, above (2m − 2)/(2m + 1)·π only
(α − 1)/α·π, so the first p and the last q + 1 values of Vₙ are known without sorting.
"""
from dataclasses import dataclass
from enum import Enum

from .gamma import GammaPair, require_odd_n
from .levels import phi_capital
from ..arith import PiFraction, reduce
from ..contracts import errors


class EdgeSide(Enum):
    """ Which end of the spectrum. """
    LOW = "low"
    HIGH = "high"


@dataclass(frozen=True)
class EdgeValue:
    """ ζᵢ and the coprime pair attaining it. """
    i: int
    value: PiFraction
    pair: GammaPair


def edge_bounds(n: int) -> tuple[int, int]:
    """ Returns (p, q) = (⌊m/2⌋ + 1, ⌊2m/3⌋). """
    m = require_odd_n(n)
    return m // 2 + 1, 2 * m // 3


def edge_range(n: int, which: EdgeSide) -> range:
    """ The subscripts i for which the closed form of `which` applies. """
    p, q = edge_bounds(n)
    if which is EdgeSide.LOW:
        return range(1, p + 1)
    phi = phi_capital(n)
    return range(phi - q, phi + 1)


def zeta_edge(n: int, which: EdgeSide, i: int) -> EdgeValue:
    """
    Returns ζᵢ by its closed form.

    LOW: ζᵢ = 2/(2m − 2i + 3)·π with (α, β) = (2m − 2i + 3, 2), for 1 ≤ i ≤ p.
    HIGH: ζᵢ = (2m − 2Φ + 2i)/(2m − 2Φ + 2i + 1)·π with (α, β) equal to denominator and numerator,
    for Φ(n) − q ≤ i ≤ Φ(n).

    Raises:
        CommonPolygonError: CONTRACT_INVALID when i is outside the range of the chosen end.
    """
    m = require_odd_n(n)
    valid = edge_range(n, which)
    if i not in valid:
        raise errors.new_common_error(
            errors.ErrKind.CONTRACT_INVALID,
            f"{which.value} edge formula for n={n} needs {valid.start} ≤ i ≤ {valid.stop - 1}, "
            f"got {i}")
    if which is EdgeSide.LOW:
        pair = GammaPair(2 * m - 2 * i + 3, 2)
    else:
        beta = 2 * m - 2 * phi_capital(n) + 2 * i
        pair = GammaPair(beta + 1, beta)
    return EdgeValue(i=i, value=reduce(pair.beta, pair.alpha), pair=pair)
