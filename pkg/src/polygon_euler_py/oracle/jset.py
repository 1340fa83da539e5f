# Copyright (C) 2024 IOTech Ltd
# SPDX-License-Identifier: Apache-2.0

"""
The residue sets whose sizes add up to ψ(n), the number of critical values above π/2.

    J_s = {t : ⌊s/2⌋ + 1 ≤ t ≤ s, gcd(t, 2s + 1) = 1}
    K_s = {i odd : 1 ≤ i ≤ 2⌊(s + 1)/2⌋ − 1, gcd(i, 2s + 1) = 1}

t ↦ 2s + 1 − 2t maps J_s onto K_s, and K_s is exactly the set counted by
φ(2⌊(s + 1)/2⌋ − 1, 4s + 2).
"""

import math
from dataclasses import dataclass

from ..arith import BigCount, legendre_totient
from ..contracts import errors


def _require_positive(s: int):
    if isinstance(s, bool) or not isinstance(s, int) or s < 1:
        raise errors.new_common_error(errors.ErrKind.CONTRACT_INVALID,
                                      f"s must be a positive integer, got {s!r}")


def j_set(s: int) -> list[int]:
    """ J_s in increasing order. """
    _require_positive(s)
    return [t for t in range(s // 2 + 1, s + 1) if math.gcd(t, 2 * s + 1) == 1]


def j_set_count(s: int) -> BigCount:
    """ |J_s| by listing its elements. """
    return len(j_set(s))


def k_set(s: int) -> list[int]:
    """ K_s in increasing order. """
    _require_positive(s)
    bound = 2 * ((s + 1) // 2) - 1
    return [i for i in range(1, bound + 1, 2) if math.gcd(i, 2 * s + 1) == 1]


def g_map(s: int, t: int) -> int:
    """ The map t ↦ 2s + 1 − 2t from J_s to K_s. """
    return 2 * s + 1 - 2 * t


@dataclass(frozen=True)
class JSetCheck:
    """
    The counts on both sides of J_s → K_s and whether the map is a bijection.
    """
    s: int
    j_count: int
    k_count: int
    legendre: int
    bijective: bool

    @property
    def passed(self) -> bool:
        return self.bijective and self.j_count == self.k_count == self.legendre


def check_j_set(s: int) -> JSetCheck:
    """
    Maps J_s through t ↦ 2s + 1 − 2t and compares the image with K_s and with
    φ(2⌊(s + 1)/2⌋ − 1, 4s + 2).
    """
    domain = j_set(s)
    target = k_set(s)
    image = sorted(g_map(s, t) for t in domain)
    return JSetCheck(s=s, j_count=len(domain), k_count=len(target),
                     legendre=legendre_totient(2 * ((s + 1) // 2) - 1, 4 * s + 2),
                     bijective=image == target)
