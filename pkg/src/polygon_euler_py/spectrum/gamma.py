# Copyright (C) 2024 IOTech Ltd
# SPDX-License-Identifier: Apache-2.0

"""
The index set Γₙ of critical strata.

A pair (α, β) with α odd, β even and β < α ≤ n names the family of degenerate polygons whose
side length is (β/α)·π. With α = 2s + 1 and β = 2t the pair determines the multiplicity and the
Morse index of every critical point in the family.

Classes:
    GammaPair: An element (α, β) of Γₙ.

Functions:
    require_odd_n(n: int) -> int: Validates n and returns m = (n − 1)/2.
    enumerate_gamma(n: int) -> list[GammaPair]: All of Γₙ in (α, β) order.
    coprime_gamma(n: int) -> list[GammaPair]: The pairs of Γₙ with gcd(α, β) = 1.
"""

import math
from dataclasses import dataclass

from ..arith import PiFraction, reduce
from ..contracts import errors


@dataclass(frozen=True, order=True)
class GammaPair:
    """
    An element (α, β) of Γₙ.

    Attributes:
        alpha (int): Odd, at least 3.
        beta (int): Even, positive, below alpha.
    """
    alpha: int
    beta: int

    def __post_init__(self):
        if self.alpha % 2 != 1 or self.beta % 2 != 0 or not 0 < self.beta < self.alpha:
            raise errors.new_common_error(
                errors.ErrKind.CONTRACT_INVALID,
                f"({self.alpha}, {self.beta}) needs alpha odd, beta even and 0 < beta < alpha")

    @property
    def s(self) -> int:
        """ s = (α − 1)/2 """
        return (self.alpha - 1) // 2

    @property
    def t(self) -> int:
        """ t = β/2 """
        return self.beta // 2

    @property
    def value(self) -> PiFraction:
        """ The critical value (β/α)·π, reduced. """
        return reduce(self.beta, self.alpha)

    def is_coprime(self) -> bool:
        """ Returns whether gcd(α, β) = 1. """
        return math.gcd(self.alpha, self.beta) == 1

    def belongs_to(self, n: int) -> bool:
        """ Returns whether the pair lies in Γₙ. """
        return self.alpha <= n

    def __str__(self):
        return f"({self.alpha},{self.beta})"


def require_odd_n(n: int) -> int:
    """
    Validates that n is an odd integer ≥ 3 and returns m = (n − 1)/2.

    Raises:
        CommonPolygonError: CONTRACT_INVALID otherwise.
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 3 or n % 2 == 0:
        raise errors.new_common_error(errors.ErrKind.CONTRACT_INVALID,
                                      f"n must be an odd integer ≥ 3, got {n}")
    return (n - 1) // 2


def enumerate_gamma(n: int) -> list[GammaPair]:
    """
    Returns Γₙ sorted by (α, β). Its size is Σ_{s=1}^{m} s = m(m + 1)/2.
    """
    require_odd_n(n)
    return [GammaPair(alpha, beta)
            for alpha in range(3, n + 1, 2)
            for beta in range(2, alpha, 2)]


def coprime_gamma(n: int) -> list[GammaPair]:
    """
    Returns the pairs of Γₙ with gcd(α, β) = 1, one for each critical value.
    """
    return [pair for pair in enumerate_gamma(n) if pair.is_coprime()]
