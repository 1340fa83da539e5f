# Copyright (C) 2024 IOTech Ltd
# SPDX-License-Identifier: Apache-2.0

"""
Exact angles of the form (p/q)·π.

Every side length and every critical value the engine handles is a rational multiple of π lying in
[0, π). `PiFraction` stores the reduced numerator and denominator and orders values by integer
cross-multiplication, so no floating point is involved in locating an angle in the spectrum.

Classes:
    PiFraction: An exact angle (num/den)·π.
    Ordering: The result of `compare`.

Functions:
    reduce(p: int, q: int) -> PiFraction: Builds the reduced angle (p/q)·π.
    compare(x: PiFraction, y: PiFraction) -> Ordering: Total order of two angles.
    midpoint(x: PiFraction, y: PiFraction) -> PiFraction: Exact midpoint of two angles.
    mediant(x: PiFraction, y: PiFraction) -> PiFraction: The Farey mediant of two angles.
"""

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import total_ordering

from ..contracts import errors


class Ordering(Enum):
    """
    Result of comparing two angles.
    """
    LESS = -1
    EQUAL = 0
    GREATER = 1


@total_ordering
@dataclass(frozen=True)
class PiFraction:
    """
    An exact angle (num/den)·π with gcd(num, den) = 1 and 0 < num < den.

    The single value num=0, den=1 (`ZERO`) is allowed to stand for the lower end of the first
    interval of a spectrum.

    Attributes:
        num (int): The numerator.
        den (int): The denominator.
    """
    num: int
    den: int

    def __post_init__(self):
        if self.num == 0 and self.den == 1:
            return
        if self.den <= 0 or not 0 < self.num < self.den:
            raise errors.new_common_error(
                errors.ErrKind.CONTRACT_INVALID,
                f"angle {self.num}/{self.den}·π lies outside (0, π)")
        if math.gcd(self.num, self.den) != 1:
            raise errors.new_common_error(
                errors.ErrKind.CONTRACT_INVALID,
                f"angle {self.num}/{self.den} is not stored reduced")

    def __lt__(self, other):
        if not isinstance(other, PiFraction):
            return NotImplemented
        return self.num * other.den < other.num * self.den

    def __str__(self):
        return f"{self.num}/{self.den}"

    def is_zero(self) -> bool:
        """Returns whether this is the ZERO sentinel."""
        return self.num == 0

    def as_fraction(self) -> Fraction:
        """Returns the coefficient of π as a Fraction."""
        return Fraction(self.num, self.den)

    def radians(self) -> float:
        """Returns the angle in radians as a float, for numeric geometry only."""
        return self.num * math.pi / self.den

    def render(self) -> str:
        """Returns the angle written as 'p/q·π'."""
        return f"{self.num}/{self.den}·π"


ZERO = PiFraction(0, 1)


def reduce(p: int, q: int) -> PiFraction:
    """
    Builds the reduced angle (p/q)·π.

    Raises:
        CommonPolygonError: CONTRACT_INVALID when q ≤ 0 or p lies outside [0, q).
    """
    if q <= 0 or p < 0 or p >= q:
        raise errors.new_common_error(
            errors.ErrKind.CONTRACT_INVALID,
            f"angle {p}/{q}·π lies outside [0, π)")
    if p == 0:
        return ZERO
    g = math.gcd(p, q)
    return PiFraction(p // g, q // g)


def from_fraction(value: Fraction) -> PiFraction:
    """
    Builds the angle value·π from a Fraction in [0, 1).
    """
    return reduce(value.numerator, value.denominator)


def compare(x: PiFraction, y: PiFraction) -> Ordering:
    """
    Compares two angles by cross-multiplication.
    """
    lhs = x.num * y.den
    rhs = y.num * x.den
    if lhs < rhs:
        return Ordering.LESS
    if lhs > rhs:
        return Ordering.GREATER
    return Ordering.EQUAL


def midpoint(x: PiFraction, y: PiFraction) -> PiFraction:
    """
    Returns the exact midpoint of two angles.
    """
    return from_fraction((x.as_fraction() + y.as_fraction()) / 2)


def mediant(x: PiFraction, y: PiFraction) -> PiFraction:
    """
    Returns the Farey mediant (x.num + y.num)/(x.den + y.den), which lies strictly between two
    distinct angles.
    """
    return reduce(x.num + y.num, x.den + y.den)
