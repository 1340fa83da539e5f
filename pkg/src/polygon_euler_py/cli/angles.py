# Copyright (C) 2024 IOTech Ltd
# SPDX-License-Identifier: Apache-2.0

"""
Parsing of the side length given on the command line.

"p/q" means (p/q)·π and is taken exactly. A decimal, also in units of π, is accepted only together
with a largest denominator and is snapped to the closest fraction with at most that denominator;
the snap must land within the tolerance.
"""

import re
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from typing import Optional

from ..arith import PiFraction, reduce
from ..contracts import errors

DEFAULT_SNAP_TOLERANCE = Fraction(1, 10 ** 9)

_FRACTION = re.compile(r"^\s*(\d+)\s*/\s*(\d+)\s*$")


def parse_angle(text: str, snap_den: Optional[int] = None,
                tolerance: Fraction = DEFAULT_SNAP_TOLERANCE) -> PiFraction:
    """
    Parses text into an exact angle.

    Raises:
        CommonPolygonError: CONTRACT_INVALID for malformed text, a decimal without snap_den, or an
                            angle outside (0, π); SNAP_FAILED when no fraction with denominator
                            ≤ snap_den lies within tolerance of the decimal.
    """
    matched = _FRACTION.match(text)
    if matched:
        p, q = int(matched.group(1)), int(matched.group(2))
        if q == 0:
            raise errors.new_common_error(errors.ErrKind.CONTRACT_INVALID,
                                          f"angle {text!r} has a zero denominator")
        return _in_range(Fraction(p, q), text)

    try:
        value = Fraction(Decimal(text.strip()))
    except (InvalidOperation, ValueError, OverflowError) as e:
        raise errors.new_common_error(errors.ErrKind.CONTRACT_INVALID,
                                      f"angle {text!r} is neither p/q nor a decimal", e) from e
    if snap_den is None:
        raise errors.new_common_error(
            errors.ErrKind.CONTRACT_INVALID,
            f"decimal angle {text!r} needs --snap-den; give the angle as p/q to use it exactly")
    if snap_den < 1:
        raise errors.new_common_error(errors.ErrKind.CONTRACT_INVALID,
                                      f"--snap-den must be positive, got {snap_den}")
    snapped = value.limit_denominator(snap_den)
    if abs(snapped - value) > tolerance:
        raise errors.new_common_error(
            errors.ErrKind.SNAP_FAILED,
            f"{text} is {float(abs(snapped - value)):.3g} away from the nearest fraction {snapped} "
            f"with denominator ≤ {snap_den}")
    return _in_range(snapped, text)


def _in_range(value: Fraction, text: str) -> PiFraction:
    if not 0 < value < 1:
        raise errors.new_common_error(errors.ErrKind.CONTRACT_INVALID,
                                      f"side length {text}·π is outside (0, π)")
    return reduce(value.numerator, value.denominator)
