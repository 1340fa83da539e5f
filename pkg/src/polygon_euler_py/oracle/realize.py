# Copyright (C) 2024 IOTech Ltd
# SPDX-License-Identifier: Apache-2.0

"""
Places a degenerate configuration on the equator of the unit sphere and checks the result
numerically.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .words import DegenerateConfig, Track
from ..contracts import errors

NORM_TOLERANCE = 1e-12
REALIZATION_TOLERANCE = 1e-9


@dataclass(frozen=True)
class SpherePoint:
    """
    A unit vector of R³.
    """
    x: float
    y: float
    z: float

    def __post_init__(self):
        if abs(math.sqrt(self.x ** 2 + self.y ** 2 + self.z ** 2) - 1) > NORM_TOLERANCE:
            raise errors.new_common_error(errors.ErrKind.CONTRACT_INVALID,
                                          f"({self.x}, {self.y}, {self.z}) is not a unit vector")

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])


def spherical_distance(u: SpherePoint, v: SpherePoint) -> float:
    """ The great-circle distance arccos⟨u, v⟩; the dot product is clipped to [−1, 1]. """
    return float(np.arccos(np.clip(np.dot(u.as_array(), v.as_array()), -1.0, 1.0)))


def _signed_step(u: SpherePoint, v: SpherePoint) -> float:
    """ The angle from u to v measured counterclockwise around the north pole. """
    return math.atan2(u.x * v.y - u.y * v.x, u.x * v.x + u.y * v.y)


def realize_on_circle(config: DegenerateConfig) -> list[SpherePoint]:
    """
    Returns the n vertices u₁, ..., uₙ on the equator: u₁ at longitude 0, and each following
    vertex a further +a (forward-track) or −a (back-track) along the circle, a = realized_a.
    """
    a = config.realized_a.radians()
    steps = np.array([a if item is Track.FORWARD else -a for item in config.word.tracks])
    longitudes = np.concatenate(([0.0], np.cumsum(steps[:-1])))
    return [SpherePoint(float(np.cos(angle)), float(np.sin(angle)), 0.0) for angle in longitudes]


@dataclass
class RealizationReport:
    """
    Numeric checks of one realized configuration.

    Attributes:
        side_errors (list[float]): |d(uᵢ, uᵢ₊₁) − a| for i = 1..n, indices mod n.
        winding_error (float): |Σ signed steps − 2πw|.
    """
    side_errors: list[float] = field(default_factory=list)
    winding_error: float = 0.0

    def passed(self, tolerance: float = REALIZATION_TOLERANCE) -> bool:
        return max(self.side_errors, default=0.0) <= tolerance and self.winding_error <= tolerance


def check_realization(config: DegenerateConfig) -> RealizationReport:
    """
    Measures every side of the realized polygon, including the closing side uₙ → u₁, and the total
    signed angle it turns through.
    """
    points = realize_on_circle(config)
    a = config.realized_a.radians()
    report = RealizationReport()
    total = 0.0
    for i, item in enumerate(config.word.tracks):
        u, v = points[i], points[(i + 1) % len(points)]
        # each step is ±a with a < π, so atan2 recovers it unwrapped
        step = _signed_step(u, v)
        expected = a if item is Track.FORWARD else -a
        report.side_errors.append(max(abs(spherical_distance(u, v) - a), abs(step - expected)))
        total += step
    report.winding_error = abs(total - 2 * math.pi * config.winding)
    return report
