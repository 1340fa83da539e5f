# Copyright (C) 2024 IOTech Ltd
# SPDX-License-Identifier: Apache-2.0
"""
This module defines the records of the `spectrum` command.
"""
from dataclasses import dataclass, field

from dataclasses_json import dataclass_json


@dataclass_json
@dataclass
class FractionRecord:
    """
    An angle (num/den)·π.
    """
    num: int = 0
    den: int = 1


@dataclass_json
@dataclass
class StratumRecord:
    """
    One critical stratum; the count is a decimal string since it may exceed 64 bits.
    """
    alpha: int = 0
    beta: int = 0
    value: FractionRecord = field(default_factory=FractionRecord)
    count: str = "0"
    index: int = 0


@dataclass_json
@dataclass
class LevelRecord:
    """
    A critical value and the strata attaining it, ordered by pair.
    """
    value: FractionRecord = field(default_factory=FractionRecord)
    strata: list[StratumRecord] = field(default_factory=list)


@dataclass_json
@dataclass
class SpectrumPayload:
    """
    The levels of one n in ascending order with Φ(n), |Uₙ| and ψ(n).
    """
    levels: list[LevelRecord] = field(default_factory=list)
    phi: str = "0"
    critical_points: str = "0"
    psi: str = "0"
