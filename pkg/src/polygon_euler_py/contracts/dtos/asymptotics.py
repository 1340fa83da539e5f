# Copyright (C) 2024 IOTech Ltd
# SPDX-License-Identifier: Apache-2.0
"""
This module defines the records of the `asymptotics` command.
"""
from dataclasses import dataclass, field

from dataclasses_json import dataclass_json


@dataclass_json
@dataclass
class AsymptoticRecord:
    """
    Exact |Uₙ|, Φ(n) and Ψ(n) of one n, as decimal strings, and their asymptotic ratios.
    """
    n: int = 0
    critical_points: str = "0"
    phi: str = "0"
    psi_capital: str = "0"
    ratio_critical_points: float = 0.0
    ratio_levels: float = 0.0
    ratio_psi_capital: float = 0.0


@dataclass_json
@dataclass
class AsymptoticsPayload:
    """
    One row per sampled n, ascending.
    """
    rows: list[AsymptoticRecord] = field(default_factory=list)
