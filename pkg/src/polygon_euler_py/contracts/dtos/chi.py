# Copyright (C) 2024 IOTech Ltd
# SPDX-License-Identifier: Apache-2.0
"""
This module defines the records of the `chi` and `omega` commands.
"""
from dataclasses import dataclass, field
from typing import Optional

from dataclasses_json import dataclass_json

from .spectrum import FractionRecord, StratumRecord


@dataclass_json
@dataclass
class PositionRecord:
    """
    Where the angle sits: kind is "interval" or "at-critical".
    """
    kind: str = ""
    interval: int = 0
    value: Optional[FractionRecord] = None


@dataclass_json
@dataclass
class ContributionRecord:
    """
    The change of χ due to one stratum, crossed or landed on.
    """
    stratum: StratumRecord = field(default_factory=StratumRecord)
    increment: str = "0"
    landing: bool = False


@dataclass_json
@dataclass
class ChiPayload:
    """
    χ(Mₙ(a)) with the position of a and the increments that produced it.
    """
    a: FractionRecord = field(default_factory=FractionRecord)
    chi: str = "0"
    position: PositionRecord = field(default_factory=PositionRecord)
    contributions: list[ContributionRecord] = field(default_factory=list)


@dataclass_json
@dataclass
class OmegaEntryRecord:
    """
    Ωᵢ with the closed form covering it, if any ("low" or "high"), and whether it agreed.
    """
    i: int = 0
    value: str = "0"
    closed_form: Optional[str] = None
    matched: Optional[bool] = None


@dataclass_json
@dataclass
class OmegaPayload:
    """
    The full Ω table of one n.
    """
    entries: list[OmegaEntryRecord] = field(default_factory=list)
    passed: bool = True
