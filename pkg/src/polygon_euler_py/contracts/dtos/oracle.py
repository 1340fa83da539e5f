# Copyright (C) 2024 IOTech Ltd
# SPDX-License-Identifier: Apache-2.0
"""
This module defines the records of the `oracle` command.
"""
from dataclasses import dataclass, field

from dataclasses_json import dataclass_json

from .spectrum import FractionRecord


@dataclass_json
@dataclass
class OracleStratumRecord:
    """
    Brute-force and predicted counts of one stratum.
    """
    alpha: int = 0
    beta: int = 0
    observed: str = "0"
    predicted: str = "0"
    matched: bool = True


@dataclass_json
@dataclass
class OracleLevelRecord:
    """
    Brute-force and predicted counts at one critical value.
    """
    value: FractionRecord = field(default_factory=FractionRecord)
    observed: str = "0"
    predicted: str = "0"
    matched: bool = True


@dataclass_json
@dataclass
class OraclePayload:
    """
    The brute-force census of one n next to the spectrum's predictions.
    """
    total_observed: str = "0"
    total_predicted: str = "0"
    strata: list[OracleStratumRecord] = field(default_factory=list)
    levels: list[OracleLevelRecord] = field(default_factory=list)
    passed: bool = True
