# Copyright (C) 2024 IOTech Ltd
# SPDX-License-Identifier: Apache-2.0
"""
This module defines the records of the `verify` command.
"""
from dataclasses import dataclass, field

from dataclasses_json import dataclass_json


@dataclass_json
@dataclass
class CheckRecord:
    """
    The outcome of one named check.

    Attributes:
        name (str): The check name, e.g. "omega.closed-low".
        passed (bool): Whether every case agreed.
        cases (int): The number of cases compared.
        detail (str): The first failure, empty when passed.
    """
    name: str = ""
    passed: bool = True
    cases: int = 0
    detail: str = ""


@dataclass_json
@dataclass
class VerifyPayload:
    """
    The whole suite run with its bounds.
    """
    n_max: int = 0
    oracle_max: int = 0
    passed: bool = True
    checks: list[CheckRecord] = field(default_factory=list)
