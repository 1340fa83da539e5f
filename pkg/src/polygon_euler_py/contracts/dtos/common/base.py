# Copyright (C) 2024 IOTech Ltd
# SPDX-License-Identifier: Apache-2.0

"""
The base records shared by every command output.

Classes:
    Versionable: Carries the schema version of a record.
    OutputRecord: The top-level record {schema_version, command, n, payload} every command emits.
"""

import json
from dataclasses import dataclass, field
from typing import Any

from dataclasses_json import dataclass_json

SCHEMA_VERSION = "1.0"


@dataclass_json
@dataclass
class Versionable:
    """
    Represents a versioned record.

    Attributes:
        schema_version (str): The version of the output schema.
    """
    schema_version: str = SCHEMA_VERSION


@dataclass
class OutputRecord(Versionable):  # inherits the dataclass_json methods; decorating again would overwrite to_json
    """
    The schema-versioned record of one command run.

    Attributes:
        command (str): The command name, e.g. "spectrum".
        n (int): The number of sides, or the upper bound n-max for suite-style commands.
        payload (dict[str, Any]): The command-specific record, already converted to a dict.
    """
    command: str = ""
    n: int = 0
    payload: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> str:
        """ Serializes with sorted keys so that the output is byte-stable across runs. """
        # pylint: disable=no-member
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, ensure_ascii=False)


def from_json(text: str) -> OutputRecord:
    """ Parses a record written by `OutputRecord.to_json`. """
    return OutputRecord.from_dict(json.loads(text))  # pylint: disable=no-member
