# Copyright (C) 2024 IOTech Ltd
# SPDX-License-Identifier: Apache-2.0

"""
This module defines the configuration of the engine and loads it.

The configuration file is yaml with upper-camel-case keys. Loading starts from the built-in
defaults, merges the file over them, applies environment overrides, and decodes the result into
`ConfigurationStruct` with dacite.

Classes:
    WritableInfo, VerifyInfo, OracleInfo, AnglesInfo, OutputInfo: One section each.
    ConfigurationStruct: The whole configuration.

Functions:
    get_config_file_location(lc: Logger, flags: CommandLineParser) -> str
    load_configuration(lc: Logger, flags: CommandLineParser) -> ConfigurationStruct
"""

import copy
import os
from dataclasses import asdict, dataclass, field

import dacite

from . import environment
from .commandline import CommandLineParser
from ..contracts import errors
from ..contracts.logger import Logger

# pylint: disable=invalid-name
# Field names match the upper-camel-case keys of the yaml file and of the environment overrides.


@dataclass
class WritableInfo:
    """
    Attributes:
        LogLevel (str): TRACE, DEBUG, INFO, WARNING or ERROR.
    """
    LogLevel: str = "INFO"


@dataclass
class VerifyInfo:
    """
    Bounds of the `verify` command.

    Attributes:
        NMax (int): Largest odd n of the exact checks.
        OracleMax (int): Largest odd n of the brute-force checks.
        ExtendedOracleMax (int): OracleMax under --extended.
        EnumerationMax (int): Largest odd n whose configurations are all built as objects.
        RealizationMax (int): Largest odd n whose configurations are placed on the sphere.
        JSetMax (int): Largest s of the J_s check.
        ExtendedJSetMax (int): JSetMax under --extended.
    """
    NMax: int = 99
    OracleMax: int = 15
    ExtendedOracleMax: int = 21
    EnumerationMax: int = 15
    RealizationMax: int = 11
    JSetMax: int = 1000
    ExtendedJSetMax: int = 10000


@dataclass
class OracleInfo:
    """
    Attributes:
        Budget (int): Largest n the brute force accepts.
        Jobs (int): Worker processes, 0 for one per core.
        PartitionBits (int): Top word bits split across workers.
    """
    Budget: int = 25
    Jobs: int = 0
    PartitionBits: int = 4


@dataclass
class AnglesInfo:
    """
    Attributes:
        SnapTolerance (float): Largest distance, in units of π, between a decimal angle and the
                               fraction it snaps to.
    """
    SnapTolerance: float = 1e-9


@dataclass
class OutputInfo:
    """
    Attributes:
        DefaultFormat (str): plain, json or csv.
        AsymptoticSamples (int): Number of log-spaced n of the `asymptotics` command.
    """
    DefaultFormat: str = "plain"
    AsymptoticSamples: int = 12


@dataclass
class ConfigurationStruct:
    """
    The configuration of the engine.
    """
    Writable: WritableInfo = field(default_factory=WritableInfo)
    Verify: VerifyInfo = field(default_factory=VerifyInfo)
    Oracle: OracleInfo = field(default_factory=OracleInfo)
    Angles: AnglesInfo = field(default_factory=AnglesInfo)
    Output: OutputInfo = field(default_factory=OutputInfo)


def get_config_file_location(lc: Logger, flags: CommandLineParser) -> str:
    """
    Determines the configuration file location from the flags and the environment.
    """
    config_dir = environment.get_config_directory(lc, flags.config_directory())
    config_file = environment.get_config_file_name(lc, flags.config_file())
    return os.path.join(config_dir, config_file)


def _merge(base: dict, overlay: dict) -> dict:
    merged = copy.deepcopy(base)
    for key, value in overlay.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def load_configuration(lc: Logger, flags: CommandLineParser) -> ConfigurationStruct:
    """
    Loads the configuration file over the defaults and applies environment overrides.

    A missing file is not an error: the defaults are used and a warning is logged.

    Raises:
        CommonPolygonError: IO_ERROR when the file cannot be parsed or holds unknown keys or values
                            of the wrong type.
    """
    path = get_config_file_location(lc, flags)
    data = asdict(ConfigurationStruct())
    try:
        data = _merge(data, environment.load_yaml_from_file(lc, path))
    except FileNotFoundError:
        lc.warn(f"Configuration file {path} not found, using built-in defaults")

    overrides = environment.override_configuration(lc, data)
    lc.debug(f"Configuration loaded from {path} with {overrides} environment override(s)")
    try:
        return dacite.from_dict(ConfigurationStruct, data,
                                config=dacite.Config(strict=True, type_hooks={float: float}))
    except dacite.DaciteError as e:
        raise errors.new_common_error(errors.ErrKind.IO_ERROR,
                                      f"invalid configuration in {path}", e) from e
