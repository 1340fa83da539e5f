# Copyright (C) 2024 IOTech Ltd
# SPDX-License-Identifier: Apache-2.0

"""
This module contains utility functions for environment variable overrides.

A configuration value at path `Section/Key` can be replaced by the environment variable
`SECTION_KEY`; the replacement is converted to the type of the value it replaces.

Functions:
    log_env_variables_override(logger, name, key, value): Logs one override.
    get_env_var_as_str(logger, name, env_key, default_value) -> str
    get_config_directory(logger, config_dir) -> str
    get_config_file_name(logger, config_file_name) -> str
    load_yaml_from_file(logger, file_path) -> dict
    override_configuration(logger, configuration) -> int
"""

import os
from typing import Any, Iterator

import yaml

from ..contracts import errors
from ..contracts.logger import Logger

ENV_KEY_CONFIG_DIR = "POLYGON_CONFIG_DIR"
ENV_KEY_CONFIG_FILE = "POLYGON_CONFIG_FILE"
DEFAULT_CONFIG_DIR = "res"
DEFAULT_CONFIG_FILE = "configuration.yaml"

CONFIG_PATH_SEPARATOR = "/"
CONFIG_NAME_SEPARATOR = "-"
ENV_NAME_SEPARATOR = "_"


def log_env_variables_override(logger: Logger, name: str, key: str, value: str):
    """
    Logs that an option or configuration has been overridden by an environment variable.
    """
    logger.info(f"Variables override of '{name}' by environment variable: {key}={value}")


def get_env_var_as_str(logger: Logger, name: str, env_key: str, default_value: str) -> str:
    """
    Returns the value of env_key when it is set and not blank, otherwise default_value.
    """
    env_value = os.environ.get(env_key, "")
    if env_value:
        log_env_variables_override(logger, name, env_key, env_value)
        return env_value
    return default_value


def get_config_directory(logger: Logger, config_dir: str) -> str:
    """
    The configuration directory: the environment wins over config_dir, and a blank result falls
    back to `res`.
    """
    return get_env_var_as_str(logger, "-c/--config-dir", ENV_KEY_CONFIG_DIR,
                              config_dir or "") or DEFAULT_CONFIG_DIR


def get_config_file_name(logger: Logger, config_file_name: str) -> str:
    """
    The configuration file name: the environment wins over config_file_name, and a blank result
    falls back to `configuration.yaml`.
    """
    return get_env_var_as_str(logger, "-cf/--config-file", ENV_KEY_CONFIG_FILE,
                              config_file_name or "") or DEFAULT_CONFIG_FILE


def load_yaml_from_file(logger: Logger, file_path: str) -> dict:
    """
    Loads a yaml mapping from file_path.

    Raises:
        FileNotFoundError: When the file does not exist.
        CommonPolygonError: IO_ERROR when the file is not valid yaml or not a mapping.
    """
    try:
        with open(file_path, "r", encoding="utf-8") as file:
            parsed = yaml.safe_load(file)
    except yaml.YAMLError as e:
        logger.error(f"Error parsing yaml file: {file_path}")
        raise errors.new_common_error(errors.ErrKind.IO_ERROR,
                                      f"failed to parse {file_path}", e) from e
    if parsed is None:
        return {}
    if not isinstance(parsed, dict):
        raise errors.new_common_error(errors.ErrKind.IO_ERROR,
                                      f"{file_path} does not hold a mapping")
    return parsed


def _leaf_paths(configuration: dict, prefix: str = "") -> Iterator[str]:
    """ Yields the path of every non-mapping value, sections joined by '/'. """
    for key, value in configuration.items():
        path = f"{prefix}{CONFIG_PATH_SEPARATOR}{key}" if prefix else str(key)
        if isinstance(value, dict):
            yield from _leaf_paths(value, path)
        else:
            yield path


def env_name(path: str) -> str:
    """ The environment variable overriding path, e.g. Writable/LogLevel → WRITABLE_LOGLEVEL. """
    return (path.replace(CONFIG_PATH_SEPARATOR, ENV_NAME_SEPARATOR)
            .replace(CONFIG_NAME_SEPARATOR, ENV_NAME_SEPARATOR)
            .upper())


def _section_of(path: str, configuration: dict) -> tuple[dict, str]:
    *sections, key = path.split(CONFIG_PATH_SEPARATOR)
    current = configuration
    for section in sections:
        current = current[section]
    return current, key


def _convert_to_type(old_value: Any, new_value: str) -> Any:
    """
    Converts new_value to the type of old_value, leaving it a string when that fails.
    """
    if isinstance(old_value, bool):
        return new_value.lower() in ("true", "1", "yes")
    try:
        return type(old_value)(new_value)
    except (TypeError, ValueError):
        return new_value


def override_configuration(logger: Logger, configuration: dict) -> int:
    """
    Replaces every configuration value whose environment variable is set, in place, and returns
    the number of replaced values.
    """
    override_count = 0
    for path in list(_leaf_paths(configuration)):
        key = env_name(path)
        if key not in os.environ:
            continue
        section, name = _section_of(path, configuration)
        section[name] = _convert_to_type(section[name], os.environ[key])
        override_count += 1
        log_env_variables_override(logger, path, key, os.environ[key])
    return override_count
