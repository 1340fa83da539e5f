# Copyright (C) 2024 IOTech Ltd
# SPDX-License-Identifier: Apache-2.0

"""
Logging for the engine.

Every record goes to stderr as one logfmt line (`level=... ts=... app=... source=... msg="..."`)
so that rendered command output on stdout stays machine readable. Besides the standard levels a
TRACE level below DEBUG carries the per-level steps of the surgery descent.
"""

import logging
from abc import ABC, abstractmethod

TRACE = 5
DEBUG = logging.DEBUG
INFO = logging.INFO
WARN = logging.WARNING
ERROR = logging.ERROR

VALID_LEVELS = {
    'TRACE': TRACE,
    'DEBUG': DEBUG,
    'INFO': INFO,
    'WARNING': WARN,
    'ERROR': ERROR
}

logging.addLevelName(TRACE, "TRACE")


class Logger(ABC):
    """
    The logging interface passed through the engine. Computations accept any implementation so
    tests can hand in a MagicMock.
    """

    @abstractmethod
    def trace(self, msg, *args, **kwargs):
        pass

    @abstractmethod
    def debug(self, msg, *args, **kwargs):
        pass

    @abstractmethod
    def info(self, msg, *args, **kwargs):
        pass

    @abstractmethod
    def warn(self, msg, *args, **kwargs):
        pass

    @abstractmethod
    def error(self, msg, *args, **kwargs):
        pass

    @abstractmethod
    def set_log_level(self, level_name: str):
        """
        Switches to the named level, one of the keys of VALID_LEVELS.
        """


class LogfmtFormatter(logging.Formatter):
    """
    Formats a record as a logfmt line; the message is always quoted.
    """

    def __init__(self, service_key: str):
        super().__init__()
        self.service_key = service_key

    def format(self, record: logging.LogRecord) -> str:
        message = record.getMessage().replace('\\', '\\\\').replace('"', '\\"')
        return (f'level={record.levelname} ts={self.formatTime(record)} app={self.service_key} '
                f'source={record.filename}:{record.lineno} msg="{message}"')


class PolygonLogger(Logger):
    """
    Logger on a named logger of the standard logging package, writing to stderr.
    """

    def __init__(self, service_key: str, level=INFO):
        if level not in VALID_LEVELS.values():
            raise ValueError(f"Unsupported log level: {level}. Supported levels are: "
                             f"{sorted(VALID_LEVELS.values())}")
        self.service_key = service_key
        self.logger = logging.getLogger(service_key)
        self.logger.setLevel(level)
        self.logger.propagate = False
        # the named logger is shared by every instance with this key
        if not self.logger.handlers:
            handler = logging.StreamHandler()
            handler.setFormatter(LogfmtFormatter(service_key))
            self.logger.addHandler(handler)

    def trace(self, msg, *args, **kwargs):
        self.logger.log(TRACE, msg, *args, **kwargs)

    def debug(self, msg, *args, **kwargs):
        self.logger.debug(msg, *args, **kwargs)

    def info(self, msg, *args, **kwargs):
        self.logger.info(msg, *args, **kwargs)

    def warn(self, msg, *args, **kwargs):
        self.logger.warning(msg, *args, **kwargs)

    def error(self, msg, *args, **kwargs):
        self.logger.error(msg, *args, **kwargs)

    def set_log_level(self, level_name: str):
        level = VALID_LEVELS.get(level_name.upper())
        if level is None:
            raise ValueError(f"Unsupported log level: {level_name}. Supported levels are: "
                             f"{list(VALID_LEVELS)}")
        self.logger.setLevel(level)


def get_logger(service_key: str, level=INFO) -> Logger:
    return PolygonLogger(service_key, level)
