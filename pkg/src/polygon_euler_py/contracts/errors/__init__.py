# Copyright (C) 2024 IOTech Ltd
# SPDX-License-Identifier: Apache-2.0

"""
The error model shared by every computation and command of the engine.

An error carries an `ErrKind`, and the command line front end turns the kind into the process exit
code: 2 for an invalid or over-budget argument, 3 for a decimal angle with no close fraction, 1
for everything else, including a failed cross-check. Errors can wrap other exceptions; the
outermost kind other than UNKNOWN wins.
"""

import inspect
from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Optional

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_INVALID_ARGUMENT = 2
EXIT_SNAP_FAILED = 3


class PolygonError(Exception, ABC):
    """
    Base of the exceptions raised by the engine.
    """

    @abstractmethod
    def debug_messages(self) -> str:
        """Returns the messages of the whole chain, each prefixed with where it was raised."""

    @abstractmethod
    def first_level_message(self) -> str:
        """Returns the outermost non-empty message."""

    @abstractmethod
    def exit_code(self) -> int:
        """Returns the process exit code of this error."""


class ErrKind(Enum):
    UNKNOWN = "Unknown"
    CONTRACT_INVALID = "ContractInvalid"
    LIMIT_EXCEEDED = "LimitExceeded"
    SNAP_FAILED = "SnapFailed"
    VERIFICATION_FAILED = "VerificationFailed"
    IO_ERROR = "IOError"


_EXIT_CODES = {
    ErrKind.CONTRACT_INVALID: EXIT_INVALID_ARGUMENT,
    ErrKind.LIMIT_EXCEEDED: EXIT_INVALID_ARGUMENT,
    ErrKind.SNAP_FAILED: EXIT_SNAP_FAILED,
}


@dataclass
class CommonPolygonError(PolygonError):
    """
    The one concrete engine error.

    Attributes:
        caller_info (str): File, function and line of the code that created the error.
        err_kind (ErrKind): The category of the error.
        message (str): What went wrong, in terms of the caller's arguments.
        code (int): The process exit code of `err_kind`.
        err (Exception, optional): The wrapped cause.
    """
    caller_info: str = ""
    err_kind: ErrKind = ErrKind.UNKNOWN
    message: str = ""
    code: int = EXIT_VERIFICATION_FAILED
    err: Optional[Exception] = None

    def chain(self) -> Iterator[Exception]:
        """
        Yields this error and then every wrapped cause, outermost first. The last item may be a
        foreign exception.
        """
        current: Optional[Exception] = self
        while current is not None:
            yield current
            current = current.err if isinstance(current, CommonPolygonError) else None

    def __str__(self):
        parts = [item.message if isinstance(item, CommonPolygonError) else str(item)
                 for item in self.chain()]
        return " -> ".join(part for part in parts if part)

    def debug_messages(self) -> str:
        parts = [f"{item.caller_info}: {item.message}" if isinstance(item, CommonPolygonError)
                 else str(item) for item in self.chain()]
        return " -> ".join(parts)

    def first_level_message(self) -> str:
        for item in self.chain():
            message = item.message if isinstance(item, CommonPolygonError) else str(item)
            if message:
                return message
        return ""

    def exit_code(self) -> int:
        return self.code


def kind(err: Exception) -> ErrKind:
    """
    Returns the outermost kind other than UNKNOWN in the chain of `err`, or UNKNOWN.
    """
    if not isinstance(err, CommonPolygonError):
        return ErrKind.UNKNOWN
    for item in err.chain():
        if isinstance(item, CommonPolygonError) and item.err_kind != ErrKind.UNKNOWN:
            return item.err_kind
    return ErrKind.UNKNOWN


def get_caller_information() -> str:
    """
    Describes the function that called the error constructor which called this function.
    """
    stack = inspect.stack()
    frame = stack[2] if len(stack) > 2 else stack[-1]
    return f"[{frame.filename}]-{frame.function}(line {frame.lineno})"


def code_mapping(err_kind: ErrKind) -> int:
    return _EXIT_CODES.get(err_kind, EXIT_VERIFICATION_FAILED)


def new_common_error(err_kind: ErrKind, message: str, wrapped_error: Exception = None) \
        -> CommonPolygonError:
    return CommonPolygonError(
        caller_info=get_caller_information(),
        err_kind=err_kind,
        message=message,
        code=code_mapping(err_kind),
        err=wrapped_error
    )


def new_common_error_wrapper(wrapped_error: Exception) -> CommonPolygonError:
    """
    Wraps another exception without a message of its own, inheriting its kind and exit code.
    """
    inherited = kind(wrapped_error)
    return CommonPolygonError(
        caller_info=get_caller_information(),
        err_kind=inherited,
        code=code_mapping(inherited),
        err=wrapped_error
    )
