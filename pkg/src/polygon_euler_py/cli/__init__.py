# Copyright (C) 2024 IOTech Ltd
# SPDX-License-Identifier: Apache-2.0

"""
The command line front end.

`main` parses argv, loads the configuration, runs one command, prints the rendered result on
stdout and returns the exit code: 0 ok, 1 verification failure, 2 invalid argument, 3 snapping
failure. Errors and logs go to stderr.
"""

import sys
from fractions import Fraction
from typing import Optional, Sequence

from .commands import (CommandResult, cmd_asymptotics, cmd_chi, cmd_omega, cmd_oracle,
                       cmd_spectrum, cmd_verify, verify_context)
from .render import render
from ..bootstrap.commandline import CommandLineParser
from ..bootstrap.config import ConfigurationStruct, load_configuration
from ..contracts import errors
from ..contracts.logger import Logger, get_logger

SERVICE_KEY = "polygon-euler"


def dispatch(flags: CommandLineParser, config: ConfigurationStruct,
             logger: Logger) -> CommandResult:
    """ Runs the command selected by flags. """
    jobs = config.Oracle.Jobs if flags.jobs() is None else flags.jobs()
    match flags.command():
        case "spectrum":
            return cmd_spectrum(flags.n())
        case "chi":
            tolerance = Fraction(config.Angles.SnapTolerance)
            return cmd_chi(flags.n(), flags.angle(), flags.snap_den(), tolerance, logger)
        case "omega":
            return cmd_omega(flags.n())
        case "verify":
            ctx = verify_context(config, logger, flags.n_max(), flags.oracle_max(), flags.jobs(),
                                 flags.extended())
            return cmd_verify(ctx)
        case "oracle":
            return cmd_oracle(flags.n(), jobs, config.Oracle.Budget, config.Oracle.PartitionBits,
                              logger)
        case _:
            return cmd_asymptotics(flags.n_max(), config.Output.AsymptoticSamples)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Runs the command line and returns the process exit code.
    """
    logger = get_logger(SERVICE_KEY)
    try:
        flags = CommandLineParser(argv)
        config = load_configuration(logger, flags)
        try:
            logger.set_log_level(flags.log_level() or config.Writable.LogLevel)
        except ValueError as e:
            raise errors.new_common_error(errors.ErrKind.IO_ERROR,
                                          "invalid Writable.LogLevel", e) from e
        result = dispatch(flags, config, logger)
        print(render(result, flags.output_format() or config.Output.DefaultFormat))
        return result.exit_code
    except errors.CommonPolygonError as err:
        logger.debug(err.debug_messages())
        print(f"error: {err}", file=sys.stderr)
        return err.exit_code()
    except SystemExit as e:
        # --help
        return e.code if isinstance(e.code, int) else errors.EXIT_OK
