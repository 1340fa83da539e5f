# Copyright (C) 2024 IOTech Ltd
# SPDX-License-Identifier: Apache-2.0

"""
The commandline module of the polygon Euler characteristic engine.

This module provides a command line parser for the six commands. It uses argparse with one
sub-parser per command; the options shared by every command live on a parent parser so they may
be given after the command name.

Classes:
    CommandLineParser: Parses argv and exposes the parsed options through accessors.
"""

import argparse
from typing import Optional, Sequence

from ..contracts import errors

COMMANDS = ("spectrum", "chi", "omega", "verify", "oracle", "asymptotics")
FORMATS = ("plain", "json", "csv")
LOG_LEVELS = ("TRACE", "DEBUG", "INFO", "WARNING", "ERROR")


class _RaisingArgumentParser(argparse.ArgumentParser):
    """ Reports usage errors as CONTRACT_INVALID instead of exiting the process. """

    def error(self, message):
        raise errors.new_common_error(errors.ErrKind.CONTRACT_INVALID,
                                      f"{self.prog}: {message}")


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', dest='format', choices=FORMATS, default=None,
                        help='Output format; defaults to Output.DefaultFormat of the configuration')
    common.add_argument('--log-level', dest='logLevel', choices=LOG_LEVELS, default=None,
                        help='Overrides Writable.LogLevel of the configuration')
    common.add_argument('-c', '--config-dir', dest='configDir', type=str, default=None,
                        help='Specify local configuration directory')
    common.add_argument('-cf', '--config-file', dest='configFile', type=str, default=None,
                        help='Indicates the name of the local configuration file')
    return common


class CommandLineParser:
    """
    A command line parser for the engine.

    Attributes:
        args: The parsed command line arguments.
    """
    def __init__(self, argv: Optional[Sequence[str]] = None):
        common = _common_options()
        parser = _RaisingArgumentParser(
            prog='polygon-euler',
            description='Exact Morse theory of regular spherical polygon spaces')
        sub = parser.add_subparsers(dest='command', required=True)

        spectrum = sub.add_parser('spectrum', parents=[common],
                                  help='List the critical values with their strata')
        spectrum.add_argument('--n', dest='n', type=int, required=True, help='Odd number of sides')

        chi = sub.add_parser('chi', parents=[common],
                             help='Euler characteristic of the level set at side length a')
        chi.add_argument('--n', dest='n', type=int, required=True, help='Odd number of sides')
        chi.add_argument('--a', dest='a', type=str, required=True,
                         help='Side length as "p/q" meaning (p/q)·π, or a decimal multiple of π '
                              'together with --snap-den')
        chi.add_argument('--snap-den', dest='snapDen', type=int, default=None,
                         help='Largest denominator a decimal --a may be snapped to')

        omega = sub.add_parser('omega', parents=[common],
                               help='Euler characteristic on every regular interval')
        omega.add_argument('--n', dest='n', type=int, required=True, help='Odd number of sides')

        verify = sub.add_parser('verify', parents=[common], help='Run every cross-check')
        verify.add_argument('--n-max', dest='nMax', type=int, default=None,
                            help='Largest n of the exact checks; defaults to Verify.NMax')
        verify.add_argument('--oracle-max', dest='oracleMax', type=int, default=None,
                            help='Largest n of the brute-force checks; defaults to '
                                 'Verify.OracleMax')
        verify.add_argument('--jobs', dest='jobs', type=int, default=None,
                            help='Worker processes of the brute force, 0 for all cores')
        verify.add_argument('--extended', dest='extended', action='store_true',
                            help='Use Verify.ExtendedOracleMax and Verify.ExtendedJSetMax')

        oracle = sub.add_parser('oracle', parents=[common],
                                help='Count degenerate polygons by brute force')
        oracle.add_argument('--n', dest='n', type=int, required=True, help='Odd number of sides')
        oracle.add_argument('--jobs', dest='jobs', type=int, default=None,
                            help='Worker processes, 0 for all cores')

        asymptotics = sub.add_parser('asymptotics', parents=[common],
                                     help='Compare the counts with their asymptotic expressions')
        asymptotics.add_argument('--n-max', dest='nMax', type=int, required=True,
                                 help='Largest odd n of the sample')
        self.args = parser.parse_args(argv)

    def command(self) -> str:
        """ Returns the selected command. """
        return self.args.command

    def config_directory(self) -> Optional[str]:
        """ Returns the configuration directory argument. """
        return self.args.configDir

    def config_file(self) -> Optional[str]:
        """ Returns the configuration file argument. """
        return self.args.configFile

    def log_level(self) -> Optional[str]:
        return self.args.logLevel

    def output_format(self) -> Optional[str]:
        return self.args.format

    def n(self) -> Optional[int]:
        return getattr(self.args, 'n', None)

    def angle(self) -> Optional[str]:
        return getattr(self.args, 'a', None)

    def snap_den(self) -> Optional[int]:
        return getattr(self.args, 'snapDen', None)

    def n_max(self) -> Optional[int]:
        return getattr(self.args, 'nMax', None)

    def oracle_max(self) -> Optional[int]:
        return getattr(self.args, 'oracleMax', None)

    def jobs(self) -> Optional[int]:
        return getattr(self.args, 'jobs', None)

    def extended(self) -> bool:
        return getattr(self.args, 'extended', False)
