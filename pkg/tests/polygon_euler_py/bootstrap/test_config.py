# Copyright (C) 2024 IOTech Ltd
# SPDX-License-Identifier: Apache-2.0

import os
import tempfile
import unittest
from unittest.mock import MagicMock, patch

from src.polygon_euler_py.bootstrap.config import (ConfigurationStruct, get_config_file_location,
                                                   load_configuration)
from src.polygon_euler_py.contracts.errors import CommonPolygonError, ErrKind


class TestConfig(unittest.TestCase):

    def setUp(self):
        self.logger = MagicMock()
        self.directory = tempfile.TemporaryDirectory()
        self.addCleanup(self.directory.cleanup)
        self.flags = MagicMock()
        self.flags.config_directory.return_value = self.directory.name
        self.flags.config_file.return_value = "configuration.yaml"

    def write(self, text: str):
        with open(os.path.join(self.directory.name, "configuration.yaml"), "w",
                  encoding="utf-8") as file:
            file.write(text)

    @patch.dict('os.environ', {}, clear=True)
    def test_get_config_file_location(self):
        self.assertEqual(get_config_file_location(self.logger, self.flags),
                         os.path.join(self.directory.name, "configuration.yaml"))

    @patch.dict('os.environ', {}, clear=True)
    def test_missing_file_uses_defaults(self):
        config = load_configuration(self.logger, self.flags)
        self.assertEqual(config, ConfigurationStruct())
        self.logger.warn.assert_called_once()

    @patch.dict('os.environ', {}, clear=True)
    def test_file_is_merged_over_defaults(self):
        self.write("Verify:\n  NMax: 21\nOracle:\n  Jobs: 2\nAngles:\n  SnapTolerance: 1\n")
        config = load_configuration(self.logger, self.flags)
        self.assertEqual(config.Verify.NMax, 21)
        self.assertEqual(config.Verify.OracleMax, 15)
        self.assertEqual(config.Oracle.Jobs, 2)
        self.assertEqual(config.Oracle.Budget, 25)
        self.assertEqual(config.Angles.SnapTolerance, 1.0)
        self.assertIsInstance(config.Angles.SnapTolerance, float)
        self.assertEqual(config.Output.DefaultFormat, "plain")

    @patch.dict('os.environ', {'VERIFY_ORACLEMAX': '9', 'OUTPUT_DEFAULTFORMAT': 'json'},
                clear=True)
    def test_environment_overrides_file(self):
        self.write("Verify:\n  OracleMax: 11\n")
        config = load_configuration(self.logger, self.flags)
        self.assertEqual(config.Verify.OracleMax, 9)
        self.assertEqual(config.Output.DefaultFormat, "json")

    @patch.dict('os.environ', {}, clear=True)
    def test_invalid_content_is_io_error(self):
        tests = [
            ("unknown key", "Verify:\n  Nmax: 21\n"),
            ("wrong type", "Oracle:\n  Jobs: all\n"),
            ("unparsable", "Verify: {NMax: 21\n"),
        ]
        for name, text in tests:
            with self.subTest(name=name):
                self.write(text)
                with self.assertRaises(CommonPolygonError) as ctx:
                    load_configuration(self.logger, self.flags)
                self.assertEqual(ctx.exception.err_kind, ErrKind.IO_ERROR)

    @patch.dict('os.environ', {'ORACLE_JOBS': 'all'}, clear=True)
    def test_unconvertible_override_is_io_error(self):
        with self.assertRaises(CommonPolygonError) as ctx:
            load_configuration(self.logger, self.flags)
        self.assertEqual(ctx.exception.err_kind, ErrKind.IO_ERROR)

    @patch.dict('os.environ', {}, clear=True)
    def test_shipped_configuration_matches_defaults(self):
        flags = MagicMock()
        flags.config_directory.return_value = os.path.join(
            os.path.dirname(__file__), "..", "..", "..", "res")
        flags.config_file.return_value = None
        self.assertEqual(load_configuration(self.logger, flags), ConfigurationStruct())


if __name__ == '__main__':
    unittest.main()
