# Copyright (C) 2024 IOTech Ltd
# SPDX-License-Identifier: Apache-2.0

import io
import json
import os
import tempfile
import unittest
from unittest.mock import patch

from src.polygon_euler_py.cli import main
from src.polygon_euler_py.contracts import errors

RES = os.path.join(os.path.dirname(__file__), "..", "..", "..", "res")


def _failing_check(ctx, tally):
    tally.expect(False, lambda: "injected mismatch")


@patch.dict('os.environ', {}, clear=True)
class TestMain(unittest.TestCase):

    def run_main(self, *argv: str) -> tuple[int, str, str]:
        with patch('sys.stdout', new_callable=io.StringIO) as stdout, \
                patch('sys.stderr', new_callable=io.StringIO) as stderr:
            code = main(list(argv) + ['-c', RES, '--log-level', 'ERROR'])
        return code, stdout.getvalue(), stderr.getvalue()

    def test_spectrum(self):
        code, out, _ = self.run_main('spectrum', '--n', '5')
        self.assertEqual(code, errors.EXIT_OK)
        self.assertIn("|U_5|=7", out)

    def test_even_n_is_invalid_argument(self):
        code, out, err = self.run_main('spectrum', '--n', '4')
        self.assertEqual(code, errors.EXIT_INVALID_ARGUMENT)
        self.assertEqual(out, "")
        self.assertIn("error: n must be an odd integer", err)

    def test_usage_error_is_invalid_argument(self):
        code, _, err = self.run_main('chi', '--n', '7')
        self.assertEqual(code, errors.EXIT_INVALID_ARGUMENT)
        self.assertIn("--a", err)

    def test_chi_decimal(self):
        code, out, _ = self.run_main('chi', '--n', '7', '--a', '0.5', '--snap-den', '1000',
                                     '--format', 'json')
        self.assertEqual(code, errors.EXIT_OK)
        data = json.loads(out)
        self.assertEqual(data["payload"]["chi"], "32")
        self.assertEqual(data["payload"]["a"], {"num": 1, "den": 2})
        self.assertEqual(data["schema_version"], "1.0")

    def test_snap_failure(self):
        code, _, err = self.run_main('chi', '--n', '7', '--a', '0.3333333', '--snap-den', '10')
        self.assertEqual(code, errors.EXIT_SNAP_FAILED)
        self.assertIn("error:", err)

    def test_oracle_over_budget(self):
        code, _, _ = self.run_main('oracle', '--n', '27')
        self.assertEqual(code, errors.EXIT_INVALID_ARGUMENT)

    def test_oracle_csv(self):
        code, out, _ = self.run_main('oracle', '--n', '5', '--jobs', '1', '--format', 'csv')
        self.assertEqual(code, errors.EXIT_OK)
        self.assertIn('stratum,"(3,2)",5,5,true', out)

    def test_verify_failure_exits_one(self):
        with patch.dict('src.polygon_euler_py.verify.checks.CHECKS',
                        {'test.failing': _failing_check}):
            code, out, _ = self.run_main('verify', '--n-max', '5', '--oracle-max', '3',
                                         '--jobs', '1')
        self.assertEqual(code, errors.EXIT_VERIFICATION_FAILED)
        self.assertIn("FAILED test.failing", out)

    def test_verify_passes(self):
        code, out, _ = self.run_main('verify', '--n-max', '7', '--oracle-max', '5', '--jobs', '1')
        self.assertEqual(code, errors.EXIT_OK)
        self.assertNotIn("FAILED", out)

    def test_default_format_from_environment(self):
        with patch.dict('os.environ', {'OUTPUT_DEFAULTFORMAT': 'json'}):
            code, out, _ = self.run_main('omega', '--n', '5')
        self.assertEqual(code, errors.EXIT_OK)
        self.assertEqual([entry["value"] for entry in json.loads(out)["payload"]["entries"]],
                         ["-6", "-8", "2"])

    def test_invalid_configuration(self):
        with tempfile.TemporaryDirectory() as directory:
            with open(os.path.join(directory, "configuration.yaml"), "w",
                      encoding="utf-8") as file:
                file.write("Writable:\n  LogLevel: LOUD\n")
            with patch('sys.stdout', new_callable=io.StringIO), \
                    patch('sys.stderr', new_callable=io.StringIO) as stderr:
                code = main(['spectrum', '--n', '5', '-c', directory])
        self.assertEqual(code, errors.EXIT_VERIFICATION_FAILED)
        self.assertIn("Writable.LogLevel", stderr.getvalue())

    def test_help(self):
        with patch('sys.stdout', new_callable=io.StringIO) as stdout:
            code = main(['--help'])
        self.assertEqual(code, errors.EXIT_OK)
        self.assertIn("spectrum", stdout.getvalue())


if __name__ == '__main__':
    unittest.main()
