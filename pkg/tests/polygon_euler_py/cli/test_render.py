# Copyright (C) 2024 IOTech Ltd
# SPDX-License-Identifier: Apache-2.0

import csv
import io
import json
import unittest
from fractions import Fraction
from unittest.mock import MagicMock

from src.polygon_euler_py.cli.commands import cmd_asymptotics, cmd_chi, cmd_omega, cmd_spectrum
from src.polygon_euler_py.cli.render import render
from src.polygon_euler_py.contracts.dtos.common.base import from_json
from src.polygon_euler_py.contracts.errors import CommonPolygonError, ErrKind


class TestRender(unittest.TestCase):

    def test_spectrum_csv(self):
        rows = list(csv.reader(io.StringIO(render(cmd_spectrum(5), "csv"))))
        self.assertEqual(rows[0], ["level", "value", "alpha", "beta", "count", "index"])
        self.assertEqual(rows[1:], [["1", "2/5", "5", "2", "1", "1"],
                                    ["2", "2/3", "3", "2", "5", "2"],
                                    ["3", "4/5", "5", "4", "1", "3"]])

    def test_spectrum_plain(self):
        text = render(cmd_spectrum(5), "plain")
        self.assertIn("ζ_2 = 2/3·π", text)
        self.assertIn("Φ(5)=3  |U_5|=7  ψ(5)=2", text)

    def test_json_round_trip(self):
        result = cmd_chi(7, "1/2", None, Fraction(1, 10 ** 9), MagicMock())
        text = render(result, "json")
        self.assertEqual(from_json(text), result.record)
        data = json.loads(text)
        self.assertEqual(data["command"], "chi")
        self.assertEqual(data["payload"]["chi"], "32")

    def test_omega_plain_and_csv(self):
        result = cmd_omega(7)
        self.assertIn("Ω_2 = 32  [low: ok]", render(result, "plain"))
        rows = list(csv.reader(io.StringIO(render(result, "csv"))))
        self.assertEqual(rows[0], ["i", "omega", "closed_form", "matched"])
        self.assertEqual(rows[-1], ["5", "2", "high", "true"])

    def test_asymptotics_csv(self):
        rows = list(csv.reader(io.StringIO(render(cmd_asymptotics(99, 4), "csv"))))
        self.assertEqual(rows[0][0], "n")
        self.assertEqual(rows[-1][0], "99")
        self.assertAlmostEqual(float(rows[-1][5]), 1.0, delta=0.1)

    def test_unknown_format(self):
        with self.assertRaises(CommonPolygonError) as ctx:
            render(cmd_spectrum(3), "xml")
        self.assertEqual(ctx.exception.err_kind, ErrKind.CONTRACT_INVALID)


if __name__ == '__main__':
    unittest.main()
