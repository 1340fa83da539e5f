# Copyright (C) 2024 IOTech Ltd
# SPDX-License-Identifier: Apache-2.0

import unittest
from fractions import Fraction

from src.polygon_euler_py.arith import PiFraction
from src.polygon_euler_py.cli.angles import parse_angle
from src.polygon_euler_py.contracts.errors import CommonPolygonError, ErrKind


class TestParseAngle(unittest.TestCase):

    def test_exact_fractions(self):
        tests = [
            ("half", "1/2", PiFraction(1, 2)),
            ("reduced on parse", "6/9", PiFraction(2, 3)),
            ("spaces", " 4 / 7 ", PiFraction(4, 7)),
        ]
        for name, text, expected in tests:
            with self.subTest(name=name):
                self.assertEqual(parse_angle(text), expected)

    def test_decimal_snapping(self):
        self.assertEqual(parse_angle("0.5", 1000), PiFraction(1, 2))
        self.assertEqual(parse_angle("0.333333333333", 10), PiFraction(1, 3))
        self.assertEqual(parse_angle("0.4", 7), PiFraction(2, 5))

    def test_snap_tolerance(self):
        self.assertEqual(parse_angle("0.3333333", 10, Fraction(1, 10 ** 6)), PiFraction(1, 3))
        with self.assertRaises(CommonPolygonError) as ctx:
            parse_angle("0.3333333", 10)
        self.assertEqual(ctx.exception.err_kind, ErrKind.SNAP_FAILED)
        self.assertEqual(ctx.exception.exit_code(), 3)

    def test_invalid_angles(self):
        tests = [
            ("decimal without snap-den", "0.5", None),
            ("zero denominator", "1/0", None),
            ("not below π", "3/2", None),
            ("exactly π", "1/1", None),
            ("zero", "0/5", None),
            ("negative", "-1/2", None),
            ("text", "half", 100),
            ("non-positive snap-den", "0.5", 0),
            ("snaps to zero", "0.00000000001", 10),
        ]
        for name, text, snap_den in tests:
            with self.subTest(name=name):
                with self.assertRaises(CommonPolygonError) as ctx:
                    parse_angle(text, snap_den)
                self.assertEqual(ctx.exception.err_kind, ErrKind.CONTRACT_INVALID)
                self.assertEqual(ctx.exception.exit_code(), 2)


if __name__ == '__main__':
    unittest.main()
