# Copyright (C) 2024 IOTech Ltd
# SPDX-License-Identifier: Apache-2.0

import os
import time
import unittest
from unittest.mock import MagicMock

from src.polygon_euler_py.arith import (PiFraction, ZERO, central_binomial, mediant, midpoint,
                                        reduce)
from src.polygon_euler_py.contracts.errors import CommonPolygonError, ErrKind
from src.polygon_euler_py.euler import (PositionKind, EMPTY_CHI, locate, chi, omega, sample_point,
                                        chi_table, omega_table, ascent_check)
from src.polygon_euler_py.spectrum import build_spectrum, phi_capital


class TestDescent(unittest.TestCase):

    def test_omega_tables(self):
        tests = [
            ("n=3", 3, [2]),
            ("n=5", 5, [-6, -8, 2]),
            ("n=7", 7, [20, 18, 32, 30, -12, 2]),
        ]
        for name, n, expected in tests:
            with self.subTest(name=name):
                self.assertEqual(omega_table(n), expected)
                self.assertEqual([omega(n, i) for i in range(len(expected))], expected)

    def test_chi_in_interval(self):
        result = chi(7, PiFraction(1, 2))
        self.assertEqual(result.chi, 32)
        self.assertIs(result.position.kind, PositionKind.INTERVAL)
        self.assertEqual(result.position.interval, 2)
        self.assertEqual(chi(5, PiFraction(1, 2)).chi, -8)
        self.assertEqual([item.increment for item in result.contributions], [2, -14, 42, 2])
        self.assertFalse(any(item.landing for item in result.contributions))

    def test_chi_on_critical_level(self):
        tests = [
            ("top level of five", 5, PiFraction(4, 5), 1),
            ("middle level of five", 5, PiFraction(2, 3), -3),
            ("lowest level of five", 5, PiFraction(2, 5), -7),
            ("n=7 at 2/3", 7, PiFraction(2, 3), 9),
        ]
        for name, n, a, expected in tests:
            with self.subTest(name=name):
                result = chi(n, a)
                self.assertEqual(result.chi, expected)
                self.assertIs(result.position.kind, PositionKind.AT_CRITICAL)
                self.assertTrue(result.contributions[-1].landing)

    def test_chi_above_top_level_is_empty(self):
        for n in range(3, 30, 2):
            top = build_spectrum(n).values[-1]
            a = reduce(top.num * (n + 1) + top.den * n, 2 * top.den * (n + 1))
            with self.subTest(n=n):
                self.assertGreater(a, top)
                self.assertEqual(chi(n, a).chi, EMPTY_CHI)
                self.assertEqual(chi(n, a).contributions, ())

    def test_chi_below_lowest_level(self):
        for n in range(3, 30, 2):
            m = (n - 1) // 2
            with self.subTest(n=n):
                self.assertEqual(chi(n, PiFraction(1, 2 * n)).chi,
                                 (-1) ** (m + 1) * central_binomial(m))

    def test_locate(self):
        self.assertEqual(locate(7, PiFraction(1, 100)).interval, 0)
        self.assertEqual(locate(7, PiFraction(99, 100)).interval, phi_capital(7))
        position = locate(7, PiFraction(4, 7))
        self.assertIs(position.kind, PositionKind.AT_CRITICAL)
        self.assertEqual(position.interval, 3)
        self.assertEqual(str(position), "at-critical ζ_3 = 4/7·π")

    def test_locate_rejects_zero(self):
        with self.assertRaises(CommonPolygonError) as ctx:
            locate(7, ZERO)
        self.assertEqual(ctx.exception.err_kind, ErrKind.CONTRACT_INVALID)

    def test_sample_point(self):
        self.assertEqual(sample_point(5, 0), PiFraction(1, 5))
        self.assertEqual(sample_point(5, 1), PiFraction(8, 15))
        with self.assertRaises(CommonPolygonError):
            sample_point(5, 3)

    def test_chi_table(self):
        rows = chi_table(5)
        self.assertEqual([(row.below, row.at, row.above) for row in rows],
                         [(-6, -7, -8), (-8, -3, 2), (2, 1, 0)])

    def test_ascent_matches_descent(self):
        self.assertEqual(ascent_check(5), [-6, -8, 2, 0])
        for n in range(3, 80, 2):
            rebuilt = ascent_check(n)
            with self.subTest(n=n):
                self.assertEqual(rebuilt[:-1], omega_table(n))
                self.assertEqual(rebuilt[-1], EMPTY_CHI)

    def test_omega_does_not_depend_on_the_sample(self):
        for n in range(3, 32, 2):
            built = build_spectrum(n)
            table = omega_table(n)
            for i, expected in enumerate(table):
                low, high = built.zeta(i), built.zeta(i + 1)
                with self.subTest(n=n, i=i):
                    self.assertEqual(chi(n, midpoint(low, high)).chi, expected)
                    self.assertEqual(chi(n, mediant(low, high)).chi, expected)

    def test_at_critical_is_halfway(self):
        for n in range(3, 100, 2):
            for row in chi_table(n):
                with self.subTest(n=n, level=str(row.value)):
                    self.assertEqual(2 * (row.at - row.above), row.below - row.above)
        for n in range(3, 26, 2):
            for row in chi_table(n):
                with self.subTest(n=n, level=str(row.value)):
                    self.assertEqual(chi(n, row.value).chi, row.at)

    def test_lowest_interval_up_to_199(self):
        for n in range(3, 200, 2):
            m = (n - 1) // 2
            with self.subTest(n=n):
                self.assertEqual(omega(n, 0), (-1) ** (m + 1) * central_binomial(m))

    def test_sphere_seed_up_to_199(self):
        self._check_sphere_seed(range(3, 200, 2))

    @unittest.skipUnless(os.environ.get("POLYGON_EXTENDED_TESTS"), "extended range")
    def test_sphere_seed_up_to_999(self):
        started = time.perf_counter()
        self._check_sphere_seed(range(3, 1000, 2))
        self.assertLess(time.perf_counter() - started, 10)

    def _check_sphere_seed(self, values: range):
        for n in values:
            top = phi_capital(n)
            with self.subTest(n=n):
                self.assertEqual(omega(n, top - 1), 2)
                self.assertEqual(chi(n, reduce(n, n + 1)).chi, EMPTY_CHI)

    def test_chi_logs_the_descent(self):
        logger = MagicMock()
        chi(5, PiFraction(1, 2), logger)
        self.assertEqual(logger.trace.call_count, 2)
        logger.debug.assert_called_once()


if __name__ == '__main__':
    unittest.main()
