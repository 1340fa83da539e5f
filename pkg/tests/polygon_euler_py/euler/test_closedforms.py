# Copyright (C) 2024 IOTech Ltd
# SPDX-License-Identifier: Apache-2.0

import os
import unittest
from unittest.mock import patch

from src.polygon_euler_py.contracts.errors import CommonPolygonError, ErrKind
from src.polygon_euler_py.euler import (omega_closed_low, omega_closed_high, sigma_sequence,
                                        tau_sequence, recurrence_check, example_values,
                                        floor_half_binomial_sum, half_pi_sums, chi_half_pi,
                                        omega_table)
from src.polygon_euler_py.spectrum import edge_bounds


class TestClosedForms(unittest.TestCase):

    def test_closed_low_of_seven(self):
        self.assertEqual([omega_closed_low(7, i) for i in range(3)], [20, 18, 32])

    def test_closed_high_of_seven(self):
        self.assertEqual([omega_closed_high(7, i) for i in range(3)], [2, -12, 30])

    def test_closed_forms_match_descent(self):
        for n in range(3, 100, 2):
            table = omega_table(n)
            p, q = edge_bounds(n)
            for i in range(min(p, len(table) - 1) + 1):
                with self.subTest(n=n, side="low", i=i):
                    self.assertEqual(omega_closed_low(n, i), table[i])
            for i in range(min(q, len(table) - 1) + 1):
                with self.subTest(n=n, side="high", i=i):
                    self.assertEqual(omega_closed_high(n, i), table[-1 - i])

    def test_closed_forms_reject_out_of_range(self):
        with self.assertRaises(CommonPolygonError) as ctx:
            omega_closed_low(7, 3)
        self.assertEqual(ctx.exception.err_kind, ErrKind.CONTRACT_INVALID)
        with self.assertRaises(CommonPolygonError):
            omega_closed_high(7, -1)

    def test_sigma_and_tau(self):
        self.assertEqual(sigma_sequence(7, 3), [20, 18, 32])
        self.assertEqual(tau_sequence(7, 3), [2, -12, 30])
        self.assertEqual(sigma_sequence(5, 1), [-6])

    def test_recurrence_check(self):
        for n in range(3, 80, 2):
            report = recurrence_check(n)
            with self.subTest(n=n):
                self.assertTrue(report.passed, report.mismatches)
                self.assertGreater(report.checked, 0)

    def test_recurrence_check_reports_mismatch(self):
        with patch("src.polygon_euler_py.euler.closedforms.omega_table",
                   return_value=[20, 18, 33, 30, -12, 2]):
            report = recurrence_check(7)
        self.assertFalse(report.passed)
        self.assertIn("Ω_2=33", report.mismatches[0])

    def test_example_values(self):
        values = example_values(7)
        self.assertEqual(values["Ω_0"], (20, 20))
        self.assertEqual(values["Ω_(Φ-3)"], (30, 30))
        self.assertNotIn("Ω_(Φ-3)", example_values(5))
        for n in range(5, 80, 2):
            for label, (formula, descent) in example_values(n).items():
                with self.subTest(n=n, label=label):
                    self.assertEqual(formula, descent)

    def test_floor_half_binomial_sum(self):
        for m in range(1, 200):
            with self.subTest(m=m):
                self.assertEqual(floor_half_binomial_sum(m), 2 ** (2 * m - 2))

    def test_half_pi(self):
        self.assertEqual(chi_half_pi(5), -8)
        self.assertEqual(chi_half_pi(7), 32)
        for n in range(3, 100, 2):
            m = (n - 1) // 2
            sums = half_pi_sums(n)
            expected = (-1) ** (m + 1) * 2 ** (2 * m - 1)
            with self.subTest(n=n):
                self.assertEqual(chi_half_pi(n), expected)
                self.assertEqual({sums.by_theta_count, sums.by_ceiling_half, sums.by_floor_half},
                                 {expected})

    def test_half_pi_disagreement_raises(self):
        with patch("src.polygon_euler_py.euler.closedforms.half_pi_sums") as mock_sums:
            mock_sums.return_value.by_theta_count = 0
            mock_sums.return_value.by_ceiling_half = 32
            mock_sums.return_value.by_floor_half = 32
            with self.assertRaises(CommonPolygonError) as ctx:
                chi_half_pi(7)
        self.assertEqual(ctx.exception.err_kind, ErrKind.VERIFICATION_FAILED)

    @unittest.skipUnless(os.environ.get("POLYGON_EXTENDED_TESTS"), "extended range")
    def test_half_pi_up_to_999(self):
        for n in range(101, 1000, 2):
            m = (n - 1) // 2
            with self.subTest(n=n):
                self.assertEqual(chi_half_pi(n), (-1) ** (m + 1) * 2 ** (2 * m - 1))


if __name__ == '__main__':
    unittest.main()
