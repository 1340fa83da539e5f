# Copyright (C) 2024 IOTech Ltd
# SPDX-License-Identifier: Apache-2.0

import os
import time
import unittest

from src.polygon_euler_py.arith import PiFraction, ZERO, reduce
from src.polygon_euler_py.contracts.errors import CommonPolygonError, ErrKind
from src.polygon_euler_py.spectrum import (GammaPair, stratum, build_spectrum, phi_capital,
                                           count_critical_points, enumerate_gamma,
                                           count_critical_points_by_strata, gamma_arrays)


class TestLevels(unittest.TestCase):

    def test_stratum(self):
        tests = [
            ("n=3 only pair", 3, GammaPair(3, 2), PiFraction(2, 3), 1, 1),
            ("n=5 (3,2)", 5, GammaPair(3, 2), PiFraction(2, 3), 5, 2),
            ("n=5 (5,2)", 5, GammaPair(5, 2), PiFraction(2, 5), 1, 1),
            ("n=5 (5,4)", 5, GammaPair(5, 4), PiFraction(4, 5), 1, 3),
            ("n=7 (3,2)", 7, GammaPair(3, 2), PiFraction(2, 3), 21, 3),
            ("n=9 (9,6)", 9, GammaPair(9, 6), PiFraction(2, 3), 1, 5),
        ]
        for name, n, pair, value, count, index in tests:
            with self.subTest(name=name):
                item = stratum(n, pair)
                self.assertEqual((item.value, item.count, item.index), (value, count, index))

    def test_stratum_rejects_pair_outside_gamma(self):
        with self.assertRaises(CommonPolygonError) as ctx:
            stratum(5, GammaPair(7, 2))
        self.assertEqual(ctx.exception.err_kind, ErrKind.CONTRACT_INVALID)

    def test_increments(self):
        item = stratum(7, GammaPair(5, 4))
        self.assertEqual(item.index, 4)
        self.assertEqual(item.crossing_increment(), -14)
        self.assertEqual(item.landing_increment(), -7)

    def test_spectrum_of_five(self):
        built = build_spectrum(5)
        self.assertEqual(built.values, [PiFraction(2, 5), PiFraction(2, 3), PiFraction(4, 5)])
        self.assertEqual(built.level_count(), 3)
        self.assertEqual(built.total_count(), 7)
        self.assertEqual(built.zeta(0), ZERO)
        self.assertEqual(built.zeta(2), PiFraction(2, 3))
        self.assertEqual(built.find(PiFraction(4, 5)), 3)
        self.assertIsNone(built.find(PiFraction(1, 2)))
        self.assertEqual(built.intervals_below(PiFraction(1, 2)), 1)
        with self.assertRaises(CommonPolygonError):
            built.zeta(4)

    def test_spectrum_of_seven(self):
        values = build_spectrum(7).values
        self.assertEqual(values, [PiFraction(2, 7), PiFraction(2, 5), PiFraction(4, 7),
                                  PiFraction(2, 3), PiFraction(4, 5), PiFraction(6, 7)])

    def test_shared_level(self):
        built = build_spectrum(9)
        level = built.levels[built.find(PiFraction(2, 3)) - 1]
        found = {(item.pair.alpha, item.pair.beta): item.index for item in level.strata}
        self.assertEqual(found, {(3, 2): 4, (9, 6): 5})
        self.assertEqual(level.coprime_stratum().pair, GammaPair(3, 2))
        self.assertEqual(level.total_count(), 84 + 1)

    def test_spectrum_strictly_increasing(self):
        for n in range(3, 61, 2):
            values = build_spectrum(n).values
            with self.subTest(n=n):
                self.assertTrue(all(low < high for low, high in zip(values, values[1:])))

    def test_phi_capital(self):
        self.assertEqual([phi_capital(n) for n in (3, 5, 7, 9)], [1, 3, 6, 9])
        for n in range(3, 100, 2):
            with self.subTest(n=n):
                self.assertEqual(phi_capital(n), build_spectrum(n).level_count())

    def test_count_critical_points(self):
        self.assertEqual([count_critical_points(n) for n in (3, 5, 7)], [1, 7, 38])
        for n in range(3, 100, 2):
            with self.subTest(n=n):
                self.assertEqual(count_critical_points(n), count_critical_points_by_strata(n))
                self.assertEqual(count_critical_points(n), build_spectrum(n).total_count())

    def test_gamma_arrays_follow_enumeration(self):
        for n in (3, 5, 9, 21):
            alpha, beta = gamma_arrays(n)
            with self.subTest(n=n):
                self.assertEqual([GammaPair(int(a), int(b)) for a, b in zip(alpha, beta)],
                                 enumerate_gamma(n))

    def test_levels_are_built_once(self):
        built = build_spectrum(11)
        self.assertIs(built.level(4), built.level(4))
        self.assertIs(built.levels[3], built.level(4))
        for i in (0, built.level_count() + 1):
            with self.subTest(i=i):
                with self.assertRaises(CommonPolygonError):
                    built.level(i)

    def test_search_is_exact_near_a_level(self):
        built = build_spectrum(7)
        scale = 10 ** 15
        tests = [
            ("just above 4/7", reduce(4 * scale + 1, 7 * scale), 3),
            ("just below 4/7", reduce(4 * scale - 1, 7 * scale), 2),
            ("just above the top", reduce(6 * scale + 1, 7 * scale), 6),
            ("just below the bottom", reduce(2 * scale - 1, 7 * scale), 0),
        ]
        for name, value, below in tests:
            with self.subTest(name=name):
                self.assertEqual(built.intervals_below(value), below)
                self.assertIsNone(built.find(value))

    def test_index_parity_ignores_beta(self):
        for n in range(3, 100, 2):
            m = (n - 1) // 2
            parities = {}
            for item in build_spectrum(n).strata():
                parities.setdefault(item.pair.alpha, set()).add(item.index % 2)
            with self.subTest(n=n):
                self.assertEqual(parities, {2 * s + 1: {(m - s - 1) % 2} for s in range(1, m + 1)})

    @unittest.skipUnless(os.environ.get("POLYGON_EXTENDED_TESTS"), "extended range")
    def test_counts_up_to_999(self):
        started = time.perf_counter()
        for n in range(3, 1000, 2):
            built = build_spectrum(n)
            with self.subTest(n=n):
                self.assertEqual(built.level_count(), phi_capital(n))
                self.assertEqual(built.total_count(), count_critical_points(n))
        self.assertLess(time.perf_counter() - started, 30)


if __name__ == '__main__':
    unittest.main()
