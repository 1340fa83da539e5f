# Copyright (C) 2024 IOTech Ltd
# SPDX-License-Identifier: Apache-2.0

import math
import unittest

import numpy as np

from src.polygon_euler_py.contracts.errors import CommonPolygonError
from src.polygon_euler_py.oracle import (Track, TrackWord, DegenerateConfig, SpherePoint,
                                         RealizationReport, spherical_distance, realize_on_circle,
                                         check_realization, iter_configs)

F, B = Track.FORWARD, Track.BACK


class TestRealize(unittest.TestCase):

    def test_sphere_point_must_be_unit(self):
        with self.assertRaises(CommonPolygonError):
            SpherePoint(1.0, 1.0, 0.0)
        np.testing.assert_allclose(SpherePoint(0.0, 0.0, 1.0).as_array(), [0.0, 0.0, 1.0])

    def test_spherical_distance(self):
        east = SpherePoint(1.0, 0.0, 0.0)
        north = SpherePoint(0.0, 0.0, 1.0)
        self.assertAlmostEqual(spherical_distance(east, north), math.pi / 2)
        self.assertEqual(spherical_distance(east, east), 0.0)

    def test_triangle_on_circle(self):
        config = DegenerateConfig(TrackWord((B, B, B)), -1)
        points = realize_on_circle(config)
        longitudes = [math.atan2(point.y, point.x) for point in points]
        expected = [0.0, -2 * math.pi / 3, -4 * math.pi / 3 + 2 * math.pi]
        np.testing.assert_allclose(longitudes, expected, atol=1e-12)
        self.assertTrue(all(point.z == 0.0 for point in points))

    def test_check_realization(self):
        config = DegenerateConfig(TrackWord((F, F, F, F, B)), 1)
        report = check_realization(config)
        self.assertEqual(len(report.side_errors), 5)
        self.assertTrue(report.passed())

    def test_all_configurations_close_up(self):
        for n in range(3, 12, 2):
            for config in iter_configs(n):
                with self.subTest(n=n, word=str(config.word), winding=config.winding):
                    self.assertTrue(check_realization(config).passed())

    def test_report_fails_beyond_tolerance(self):
        report = RealizationReport(side_errors=[0.0, 1e-6], winding_error=0.0)
        self.assertFalse(report.passed())
        self.assertTrue(report.passed(tolerance=1e-5))
        self.assertFalse(RealizationReport(winding_error=1.0).passed())


if __name__ == '__main__':
    unittest.main()
