# Copyright (C) 2024 IOTech Ltd
# SPDX-License-Identifier: Apache-2.0
"""
Brute-force enumeration of degenerate polygons, independent of the spectrum formulas.
"""
from .words import (Track, TrackWord, DegenerateConfig, DEFAULT_BUDGET, DEFAULT_PARTITION_BITS,
                    word_from_mask, admissible_windings, iter_configs, enumerate_configs,
                    forward_histogram)
from .signature import classify, index_mu, signature_rho, count_by_stratum, count_by_level
from .realize import (SpherePoint, RealizationReport, spherical_distance, realize_on_circle,
                      check_realization)
from .jset import JSetCheck, j_set, j_set_count, k_set, g_map, check_j_set
