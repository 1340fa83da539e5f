# Copyright (C) 2024 IOTech Ltd
# SPDX-License-Identifier: Apache-2.0
"""
The critical spectrum of μ: Γₙ, the (value, count, index) strata, the sorted
set of critical values, and the counting functions derived from them.
"""
from .gamma import GammaPair, require_odd_n, enumerate_gamma, coprime_gamma
from .levels import (CriticalStratum, Level, Spectrum, stratum, gamma_arrays, build_spectrum,
                     phi_capital,
                     count_critical_points, count_critical_points_by_strata)
from .halfpi import HALF, HalfPiPosition, psi, theta_set, half_pi_interval, half_pi_position
from .edges import EdgeSide, EdgeValue, edge_bounds, edge_range, zeta_edge
