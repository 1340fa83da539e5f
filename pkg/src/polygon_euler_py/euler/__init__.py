# Copyright (C) 2024 IOTech Ltd
# SPDX-License-Identifier: Apache-2.0
"""
The Euler characteristic of Mₙ(a) by Morse surgery descent, and its closed forms.
"""
from .descent import (PositionKind, AnglePosition, Contribution, ChiResult, LevelChi, EMPTY_CHI,
                      locate, chi, omega, sample_point, chi_table, omega_table, ascent_check)
from .closedforms import (omega_closed_low, omega_closed_high, sigma_sequence, tau_sequence,
                          RecurrenceReport, recurrence_check, example_values,
                          floor_half_binomial_sum, HalfPiSums, half_pi_sums, chi_half_pi)
