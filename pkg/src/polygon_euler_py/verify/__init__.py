# Copyright (C) 2024 IOTech Ltd
# SPDX-License-Identifier: Apache-2.0
"""
The cross-check suite: every invariant of the engine as a named check.
"""
from .checks import CHECKS, VerifyContext, check, check_names, run_check
from .suite import run_suite
