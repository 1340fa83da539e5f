# Copyright (C) 2024 IOTech Ltd
# SPDX-License-Identifier: Apache-2.0

"""
Runs the registered checks and assembles the report.
"""

from typing import Optional

from .checks import CHECKS, VerifyContext, run_check
from ..contracts import errors
from ..contracts.dtos.check import VerifyPayload


def run_suite(ctx: VerifyContext, names: Optional[list[str]] = None) -> VerifyPayload:
    """
    Runs the named checks, or all registered checks in registration order, and reports each.

    Raises:
        CommonPolygonError: CONTRACT_INVALID for an unknown check name or an empty selection.
    """
    selected = list(CHECKS) if names is None else names
    unknown = [name for name in selected if name not in CHECKS]
    if unknown or not selected:
        raise errors.new_common_error(errors.ErrKind.CONTRACT_INVALID,
                                      f"unknown or empty check selection: {unknown or selected}")
    ctx.logger.info(f"running {len(selected)} checks with n ≤ {ctx.n_max}, "
                    f"brute force n ≤ {ctx.oracle_max}")
    records = [run_check(name, ctx) for name in selected]
    failed = [record.name for record in records if not record.passed]
    if failed:
        ctx.logger.error(f"{len(failed)} of {len(records)} checks failed: {', '.join(failed)}")
    else:
        ctx.logger.info(f"all {len(records)} checks passed")
    return VerifyPayload(n_max=ctx.n_max, oracle_max=ctx.oracle_max, passed=not failed,
                         checks=records)
