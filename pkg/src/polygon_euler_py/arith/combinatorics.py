# Copyright (C) 2024 IOTech Ltd
# SPDX-License-Identifier: Apache-2.0
"""
Exact binomial coefficients. Counts are plain Python integers, which never overflow.
"""
import math

BigCount = int


def binomial(n: int, k: int) -> BigCount:
    """
    Returns C(n, k), or 0 when k < 0 or k > n.
    """
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def central_binomial(m: int) -> BigCount:
    """ Returns C(2m, m). """
    return math.comb(2 * m, m)
