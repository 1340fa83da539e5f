# Copyright (C) 2024 IOTech Ltd
# SPDX-License-Identifier: Apache-2.0
"""
Exact arithmetic: angles as rational multiples of π, binomials and totients.
"""
from .pifraction import (PiFraction, Ordering, ZERO, reduce, from_fraction, compare, midpoint,
                         mediant)
from .combinatorics import BigCount, binomial, central_binomial
from .totient import (euler_totient, totient_sieve, legendre_totient, psi_capital,
                      psi_capital_mobius, mobius)
