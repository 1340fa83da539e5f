# Copyright (C) 2024 IOTech Ltd
# SPDX-License-Identifier: Apache-2.0

"""
Exact Morse theory of regular spherical polygon spaces.

For odd n = 2m + 1 the package enumerates the critical spectrum of the side-length function μ on
the space of equilateral spherical n-gons, computes the Euler characteristic of every level set
Mₙ(a) by surgery descent, and cross-checks the results against closed forms and a brute-force
enumeration of degenerate polygons.

Modules:
    arith: Exact angles, binomials and totients.
    spectrum: The critical strata, levels and edge values of μ.
    euler: The Euler characteristic by descent and its closed forms.
    oracle: Brute-force enumeration of degenerate polygons.
    verify: The named cross-check suite.
    bootstrap: Command line, environment and configuration handling.
    cli: The command front end.
    contracts: Errors, logger and output records.
"""

__all__ = ["arith", "spectrum", "euler", "oracle", "verify", "bootstrap", "cli", "contracts"]
