# Copyright (C) 2024 IOTech Ltd
# SPDX-License-Identifier: Apache-2.0

"""
Stratum, Morse index and Hessian signatures of a degenerate configuration, and the brute-force
counts built on them.

Functions:
    classify(config: DegenerateConfig) -> GammaPair
    index_mu(config: DegenerateConfig) -> int
    signature_rho(config: DegenerateConfig) -> tuple[int, int]
    count_by_stratum(n: int, jobs: int = 1) -> dict[GammaPair, int]
    count_by_level(n: int, jobs: int = 1) -> dict[PiFraction, int]
"""

from collections import Counter

from .words import (DegenerateConfig, admissible_windings, forward_histogram, DEFAULT_BUDGET,
                    DEFAULT_PARTITION_BITS)
from ..arith import PiFraction, BigCount
from ..contracts.logger import Logger
from ..spectrum import GammaPair


def classify(config: DegenerateConfig) -> GammaPair:
    """
    The pair (|f − b|, 2|w|) of Γₙ the configuration belongs to.
    """
    return GammaPair(abs(config.word.f - config.word.b), 2 * abs(config.winding))


def signature_rho(config: DegenerateConfig) -> tuple[int, int]:
    """
    The signature (b + 2w − 1, f − 2w − 1) of the Hessian of the free-end distance function of the
    open chain; its components sum to n − 2.
    """
    f, b, w = config.word.f, config.word.b, config.winding
    return b + 2 * w - 1, f - 2 * w - 1


def index_mu(config: DegenerateConfig) -> int:
    """
    The Morse index of μ at the configuration: b + 2w − 1 when w > 0, f − 2w − 1 when w < 0, i.e.
    the first component of `signature_rho` for positive winding and the second for negative.
    """
    first, second = signature_rho(config)
    return first if config.winding > 0 else second


def _tally(n: int, jobs: int, budget: int, partition_bits: int, logger: Logger) -> Counter:
    """
    Expands the forward-side histogram of all words into configuration counts per pair.
    """
    counts: Counter = Counter()
    histogram = forward_histogram(n, jobs, budget, partition_bits, logger)
    for f, words in enumerate(histogram):
        if not words:
            continue
        delta = 2 * f - n
        for winding in admissible_windings(delta):
            counts[GammaPair(abs(delta), 2 * abs(winding))] += words
    return counts


def count_by_stratum(n: int, jobs: int = 1, budget: int = DEFAULT_BUDGET,
                     partition_bits: int = DEFAULT_PARTITION_BITS,
                     logger: Logger = None) -> dict[GammaPair, BigCount]:
    """
    The number of degenerate configurations in each stratum, sorted by pair.
    """
    counts = _tally(n, jobs, budget, partition_bits, logger)
    return {pair: counts[pair] for pair in sorted(counts)}


def count_by_level(n: int, jobs: int = 1, budget: int = DEFAULT_BUDGET,
                   partition_bits: int = DEFAULT_PARTITION_BITS,
                   logger: Logger = None) -> dict[PiFraction, BigCount]:
    """
    The number of degenerate configurations at each realized side length, ascending.
    """
    levels: Counter = Counter()
    for pair, count in count_by_stratum(n, jobs, budget, partition_bits, logger).items():
        levels[pair.value] += count
    return {value: levels[value] for value in sorted(levels)}
