# Copyright (C) 2024 IOTech Ltd
# SPDX-License-Identifier: Apache-2.0

"""
Degenerate polygons as forward/back-track words.

A degenerate n-gon lies on a great circle oriented so that its last side runs backwards. Each side
is then forward-track or back-track, and a word with f forward and b back sides closes up at side
length a exactly when a(f − b) = 2πw for an integer winding number w. Every pair (word, w) with
0 < 2|w| < |f − b| and sign(w) = sign(f − b) is one critical point of μ, at a = (2|w|/|f − b|)·π.

Words are enumerated as bitmasks over the first n − 1 sides (bit set = forward). The counting
entry points split the masks by their top bits and tally each partition in its own process.

Classes:
    Track: FORWARD or BACK.
    TrackWord: A word of n tracks ending in BACK.
    DegenerateConfig: A word with a winding number.

Functions:
    word_from_mask(n: int, mask: int) -> TrackWord
    iter_configs(n: int) -> Iterator[DegenerateConfig]
    enumerate_configs(n: int) -> list[DegenerateConfig]
    forward_histogram(n: int, jobs: int = 1) -> list[int]
"""

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from ..arith import PiFraction, reduce
from ..contracts import errors
from ..contracts.logger import Logger
from ..spectrum import require_odd_n

DEFAULT_BUDGET = 25
DEFAULT_PARTITION_BITS = 4


class Track(Enum):
    """ Orientation of one side relative to the oriented great circle. """
    FORWARD = "F"
    BACK = "B"


@dataclass(frozen=True)
class TrackWord:
    """
    The tracks of the n sides of a degenerate polygon.

    Attributes:
        tracks (tuple[Track, ...]): Side i is forward-track or back-track; the last is BACK.
    """
    tracks: tuple[Track, ...]

    def __post_init__(self):
        if not self.tracks or self.tracks[-1] is not Track.BACK:
            raise errors.new_common_error(errors.ErrKind.CONTRACT_INVALID,
                                          "the last side of a track word must be back-track")
        if (self.f - self.b) % 2 == 0:
            raise errors.new_common_error(errors.ErrKind.CONTRACT_INVALID,
                                          f"word {self} has even f − b; n must be odd")

    @property
    def n(self) -> int:
        """ The number of sides. """
        return len(self.tracks)

    @property
    def f(self) -> int:
        """ The number of forward-track sides. """
        return sum(1 for item in self.tracks if item is Track.FORWARD)

    @property
    def b(self) -> int:
        """ The number of back-track sides. """
        return self.n - self.f

    def __str__(self):
        return "".join(item.value for item in self.tracks)


@dataclass(frozen=True)
class DegenerateConfig:
    """
    A degenerate polygon: a track word with a winding number w.

    Attributes:
        word (TrackWord): The tracks.
        winding (int): w, non-zero with the sign of f − b and 0 < 2|w| < |f − b|.
    """
    word: TrackWord
    winding: int

    def __post_init__(self):
        delta = self.word.f - self.word.b
        if self.winding == 0 or (self.winding > 0) != (delta > 0) \
                or not 2 * abs(self.winding) < abs(delta):
            raise errors.new_common_error(
                errors.ErrKind.CONTRACT_INVALID,
                f"winding {self.winding} is not admissible for f − b = {delta}")

    @property
    def realized_a(self) -> PiFraction:
        """ The side length (2|w|/|f − b|)·π at which the word closes up. """
        return reduce(2 * abs(self.winding), abs(self.word.f - self.word.b))


def word_from_mask(n: int, mask: int) -> TrackWord:
    """
    Builds the word whose side i (0-based, i < n − 1) is forward exactly when bit i of mask is set;
    side n − 1 is back-track.
    """
    tracks = tuple(Track.FORWARD if mask >> i & 1 else Track.BACK for i in range(n - 1))
    return TrackWord(tracks + (Track.BACK,))


def admissible_windings(delta: int) -> range:
    """
    The winding numbers w with sign(w) = sign(delta) and 0 < 2|w| < |delta|.
    """
    count = (abs(delta) - 1) // 2
    if delta > 0:
        return range(1, count + 1)
    return range(-1, -count - 1, -1)


def _require_budget(n: int, budget: int):
    require_odd_n(n)
    if n > budget:
        raise errors.new_common_error(errors.ErrKind.LIMIT_EXCEEDED,
                                      f"brute force is limited to n ≤ {budget}, got {n}")


def iter_configs(n: int, budget: int = DEFAULT_BUDGET) -> Iterator[DegenerateConfig]:
    """
    Yields every degenerate configuration of n sides, word by word in mask order.
    """
    _require_budget(n, budget)
    for mask in range(1 << (n - 1)):
        word = word_from_mask(n, mask)
        for winding in admissible_windings(word.f - word.b):
            yield DegenerateConfig(word, winding)


def enumerate_configs(n: int, budget: int = DEFAULT_BUDGET) -> list[DegenerateConfig]:
    """
    Returns every degenerate configuration of n sides; its length must equal |Uₙ|.
    """
    return list(iter_configs(n, budget))


def _partition_histogram(n: int, prefix: int, low_bits: int) -> list[int]:
    """
    Tallies the words with the given top bits by their number of forward sides.
    """
    histogram = [0] * n
    base = prefix.bit_count()
    for low in range(1 << low_bits):
        histogram[base + low.bit_count()] += 1
    return histogram


def forward_histogram(n: int, jobs: int = 1, budget: int = DEFAULT_BUDGET,
                      partition_bits: int = DEFAULT_PARTITION_BITS,
                      logger: Logger = None) -> list[int]:
    """
    Returns h with h[f] = the number of words having f forward sides, by visiting every word.

    The masks are split by their top `partition_bits` bits; with jobs ≠ 1 the partitions are
    tallied in a process pool (jobs = 0 means one worker per available core).
    """
    _require_budget(n, budget)
    bits = min(partition_bits, n - 1)
    low_bits = n - 1 - bits
    prefixes = range(1 << bits)
    workers = jobs if jobs > 0 else (os.cpu_count() or 1)

    if workers == 1:
        partials = [_partition_histogram(n, prefix, low_bits) for prefix in prefixes]
    else:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            partials = list(executor.map(_partition_histogram, [n] * len(prefixes),
                                         prefixes, [low_bits] * len(prefixes)))
    histogram = [sum(column) for column in zip(*partials)]
    if logger is not None:
        logger.debug(f"n={n}: visited {sum(histogram)} words in {len(partials)} partitions "
                     f"with {workers} worker(s)")
    return histogram
