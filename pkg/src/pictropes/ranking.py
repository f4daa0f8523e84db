"""Top-K tables, the derived percentages, and degree histograms."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import kernels
from .stats import quantile_sorted


@dataclass(frozen=True)
class RankingEntry:
    position: int
    name: str
    count: int


def _degrees(index) -> dict[str, int]:
    if hasattr(index, "degrees"):
        return index.degrees()
    return {name: (v if isinstance(v, int) else len(v)) for name, v in index.items()}


def top_k(index, k: int) -> list[RankingEntry]:
    """Highest-degree entries; ties go to the alphabetically first name.

    ``index`` is a dataset, a reverse index, or any mapping of name to
    either a count or a collection.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    degrees = _degrees(index)
    ordered = sorted(degrees.items(), key=lambda item: (-item[1], item[0]))[:k]
    return [RankingEntry(i, name, count) for i, (name, count) in enumerate(ordered, start=1)]


def spread_percent(ranking: Sequence[RankingEntry]) -> float:
    """Relative drop from the first to the last row: 100 * (top - bottom) / top."""
    if not ranking:
        raise ValueError("empty ranking")
    top, bottom = ranking[0].count, ranking[-1].count
    return 100.0 * (top - bottom) / top


def coverage_percent(trope: str, reverse, n_films: int) -> float:
    """Share of all films that use ``trope``."""
    tropes = reverse.tropes if hasattr(reverse, "tropes") else reverse
    if trope not in tropes:
        raise KeyError(f"unknown trope {trope!r}")
    if n_films < 1:
        raise ValueError("n_films must be positive")
    films = tropes[trope]
    count = films if isinstance(films, int) else len(films)
    return 100.0 * count / n_films


@dataclass(frozen=True)
class HistogramBin:
    lower: float
    width: float
    count: int


def fd_bin_width(values) -> int:
    """Freedman-Diaconis width 2 * IQR * n^(-1/3), rounded up to an integer >= 1."""
    arr = np.sort(np.asarray(values, dtype=np.float64).ravel())
    iqr = quantile_sorted(arr, 0.75) - quantile_sorted(arr, 0.25)
    width = 2.0 * iqr * arr.size ** (-1.0 / 3.0)
    return max(1, math.ceil(width))


def histogram(values, width: Optional[int] = None) -> list[HistogramBin]:
    """Integer-aligned bins starting at min(values) and covering [min, max]."""
    arr = np.sort(np.ascontiguousarray(values, dtype=np.float64).ravel())
    if arr.size == 0:
        raise ValueError("histogram of an empty sample")
    if width is None:
        width = fd_bin_width(arr)
    if width < 1:
        raise ValueError("bin width must be a positive integer")
    start = math.floor(arr[0])
    nbins = int((arr[-1] - start) // width) + 1
    counts = kernels.histogram_counts(arr, float(start), float(width), nbins)
    return [HistogramBin(start + i * width, width, int(c)) for i, c in enumerate(counts)]


def degree_sequence(index) -> np.ndarray:
    degrees = _degrees(index)
    return np.array([degrees[name] for name in sorted(degrees)], dtype=np.int64)
