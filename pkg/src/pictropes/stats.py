"""Descriptive statistics of a degree sequence."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Optional

import numpy as np

from . import kernels


@dataclass(frozen=True)
class StatsSummary:
    """Population moments; ``skewness``/``kurtosis`` are ``None`` when variance is 0.

    ``kurtosis`` is excess kurtosis (0 for a normal distribution).
    """

    n: int
    minimum: float
    maximum: float
    mean: float
    median: float
    q1: float
    q3: float
    variance: float
    skewness: Optional[float]
    kurtosis: Optional[float]

    def to_dict(self) -> dict:
        return asdict(self)


def _as_sorted_array(values) -> np.ndarray:
    arr = np.sort(np.asarray(values, dtype=np.float64).ravel())
    if arr.size == 0:
        raise ValueError("statistics of an empty sample are undefined")
    if not np.all(np.isfinite(arr)):
        raise ValueError("sample contains non-finite values")
    return arr


def quantile_sorted(arr: np.ndarray, q: float) -> float:
    """Linear-interpolation quantile of an already sorted, non-empty array."""
    if not 0.0 <= q <= 1.0:
        raise ValueError(f"quantile fraction must lie in [0, 1], got {q}")
    h = (arr.size - 1) * q
    lo = math.floor(h)
    if lo + 1 >= arr.size:
        return float(arr[-1])
    frac = h - lo
    return float(arr[lo] + frac * (arr[lo + 1] - arr[lo]))


def quantile(values, q: float) -> float:
    """Quantile with linear interpolation between order statistics (h = (n-1)q)."""
    return quantile_sorted(_as_sorted_array(values), q)


def _as_number(x: float):
    # integer-valued statistics of integer data print without a spurious ".0"
    return int(x) if float(x).is_integer() and abs(x) < 2**53 else float(x)


def summarize(values) -> StatsSummary:
    arr = _as_sorted_array(values)
    mean, m2, m3, m4 = kernels.central_moments(arr)
    if arr[0] == arr[-1]:
        m2, skew, kurt = 0.0, None, None
    else:
        skew = m3 / m2**1.5
        kurt = m4 / (m2 * m2) - 3.0
    return StatsSummary(
        n=int(arr.size),
        minimum=_as_number(arr[0]),
        maximum=_as_number(arr[-1]),
        mean=float(mean),
        median=quantile_sorted(arr, 0.5),
        q1=quantile_sorted(arr, 0.25),
        q3=quantile_sorted(arr, 0.75),
        variance=float(m2),
        skewness=skew,
        kurtosis=kurt,
    )
