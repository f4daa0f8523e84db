"""Hot numeric loops, each in a numba and a numpy flavour.

The public names (``nll_loglogistic``, ``central_moments`` ...) are bound to
one flavour at import time according to :data:`pictropes._accel.USE_NUMBA`.
Both flavours stay importable under ``*_numba`` / ``*_numpy`` so tests and
the benchmark can compare them directly.

Every NLL kernel takes a float64 array and returns ``+inf`` when any point
falls outside the support; the optimizer treats that as worst-possible.
"""

from __future__ import annotations

import math

import numpy as np

from ._accel import USE_NUMBA, njit

_LOG_2PI = math.log(2.0 * math.pi)
_LOG_PI = math.log(math.pi)


# --------------------------------------------------------------------------
# numba flavour


@njit
def _softplus(t):
    if t > 0.0:
        return t + math.log1p(math.exp(-t))
    return math.log1p(math.exp(t))


@njit
def nll_loglogistic_numba(x, loc, c, scale):
    if c <= 0.0 or scale <= 0.0:
        return np.inf
    base = x.size * (math.log(scale) - math.log(c))
    acc = 0.0
    for i in range(x.size):
        z = (x[i] - loc) / scale
        if not z > 0.0:
            return np.inf
        lz = math.log(z)
        acc += 2.0 * _softplus(c * lz) - (c - 1.0) * lz
    return base + acc


@njit
def nll_foldcauchy_numba(x, loc, c, scale):
    if c < 0.0 or scale <= 0.0:
        return np.inf
    acc = x.size * (math.log(scale) + _LOG_PI)
    for i in range(x.size):
        y = (x[i] - loc) / scale
        if not y >= 0.0:
            return np.inf
        dm = y - c
        dp = y + c
        dens = 1.0 / (1.0 + dm * dm) + 1.0 / (1.0 + dp * dp)
        if dens <= 0.0:
            return np.inf
        acc -= math.log(dens)
    return acc


@njit
def nll_lognormal_numba(x, loc, s, scale):
    if s <= 0.0 or scale <= 0.0:
        return np.inf
    acc = x.size * (math.log(s) + math.log(scale) + 0.5 * _LOG_2PI)
    inv2s2 = 0.5 / (s * s)
    for i in range(x.size):
        z = (x[i] - loc) / scale
        if not z > 0.0:
            return np.inf
        lz = math.log(z)
        acc += lz + lz * lz * inv2s2
    return acc


@njit
def nll_exponential_numba(x, loc, shape, scale):
    # shape is ignored; the signature matches the other families
    if scale <= 0.0:
        return np.inf
    acc = 0.0
    for i in range(x.size):
        y = (x[i] - loc) / scale
        if not y >= 0.0:
            return np.inf
        acc += y
    return acc + x.size * math.log(scale)


@njit
def central_moments_numba(x):
    n = x.size
    total = 0.0
    for i in range(n):
        total += x[i]
    mean = total / n
    s2 = 0.0
    s3 = 0.0
    s4 = 0.0
    for i in range(n):
        d = x[i] - mean
        d2 = d * d
        s2 += d2
        s3 += d2 * d
        s4 += d2 * d2
    return mean, s2 / n, s3 / n, s4 / n


@njit
def histogram_counts_numba(x, start, width, nbins):
    counts = np.zeros(nbins, dtype=np.int64)
    for i in range(x.size):
        k = int(math.floor((x[i] - start) / width))
        if k < 0:
            k = 0
        elif k >= nbins:
            k = nbins - 1
        counts[k] += 1
    return counts


@njit
def ks_from_sorted_cdf_numba(cdf):
    n = cdf.size
    d = 0.0
    for i in range(n):
        lo = abs(cdf[i] - i / n)
        hi = abs(cdf[i] - (i + 1.0) / n)
        if lo > d:
            d = lo
        if hi > d:
            d = hi
    return d


# --------------------------------------------------------------------------
# numpy flavour


def nll_loglogistic_numpy(x, loc, c, scale):
    if c <= 0.0 or scale <= 0.0:
        return np.inf
    z = (x - loc) / scale
    if not np.all(z > 0.0):
        return np.inf
    lz = np.log(z)
    acc = np.sum(2.0 * np.logaddexp(0.0, c * lz) - (c - 1.0) * lz)
    return float(x.size * (math.log(scale) - math.log(c)) + acc)


def nll_foldcauchy_numpy(x, loc, c, scale):
    if c < 0.0 or scale <= 0.0:
        return np.inf
    y = (x - loc) / scale
    if not np.all(y >= 0.0):
        return np.inf
    dens = 1.0 / (1.0 + (y - c) ** 2) + 1.0 / (1.0 + (y + c) ** 2)
    if not np.all(dens > 0.0):
        return np.inf
    return float(x.size * (math.log(scale) + _LOG_PI) - np.sum(np.log(dens)))


def nll_lognormal_numpy(x, loc, s, scale):
    if s <= 0.0 or scale <= 0.0:
        return np.inf
    z = (x - loc) / scale
    if not np.all(z > 0.0):
        return np.inf
    lz = np.log(z)
    acc = np.sum(lz + lz * lz * (0.5 / (s * s)))
    return float(x.size * (math.log(s) + math.log(scale) + 0.5 * _LOG_2PI) + acc)


def nll_exponential_numpy(x, loc, shape, scale):
    if scale <= 0.0:
        return np.inf
    y = (x - loc) / scale
    if not np.all(y >= 0.0):
        return np.inf
    return float(np.sum(y) + x.size * math.log(scale))


def central_moments_numpy(x):
    mean = np.sum(x) / x.size
    d = x - mean
    d2 = d * d
    n = x.size
    return float(mean), float(np.sum(d2) / n), float(np.sum(d2 * d) / n), float(np.sum(d2 * d2) / n)


def histogram_counts_numpy(x, start, width, nbins):
    k = np.floor((x - start) / width).astype(np.int64)
    np.clip(k, 0, nbins - 1, out=k)
    return np.bincount(k, minlength=nbins).astype(np.int64)


def ks_from_sorted_cdf_numpy(cdf):
    n = cdf.size
    i = np.arange(n, dtype=np.float64)
    return float(max(np.max(np.abs(cdf - i / n)), np.max(np.abs(cdf - (i + 1.0) / n))))


# --------------------------------------------------------------------------

KERNEL_NAMES = (
    "nll_loglogistic",
    "nll_foldcauchy",
    "nll_lognormal",
    "nll_exponential",
    "central_moments",
    "histogram_counts",
    "ks_from_sorted_cdf",
)


def flavour(name: str, numba: bool):
    """Return kernel ``name`` from the requested flavour."""
    return globals()[f"{name}_{'numba' if numba else 'numpy'}"]


nll_loglogistic = flavour("nll_loglogistic", USE_NUMBA)
nll_foldcauchy = flavour("nll_foldcauchy", USE_NUMBA)
nll_lognormal = flavour("nll_lognormal", USE_NUMBA)
nll_exponential = flavour("nll_exponential", USE_NUMBA)
central_moments = flavour("central_moments", USE_NUMBA)
histogram_counts = flavour("histogram_counts", USE_NUMBA)
ks_from_sorted_cdf = flavour("ks_from_sorted_cdf", USE_NUMBA)
