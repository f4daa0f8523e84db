"""Location/shape/scale families used for the degree-distribution fits.

All four families are left-bounded at ``location``. Closed forms:

* log-logistic (Fisk), z = (x - loc)/scale > 0:
  pdf = (c/scale) z^(c-1) / (1 + z^c)^2,   cdf = 1 / (1 + z^-c)
* folded Cauchy, y = (x - loc)/scale >= 0:
  pdf = [1/(1+(y-c)^2) + 1/(1+(y+c)^2)] / (pi scale),
  cdf = [atan(y-c) + atan(y+c)] / pi
* lognormal, shape s = sigma of log z
* exponential, shape unused (fixed at 1)
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy import special

from . import kernels


@dataclass(frozen=True)
class FitParams:
    location: float
    shape: float
    scale: float

    def __post_init__(self):
        if not self.scale > 0:
            raise ValueError(f"scale must be positive, got {self.scale}")
        if not self.shape >= 0:
            raise ValueError(f"shape must be non-negative, got {self.shape}")

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.location, self.shape, self.scale)


# --------------------------------------------------------------------------
# log-logistic


def loglogistic_pdf(x, params: FitParams):
    x = np.asarray(x, dtype=np.float64)
    c = params.shape
    z = (x - params.location) / params.scale
    out = np.zeros_like(z)
    pos = z > 0
    lz = np.log(z[pos])
    logpdf = math.log(c / params.scale) + (c - 1.0) * lz - 2.0 * np.logaddexp(0.0, c * lz)
    out[pos] = np.exp(logpdf)
    return out if out.ndim else float(out)


def loglogistic_cdf(x, params: FitParams):
    x = np.asarray(x, dtype=np.float64)
    z = (x - params.location) / params.scale
    out = np.zeros_like(z)
    pos = z > 0
    out[pos] = special.expit(params.shape * np.log(z[pos]))
    return out if out.ndim else float(out)


def loglogistic_ppf(p, params: FitParams):
    p = np.asarray(p, dtype=np.float64)
    return params.location + params.scale * np.power(p / (1.0 - p), 1.0 / params.shape)


# --------------------------------------------------------------------------
# folded Cauchy


def foldcauchy_pdf(x, params: FitParams):
    x = np.asarray(x, dtype=np.float64)
    c = params.shape
    y = (x - params.location) / params.scale
    dens = (1.0 / (1.0 + (y - c) ** 2) + 1.0 / (1.0 + (y + c) ** 2)) / (math.pi * params.scale)
    out = np.where(y >= 0, dens, 0.0)
    return out if out.ndim else float(out)


def foldcauchy_cdf(x, params: FitParams):
    x = np.asarray(x, dtype=np.float64)
    c = params.shape
    y = (x - params.location) / params.scale
    out = np.where(y >= 0, (np.arctan(y - c) + np.arctan(y + c)) / math.pi, 0.0)
    return out if out.ndim else float(out)


def foldcauchy_ppf(p, params: FitParams):
    """Inverse CDF by bisection (no closed form for c > 0)."""
    p = np.atleast_1d(np.asarray(p, dtype=np.float64))
    c = params.shape
    lo = np.zeros_like(p)
    hi = np.full_like(p, c + 1.0)
    while True:
        grow = foldcauchy_cdf(params.location + params.scale * hi, params) < p
        if not np.any(grow):
            break
        hi = np.where(grow, hi * 2.0, hi)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        below = foldcauchy_cdf(params.location + params.scale * mid, params) < p
        lo = np.where(below, mid, lo)
        hi = np.where(below, hi, mid)
    out = params.location + params.scale * 0.5 * (lo + hi)
    return out if out.size > 1 else float(out[0])


# --------------------------------------------------------------------------
# controls


def lognormal_pdf(x, params: FitParams):
    x = np.asarray(x, dtype=np.float64)
    s = params.shape
    z = (x - params.location) / params.scale
    out = np.zeros_like(z)
    pos = z > 0
    lz = np.log(z[pos])
    out[pos] = np.exp(-0.5 * (lz / s) ** 2) / (s * z[pos] * params.scale * math.sqrt(2 * math.pi))
    return out if out.ndim else float(out)


def lognormal_cdf(x, params: FitParams):
    x = np.asarray(x, dtype=np.float64)
    z = (x - params.location) / params.scale
    out = np.zeros_like(z)
    pos = z > 0
    out[pos] = special.ndtr(np.log(z[pos]) / params.shape)
    return out if out.ndim else float(out)


def lognormal_ppf(p, params: FitParams):
    return params.location + params.scale * np.exp(params.shape * special.ndtri(np.asarray(p, dtype=np.float64)))


def exponential_pdf(x, params: FitParams):
    x = np.asarray(x, dtype=np.float64)
    y = (x - params.location) / params.scale
    out = np.where(y >= 0, np.exp(-np.maximum(y, 0.0)) / params.scale, 0.0)
    return out if out.ndim else float(out)


def exponential_cdf(x, params: FitParams):
    x = np.asarray(x, dtype=np.float64)
    y = (x - params.location) / params.scale
    out = np.where(y >= 0, -np.expm1(-np.maximum(y, 0.0)), 0.0)
    return out if out.ndim else float(out)


def exponential_ppf(p, params: FitParams):
    return params.location - params.scale * np.log1p(-np.asarray(p, dtype=np.float64))


# --------------------------------------------------------------------------


@dataclass(frozen=True)
class Family:
    name: str
    pdf: Callable
    cdf: Callable
    ppf: Callable
    nll_kernel: str
    # exponential has no shape parameter; it stays fixed at 1.0
    free_shape: bool = True

    @property
    def n_params(self) -> int:
        return 3 if self.free_shape else 2

    def nll(self, params: FitParams, data: np.ndarray) -> float:
        fn = getattr(kernels, self.nll_kernel)
        return float(fn(data, params.location, params.shape, params.scale))


FAMILIES: dict[str, Family] = {
    "loglogistic": Family("loglogistic", loglogistic_pdf, loglogistic_cdf, loglogistic_ppf, "nll_loglogistic"),
    "foldcauchy": Family("foldcauchy", foldcauchy_pdf, foldcauchy_cdf, foldcauchy_ppf, "nll_foldcauchy"),
    "lognormal": Family("lognormal", lognormal_pdf, lognormal_cdf, lognormal_ppf, "nll_lognormal"),
    "exponential": Family(
        "exponential", exponential_pdf, exponential_cdf, exponential_ppf, "nll_exponential", free_shape=False
    ),
}


def get_family(name: str) -> Family:
    try:
        return FAMILIES[name]
    except KeyError:
        raise ValueError(f"unknown distribution family {name!r}; known: {', '.join(FAMILIES)}") from None


def neg_log_likelihood(family: str, params: FitParams, data) -> float:
    """-sum(log pdf); ``inf`` if any point has zero density."""
    fam = get_family(family)
    arr = np.ascontiguousarray(data, dtype=np.float64).ravel()
    if arr.size == 0:
        raise ValueError("negative log-likelihood of an empty sample is undefined")
    return fam.nll(params, arr)
