"""Maximum-likelihood fits and goodness-of-fit ranking.

The optimizer works on unconstrained coordinates:

    location = min(data) - exp(t0),  shape = exp(t1),  scale = exp(t2)

so every simplex vertex respects positivity and the left support bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from . import kernels
from .distributions import FitParams, get_family
from .optimize import nelder_mead
from .stats import quantile_sorted

DEFAULT_FAMILIES = ("loglogistic", "foldcauchy", "lognormal", "exponential")
MIN_POINTS = 10


class FitError(ValueError):
    pass


@dataclass(frozen=True)
class FitResult:
    family: str
    params: Optional[FitParams]
    nll: float
    ks: float
    aic: float
    converged: bool
    iterations: int
    error: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.error is None

    def to_dict(self) -> dict:
        p = self.params
        out = {
            "family": self.family,
            "location": p.location if p else None,
            "shape": p.shape if p else None,
            "scale": p.scale if p else None,
            "nll": self.nll if self.ok else None,
            "ks": self.ks if self.ok else None,
            "aic": self.aic if self.ok else None,
            "converged": self.converged,
            "iterations": self.iterations,
        }
        if self.error is not None:
            out["error"] = self.error
        return out


def _prepare(data) -> np.ndarray:
    arr = np.sort(np.ascontiguousarray(data, dtype=np.float64).ravel())
    if arr.size == 0:
        raise FitError("cannot fit an empty sample")
    if not np.all(np.isfinite(arr)):
        raise FitError("sample contains non-finite values")
    return arr


def ks_statistic(family: str, params: FitParams, data) -> float:
    """Kolmogorov-Smirnov distance between the fitted CDF and the empirical CDF."""
    fam = get_family(family)
    arr = _prepare(data)
    cdf = np.ascontiguousarray(fam.cdf(arr, params), dtype=np.float64)
    return float(kernels.ks_from_sorted_cdf(cdf))


def initial_params(data) -> FitParams:
    """Median-anchored start: the log-logistic median equals location + scale."""
    arr = _prepare(data)
    lo = float(arr[0])
    spread = quantile_sorted(arr, 0.5) - lo
    if spread <= 0:
        spread = float(arr.mean()) - lo
    loc = lo - 0.5 * spread
    return FitParams(location=loc, shape=1.0, scale=quantile_sorted(arr, 0.5) - loc)


def fit_mle(family: str, data, init: Optional[FitParams] = None, max_iter: int = 10_000) -> FitResult:
    """Fit ``family`` to ``data`` by Nelder-Mead on the negative log-likelihood.

    A fit that exhausts ``max_iter`` still returns its best point, flagged
    ``converged=False``.
    """
    fam = get_family(family)
    arr = _prepare(data)
    if arr.size < MIN_POINTS:
        raise FitError(f"need at least {MIN_POINTS} points to fit, got {arr.size}")
    if arr[0] == arr[-1]:
        raise FitError("degenerate sample: all values are equal")

    lo = float(arr[0])
    start = init if init is not None else initial_params(arr)
    gap = lo - start.location
    if not gap > 0:
        # start must sit strictly inside the support
        gap = max(1e-3 * (float(arr[-1]) - lo), 1e-12)
    shape0 = start.shape if start.shape > 0 else 1.0

    nll = getattr(kernels, fam.nll_kernel)
    free_shape = fam.free_shape

    def decode(theta):
        loc = lo - math.exp(theta[0])
        if free_shape:
            return loc, math.exp(theta[1]), math.exp(theta[2])
        return loc, 1.0, math.exp(theta[1])

    def objective(theta) -> float:
        if np.any(np.abs(theta) > 700.0):
            return math.inf
        loc, shape, scale = decode(theta)
        value = nll(arr, loc, shape, scale)
        return value if value == value else math.inf

    theta0 = [math.log(gap), math.log(shape0), math.log(start.scale)]
    if not free_shape:
        del theta0[1]
    res = nelder_mead(objective, theta0, max_iter=max_iter)
    if not math.isfinite(res.fun):
        raise FitError(f"{family}: no finite-likelihood point found")
    params = FitParams(*decode(res.x))
    k = fam.n_params
    return FitResult(
        family=family,
        params=params,
        nll=res.fun,
        ks=ks_statistic(family, params, arr),
        aic=2.0 * k + 2.0 * res.fun,
        converged=res.converged,
        iterations=res.iterations,
    )


def _rank_key(r: FitResult):
    return (not r.ok, r.ks if r.ok else math.inf, r.aic if r.ok else math.inf)


def select_best(families: Sequence[str] = DEFAULT_FAMILIES, data: Iterable = ()) -> list[FitResult]:
    """Fit every family independently; best (lowest KS, then AIC) first.

    Families that fail are kept at the end of the list with ``error`` set.
    """
    if not families:
        raise ValueError("select_best needs at least one family")
    arr = _prepare(data)
    results = []
    for name in families:
        try:
            results.append(fit_mle(name, arr))
        except (FitError, FloatingPointError, OverflowError) as exc:
            results.append(FitResult(name, None, math.nan, math.nan, math.nan, False, 0, error=str(exc)))
    return sorted(results, key=_rank_key)
