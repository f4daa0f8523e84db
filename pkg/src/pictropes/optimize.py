"""Derivative-free Nelder-Mead simplex minimizer."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np


@dataclass
class SimplexResult:
    x: np.ndarray
    fun: float
    iterations: int
    evaluations: int
    converged: bool


def nelder_mead(
    func: Callable[[np.ndarray], float],
    x0,
    step: float = 0.1,
    xtol: float = 1e-8,
    max_iter: int = 10_000,
    alpha: float = 1.0,
    gamma: float = 2.0,
    rho: float = 0.5,
    sigma: float = 0.5,
) -> SimplexResult:
    """Minimize ``func`` starting from ``x0``.

    Converged once the simplex diameter (max infinity-norm distance of any
    vertex from the best one) drops below ``xtol * max(1, |best|_inf)``.
    On hitting ``max_iter`` the best vertex is returned with
    ``converged=False``. ``func`` may return ``inf`` for infeasible points.
    """
    x0 = np.asarray(x0, dtype=np.float64).ravel()
    dim = x0.size
    simplex = np.empty((dim + 1, dim))
    simplex[0] = x0
    for i in range(dim):
        simplex[i + 1] = x0
        simplex[i + 1, i] += step
    fvals = np.array([func(v) for v in simplex])
    nfev = dim + 1

    it = 0
    converged = False
    while True:
        order = np.argsort(fvals, kind="stable")
        simplex, fvals = simplex[order], fvals[order]
        best = simplex[0]
        diameter = np.max(np.abs(simplex[1:] - best))
        if diameter <= xtol * max(1.0, np.max(np.abs(best))):
            converged = True
            break
        if it >= max_iter:
            break
        it += 1

        centroid = simplex[:-1].mean(axis=0)
        worst = simplex[-1]
        xr = centroid + alpha * (centroid - worst)
        fr = func(xr)
        nfev += 1
        if fr < fvals[0]:
            xe = centroid + gamma * (xr - centroid)
            fe = func(xe)
            nfev += 1
            if fe < fr:
                simplex[-1], fvals[-1] = xe, fe
            else:
                simplex[-1], fvals[-1] = xr, fr
            continue
        if fr < fvals[-2]:
            simplex[-1], fvals[-1] = xr, fr
            continue
        if fr < fvals[-1]:
            xc = centroid + rho * (xr - centroid)
        else:
            xc = centroid + rho * (worst - centroid)
        fc = func(xc)
        nfev += 1
        if fc < min(fr, fvals[-1]):
            simplex[-1], fvals[-1] = xc, fc
            continue
        # shrink toward the best vertex
        simplex[1:] = best + sigma * (simplex[1:] - best)
        for i in range(1, dim + 1):
            fvals[i] = func(simplex[i])
        nfev += dim

    return SimplexResult(simplex[0].copy(), float(fvals[0]), it, nfev, converged)
