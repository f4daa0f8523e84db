"""Seeded random samples and toy datasets (tests, demos, benchmarks)."""

from __future__ import annotations

import numpy as np

from .extraction import FilmTropeDataset


def sample_loglogistic(rng: np.random.Generator, n: int, shape: float, location: float = 0.0, scale: float = 1.0):
    """Inverse-CDF sampling: location + scale * (u / (1 - u))^(1/shape)."""
    u = rng.random(n)
    return location + scale * (u / (1.0 - u)) ** (1.0 / shape)


def sample_foldcauchy(rng: np.random.Generator, n: int, shape: float, location: float = 0.0, scale: float = 1.0):
    """location + scale * |shape + standard Cauchy|."""
    return location + scale * np.abs(shape + rng.standard_cauchy(n))


def synthetic_dataset(n_films: int = 500, n_tropes: int = 2000, seed: int = 0) -> FilmTropeDataset:
    """Long-tailed bipartite toy dataset.

    Film degrees are log-logistic (shape 2, scale 30) rounded up; trope
    popularity weights are folded Cauchy, so both axes have long tails.
    """
    if n_films < 1 or n_tropes < 1:
        raise ValueError("need at least one film and one trope")
    rng = np.random.default_rng(seed)
    degrees = np.ceil(sample_loglogistic(rng, n_films, 2.0, 0.0, 30.0)).astype(np.int64)
    degrees = np.clip(degrees, 1, n_tropes)
    weights = sample_foldcauchy(rng, n_tropes, 0.1, 0.0, 1.0) + 1e-3
    weights /= weights.sum()
    width = len(str(n_films))
    twidth = len(str(n_tropes))
    films = {}
    for i, d in enumerate(degrees):
        picks = rng.choice(n_tropes, size=int(d), replace=False, p=weights)
        films[f"Film{i:0{width}d}"] = tuple(f"Trope{j:0{twidth}d}" for j in picks)
    return FilmTropeDataset(films)
