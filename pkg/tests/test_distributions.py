import math

import numpy as np
import pytest
from scipy import integrate, stats

from pictropes.distributions import (
    FAMILIES,
    FitParams,
    foldcauchy_cdf,
    foldcauchy_pdf,
    loglogistic_cdf,
    loglogistic_pdf,
    neg_log_likelihood,
)

rng = np.random.default_rng(99)


def random_params(family, k):
    out = []
    for _ in range(k):
        loc = rng.uniform(-5, 5)
        shape = rng.uniform(0.3, 4.0)
        scale = rng.uniform(0.5, 50)
        out.append(FitParams(loc, 1.0 if family == "exponential" else shape, scale))
    return out


def test_loglogistic_point():
    assert loglogistic_pdf(1.0, FitParams(0, 1, 1)) == pytest.approx(0.25)


@pytest.mark.parametrize("c", [0.05, 0.5, 1, 2, 7])
def test_loglogistic_median_is_scale(c):
    p = FitParams(3.0, c, 11.0)
    assert loglogistic_cdf(14.0, p) == pytest.approx(0.5)


def test_support_boundaries():
    assert loglogistic_pdf(2.0, FitParams(2.0, 1.5, 1)) == 0
    assert loglogistic_pdf(1.0, FitParams(2.0, 1.5, 1)) == 0
    assert foldcauchy_pdf(1.9, FitParams(2.0, 1.0, 1)) == 0


def test_foldcauchy_origin():
    assert foldcauchy_pdf(0.0, FitParams(0, 0, 1)) == pytest.approx(2 / math.pi)


def test_foldcauchy_cdf_limit():
    assert foldcauchy_cdf(1e6, FitParams(0, 1.0, 1.0)) == pytest.approx(1.0, abs=1e-5)


@pytest.mark.parametrize(
    "family, scipy_dist",
    [
        ("loglogistic", stats.fisk),
        ("foldcauchy", stats.foldcauchy),
        ("lognormal", stats.lognorm),
    ],
)
def test_matches_scipy(family, scipy_dist):
    fam = FAMILIES[family]
    for p in random_params(family, 5):
        ref = scipy_dist(p.shape, loc=p.location, scale=p.scale)
        x = p.location + p.scale * np.linspace(0.01, 10, 50)
        assert np.allclose(fam.pdf(x, p), ref.pdf(x), rtol=1e-10, atol=1e-300)
        assert np.allclose(fam.cdf(x, p), ref.cdf(x), rtol=1e-10)


def test_exponential_matches_scipy():
    p = FitParams(2.0, 1.0, 3.0)
    x = np.linspace(2, 30, 40)
    assert np.allclose(FAMILIES["exponential"].pdf(x, p), stats.expon(2, 3).pdf(x))


@pytest.mark.parametrize("family", list(FAMILIES))
def test_normalization(family):
    fam = FAMILIES[family]
    for p in random_params(family, 5):
        assert fam.cdf(p.location, p) == 0
        upper = fam.ppf(0.999, p)
        grid = np.linspace(p.location, upper, 1000)
        assert np.all(np.diff(fam.cdf(grid, p)) >= 0)
        # split at the scale point so quad sees the peak
        mid = min(p.location + p.scale, upper)
        area = sum(
            integrate.quad(lambda t: fam.pdf(t, p), a, b, limit=200, epsabs=1e-12)[0]
            for a, b in ((p.location, mid), (mid, upper))
        )
        assert area == pytest.approx(fam.cdf(upper, p), abs=1e-4)


@pytest.mark.parametrize("family", list(FAMILIES))
def test_pdf_is_cdf_derivative(family):
    fam = FAMILIES[family]
    for p in random_params(family, 4):
        qs = rng.uniform(0.02, 0.98, 25)
        xs = np.atleast_1d(fam.ppf(qs, p))
        h = 1e-6 * p.scale
        fd = (fam.cdf(xs + h, p) - fam.cdf(xs - h, p)) / (2 * h)
        assert np.allclose(fd, fam.pdf(xs, p), rtol=1e-5)


@pytest.mark.parametrize("family", list(FAMILIES))
def test_ppf_inverts_cdf(family):
    fam = FAMILIES[family]
    p = random_params(family, 1)[0]
    qs = np.linspace(0.01, 0.99, 30)
    assert np.allclose(fam.cdf(fam.ppf(qs, p), p), qs, atol=1e-9)


def test_nll_single_point():
    assert neg_log_likelihood("loglogistic", FitParams(0, 1, 1), [1.0]) == pytest.approx(-math.log(0.25))
    assert neg_log_likelihood("loglogistic", FitParams(0, 1, 1), [1.0]) == pytest.approx(1.3863, abs=1e-4)


def test_nll_support_sentinel():
    assert neg_log_likelihood("loglogistic", FitParams(1, 2, 1), [1.0, 3.0]) == math.inf
    assert neg_log_likelihood("foldcauchy", FitParams(2, 1, 1), [1.0, 3.0]) == math.inf


@pytest.mark.parametrize("family", list(FAMILIES))
def test_nll_additive(family):
    p = FitParams(0.0, 1.3, 4.0)
    one = neg_log_likelihood(family, p, [2.5])
    assert neg_log_likelihood(family, p, [2.5] * 17) == pytest.approx(17 * one)


@pytest.mark.parametrize("family", list(FAMILIES))
def test_nll_matches_log_pdf(family):
    fam = FAMILIES[family]
    p = FitParams(-0.5, 1.7, 6.0)
    x = rng.uniform(0, 40, 300)
    assert neg_log_likelihood(family, p, x) == pytest.approx(-np.sum(np.log(fam.pdf(x, p))), rel=1e-10)


def test_nll_errors():
    with pytest.raises(ValueError, match="unknown distribution family"):
        neg_log_likelihood("pareto", FitParams(0, 1, 1), [1.0])
    with pytest.raises(ValueError):
        neg_log_likelihood("loglogistic", FitParams(0, 1, 1), [])


def test_params_validation():
    with pytest.raises(ValueError):
        FitParams(0, 1, 0)
    with pytest.raises(ValueError):
        FitParams(0, -1, 1)
