import numpy as np
import pytest

from pictropes.optimize import nelder_mead


def rosenbrock(x):
    return (1 - x[0]) ** 2 + 100 * (x[1] - x[0] ** 2) ** 2


def test_quadratic():
    res = nelder_mead(lambda x: float(np.sum((x - [3.0, -2.0, 0.5]) ** 2)), [0, 0, 0])
    assert res.converged
    assert np.allclose(res.x, [3.0, -2.0, 0.5], atol=1e-7)


def test_rosenbrock():
    res = nelder_mead(rosenbrock, [-1.2, 1.0])
    assert res.converged
    assert np.allclose(res.x, [1, 1], atol=1e-6)


def test_infinite_region_is_avoided():
    def f(x):
        return np.inf if x[0] < 1 else (x[0] - 2) ** 2

    res = nelder_mead(f, [1.5])
    assert res.x[0] == pytest.approx(2, abs=1e-7)


def test_iteration_cap_returns_best():
    res = nelder_mead(rosenbrock, [-1.2, 1.0], max_iter=5)
    assert not res.converged
    assert res.iterations == 5
    assert res.fun <= rosenbrock([-1.2, 1.0])
