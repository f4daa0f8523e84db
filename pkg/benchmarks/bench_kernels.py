"""Compare the numba and numpy kernel paths.

    python3 benchmarks/bench_kernels.py [--n 20000] [--repeat 5]

Kernel timings call both flavours side by side in this process. The
end-to-end fit timing runs one subprocess per path, toggled through
PICTROPES_DISABLE_NUMBA, because the public kernel names are bound at import.
"""

import argparse
import os
import subprocess
import sys
import timeit

import numpy as np

from pictropes import kernels
from pictropes._accel import HAVE_NUMBA
from pictropes.synthetic import sample_loglogistic

FIT_SNIPPET = """
import time, numpy as np
from pictropes.fitting import select_best
from pictropes.synthetic import sample_loglogistic
x = np.ceil(sample_loglogistic(np.random.default_rng(1), {n}, 2.0, 0.0, 30.0))
select_best(data=x[:200])  # warm-up / JIT
t = time.perf_counter(); select_best(data=x); print(time.perf_counter() - t)
"""


def _cases(x, cdf):
    return {
        "nll_loglogistic": (x, -0.5, 2.0, 30.0),
        "nll_foldcauchy": (x, -0.5, 1.0, 4.0),
        "nll_lognormal": (x, -0.5, 1.0, 30.0),
        "nll_exponential": (x, -0.5, 1.0, 40.0),
        "central_moments": (x,),
        "histogram_counts": (x, 0.0, 5.0, int(x.max() // 5) + 1),
        "ks_from_sorted_cdf": (cdf,),
    }


def bench_kernels(n, repeat):
    rng = np.random.default_rng(0)
    x = np.sort(np.ceil(sample_loglogistic(rng, n, 2.0, 0.0, 30.0)))
    cdf = np.sort(rng.random(n))
    print(f"{'kernel':<22}{'numpy ms':>12}{'numba ms':>12}{'speedup':>10}")
    for name, args in _cases(x, cdf).items():
        times = {}
        for numba in (False, True):
            if numba and not HAVE_NUMBA:
                continue
            fn = kernels.flavour(name, numba)
            fn(*args)  # compile
            times[numba] = min(timeit.repeat(lambda: fn(*args), number=20, repeat=repeat)) / 20 * 1e3
        fast = times.get(True)
        speed = f"{times[False] / fast:>9.1f}x" if fast else "      n/a"
        print(f"{name:<22}{times[False]:>12.3f}{(fast or float('nan')):>12.3f}{speed}")


def bench_fit(n):
    print(f"\nselect_best on n={n} (all families)")
    for label, flag in (("numpy", "1"), ("numba", "0")):
        if label == "numba" and not HAVE_NUMBA:
            continue
        env = dict(os.environ, PICTROPES_DISABLE_NUMBA=flag)
        out = subprocess.run(
            [sys.executable, "-c", FIT_SNIPPET.format(n=n)], env=env, capture_output=True, text=True, check=True
        )
        print(f"  {label:<6}{float(out.stdout.strip()):8.3f} s")


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--n", type=int, default=20_000)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--skip-fit", action="store_true")
    args = ap.parse_args()
    bench_kernels(args.n, args.repeat)
    if not args.skip_fit:
        bench_fit(args.n)


if __name__ == "__main__":
    main()
