"""Selection between numba-compiled kernels and the pure-numpy fallback.

Set ``PICTROPES_DISABLE_NUMBA=1`` to force the numpy path, e.g. when
debugging or on platforms without an LLVM toolchain.
"""

from __future__ import annotations

import os

_FALSEY = {"", "0", "false", "no", "off"}


def _numba_requested() -> bool:
    return os.environ.get("PICTROPES_DISABLE_NUMBA", "").strip().lower() in _FALSEY


try:
    from numba import njit as _njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is optional
    _njit = None
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and _numba_requested()


def njit(*args, **kwargs):
    """``numba.njit`` when numba is importable, identity decorator otherwise.

    Compilation is always available when numba is installed (so both paths
    can be benchmarked side by side); ``USE_NUMBA`` only decides which path
    the public kernel names point at.
    """
    if _njit is None:
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]
        return lambda fn: fn
    kwargs.setdefault("cache", True)
    return _njit(*args, **kwargs)
