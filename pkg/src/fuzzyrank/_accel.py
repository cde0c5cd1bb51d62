"""Backend selection for the pairwise kernels.

Numba is used when importable unless ``FUZZYRANK_DISABLE_NUMBA`` is set to a
truthy value, in which case the pure-numpy kernels are used instead.
"""

import os

_FLAG = os.environ.get("FUZZYRANK_DISABLE_NUMBA", "").strip().lower()

try:
    import numba as _nb
except ImportError:  # pragma: no cover - numba is a declared dependency
    _nb = None

USE_NUMBA = _nb is not None and _FLAG not in ("1", "true", "yes", "on")


def njit(*args, **kwargs):
    """``numba.njit`` when numba is available, otherwise a no-op decorator."""
    if _nb is None:
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]
        return lambda func: func
    return _nb.njit(*args, **kwargs)
