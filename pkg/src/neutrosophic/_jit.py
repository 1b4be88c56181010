"""Selects between numba-compiled kernels and the pure-numpy fallback.

Set ``NEUTRO_DISABLE_NUMBA=1`` to force the numpy path (also used when
numba is not importable).
"""
import os

_FLAG = "NEUTRO_DISABLE_NUMBA"


def _disabled_by_env() -> bool:
    return os.environ.get(_FLAG, "").strip().lower() in {"1", "true", "yes", "on"}


try:
    import numba
except ImportError:  # pragma: no cover - numba is a hard dependency
    numba = None

HAVE_NUMBA = numba is not None
USE_NUMBA = HAVE_NUMBA and not _disabled_by_env()


def njit(fn):
    """``numba.njit(cache=True)`` when numba is importable, identity otherwise.

    The loop kernels stay callable as plain Python without numba.
    """
    if numba is None:
        return fn
    return numba.njit(cache=True)(fn)
