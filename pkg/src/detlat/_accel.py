"""Numba toggle for the hot search kernels.

JIT compilation is used when numba imports cleanly and the environment
variable ``DETLAT_DISABLE_NUMBA`` is unset; otherwise the kernels run on
their pure-NumPy fallback paths.
"""

import os


def _disabled_by_env():
    return os.environ.get("DETLAT_DISABLE_NUMBA", "").strip().lower() in {
        "1", "true", "yes", "on",
    }


NUMBA_ENABLED = False

if not _disabled_by_env():
    try:
        from numba import njit

        NUMBA_ENABLED = True
    except ImportError:
        pass

if not NUMBA_ENABLED:

    def njit(*args, **kwargs):
        """Identity decorator standing in for numba.njit."""
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]

        def wrap(func):
            return func

        return wrap
