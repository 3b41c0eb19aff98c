"""JIT switch for the integer kernels.

Set ``ORCURV_DISABLE_JIT=1`` to run every kernel through its pure
numpy/Python path.  Results are bit-identical either way; only speed differs.
"""

from __future__ import annotations

import functools
import os
import types

_FALSY = {"", "0", "false", "no", "off"}

JIT_DISABLED = os.environ.get("ORCURV_DISABLE_JIT", "").strip().lower() not in _FALSY

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

HAVE_NUMBA = numba is not None and not JIT_DISABLED


def jit(func):
    """``numba.njit(cache=True)`` when enabled, identity otherwise."""
    if HAVE_NUMBA:
        return numba.njit(cache=True)(func)
    return func


@functools.lru_cache(maxsize=None)
def python_impl(func):
    """Uncompiled version of a kernel.

    Calls the kernel makes to other jitted kernels are rebound to their
    uncompiled versions as well, so the result accepts object arrays.
    """
    f = getattr(func, "py_func", func)
    if f is func:
        return func
    env = {k: getattr(v, "py_func", v) for k, v in f.__globals__.items()}
    return types.FunctionType(f.__code__, env, f.__name__, f.__defaults__, f.__closure__)
