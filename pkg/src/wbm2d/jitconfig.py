"""Selection of the accelerated kernel path.

The hot numeric kernels (special-function series, basis-matrix evaluation)
exist in two variants: scalar loops compiled with numba, and vectorized
pure-numpy fallbacks. The numba path is used when numba imports cleanly and
jitting has not been disabled through the environment:

* ``WBM2D_DISABLE_JIT=1`` switches to the numpy fallbacks.
* ``NUMBA_DISABLE_JIT=1`` (numba's own switch) is honoured the same way,
  since interpreting the loop kernels would be far slower than numpy.

Both paths produce identical results up to roundoff; the test suite checks
them against each other and ``benchmarks/bench_kernels.py`` compares their
speed.
"""

import os

__all__ = ["HAS_NUMBA", "JIT_ENABLED", "maybe_njit"]


def _env_flag(name: str) -> bool:
    value = os.getenv(name, "").strip().lower()
    return value not in ("", "0", "false", "off", "no")


DISABLE_JIT = _env_flag("WBM2D_DISABLE_JIT") or _env_flag("NUMBA_DISABLE_JIT")

try:
    import numba

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba installed
    numba = None
    HAS_NUMBA = False

JIT_ENABLED = HAS_NUMBA and not DISABLE_JIT


def maybe_njit(*args, **kwargs):
    """numba.njit when the jit path is enabled, identity decorator otherwise.

    Keyword arguments are forwarded to ``numba.njit``; ``cache=True`` is set
    unless the caller overrides it.
    """
    if not JIT_ENABLED:
        if len(args) == 1 and callable(args[0]):
            return args[0]
        return lambda func: func
    kwargs.setdefault("cache", True)
    if len(args) == 1 and callable(args[0]):
        return numba.njit(**kwargs)(args[0])
    return numba.njit(*args, **kwargs)
