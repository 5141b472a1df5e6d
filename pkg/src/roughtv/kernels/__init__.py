"""Kernel backend selection.

The compiled Cython core is used when present; setting ROUGHTV_PURE=1 (or a
failed build) selects the pure-Python fallback.  Both expose the same four
functions and produce identical results; `benchmarks/bench_kernels.py`
compares their speed.
"""

import os

from . import pure

_impl = pure
USING_COMPILED = False

if os.environ.get("ROUGHTV_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _fast as _impl  # type: ignore[no-redef]

        USING_COMPILED = True
    except ImportError:
        pass

tv_delta = _impl.tv_delta
pvar_sum = _impl.pvar_sum
lazy_band = _impl.lazy_band
reduce_to_extrema = _impl.reduce_to_extrema


def backend_name():
    return "compiled" if USING_COMPILED else "pure"
