"""Kernel selection for the q-series sums.

The compiled extension is preferred when it imported cleanly; the numpy
implementation is always available as a fallback. Set OLIM41_KERNEL to
"python" or "cython" to force a backend (forcing "cython" when the
extension is missing raises ImportError rather than silently degrading).
"""

import os

from . import _qseries_py

try:
    from . import _qseries_cy
except ImportError:
    _qseries_cy = None

_forced = os.environ.get("OLIM41_KERNEL", "").strip().lower()
if _forced == "python":
    _active = _qseries_py
elif _forced == "cython":
    if _qseries_cy is None:
        raise ImportError(
            "OLIM41_KERNEL=cython but the compiled kernel is not available"
        )
    _active = _qseries_cy
elif _forced:
    raise ValueError(f"unknown OLIM41_KERNEL value: {_forced!r}")
else:
    _active = _qseries_cy if _qseries_cy is not None else _qseries_py

backend_name = _active.BACKEND
direct_sum = _active.direct_sum
double_sum = _active.double_sum

__all__ = ["backend_name", "direct_sum", "double_sum"]
