"""Backend selection for the canonical labeling kernel.

The numba kernel is used when available; setting the environment variable
TWOTREES_NO_JIT to a nonempty value other than 0 forces the pure-numpy
implementation.  Both backends compute identical certificates, so the choice
only affects speed.  BACKEND names the implementation in use.
"""

from __future__ import annotations

import os

import numpy as np

from . import _kernel_np

_flag = os.environ.get("TWOTREES_NO_JIT", "").strip()
if _flag not in ("", "0"):
    _impl = _kernel_np
    BACKEND = "numpy"
else:
    try:
        from . import _kernel_jit

        _impl = _kernel_jit
        BACKEND = "numba"
    except ImportError:
        _impl = _kernel_np
        BACKEND = "numpy"


def canonical_bits(masks: np.ndarray, n: int) -> np.ndarray:
    """Certificate bits for a graph given as int64 adjacency bitmask rows."""
    return _impl.canonical_bits(masks, n)
