"""Backend selection for the log cross-ratio kernels.

The compiled ``_ckernels`` extension is used when importable; otherwise, or
when ``COCYCLELAB_PURE_PYTHON`` is set to a non-empty value, the pure-Python
``_pykernels`` module is used. ``BACKEND`` names the active choice.
"""
import os

import numpy as np

from cocyclelab import _pykernels

if os.environ.get("COCYCLELAB_PURE_PYTHON"):
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from cocyclelab import _ckernels as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"


def _rows(rows) -> np.ndarray:
    return np.ascontiguousarray(rows, dtype=np.intp)


def log_cross_ratio(P, inf, rows, impl=None) -> np.ndarray:
    """log b(P[r0], P[r1], P[r2], P[r3]) for each row ``r``."""
    impl = impl or _impl
    return impl.log_cross_ratio(
        np.ascontiguousarray(P, dtype=np.float64),
        np.ascontiguousarray(inf, dtype=np.uint8),
        _rows(rows),
    )


def det_log(X, xinf, Y, yinf, rows, impl=None) -> np.ndarray:
    """2x2 log cross-ratio determinants for index rows of length 4 or 5.

    For a row r of length L the first column uses the window (r0, r1, r2, r3)
    and the second (r1, r2, r3, r[4 mod L]); L = 4 gives the cyclic window of
    the degree-3 cocycle, L = 5 the shifted window of the degree-4 one.
    """
    impl = impl or _impl
    return impl.det_log(
        np.ascontiguousarray(X, dtype=np.float64),
        np.ascontiguousarray(xinf, dtype=np.uint8),
        np.ascontiguousarray(Y, dtype=np.float64),
        np.ascontiguousarray(yinf, dtype=np.uint8),
        _rows(rows),
    )
