"""Backend selection for the hot log-sine products.

The compiled extension is used when it was built; otherwise the numpy
implementation is used.  ``BACKEND`` names the active one.
"""

from __future__ import annotations

import numpy as np

from . import _kernels_py

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

BACKEND = "cython" if _compiled is not None else "numpy"


def _impl(backend: str | None):
    name = backend or BACKEND
    if name == "cython":
        if _compiled is None:
            raise RuntimeError("compiled kernels are not available")
        return _compiled
    if name == "numpy":
        return _kernels_py
    raise ValueError(f"unknown backend {name!r}")


def sine_cross_logsum(a, b, L: int, backend: str | None = None) -> tuple[float, int]:
    a = np.ascontiguousarray(a, dtype=np.int64)
    b = np.ascontiguousarray(b, dtype=np.int64)
    return _impl(backend).sine_cross_logsum(a, b, int(L))


def sine_triangle_logsum(a, L: int, backend: str | None = None) -> tuple[float, int]:
    a = np.ascontiguousarray(a, dtype=np.int64)
    return _impl(backend).sine_triangle_logsum(a, int(L))
