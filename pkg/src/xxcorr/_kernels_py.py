"""numpy fallback for the compiled log-sine kernels (same API)."""

from __future__ import annotations

import numpy as np


def _logsum_sign(d: np.ndarray, L: int) -> tuple[float, int]:
    if np.any(d % (2 * L) == 0):
        raise ZeroDivisionError("vanishing sine factor")
    s = np.sin(np.pi * (d % (4 * L)) / (2.0 * L))
    negatives = int(np.count_nonzero(s < 0))
    return float(np.log(np.abs(s)).sum()), -1 if negatives % 2 else 1


def sine_cross_logsum(a: np.ndarray, b: np.ndarray, L: int) -> tuple[float, int]:
    """ln|prod_{i,j} sin(pi (a_i - b_j) / 2L)| and the sign of the product."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if a.size == 0 or b.size == 0:
        return 0.0, 1
    return _logsum_sign(np.subtract.outer(a, b).ravel(), L)


def sine_triangle_logsum(a: np.ndarray, L: int) -> tuple[float, int]:
    """ln|prod_{i<j} sin(pi (a_i - a_j) / 2L)| and the sign of the product."""
    a = np.asarray(a, dtype=np.int64)
    if a.size < 2:
        return 0.0, 1
    i, j = np.triu_indices(a.size, 1)
    return _logsum_sign(a[i] - a[j], L)
