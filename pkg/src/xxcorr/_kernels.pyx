# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled log-sine product kernels.

Momenta are passed as doubled integer indices ``j`` (k = pi j / L), so a
half-difference (k1 - k2)/2 is exactly pi (j1 - j2) / (2 L).
"""

from libc.math cimport sin, log, fabs, M_PI

import numpy as np
cimport numpy as cnp

ctypedef cnp.int64_t INT


cdef inline int _accumulate(INT d, long L, double* logsum) noexcept nogil:
    cdef long period = 4 * L
    cdef double s
    if d % (2 * L) == 0:
        return 0
    s = sin(M_PI * <double>(d % period) / (2.0 * L))
    logsum[0] += log(fabs(s))
    return -1 if s < 0 else 1


def sine_cross_logsum(INT[::1] a, INT[::1] b, long L):
    """ln|prod_{i,j} sin(pi (a_i - b_j) / 2L)| and the sign of the product."""
    cdef Py_ssize_t i, j
    cdef double logsum = 0.0
    cdef int sign = 1, s
    with nogil:
        for i in range(a.shape[0]):
            for j in range(b.shape[0]):
                s = _accumulate(a[i] - b[j], L, &logsum)
                if s == 0:
                    with gil:
                        raise ZeroDivisionError("vanishing sine factor")
                sign *= s
    return logsum, sign


def sine_triangle_logsum(INT[::1] a, long L):
    """ln|prod_{i<j} sin(pi (a_i - a_j) / 2L)| and the sign of the product."""
    cdef Py_ssize_t i, j, n = a.shape[0]
    cdef double logsum = 0.0
    cdef int sign = 1, s
    with nogil:
        for i in range(n):
            for j in range(i + 1, n):
                s = _accumulate(a[i] - a[j], L, &logsum)
                if s == 0:
                    with gil:
                        raise ZeroDivisionError("vanishing sine factor")
                sign *= s
    return logsum, sign
