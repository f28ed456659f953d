# cython: boundscheck=False, wraparound=False, cdivision=True
"""C kernels for circular convolution and correlation.

Direct O(n^2) evaluation of the defining sums:

    convolve:  z[j] = sum_k x[k] * y[(j - k) mod n]
    correlate: y[j] = sum_k x[k] * z[(k + j) mod n]

The pure-Python backend computes the same quantities through FFTs; this
module exists so small/medium dimensions avoid transform overhead and so
the defining sums are available verbatim at C speed.
"""

import numpy as np

NAME = "c"


def convolve(x, y):
    cdef const double[::1] xv = np.ascontiguousarray(x, dtype=np.float64)
    cdef const double[::1] yv = np.ascontiguousarray(y, dtype=np.float64)
    cdef Py_ssize_t n = xv.shape[0]
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] ov = out
    cdef Py_ssize_t j, k, idx
    cdef double acc
    for j in range(n):
        acc = 0.0
        for k in range(n):
            idx = j - k
            if idx < 0:
                idx += n
            acc += xv[k] * yv[idx]
        ov[j] = acc
    return out


def correlate(x, z):
    cdef const double[::1] xv = np.ascontiguousarray(x, dtype=np.float64)
    cdef const double[::1] zv = np.ascontiguousarray(z, dtype=np.float64)
    cdef Py_ssize_t n = xv.shape[0]
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] ov = out
    cdef Py_ssize_t j, k, idx
    cdef double acc
    for j in range(n):
        acc = 0.0
        for k in range(n):
            idx = k + j
            if idx >= n:
                idx -= n
            acc += xv[k] * zv[idx]
        ov[j] = acc
    return out
