# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled log cross-ratio kernels. Semantics mirror ``_pykernels`` exactly."""
import numpy as np

from libc.math cimport log, sqrt, NAN


cdef inline double _factor(const double[:, ::1] P, const unsigned char[::1] inf,
                           Py_ssize_t i, Py_ssize_t j, bint* bad) noexcept nogil:
    cdef Py_ssize_t k
    cdef double s = 0.0, d
    if inf[i] or inf[j]:
        if inf[i] and inf[j]:
            bad[0] = True
        return 1.0
    for k in range(P.shape[1]):
        d = P[i, k] - P[j, k]
        s += d * d
    if s == 0.0:
        bad[0] = True
    return sqrt(s)


cdef inline double _log_b(const double[:, ::1] P, const unsigned char[::1] inf,
                          Py_ssize_t a, Py_ssize_t b, Py_ssize_t c, Py_ssize_t d) noexcept nogil:
    cdef bint bad = False
    cdef double num = _factor(P, inf, c, a, &bad) * _factor(P, inf, d, b, &bad)
    cdef double den = _factor(P, inf, c, b, &bad) * _factor(P, inf, d, a, &bad)
    if bad:
        return NAN
    return log(num / den)


def log_cross_ratio(const double[:, ::1] P, const unsigned char[::1] inf, const Py_ssize_t[:, ::1] rows):
    cdef Py_ssize_t n = rows.shape[0], r
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] o = out
    with nogil:
        for r in range(n):
            o[r] = _log_b(P, inf, rows[r, 0], rows[r, 1], rows[r, 2], rows[r, 3])
    return out


def det_log(const double[:, ::1] X, const unsigned char[::1] xinf,
            const double[:, ::1] Y, const unsigned char[::1] yinf,
            const Py_ssize_t[:, ::1] rows):
    cdef Py_ssize_t n = rows.shape[0], L = rows.shape[1], r, a, b, c, d, e
    cdef double x1, x2, y1, y2
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] o = out
    with nogil:
        for r in range(n):
            a = rows[r, 0]; b = rows[r, 1]; c = rows[r, 2]; d = rows[r, 3]
            e = rows[r, 4 % L]
            x1 = _log_b(X, xinf, a, b, c, d)
            x2 = _log_b(X, xinf, b, c, d, e)
            y1 = _log_b(Y, yinf, a, b, c, d)
            y2 = _log_b(Y, yinf, b, c, d, e)
            o[r] = x1 * y2 - x2 * y1
    return out
