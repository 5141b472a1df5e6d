# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; mirrors roughtv.kernels.pure function for function."""

import numpy as np

cimport numpy as cnp
from libc.math cimport fabs, pow as c_pow

cnp.import_array()


def reduce_to_extrema(values):
    cdef cnp.ndarray[cnp.float64_t, ndim=1] v = np.ascontiguousarray(values, dtype=np.float64)
    cdef Py_ssize_t n = v.shape[0]
    if n <= 2:
        return v.copy()
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out = np.empty(n, dtype=np.float64)
    cdef Py_ssize_t m = 1
    cdef int sign = 0, s
    cdef double x, last
    cdef Py_ssize_t j
    out[0] = v[0]
    for j in range(1, n):
        x = v[j]
        last = out[m - 1]
        if x == last:
            continue
        s = 1 if x > last else -1
        if s == sign:
            out[m - 1] = x
        else:
            out[m] = x
            m += 1
            sign = s
    return out[:m].copy()


def tv_delta(values, double delta):
    cdef cnp.ndarray[cnp.float64_t, ndim=1] v = np.ascontiguousarray(values, dtype=np.float64)
    cdef Py_ssize_t n = v.shape[0]
    if n < 2:
        return 0.0
    cdef double total = 0.0
    cdef double lo = v[0], hi = v[0], anchor = 0.0, cur = 0.0, x
    cdef int direction = 0
    cdef Py_ssize_t j
    for j in range(1, n):
        x = v[j]
        if direction == 0:
            if x > hi:
                hi = x
            elif x < lo:
                lo = x
            if hi - lo > delta:
                if x == hi:
                    direction = 1
                    anchor = lo
                    cur = hi
                else:
                    direction = -1
                    anchor = hi
                    cur = lo
        elif direction == 1:
            if x > cur:
                cur = x
            elif cur - x > delta:
                total += cur - anchor - delta
                anchor = cur
                cur = x
                direction = -1
        else:
            if x < cur:
                cur = x
            elif x - cur > delta:
                total += anchor - cur - delta
                anchor = cur
                cur = x
                direction = 1
    if direction == 1:
        total += cur - anchor - delta
    elif direction == -1:
        total += anchor - cur - delta
    return total


def pvar_sum(values, double p):
    cdef cnp.ndarray[cnp.float64_t, ndim=1] v = reduce_to_extrema(values)
    cdef Py_ssize_t n = v.shape[0]
    if n < 2:
        return 0.0
    cdef Py_ssize_t i, j
    cdef double acc, cand, d
    if p == 1.0:
        acc = 0.0
        for j in range(1, n):
            acc += fabs(v[j] - v[j - 1])
        return acc
    cdef cnp.ndarray[cnp.float64_t, ndim=1] best = np.zeros(n, dtype=np.float64)
    for j in range(1, n):
        acc = 0.0
        for i in range(j):
            d = fabs(v[j] - v[i])
            cand = best[i] + c_pow(d, p)
            if cand > acc:
                acc = cand
        best[j] = acc
    return best[n - 1]


def lazy_band(values, double delta):
    cdef cnp.ndarray[cnp.float64_t, ndim=1] v = np.ascontiguousarray(values, dtype=np.float64)
    cdef Py_ssize_t n = v.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out = np.empty(n, dtype=np.float64)
    if n == 0:
        return out
    cdef double half = 0.5 * delta
    cdef double lo = v[0], hi = v[0], g, x, c
    cdef Py_ssize_t k = -1, j
    for j in range(1, n):
        x = v[j]
        if x > hi:
            hi = x
        elif x < lo:
            lo = x
        if hi - lo > delta:
            k = j
            break
    if k < 0:
        c = v[0]
        if c < hi - half:
            c = hi - half
        if c > lo + half:
            c = lo + half
        out[:] = c
        return out
    g = (lo + half) if v[k] == hi else (hi - half)
    out[:k] = g
    for j in range(k, n):
        x = v[j]
        if x > g + half:
            g = x - half
        elif x < g - half:
            g = x + half
        out[j] = g
    return out
