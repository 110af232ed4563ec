# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: pair-signature refinement and cyclic Jacobi."""

from libc.stdint cimport int64_t
from libc.stdlib cimport malloc, free
from libc.math cimport sqrt, fabs

import numpy as np


cdef inline void _insertion_i64(int64_t* a, Py_ssize_t lo, Py_ssize_t hi) noexcept nogil:
    cdef Py_ssize_t i, j
    cdef int64_t key
    for i in range(lo + 1, hi + 1):
        key = a[i]
        j = i - 1
        while j >= lo and a[j] > key:
            a[j + 1] = a[j]
            j -= 1
        a[j + 1] = key


cdef void _sort_i64(int64_t* a, Py_ssize_t n) noexcept nogil:
    # iterative median-of-3 quicksort, insertion sort below 16 elements;
    # the smaller partition is pushed, so stack depth stays <= log2(n)
    cdef Py_ssize_t lo_stack[64]
    cdef Py_ssize_t hi_stack[64]
    cdef int top
    cdef Py_ssize_t lo, hi, i, j, mid
    cdef int64_t pivot, tmp
    if n < 2:
        return
    lo_stack[0] = 0
    hi_stack[0] = n - 1
    top = 1
    while top:
        top -= 1
        lo = lo_stack[top]
        hi = hi_stack[top]
        while hi - lo > 15:
            mid = lo + (hi - lo) // 2
            if a[mid] < a[lo]:
                tmp = a[mid]; a[mid] = a[lo]; a[lo] = tmp
            if a[hi] < a[lo]:
                tmp = a[hi]; a[hi] = a[lo]; a[lo] = tmp
            if a[hi] < a[mid]:
                tmp = a[hi]; a[hi] = a[mid]; a[mid] = tmp
            pivot = a[mid]
            i = lo
            j = hi
            while i <= j:
                while a[i] < pivot:
                    i += 1
                while a[j] > pivot:
                    j -= 1
                if i <= j:
                    tmp = a[i]; a[i] = a[j]; a[j] = tmp
                    i += 1
                    j -= 1
            if j - lo < hi - i:
                if lo < j:
                    lo_stack[top] = lo
                    hi_stack[top] = j
                    top += 1
                lo = i
            else:
                if i < hi:
                    lo_stack[top] = i
                    hi_stack[top] = hi
                    top += 1
                hi = j
        _insertion_i64(a, lo, hi)


def signature_ids(codes, ncolors):
    arr = np.ascontiguousarray(codes, dtype=np.int64)
    arr_t = np.ascontiguousarray(arr.T)
    cdef int64_t[:, ::1] c = arr
    cdef int64_t[:, ::1] ct = arr_t
    cdef Py_ssize_t n = c.shape[0]
    out = np.empty((n, n), dtype=np.int64)
    cdef int64_t[:, ::1] ids = out
    cdef int64_t R = ncolors
    cdef int64_t* buf = <int64_t*> malloc((n + 1) * sizeof(int64_t))
    if buf == NULL:
        raise MemoryError()
    table = {}
    cdef Py_ssize_t a, b, g
    cdef Py_ssize_t nbytes = (n + 1) * sizeof(int64_t)
    cdef object key, val
    try:
        for a in range(n):
            for b in range(n):
                buf[0] = c[a, b]
                for g in range(n):
                    buf[g + 1] = c[a, g] * R + ct[b, g]
                _sort_i64(buf + 1, n)
                key = (<char*> buf)[:nbytes]
                val = table.get(key)
                if val is None:
                    val = len(table)
                    table[key] = val
                ids[a, b] = <int64_t> val
    finally:
        free(buf)
    return out, len(table)


def jacobi_eigenvalues(a, tol_scale=1e-10, max_sweeps=100):
    m = np.array(a, dtype=np.float64, copy=True, order="C")
    cdef double[:, ::1] A = m
    cdef Py_ssize_t n = A.shape[0]
    if n == 0:
        return np.empty(0)
    cdef Py_ssize_t p, q, i, sweep
    cdef double fro = 0.0, off, apq, theta, t, co, si, xp, xq
    for p in range(n):
        for q in range(n):
            fro += A[p, q] * A[p, q]
    fro = sqrt(fro)
    if fro == 0.0:
        return np.zeros(n)
    cdef double target = <double> tol_scale * fro
    cdef int sweeps = <int> max_sweeps
    for sweep in range(sweeps):
        off = 0.0
        for p in range(n):
            for q in range(n):
                if p != q:
                    off += A[p, q] * A[p, q]
        if sqrt(off) <= target:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if fabs(apq) <= 1e-300:
                    continue
                theta = (A[q, q] - A[p, p]) / (2.0 * apq)
                if theta >= 0:
                    t = 1.0 / (theta + sqrt(1.0 + theta * theta))
                else:
                    t = -1.0 / (-theta + sqrt(1.0 + theta * theta))
                co = 1.0 / sqrt(1.0 + t * t)
                si = t * co
                for i in range(n):
                    xp = A[i, p]
                    xq = A[i, q]
                    A[i, p] = co * xp - si * xq
                    A[i, q] = si * xp + co * xq
                for i in range(n):
                    xp = A[p, i]
                    xq = A[q, i]
                    A[p, i] = co * xp - si * xq
                    A[q, i] = si * xp + co * xq
    return np.diagonal(m).copy()
