# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled staircase kernel. Mirrors ``_pure.run_staircase`` exactly."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t
from libcpp.vector cimport vector

cnp.import_array()

cdef int64_t NEG = -((<int64_t>1) << 62)


cdef Py_ssize_t _find_first_above(int64_t[::1] tree, Py_ssize_t size,
                                  Py_ssize_t lo, int64_t v) noexcept nogil:
    cdef Py_ssize_t i
    if lo >= size:
        return -1
    i = lo + size
    while True:
        if tree[i] > v:
            while i < size:
                i <<= 1
                if tree[i] <= v:
                    i += 1
            return i - size
        while i & 1:
            i >>= 1
        if i == 0:
            return -1
        i += 1


cdef Py_ssize_t _find_last_above(int64_t[::1] tree, Py_ssize_t size,
                                 Py_ssize_t hi, int64_t v) noexcept nogil:
    cdef Py_ssize_t i
    if hi < 0:
        return -1
    i = hi + size
    while True:
        if tree[i] > v:
            while i < size:
                i = (i << 1) | 1
                if tree[i] <= v:
                    i -= 1
            return i - size
        while not (i & 1):
            i >>= 1
        if i == 1:
            return -1
        i -= 1


cdef inline void _raise(int64_t[::1] tree, Py_ssize_t size, Py_ssize_t k,
                        int64_t t) noexcept nogil:
    cdef Py_ssize_t j = size + k
    tree[j] = t
    j >>= 1
    while j > 0 and tree[j] < t:
        tree[j] = t
        j >>= 1


def run_staircase(seq, last_init, Py_ssize_t n):
    cdef Py_ssize_t size = 2
    while size < n + 2:
        size <<= 1
    cdef int64_t[::1] tree = np.full(2 * size, NEG, dtype=np.int64)
    cdef int64_t[::1] s = np.ascontiguousarray(seq, dtype=np.int64)
    cdef int64_t[::1] init = np.ascontiguousarray(last_init, dtype=np.int64)
    cdef Py_ssize_t m = s.shape[0]
    cdef Py_ssize_t k, j, y, x, start, a, b
    cdef int64_t v, base, t
    cdef vector[int64_t] touched
    cdef vector[int64_t] left
    offsets = np.zeros(m + 1, dtype=np.int64)
    cdef int64_t[::1] off = offsets

    if init.shape[0] < n + 1:
        raise ValueError("last_init must have length n + 1")
    with nogil:
        for k in range(1, n + 1):
            tree[size + k] = init[k]
        for j in range(size - 1, 0, -1):
            a = 2 * j
            b = a + 1
            tree[j] = tree[a] if tree[a] > tree[b] else tree[b]

        for j in range(m):
            t = j + 1
            x = s[j]
            base = tree[size + x]
            start = touched.size()
            left.clear()
            v = base
            y = x - 1
            while True:
                y = _find_last_above(tree, size, y, v)
                if y < 1:
                    break
                left.push_back(y)
                v = tree[size + y]
                y -= 1
            for k in range(<Py_ssize_t>left.size() - 1, -1, -1):
                touched.push_back(left[k])
            v = base
            y = x + 1
            while True:
                y = _find_first_above(tree, size, y, v)
                if y < 0 or y > n:
                    break
                touched.push_back(y)
                v = tree[size + y]
                y += 1
            for k in range(start, <Py_ssize_t>touched.size()):
                _raise(tree, size, touched[k], t)
            _raise(tree, size, x, t)
            off[j + 1] = touched.size()

    out = np.empty(touched.size(), dtype=np.int64)
    cdef int64_t[::1] o = out
    for k in range(<Py_ssize_t>touched.size()):
        o[k] = touched[k]
    return offsets, out
