# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled bitmask kernels. Mirrors ``scgt._pykernels`` exactly."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport uint64_t, int64_t

cnp.import_array()


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil


cdef inline int popcount(uint64_t x) noexcept nogil:
    return __builtin_popcountll(x)


def enumerate_submasks(facets):
    cdef uint64_t[::1] fs = np.ascontiguousarray(facets, dtype=np.uint64)
    cdef Py_ssize_t i, total = 0, pos = 0
    cdef uint64_t f, sub
    for i in range(fs.shape[0]):
        total += (<int64_t>1) << popcount(fs[i])
    out = np.empty(total, dtype=np.uint64)
    cdef uint64_t[::1] o = out
    for i in range(fs.shape[0]):
        f = fs[i]
        sub = f
        while True:
            o[pos] = sub
            pos += 1
            if sub == 0:
                break
            sub = (sub - 1) & f
    return np.unique(out)


def subset_sums(queries, items, weights):
    cdef uint64_t[::1] q = np.ascontiguousarray(queries, dtype=np.uint64)
    cdef uint64_t[::1] it = np.ascontiguousarray(items, dtype=np.uint64)
    cdef double[::1] w = np.ascontiguousarray(weights, dtype=np.float64)
    out = np.zeros(q.shape[0], dtype=np.float64)
    cdef double[::1] o = out
    cdef Py_ssize_t a, b
    cdef uint64_t qm
    cdef double acc
    with nogil:
        for a in range(q.shape[0]):
            qm = q[a]
            acc = 0.0
            for b in range(it.shape[0]):
                if it[b] & ~qm == 0:
                    acc += w[b]
            o[a] = acc
    return out


def superset_sums(queries, items, weights):
    cdef uint64_t[::1] q = np.ascontiguousarray(queries, dtype=np.uint64)
    cdef uint64_t[::1] it = np.ascontiguousarray(items, dtype=np.uint64)
    cdef double[::1] w = np.ascontiguousarray(weights, dtype=np.float64)
    out = np.zeros(q.shape[0], dtype=np.float64)
    cdef double[::1] o = out
    cdef Py_ssize_t a, b
    cdef uint64_t qm
    cdef double acc
    with nogil:
        for a in range(q.shape[0]):
            qm = q[a]
            acc = 0.0
            for b in range(it.shape[0]):
                if qm & ~it[b] == 0:
                    acc += w[b]
            o[a] = acc
    return out


def shapley_table(values, int k):
    cdef double[::1] v = np.ascontiguousarray(values, dtype=np.float64)
    if v.shape[0] != (1 << k):
        raise ValueError("value table must have 2**k entries")
    weight_arr = np.empty(max(k, 1), dtype=np.float64)
    cdef double[::1] weight = weight_arr
    cdef int s
    cdef double c
    # weight[s] = s! (k-s-1)! / k!, built by the recurrence weight[s+1] = weight[s] (s+1)/(k-s-1)
    if k > 0:
        weight[0] = 1.0 / k
        for s in range(k - 1):
            weight[s + 1] = weight[s] * (s + 1) / (k - s - 1)
    out = np.zeros(k, dtype=np.float64)
    cdef double[::1] o = out
    cdef int i
    cdef uint64_t bit, m, size = (<uint64_t>1) << k
    cdef double acc
    with nogil:
        for i in range(k):
            bit = (<uint64_t>1) << i
            acc = 0.0
            for m in range(size):
                if m & bit:
                    continue
                acc += weight[popcount(m)] * (v[m | bit] - v[m])
            o[i] = acc
    return out


def marginal_table(values, int n):
    cdef double[::1] v = np.ascontiguousarray(values, dtype=np.float64)
    cdef Py_ssize_t rows = 1, r = 0
    cdef int t
    for t in range(2, n + 1):
        rows *= t
    out = np.zeros((rows, n), dtype=np.float64)
    cdef double[:, ::1] o = out
    perm_arr = np.arange(n, dtype=np.int64)
    cdef int64_t[::1] perm = perm_arr
    cdef int j, l, a, b
    cdef int64_t p, tmp
    cdef uint64_t pred
    with nogil:
        while True:
            pred = 0
            for j in range(n):
                p = perm[j]
                o[r, p] = v[pred | ((<uint64_t>1) << p)] - v[pred]
                pred |= (<uint64_t>1) << p
            r += 1
            j = n - 2
            while j >= 0 and perm[j] >= perm[j + 1]:
                j -= 1
            if j < 0:
                break
            l = n - 1
            while perm[l] <= perm[j]:
                l -= 1
            tmp = perm[j]; perm[j] = perm[l]; perm[l] = tmp
            a = j + 1
            b = n - 1
            while a < b:
                tmp = perm[a]; perm[a] = perm[b]; perm[b] = tmp
                a += 1
                b -= 1
    return out
