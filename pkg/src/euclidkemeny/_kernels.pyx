# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled linear-ordering kernels; same API as ``_kernels_py``."""

import numpy as np
from libc.stdint cimport int64_t

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil

cdef int64_t _INF = 0x3FFFFFFFFFFFFFFF


def dp_order(cost):
    cdef const int64_t[:, ::1] c = np.ascontiguousarray(cost, dtype=np.int64)
    cdef int n = c.shape[0]
    cdef int h = n // 2
    cdef unsigned long long lomask = (1ULL << h) - 1
    cdef unsigned long long size = 1ULL << n
    cdef unsigned long long full = size - 1
    lo_arr = np.zeros((n, 1 << h), dtype=np.int64)
    hi_arr = np.zeros((n, 1 << (n - h)), dtype=np.int64)
    g_arr = np.empty(size, dtype=np.int64)
    cdef int64_t[:, ::1] lo = lo_arr
    cdef int64_t[:, ::1] hi = hi_arr
    cdef int64_t[::1] g = g_arr
    cdef unsigned long long s, S, rem, bit
    cdef int k, x
    cdef int64_t best, val
    with nogil:
        # lo[k][s] = sum of c[k][d] over bits d of s (low half); hi likewise for the high half
        for k in range(n):
            for s in range(1, 1ULL << h):
                x = __builtin_ctzll(s)
                lo[k, s] = lo[k, s & (s - 1)] + c[k, x]
            for s in range(1, 1ULL << (n - h)):
                x = __builtin_ctzll(s)
                hi[k, s] = hi[k, s & (s - 1)] + c[k, x + h]
        g[0] = 0
        for S in range(1, size):
            best = _INF
            rem = S
            while rem:
                x = __builtin_ctzll(rem)
                rem &= rem - 1
                val = lo[x, S & lomask] + hi[x, S >> h] + g[S ^ (1ULL << x)]
                if val < best:
                    best = val
            g[S] = best
    order = []
    S = full
    while S:
        rem = S
        while rem:
            x = __builtin_ctzll(rem)
            rem &= rem - 1
            bit = 1ULL << x
            if lo[x, S & lomask] + hi[x, S >> h] + g[S ^ bit] == g[S]:
                order.append(x)
                S ^= bit
                break
    return order, int(g[full])


def brute_order(cost, collect=False, limit=0):
    cdef const int64_t[:, ::1] c = np.ascontiguousarray(cost, dtype=np.int64)
    cdef int n = c.shape[0]
    perm_arr = np.arange(n, dtype=np.int64)
    best_arr = perm_arr.copy()
    cdef int64_t[::1] p = perm_arr
    cdef int64_t[::1] bestp = best_arr
    cdef int64_t total, best = _INF, count = 0, tmp
    cdef int a, b, i, j
    cdef bint more = True
    optima = []
    while more:
        total = 0
        for a in range(n - 1):
            for b in range(a + 1, n):
                total += c[p[a], p[b]]
        if total < best:
            best = total
            count = 1
            bestp[:] = p
            if collect:
                optima = [tuple(perm_arr)]
        elif total == best:
            count += 1
            if collect and (limit <= 0 or len(optima) < limit):
                optima.append(tuple(perm_arr))
        # next permutation in lexicographic order
        i = n - 2
        while i >= 0 and p[i] >= p[i + 1]:
            i -= 1
        if i < 0:
            more = False
        else:
            j = n - 1
            while p[j] <= p[i]:
                j -= 1
            tmp = p[i]; p[i] = p[j]; p[j] = tmp
            a = i + 1
            b = n - 1
            while a < b:
                tmp = p[a]; p[a] = p[b]; p[b] = tmp
                a += 1
                b -= 1
    return [int(v) for v in best_arr], int(best), int(count), [tuple(int(v) for v in o) for o in optima]
