# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels; same signatures and results as ``_pykernels``."""
from itertools import combinations

import numpy as np

cimport cython
from libc.stdint cimport int32_t, int64_t

NEG = -(1 << 29)
cdef int32_t CNEG = -(1 << 29)
cdef int32_t HALF_NEG = -(1 << 28)

BACKEND = "cython"


def singleton_layer(int n):
    out = np.full((n, n, n), NEG, dtype=np.int32)
    for v in range(n):
        out[v, v, v] = 0
    return out


cdef inline int _members(int64_t mask, int n, int* mem) noexcept nogil:
    cdef int c = 0, b
    for b in range(n):
        if (mask >> b) & 1:
            mem[c] = b
            c += 1
    return c


def corollary_layer(int32_t[:, :, ::1] prev, int32_t[::1] rank, int64_t[::1] masks,
                    w, int n, int s):
    cdef int32_t[:, ::1] wv = np.ascontiguousarray(w, dtype=np.int32)
    out_arr = np.full((masks.shape[0], n, n), NEG, dtype=np.int32)
    cdef int32_t[:, :, ::1] out = out_arr
    cdef int mem[64]
    cdef Py_ssize_t row
    cdef int pu, pv, py, u, v, y, pr
    cdef int32_t best, a, c
    cdef int64_t mask
    with nogil:
        for row in range(masks.shape[0]):
            mask = masks[row]
            _members(mask, n, mem)
            for pu in range(s):
                u = mem[pu]
                pr = rank[mask ^ (<int64_t>1 << u)]
                for pv in range(s):
                    v = mem[pv]
                    if v == u:
                        continue
                    best = CNEG
                    for py in range(s):
                        y = mem[py]
                        if y == u:
                            continue
                        a = prev[pr, v, y]
                        if a <= HALF_NEG:
                            continue
                        c = a + wv[y, u]
                        if c > best:
                            best = c
                    out[row, v, u] = best
    return out_arr


def split_layer(int32_t[:, :, ::1] A, int32_t[:, :, ::1] B, int32_t[::1] rank,
                int64_t[::1] masks, int n, int s, int k):
    combs = np.array(list(combinations(range(s), k)), dtype=np.int32).reshape(-1, k)
    comps = np.array([[p for p in range(s) if p not in cc] for cc in combs.tolist()],
                     dtype=np.int32).reshape(len(combs), s - k)
    cdef int32_t[:, ::1] cv = combs
    cdef int32_t[:, ::1] xv = comps
    out_arr = np.full((masks.shape[0], n, n), NEG, dtype=np.int32)
    cdef int32_t[:, :, ::1] out = out_arr
    cdef int mem[64]
    cdef Py_ssize_t row, ci, ncomb = combs.shape[0]
    cdef int a_i, b_i, v_i, u_i, y, v, u, ra, rb
    cdef int rest_n = s - k
    cdef int64_t mask, sub
    cdef int32_t fa, fb, c
    with nogil:
        for row in range(masks.shape[0]):
            mask = masks[row]
            _members(mask, n, mem)
            for ci in range(ncomb):
                sub = 0
                for a_i in range(k):
                    sub |= (<int64_t>1) << mem[cv[ci, a_i]]
                ra = rank[sub]
                for a_i in range(k):
                    y = mem[cv[ci, a_i]]
                    rb = rank[(mask ^ sub) | ((<int64_t>1) << y)]
                    for v_i in range(k):
                        v = mem[cv[ci, v_i]]
                        fa = A[ra, v, y]
                        if fa <= HALF_NEG:
                            continue
                        for u_i in range(rest_n):
                            u = mem[xv[ci, u_i]]
                            fb = B[rb, y, u]
                            if fb <= HALF_NEG:
                                continue
                            c = fa + fb
                            if c > out[row, v, u]:
                                out[row, v, u] = c
    return out_arr


# -- SA-IS ------------------------------------------------------------------------------


def _sa_naive(s):
    n = len(s)
    return sorted(range(n), key=lambda i: list(s[i:]))


cdef _induce(int32_t[::1] s, int32_t[::1] sa, unsigned char[::1] ls,
             int32_t[::1] sum_l, int32_t[::1] sum_s, lms, int n, int upper):
    cdef Py_ssize_t i
    cdef int v, d
    buf_arr = np.empty(upper + 1, dtype=np.int32)
    cdef int32_t[::1] buf = buf_arr
    sa[:] = -1
    buf[:] = sum_s
    for d in lms:
        if d == n:
            continue
        sa[buf[s[d]]] = d
        buf[s[d]] += 1
    buf[:] = sum_l
    sa[buf[s[n - 1]]] = n - 1
    buf[s[n - 1]] += 1
    for i in range(n):
        v = sa[i]
        if v >= 1 and not ls[v - 1]:
            sa[buf[s[v - 1]]] = v - 1
            buf[s[v - 1]] += 1
    buf[:] = sum_l
    for i in range(n - 1, -1, -1):
        v = sa[i]
        if v >= 1 and ls[v - 1]:
            buf[s[v - 1] + 1] -= 1
            sa[buf[s[v - 1] + 1]] = v - 1


def _sa_is(s_arr, int upper):
    cdef int n = len(s_arr)
    if n == 0:
        return np.zeros(0, dtype=np.int32)
    if n < 10:
        return np.array(_sa_naive(s_arr.tolist()), dtype=np.int32)
    cdef int32_t[::1] s = s_arr
    sa_arr = np.empty(n, dtype=np.int32)
    cdef int32_t[::1] sa = sa_arr
    ls_arr = np.zeros(n, dtype=np.uint8)
    cdef unsigned char[::1] ls = ls_arr
    cdef Py_ssize_t i
    for i in range(n - 2, -1, -1):
        ls[i] = ls[i + 1] if s[i] == s[i + 1] else (s[i] < s[i + 1])
    sum_l_arr = np.zeros(upper + 1, dtype=np.int32)
    sum_s_arr = np.zeros(upper + 1, dtype=np.int32)
    cdef int32_t[::1] sum_l = sum_l_arr
    cdef int32_t[::1] sum_s = sum_s_arr
    for i in range(n):
        if not ls[i]:
            sum_s[s[i]] += 1
        else:
            sum_l[s[i] + 1] += 1
    for i in range(upper + 1):
        sum_s[i] += sum_l[i]
        if i < upper:
            sum_l[i + 1] += sum_s[i]

    lms_map_arr = np.full(n + 1, -1, dtype=np.int32)
    cdef int32_t[::1] lms_map = lms_map_arr
    cdef int m = 0
    lms = []
    for i in range(1, n):
        if not ls[i - 1] and ls[i]:
            lms_map[i] = m
            m += 1
            lms.append(i)

    _induce(s, sa, ls, sum_l, sum_s, lms, n, upper)

    cdef int l, r, end_l, end_r, rec_upper
    cdef bint same
    if m:
        sorted_lms = [v for v in sa_arr.tolist() if lms_map[v] != -1]
        rec_arr = np.zeros(m, dtype=np.int32)
        rec_upper = 0
        rec_arr[lms_map[sorted_lms[0]]] = 0
        for i in range(1, m):
            l = sorted_lms[i - 1]
            r = sorted_lms[i]
            end_l = lms[lms_map[l] + 1] if lms_map[l] + 1 < m else n
            end_r = lms[lms_map[r] + 1] if lms_map[r] + 1 < m else n
            same = True
            if end_l - l != end_r - r:
                same = False
            else:
                while l < end_l:
                    if s[l] != s[r]:
                        break
                    l += 1
                    r += 1
                if l == n or r == n or s[l] != s[r]:
                    same = False
            if not same:
                rec_upper += 1
            rec_arr[lms_map[sorted_lms[i]]] = rec_upper
        rec_sa = _sa_is(rec_arr, rec_upper)
        sorted_lms = [lms[x] for x in rec_sa.tolist()]
        _induce(s, sa, ls, sum_l, sum_s, sorted_lms, n, upper)
    return sa_arr


def suffix_array(text):
    """SA-IS induced sorting, linear time."""
    arr = np.frombuffer(bytes(text), dtype=np.uint8).astype(np.int32)
    return _sa_is(arr, 255).astype(np.int64)
