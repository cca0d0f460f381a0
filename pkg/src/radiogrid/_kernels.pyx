# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops. Mirrors ``_pykernels`` exactly."""

import numpy as np
cimport numpy as cnp
from libc.stdlib cimport malloc, free

cnp.import_array()

ctypedef cnp.int64_t i64

cdef int NEG = -30000


cdef inline i64 labs(i64 v) nogil:
    return v if v >= 0 else -v


def greedy_labels(xs, ys, int D):
    cdef Py_ssize_t n = len(xs), i, j
    cdef i64[:] X = np.asarray(xs, dtype=np.int64)
    cdef i64[:] Y = np.asarray(ys, dtype=np.int64)
    out = np.zeros(n, dtype=np.int64)
    cdef i64[:] f = out
    cdef i64 best, fj, c, xi, yi
    for i in range(1, n):
        xi = X[i]
        yi = Y[i]
        best = 0
        j = i - 1
        while j >= 0:
            fj = f[j]
            if fj + D <= best:
                break
            c = fj + D + 1 - labs(xi - X[j]) - labs(yi - Y[j])
            if c > best:
                best = c
            j -= 1
        f[i] = best
    return out.tolist()



def tight_offsets(xs, ys, int D, f_in):
    cdef Py_ssize_t n = len(xs), i, j
    cdef i64[:] X = np.asarray(xs, dtype=np.int64)
    cdef i64[:] Y = np.asarray(ys, dtype=np.int64)
    cdef i64[:] f = np.asarray(f_in, dtype=np.int64)
    out = np.zeros(n, dtype=np.int64)
    cdef i64[:] o = out
    cdef i64 gap, c
    for i in range(1, n):
        c = 0
        j = i - 1
        while j >= 0:
            gap = f[i] - f[j]
            if gap > D:
                break
            if gap == D + 1 - labs(X[i] - X[j]) - labs(Y[i] - Y[j]):
                c = i - j
            j -= 1
        o[i] = c
    return out.tolist()


def tplus_table(dist):
    cdef int n = dist.shape[0]
    cdef Py_ssize_t size = (<Py_ssize_t>1) << n
    table = np.full((size, n), NEG, dtype=np.int16)
    cdef short[:, :] dp = table
    cdef i64[:, :] d = np.asarray(dist, dtype=np.int64)
    cdef Py_ssize_t S, prev
    cdef int v, u, best, c
    with nogil:
        for v in range(n):
            dp[(<Py_ssize_t>1) << v, v] = 0
        for S in range(1, size):
            for v in range(n):
                if not (S >> v) & 1:
                    continue
                prev = S ^ ((<Py_ssize_t>1) << v)
                if prev == 0:
                    continue
                best = NEG
                for u in range(n):
                    if (prev >> u) & 1:
                        c = dp[prev, u] + d[u, v]
                        if c > best:
                            best = c
                dp[S, v] = best
    return table


def bnb_rn(dist, int D, dp_table, firsts, i64 ub, i64 node_limit):
    cdef int n = dist.shape[0]
    cdef i64[:, :] d = np.asarray(dist, dtype=np.int64)
    cdef bint use_dp = dp_table is not None
    cdef short[:, :] dp
    if use_dp:
        dp = dp_table
    far_arr = np.zeros((n, n), dtype=np.int64)
    for v in range(n):
        far_arr[v] = sorted(range(n), key=lambda w, v=v: (-dist[v, w], w))
    cdef i64[:, :] far = far_arr
    cdef i64 full = (1 << n) - 1
    cdef i64 best = ub
    best_order = []
    cdef i64 nodes = 0
    cdef i64[:] order = np.zeros(n, dtype=np.int64)
    cdef i64[:] lab = np.zeros(n, dtype=np.int64)
    cdef i64[:] ptr = np.zeros(n + 1, dtype=np.int64)
    cdef i64 used, f, fj, c, bound, rest
    cdef int depth, last, w, j, rem
    cdef bint advanced
    for first in firsts:
        order[0] = first
        lab[0] = 0
        used = 1 << first
        depth = 1
        ptr[1] = 0
        while depth >= 1:
            if depth == n:
                if lab[n - 1] < best:
                    best = lab[n - 1]
                    best_order = [int(order[k]) for k in range(n)]
                depth -= 1
                used ^= 1 << order[depth]
                continue
            last = order[depth - 1]
            advanced = False
            while ptr[depth] < n:
                w = far[last, ptr[depth]]
                ptr[depth] += 1
                if (used >> w) & 1:
                    continue
                nodes += 1
                if nodes > node_limit:
                    return best, best_order, nodes, False
                f = 0
                j = depth - 1
                while j >= 0:
                    fj = lab[j]
                    if fj + D <= f:
                        break
                    c = fj + D + 1 - d[order[j], w]
                    if c > f:
                        f = c
                    j -= 1
                rem = n - 1 - depth
                if use_dp:
                    rest = full ^ used
                    bound = f + rem * (D + 1) - dp[rest, w]
                else:
                    bound = f + rem
                if bound >= best:
                    continue
                order[depth] = w
                lab[depth] = f
                used |= 1 << w
                depth += 1
                if depth < n:
                    ptr[depth] = 0
                advanced = True
                break
            if not advanced:
                depth -= 1
                if depth >= 1:
                    used ^= 1 << order[depth]
    return best, best_order, nodes, True


cdef inline bint _ok(i64* X, i64* Y, int D, int prev, int u, int w) nogil:
    cdef i64 lo, hi, gx, gy
    if X[u] * X[w] > 0 or Y[u] * Y[w] > 0:
        return False
    if prev < 0:
        return True
    if X[prev] <= X[w]:
        lo = X[prev]; hi = X[w]
    else:
        lo = X[w]; hi = X[prev]
    gx = lo - X[u] if X[u] < lo else (X[u] - hi if X[u] > hi else 0)
    if Y[prev] <= Y[w]:
        lo = Y[prev]; hi = Y[w]
    else:
        lo = Y[w]; hi = Y[prev]
    gy = lo - Y[u] if Y[u] < lo else (Y[u] - hi if Y[u] > hi else 0)
    return 2 * (gx + gy) <= D


cdef void _rank(i64* X, i64* Y, int D, int n, i64* pool, char* used, i64* seq,
                int slen, bint use_hex, int rmax, i64* out, i64* count, i64* keys):
    # pos = slen is the position being filled
    cdef int prev = seq[slen - 2] if slen >= 2 else -1
    cdef int u = seq[slen - 1]
    cdef int want = -1, nw = -1
    cdef int w, t, deg, m = 0, i, j
    cdef i64 key, tmpk, tmpw
    if use_hex:
        want = 1 if slen % 2 == 0 else 0
        nw = 1 if (slen + 1) % 2 == 0 else 0
    for w in range(n):
        if used[w] or (want >= 0 and pool[w] != want):
            continue
        if not _ok(X, Y, D, prev, u, w):
            continue
        used[w] = 1
        deg = 0
        for t in range(n):
            if used[t] or (nw >= 0 and pool[t] != nw):
                continue
            if _ok(X, Y, D, u, w, t):
                deg += 1
        used[w] = 0
        # (deg, -R, w) packed; R <= rmax, w < n
        key = (<i64>deg * (rmax + 1) + (rmax - labs(X[w]) - labs(Y[w]))) * n + w
        out[m] = w
        keys[m] = key
        m += 1
    # insertion sort by key
    for i in range(1, m):
        tmpk = keys[i]
        tmpw = out[i]
        j = i - 1
        while j >= 0 and keys[j] > tmpk:
            keys[j + 1] = keys[j]
            out[j + 1] = out[j]
            j -= 1
        keys[j + 1] = tmpk
        out[j + 1] = tmpw
    count[0] = m


def odd_search(int a, int b, int hex_lo, bint use_hex, i64 limit):
    cdef int p = (a - 1) // 2, q = (b - 1) // 2
    cdef int D = a + b - 2, n = a * b
    cdef int i, w, t, deg, nw, want, pos, prev, u, hi, y, dy, k
    X_arr = np.array([x - p for x in range(a) for _ in range(b)], dtype=np.int64)
    Y_arr = np.array([yy - q for _ in range(a) for yy in range(b)], dtype=np.int64)
    cdef i64[:] Xv = X_arr
    cdef i64[:] Yv = Y_arr
    cdef i64* X = &Xv[0]
    cdef i64* Y = &Yv[0]
    cdef i64[:] pool = np.full(n, -1, dtype=np.int64)
    cdef int start = p * b + q, end = p * b + q - 1
    if use_hex:
        hi = hex_lo + q - p
        for i in range(n):
            y = Y[i]
            dy = hex_lo - y if y < hex_lo else (y - hi if y > hi else 0)
            pool[i] = 1 if labs(X[i]) + dy <= p else 0
    cdef char[:] used = np.zeros(n, dtype=np.int8)
    used[start] = 1
    used[end] = 1
    cdef i64[:] seq = np.zeros(n, dtype=np.int64)
    cdef int slen = 1
    seq[0] = start
    # candidate frames stored flat: frame k occupies cand[k*n : k*n+cnt[k]]
    cdef i64[:] cand = np.zeros(n * n, dtype=np.int64)
    cdef i64[:] cnt = np.zeros(n, dtype=np.int64)
    cdef i64[:] ptrs = np.zeros(n, dtype=np.int64)
    cdef i64[:] keys = np.zeros(n, dtype=np.int64)
    cdef i64 nodes = 1
    cdef int top
    top = 0
    _rank(X, Y, D, n, &pool[0], &used[0], &seq[0], slen, use_hex, p + q,
          &cand[0], &cnt[0], &keys[0])
    ptrs[0] = 0
    while top >= 0:
        if slen == n - 1:
            if _ok(X, Y, D, seq[slen - 2], seq[slen - 1], end):
                seq[slen] = end
                slen += 1
                return [(int(X[seq[k]]) + p + 1, int(Y[seq[k]]) + q + 1) for k in range(n)], nodes
            top -= 1
            slen -= 1
            used[seq[slen]] = 0
            continue
        if ptrs[top] >= cnt[top]:
            top -= 1
            if slen > 1:
                slen -= 1
                used[seq[slen]] = 0
            continue
        w = cand[top * n + ptrs[top]]
        ptrs[top] += 1
        nodes += 1
        if nodes > limit:
            return None, nodes
        used[w] = 1
        seq[slen] = w
        slen += 1
        top += 1
        ptrs[top] = 0
        if slen == n - 1:
            cnt[top] = 0
        else:
            _rank(X, Y, D, n, &pool[0], &used[0], &seq[0], slen, use_hex, p + q,
                  &cand[top * n], &cnt[top], &keys[0])
    return None, nodes
