"""Pure-Python hot loops. Same signatures and results as ``_kernels``."""

from __future__ import annotations

import numpy as np

NEG = -30000


def greedy_labels(xs, ys, D):
    """Minimal labels for the ordering given by coordinate arrays."""
    n = len(xs)
    f = [0] * n
    for i in range(1, n):
        xi, yi = xs[i], ys[i]
        best = 0
        for j in range(i - 1, -1, -1):
            fj = f[j]
            if fj + D <= best:
                break
            c = fj + D + 1 - abs(xi - xs[j]) - abs(yi - ys[j])
            if c > best:
                best = c
        f[i] = best
    return f


def tight_offsets(xs, ys, D, f):
    """Largest offset c >= 1 such that step i is tight against i - c (0 at i = 0)."""
    n = len(xs)
    out = [0] * n
    for i in range(1, n):
        c = 0
        for j in range(i - 1, -1, -1):
            gap = f[i] - f[j]
            if gap > D:
                break
            if gap == D + 1 - abs(xs[i] - xs[j]) - abs(ys[i] - ys[j]):
                c = i - j
        out[i] = c
    return out


def tplus_table(dist):
    """dp[S, v] = longest path visiting exactly S and ending at v."""
    n = dist.shape[0]
    size = 1 << n
    dp = np.full((size, n), NEG, dtype=np.int16)
    for v in range(n):
        dp[1 << v, v] = 0
    masks = np.arange(size, dtype=np.int64)
    pop = np.zeros(size, dtype=np.int8)
    for v in range(n):
        pop += ((masks >> v) & 1).astype(np.int8)
    d16 = dist.astype(np.int16)
    for k in range(2, n + 1):
        layer = masks[pop == k]
        for v in range(n):
            sel = layer[(layer >> v) & 1 == 1]
            if sel.size == 0:
                continue
            prev = dp[sel ^ (1 << v)]
            dp[sel, v] = (prev + d16[:, v]).max(axis=1)
    return dp


def tplus_witness(dist, dp):
    """Argmax endpoint and back-tracked path, lowest indices on ties."""
    n = dist.shape[0]
    full = (1 << n) - 1
    v = int(np.argmax(dp[full]))
    value = int(dp[full, v])
    path = [v]
    S = full
    while S != (1 << v):
        prev = S ^ (1 << v)
        target = int(dp[S, v])
        for u in range(n):
            if (prev >> u) & 1 and int(dp[prev, u]) + int(dist[u, v]) == target:
                break
        path.append(u)
        S, v = prev, u
    path.reverse()
    return value, path


def bnb_rn(dist, D, dp, firsts, ub, node_limit):
    """Depth-first branch-and-bound for the minimum span.

    Returns ``(best, order, nodes, complete)``; ``best == ub`` with an empty order
    means nothing strictly better than ``ub`` exists.
    """
    n = dist.shape[0]
    d = dist.tolist()
    full = (1 << n) - 1
    # candidate lists, far vertices first
    far = [sorted(range(n), key=lambda w, v=v: (-d[v][w], w)) for v in range(n)]
    use_dp = dp is not None
    best = ub
    best_order: list[int] = []
    nodes = 0
    order = [0] * n
    lab = [0] * n
    ptr = [0] * n
    used = 0
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
                    best_order = order[:]
                depth -= 1
                used ^= 1 << order[depth]
                continue
            last = order[depth - 1]
            cand = far[last]
            advanced = False
            while ptr[depth] < n:
                w = cand[ptr[depth]]
                ptr[depth] += 1
                if (used >> w) & 1:
                    continue
                nodes += 1
                if nodes > node_limit:
                    return best, best_order, nodes, False
                f = 0
                for j in range(depth - 1, -1, -1):
                    fj = lab[j]
                    if fj + D <= f:
                        break
                    c = fj + D + 1 - d[order[j]][w]
                    if c > f:
                        f = c
                rem = n - 1 - depth
                if use_dp:
                    rest = full ^ used
                    bound = f + rem * (D + 1) - int(dp[rest, w])
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
        # depth 0 exits the loop; first stays marked only for this root
    return best, best_order, nodes, True


def odd_search(a, b, hex_lo, use_hex, limit):
    """Warnsdorff depth-first search for a zero-bump odd x odd ordering.

    Works in centred coordinates. Consecutive vertices must lie weakly on
    opposite sides of both medians and every middle vertex must satisfy
    2 * d_rect <= D. Returns a list of (x, y) in grid coordinates or None.
    """
    p, q = (a - 1) // 2, (b - 1) // 2
    D = a + b - 2
    n = a * b
    X = [x - p for x in range(a) for _ in range(b)]
    Y = [y - q for _ in range(a) for y in range(b)]
    R = [abs(X[i]) + abs(Y[i]) for i in range(n)]
    start = p * b + q
    end = p * b + q - 1
    pool = [0] * n
    if use_hex:
        hi = hex_lo + q - p
        for i in range(n):
            y = Y[i]
            dy = hex_lo - y if y < hex_lo else (y - hi if y > hi else 0)
            pool[i] = 1 if abs(X[i]) + dy <= p else 0
    else:
        for i in range(n):
            pool[i] = -1
    used = [False] * n
    used[start] = True
    used[end] = True
    seq = [start]

    def ok(prev, u, w):
        if X[u] * X[w] > 0 or Y[u] * Y[w] > 0:
            return False
        if prev < 0:
            return True
        lo, hi = (X[prev], X[w]) if X[prev] <= X[w] else (X[w], X[prev])
        gx = lo - X[u] if X[u] < lo else (X[u] - hi if X[u] > hi else 0)
        lo, hi = (Y[prev], Y[w]) if Y[prev] <= Y[w] else (Y[w], Y[prev])
        gy = lo - Y[u] if Y[u] < lo else (Y[u] - hi if Y[u] > hi else 0)
        return 2 * (gx + gy) <= D

    def cands(prev, u, want):
        out = []
        for w in range(n):
            if used[w] or (want >= 0 and pool[w] != want):
                continue
            if ok(prev, u, w):
                out.append(w)
        return out

    def want_at(pos):
        # pos is the 0-based position being filled
        if not use_hex:
            return -1
        return 1 if pos % 2 == 0 else 0

    def ranked(pos):
        prev = seq[-2] if len(seq) >= 2 else -1
        u = seq[-1]
        cs = cands(prev, u, want_at(pos))
        keyed = []
        for w in cs:
            used[w] = True
            deg = 0
            nw = want_at(pos + 1)
            for t in range(n):
                if used[t] or (nw >= 0 and pool[t] != nw):
                    continue
                if ok(u, w, t):
                    deg += 1
            used[w] = False
            keyed.append((deg, -R[w], w))
        keyed.sort()
        return [w for _, _, w in keyed]

    nodes = 1
    stack = [ranked(1)]
    ptrs = [0]
    while stack:
        if len(seq) == n - 1:
            if ok(seq[-2], seq[-1], end):
                seq.append(end)
                return [(X[i] + p + 1, Y[i] + q + 1) for i in seq], nodes
            stack.pop()
            ptrs.pop()
            used[seq.pop()] = False
            continue
        top = stack[-1]
        if ptrs[-1] >= len(top):
            stack.pop()
            ptrs.pop()
            if len(seq) > 1:
                used[seq.pop()] = False
            continue
        w = top[ptrs[-1]]
        ptrs[-1] += 1
        nodes += 1
        if nodes > limit:
            return None, nodes
        used[w] = True
        seq.append(w)
        if len(seq) == n - 1:
            stack.append([])
            ptrs.append(0)
        else:
            stack.append(ranked(len(seq)))
            ptrs.append(0)
    return None, nodes
