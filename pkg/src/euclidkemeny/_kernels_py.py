"""Numpy fallback for the linear-ordering kernels.

Both kernels take ``cost[i][j]``, the price of placing ``i`` before ``j``,
and minimise the total over all pairs of a permutation. Ties resolve to the
lexicographically smallest permutation.
"""

from itertools import permutations

import numpy as np


def _half_tables(cost, n, h):
    """Per-candidate subset sums of cost rows, split into low and high bit halves."""
    lo = np.zeros((n, 1 << h), dtype=np.int64)
    hi = np.zeros((n, 1 << (n - h)), dtype=np.int64)
    for s in range(1, 1 << h):
        x = (s & -s).bit_length() - 1
        lo[:, s] = lo[:, s & (s - 1)] + cost[:, x]
    for s in range(1, 1 << (n - h)):
        x = (s & -s).bit_length() - 1
        hi[:, s] = hi[:, s & (s - 1)] + cost[:, x + h]
    return lo, hi


def dp_order(cost):
    """Subset DP: ``g[S]`` is the cheapest ordering of ``S`` with its first element in front of the rest."""
    cost = np.ascontiguousarray(cost, dtype=np.int64)
    n = cost.shape[0]
    h = n // 2
    lomask = (1 << h) - 1
    lo, hi = _half_tables(cost, n, h)
    size = 1 << n
    subsets = np.arange(size, dtype=np.int64)
    popcount = np.zeros(size, dtype=np.int64)
    for k in range(n):
        popcount += (subsets >> k) & 1
    g = np.zeros(size, dtype=np.int64)
    inf = np.iinfo(np.int64).max // 2
    for layer in range(1, n + 1):
        S = subsets[popcount == layer]
        best = np.full(S.shape, inf, dtype=np.int64)
        for x in range(n):
            has = ((S >> x) & 1).astype(bool)
            Sx = S[has]
            val = lo[x, Sx & lomask] + hi[x, Sx >> h] + g[Sx ^ (1 << x)]
            best[has] = np.minimum(best[has], val)
        g[S] = best
    order = []
    S = size - 1
    while S:
        for x in range(n):
            bit = 1 << x
            if S & bit and lo[x, S & lomask] + hi[x, S >> h] + g[S ^ bit] == g[S]:
                order.append(x)
                S ^= bit
                break
    return order, int(g[size - 1])


def _perm_costs(cost, perms):
    m = perms.shape[1]
    total = np.zeros(perms.shape[0], dtype=np.int64)
    for a in range(m - 1):
        for b in range(a + 1, m):
            total += cost[perms[:, a], perms[:, b]]
    return total


def brute_order(cost, collect=False, limit=0):
    """Enumerate all permutations in lexicographic order; returns ``(best, cost, count, optima)``."""
    cost = np.ascontiguousarray(cost, dtype=np.int64)
    n = cost.shape[0]
    if n == 1:
        return [0], 0, 1, [(0,)] if collect else []
    tails = np.array(list(permutations(range(n - 1))), dtype=np.int64)
    chunks = []
    for first in range(n):
        rest = np.array([d for d in range(n) if d != first], dtype=np.int64)
        perms = rest[tails]
        head = int(cost[first].sum() - cost[first, first])
        chunks.append((first, perms, head + _perm_costs(cost, perms)))
    best = min(int(c.min()) for _, _, c in chunks)
    count = 0
    optima = []
    best_order = None
    for first, perms, c in chunks:
        hits = np.flatnonzero(c == best)
        count += len(hits)
        if best_order is None and len(hits):
            best_order = [first, *(int(v) for v in perms[hits[0]])]
        if collect:
            for k in hits:
                if limit > 0 and len(optima) >= limit:
                    break
                optima.append((first, *(int(v) for v in perms[k])))
    return best_order, best, count, optima
