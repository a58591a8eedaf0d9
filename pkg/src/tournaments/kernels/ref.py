"""Pure numpy / Python versions of the compiled kernels.

Selected when numba is unavailable or ``TOURNAMENTS_DISABLE_JIT=1``.
Signatures and results match :mod:`tournaments.kernels.jit` exactly.
"""

from itertools import combinations, permutations, product

import numpy as np


def best_cell_labeling(adj, order, bounds):
    n = len(order)
    cells = [order[bounds[c]:bounds[c + 1]] for c in range(len(bounds) - 1)]
    rows = [np.concatenate(choice) for choice in
            product(*(list(permutations(cell)) for cell in cells))]
    perms = np.asarray(rows, dtype=np.int64).reshape(-1, n)
    iu, ju = np.triu_indices(n, 1)
    bits = adj[perms[:, iu], perms[:, ju]].astype(np.int64)
    weights = np.left_shift(np.int64(1), np.arange(len(iu) - 1, -1, -1, dtype=np.int64))
    codes = bits @ weights
    # first maximum in enumeration order, like the compiled odometer
    k = int(np.argmax(codes))
    return np.int64(codes[k]), perms[k].copy()


def max_transitive(succ, cand):
    succ = [int(s) for s in succ]
    memo = {}

    def f(c):
        if c.bit_count() <= 1:
            return c.bit_count()
        if c in memo:
            return memo[c]
        best = 0
        rest = c
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            nxt = c & succ[v]
            if 1 + nxt.bit_count() <= best:
                continue
            best = max(best, 1 + f(nxt))
        memo[c] = best
        return best

    return f(int(cand))


def count_transitive(succ, cand, k, cap):
    succ = [int(s) for s in succ]

    def g(c, k):
        if k == 0:
            return 1
        if c.bit_count() < k:
            return 0
        if k == 1:
            return c.bit_count()
        total = 0
        rest = c
        while rest and total < cap:
            low = rest & -rest
            rest ^= low
            total += g(c & succ[low.bit_length() - 1], k - 1)
        return total

    return min(g(int(cand), k), cap)


def homogeneous_masks(out, n):
    masks = np.arange(1 << n, dtype=np.int64)
    ok = np.ones(len(masks), dtype=bool)
    for v in range(n):
        hit = masks & np.int64(out[v])
        inside = ((masks >> v) & 1).astype(bool)
        ok &= inside | (hit == 0) | (hit == masks)
    size = np.zeros(len(masks), dtype=np.int64)
    for v in range(n):
        size += (masks >> v) & 1
    ok &= (size >= 2) & (masks != (1 << n) - 1)
    return masks[ok]


def _complete_ok(bm, pos, n):
    spans = []
    for x in range(n):
        if bm[x].bit_count() >= 2:
            ps = [pos[y] for y in range(n) if (bm[x] >> y) & 1]
            spans.append((min(ps), max(ps)))
    for x in range(n):
        if bm[x].bit_count() != 1:
            continue
        y = bm[x].bit_length() - 1
        if y < x or bm[y].bit_count() != 1:
            continue
        okx = not any(lo < pos[x] < hi for lo, hi in spans)
        oky = not any(lo < pos[y] < hi for lo, hi in spans)
        if not (okx or oky):
            return False
    return True


def _partial_ok(bm, pos, placed):
    centers = [x for x in placed if bm[x].bit_count() >= 2]
    for x in centers:
        leaves = [y for y in placed if (bm[x] >> y) & 1]
        if any(bm[y].bit_count() != 1 for y in leaves):
            return False
        lo = min(pos[y] for y in leaves)
        hi = max(pos[y] for y in leaves)
        if lo < pos[x] < hi:
            return False
        if any(lo < pos[z] < hi for z in centers if z != x):
            return False
    return True


def galaxy_search(out, n):
    out = [int(o) for o in out]
    bm = [0] * n
    pos = [-1] * n
    perm = []

    def dfs(placed_mask):
        if len(perm) == n:
            return _complete_ok(bm, pos, n)
        for v in range(n):
            if (placed_mask >> v) & 1:
                continue
            back = out[v] & placed_mask
            bm[v] = back
            for u in range(n):
                if (back >> u) & 1:
                    bm[u] |= 1 << v
            pos[v] = len(perm)
            perm.append(v)
            if _partial_ok(bm, pos, perm) and dfs(placed_mask | (1 << v)):
                return True
            perm.pop()
            pos[v] = -1
            for u in range(n):
                if (back >> u) & 1:
                    bm[u] &= ~(1 << v)
            bm[v] = 0
        return False

    if dfs(0):
        return np.asarray(perm, dtype=np.int64)
    return np.full(n, -1, dtype=np.int64)


def find_subset(out, n, k, codes, must, avail):
    out = [int(o) for o in out]
    must, avail = int(must), int(avail)
    need = k - must.bit_count()
    pool = [v for v in range(n) if (avail & ~must) >> v & 1]
    if need < 0 or need > len(pool):
        return 0
    lookup = set(int(c) for c in codes)
    for extra in combinations(pool, need):
        s = must
        for v in extra:
            s |= 1 << v
        verts = [v for v in range(n) if (s >> v) & 1]
        code = 0
        for i in range(k):
            for j in range(i + 1, k):
                code = (code << 1) | ((out[verts[i]] >> verts[j]) & 1)
        if code in lookup:
            return s
    return 0
