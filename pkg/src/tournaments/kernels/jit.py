"""Numba-compiled inner loops.

All vertex sets are int64 bitmasks, so these kernels only accept n <= 62.
Every function here has a twin in :mod:`tournaments.kernels.ref` with the
same signature and the same results.
"""

import numpy as np
from numba import njit

# Recursive kernels are compiled per process: numba's on-disk cache does not
# reliably relink self-recursive functions after the module changes.


@njit(cache=True)
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def _lowbit(x):
    i = 0
    while not (x >> i) & 1:
        i += 1
    return i


@njit(cache=True)
def _next_perm(a, lo, hi):
    # in-place next permutation of a[lo:hi]; on wrap-around restore ascending order
    i = hi - 2
    while i >= lo and a[i] >= a[i + 1]:
        i -= 1
    if i < lo:
        a[lo:hi] = np.sort(a[lo:hi])
        return False
    j = hi - 1
    while a[j] <= a[i]:
        j -= 1
    a[i], a[j] = a[j], a[i]
    a[i + 1:hi] = a[i + 1:hi][::-1]
    return True


@njit(cache=True)
def best_cell_labeling(adj, order, bounds):
    """Maximum pair code over all labelings that permute vertices inside cells.

    ``order`` lists vertices cell by cell, ascending within each cell;
    ``bounds`` holds the cell boundaries. Returns (code, labeling).
    """
    n = order.shape[0]
    p = order.copy()
    ncells = bounds.shape[0] - 1
    best = np.int64(-1)
    best_p = p.copy()
    while True:
        code = np.int64(0)
        for i in range(n):
            for j in range(i + 1, n):
                code = (code << 1) | adj[p[i], p[j]]
        if code > best:
            best = code
            best_p[:] = p
        c = ncells - 1
        while c >= 0:
            if bounds[c + 1] - bounds[c] > 1 and _next_perm(p, bounds[c], bounds[c + 1]):
                break
            c -= 1
        if c < 0:
            break
    return best, best_p


@njit
def _max_trans(succ, cand, lb):
    # returns max(lb, size of the largest transitive subset of cand)
    size = _popcount(cand)
    if size <= lb:
        return lb
    if size <= 1:
        return size
    best = lb
    c = cand
    while c:
        v = _lowbit(c)
        c &= c - 1
        nxt = cand & succ[v]
        if 1 + _popcount(nxt) <= best:
            continue
        val = 1 + _max_trans(succ, nxt, best - 1)
        if val > best:
            best = val
    return best


@njit
def max_transitive(succ, cand):
    """Size of the largest subset of ``cand`` that is transitive under ``succ``.

    ``succ[v]`` restricts which vertices may follow ``v``; with out-neighbourhoods
    this is exactly tr.
    """
    if cand == 0:
        return 0
    return _max_trans(succ, cand, 0)


@njit
def _count_trans(succ, cand, k, cap, acc):
    if k == 0:
        return acc + 1
    if _popcount(cand) < k:
        return acc
    if k == 1:
        return acc + _popcount(cand)
    c = cand
    while c and acc < cap:
        v = _lowbit(c)
        c &= c - 1
        acc = _count_trans(succ, cand & succ[v], k - 1, cap, acc)
    return acc


@njit
def count_transitive(succ, cand, k, cap):
    """Number of transitive k-subsets of ``cand``, stopping once ``cap`` is reached."""
    return min(_count_trans(succ, cand, k, cap, 0), cap)


@njit(cache=True)
def homogeneous_masks(out, n):
    """All nontrivial homogeneous sets as ascending bitmasks."""
    full = (1 << n) - 1
    res = np.empty(0, dtype=np.int64)
    buf = np.empty(1024, dtype=np.int64)
    cnt = 0
    for s in range(3, full):
        if s & (s - 1) == 0:
            continue
        ok = True
        rest = full & ~s
        while rest:
            v = _lowbit(rest)
            rest &= rest - 1
            hit = out[v] & s
            if hit != 0 and hit != s:
                ok = False
                break
        if ok:
            if cnt == buf.shape[0]:
                nb = np.empty(2 * cnt, dtype=np.int64)
                nb[:cnt] = buf
                buf = nb
            buf[cnt] = s
            cnt += 1
    res = buf[:cnt].copy()
    return res


@njit(cache=True)
def _partial_ok(bm, pos, placed, n):
    # permanent violations only: non-star component, misplaced center,
    # or a multi-leaf center strictly inside another multi-leaf star's leaf span
    for x in range(n):
        if not (placed >> x) & 1:
            continue
        dx = _popcount(bm[x])
        if dx < 2:
            continue
        lo = n
        hi = -1
        nb = bm[x]
        while nb:
            y = _lowbit(nb)
            nb &= nb - 1
            if _popcount(bm[y]) != 1:
                return False
            if pos[y] < lo:
                lo = pos[y]
            if pos[y] > hi:
                hi = pos[y]
        if lo < pos[x] < hi:
            return False
        for z in range(n):
            if z != x and (placed >> z) & 1 and _popcount(bm[z]) >= 2:
                if lo < pos[z] < hi:
                    return False
    return True


@njit(cache=True)
def _complete_ok(bm, pos, n):
    # every single-edge star needs an endpoint outside all multi-leaf leaf spans
    los = np.empty(n, dtype=np.int64)
    his = np.empty(n, dtype=np.int64)
    k = 0
    for x in range(n):
        if _popcount(bm[x]) >= 2:
            lo = n
            hi = -1
            nb = bm[x]
            while nb:
                y = _lowbit(nb)
                nb &= nb - 1
                lo = min(lo, pos[y])
                hi = max(hi, pos[y])
            los[k] = lo
            his[k] = hi
            k += 1
    for x in range(n):
        if _popcount(bm[x]) != 1:
            continue
        y = _lowbit(bm[x])
        if y < x or _popcount(bm[y]) != 1:
            continue
        okx = True
        oky = True
        for t in range(k):
            if los[t] < pos[x] < his[t]:
                okx = False
            if los[t] < pos[y] < his[t]:
                oky = False
        if not (okx or oky):
            return False
    return True


@njit(cache=True)
def galaxy_search(out, n):
    """Lexicographically first galaxy ordering, or an array of -1."""
    perm = np.full(n, -1, dtype=np.int64)
    pos = np.full(n, -1, dtype=np.int64)
    bm = np.zeros(n, dtype=np.int64)
    nxt = np.zeros(n + 1, dtype=np.int64)
    placed = np.int64(0)
    d = 0
    nxt[0] = 0
    while d >= 0:
        if d == n:
            if _complete_ok(bm, pos, n):
                return perm
            d -= 1
            v = perm[d]
            nb = bm[v]
            while nb:
                u = _lowbit(nb)
                nb &= nb - 1
                bm[u] &= ~(np.int64(1) << v)
            bm[v] = 0
            placed &= ~(np.int64(1) << v)
            pos[v] = -1
            perm[d] = -1
            continue
        v = nxt[d]
        while v < n and (placed >> v) & 1:
            v += 1
        if v >= n:
            d -= 1
            if d >= 0:
                w = perm[d]
                nb = bm[w]
                while nb:
                    u = _lowbit(nb)
                    nb &= nb - 1
                    bm[u] &= ~(np.int64(1) << w)
                bm[w] = 0
                placed &= ~(np.int64(1) << w)
                pos[w] = -1
                perm[d] = -1
            continue
        nxt[d] = v + 1
        back = out[v] & placed
        bm[v] = back
        nb = back
        while nb:
            u = _lowbit(nb)
            nb &= nb - 1
            bm[u] |= np.int64(1) << v
        placed |= np.int64(1) << v
        pos[v] = d
        perm[d] = v
        if _partial_ok(bm, pos, placed, n):
            d += 1
            nxt[d] = 0
        else:
            nb = bm[v]
            while nb:
                u = _lowbit(nb)
                nb &= nb - 1
                bm[u] &= ~(np.int64(1) << v)
            bm[v] = 0
            placed &= ~(np.int64(1) << v)
            pos[v] = -1
            perm[d] = -1
    return np.full(n, -1, dtype=np.int64)


@njit(cache=True)
def find_subset(out, n, k, codes, must, avail):
    """First k-subset (combination order) of ``avail`` containing ``must``
    whose induced pair code lies in the sorted array ``codes``; 0 if none."""
    need = k - _popcount(must)
    pool = np.empty(n, dtype=np.int64)
    m = 0
    free = avail & ~must
    for v in range(n):
        if (free >> v) & 1:
            pool[m] = v
            m += 1
    if need < 0 or need > m:
        return np.int64(0)
    idx = np.arange(need)
    verts = np.empty(k, dtype=np.int64)
    while True:
        s = must
        for t in range(need):
            s |= np.int64(1) << pool[idx[t]]
        c = 0
        x = s
        while x:
            v = _lowbit(x)
            x &= x - 1
            verts[c] = v
            c += 1
        code = np.int64(0)
        for i in range(k):
            oi = out[verts[i]]
            for j in range(i + 1, k):
                code = (code << 1) | ((oi >> verts[j]) & 1)
        h = np.searchsorted(codes, code)
        if h < codes.shape[0] and codes[h] == code:
            return s
        t = need - 1
        while t >= 0 and idx[t] == m - need + t:
            t -= 1
        if t < 0:
            return np.int64(0)
        idx[t] += 1
        for u in range(t + 1, need):
            idx[u] = idx[u - 1] + 1
