"""Deliberately naive re-implementations used as independent oracles.

Everything here works on plain adjacency matrices (lists of lists) and
itertools, without touching bitmasks, kernels or canonical forms.
"""

from fractions import Fraction
from itertools import combinations, permutations, product


def matrix(t):
    return [[1 if t.beats(u, v) else 0 for v in range(t.n)] for u in range(t.n)]


def isomorphic(a, b):
    if a.n != b.n:
        return False
    A, B = matrix(a), matrix(b)
    n = a.n
    return any(all(A[u][v] == B[p[u]][p[v]] for u in range(n) for v in range(n))
               for p in permutations(range(n)))


def orbit_count(n):
    """Number of isomorphism classes of n-vertex tournaments, by orbit bucketing."""
    pairs = list(combinations(range(n), 2))
    seen, classes = set(), 0
    perms = list(permutations(range(n)))
    for bits in product((0, 1), repeat=len(pairs)):
        if bits in seen:
            continue
        classes += 1
        win = {(i, j): b for (i, j), b in zip(pairs, bits)}
        for p in perms:
            img = []
            for i, j in pairs:
                # pair (i, j) in the image comes from the preimage pair
                a, b = p.index(i), p.index(j)
                img.append(win[(a, b)] if a < b else 1 - win[(b, a)])
            seen.add(tuple(img))
    return classes


def transitive(A, S):
    S = list(S)
    return all(not (A[x][y] and A[y][z] and A[z][x]) for x, y, z in permutations(S, 3))


def tr(t):
    A = matrix(t)
    for k in range(t.n, 0, -1):
        if any(transitive(A, S) for S in combinations(range(t.n), k)):
            return k
    return 0


def homogeneous_sets(t):
    A = matrix(t)
    out = []
    for k in range(2, t.n):
        for S in combinations(range(t.n), k):
            if all(len({A[x][s] for s in S}) == 1 for x in range(t.n) if x not in S):
                out.append(S)
    return out


def contains(t, h):
    for S in combinations(range(t.n), h.n):
        sub = [[1 if t.beats(S[i], S[j]) else 0 for j in range(h.n)] for i in range(h.n)]
        H = matrix(h)
        if any(all(sub[i][j] == H[p[i]][p[j]] for i in range(h.n) for j in range(h.n))
               for p in permutations(range(h.n))):
            return True
    return False


def galaxy_ordering(t, theta):
    """Galaxy test read straight off the definition, in positions."""
    n = t.n
    A = matrix(t)
    pos_edges = [(p, q) for p in range(n) for q in range(p + 1, n) if A[theta[q]][theta[p]]]
    adj = {p: set() for p in range(n)}
    for p, q in pos_edges:
        adj[p].add(q)
        adj[q].add(p)
    comps, seen = [], set()
    for s in range(n):
        if s in seen or not adj[s]:
            continue
        comp, todo = set(), [s]
        while todo:
            x = todo.pop()
            if x not in comp:
                comp.add(x)
                todo.extend(adj[x])
        seen |= comp
        comps.append(sorted(comp))
    options = []
    for comp in comps:
        m = len(comp) - 1
        edges = sum(len(adj[x]) for x in comp) // 2
        if edges != m:
            return False
        choices = []
        for c in comp:
            leaves = [x for x in comp if x != c]
            if adj[c] == set(leaves) and (c < min(leaves) or c > max(leaves)):
                choices.append((c, leaves))
        if not choices:
            return False
        options.append(choices)
    for pick in product(*options):
        if all(not (min(l2) < c1 < max(l2))
               for i, (c1, _) in enumerate(pick) for j, (_, l2) in enumerate(pick) if i != j):
            return True
    return False


def is_galaxy(t):
    return any(galaxy_ordering(t, theta) for theta in permutations(range(t.n)))


def smooth_valid(t, c, lam, w, sets):
    """Direct reading of the smooth-structure definition; True/False only."""
    A = matrix(t)
    n = t.n
    best = tr(t)
    for kind, S in zip(w, sets):
        if kind == 0 and Fraction(len(S)) < c * n:
            return False
        if kind == 1 and (not transitive(A, S) or Fraction(len(S)) < c * best):
            return False
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            Si, Sj = sets[i], sets[j]
            for x in Si:
                if Fraction(sum(A[x][y] for y in Sj), len(Sj)) < 1 - lam:
                    return False
            for y in Sj:
                if Fraction(sum(A[x][y] for x in Si), len(Si)) < 1 - lam:
                    return False
    return True
