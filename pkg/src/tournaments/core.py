"""Tournaments as tuples of out-neighbourhood bitmasks.

Vertex sets are passed around either as int bitmasks or as iterables of
vertex indices; functions that return a vertex set give a sorted tuple.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from math import comb
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .kernels import ref

MAX_N = 64
# refinement + exhaustive cell permutation stays cheap up to here
MAX_CANON_N = 10
# largest pattern whose full set of labelled codes is tabulated for containment
MAX_TABLE_K = 9

VertexSet = Iterable[int] | int


def as_mask(X: VertexSet, n: int) -> int:
    """Bitmask for a vertex set given as a mask or an iterable of indices."""
    if isinstance(X, (int, np.integer)):
        m = int(X)
        if m < 0 or m >> n:
            raise ValueError(f"vertex mask {m:#x} references vertices >= {n}")
        return m
    m = 0
    for v in X:
        v = int(v)
        if not 0 <= v < n:
            raise ValueError(f"vertex {v} out of range for n={n}")
        m |= 1 << v
    return m


def members(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


@dataclass(frozen=True)
class Tournament:
    """A tournament on vertices ``0..n-1``.

    ``out[v]`` is the bitmask of out-neighbours of ``v``. Instances are
    immutable and validated on construction.
    """

    n: int
    out: tuple[int, ...]

    def __post_init__(self):
        n = self.n
        if not 1 <= n <= MAX_N:
            raise ValueError(f"n must be in 1..{MAX_N}, got {n}")
        if len(self.out) != n:
            raise ValueError("need one out-mask per vertex")
        full = (1 << n) - 1
        for v, o in enumerate(self.out):
            if o & ~full:
                raise ValueError(f"vertex {v} has out-neighbours outside 0..{n - 1}")
            if (o >> v) & 1:
                raise ValueError(f"self-arc at vertex {v}")
        for i in range(n):
            for j in range(i + 1, n):
                if ((self.out[i] >> j) & 1) == ((self.out[j] >> i) & 1):
                    raise ValueError(f"pair ({i},{j}) is not oriented exactly once")

    # --- basic queries -------------------------------------------------
    def beats(self, u: int, v: int) -> bool:
        return bool((self.out[u] >> v) & 1)

    def out_degree(self, v: int) -> int:
        return self.out[v].bit_count()

    def in_degree(self, v: int) -> int:
        return self.n - 1 - self.out[v].bit_count()

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        return members(self.out[v])

    def in_mask(self, v: int) -> int:
        return ((1 << self.n) - 1) & ~self.out[v] & ~(1 << v)

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        return members(self.in_mask(v))

    def scores(self) -> tuple[int, ...]:
        return tuple(o.bit_count() for o in self.out)

    def is_regular(self) -> bool:
        return len(set(self.scores())) == 1

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in range(self.n) if (self.out[u] >> v) & 1]

    def orientation_bits(self) -> str:
        """One character per pair (i, j), i < j, lexicographic; '1' means i -> j."""
        return "".join("1" if (self.out[i] >> j) & 1 else "0"
                       for i in range(self.n) for j in range(i + 1, self.n))

    def adjacency(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.uint8)
        for u in range(self.n):
            for v in members(self.out[u]):
                a[u, v] = 1
        return a

    def out_array(self):
        """Out-masks in the form the kernels take."""
        if self.n <= kernels.MAX_KERNEL_N:
            return np.asarray(self.out, dtype=np.int64)
        return list(self.out)

    def __repr__(self):
        return f"Tournament(n={self.n}, bits='{self.orientation_bits()}')"


def from_orientation(n: int, bits: str | Sequence[int]) -> Tournament:
    """Inverse of :meth:`Tournament.orientation_bits`."""
    bits = [int(b) for b in bits]
    if len(bits) != comb(n, 2):
        raise ValueError(f"expected {comb(n, 2)} orientation bits for n={n}, got {len(bits)}")
    out = [0] * n
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            if bits[k]:
                out[i] |= 1 << j
            else:
                out[j] |= 1 << i
            k += 1
    return Tournament(n, tuple(out))


def build(n: int, arcs: Iterable[tuple[int, int]]) -> Tournament:
    """Tournament from an arc list; unlisted pairs point from lower to higher index."""
    if not 1 <= n <= MAX_N:
        raise ValueError(f"n must be in 1..{MAX_N}, got {n}")
    seen = set()
    out = [0] * n
    for i in range(n):
        out[i] = ((1 << n) - 1) & ~((1 << (i + 1)) - 1)
    for u, v in arcs:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"arc ({u},{v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"self-arc ({u},{v})")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ValueError(f"pair {key} listed more than once")
        seen.add(key)
        out[v] &= ~(1 << u)
        out[u] |= 1 << v
    return Tournament(n, tuple(out))


def from_ordering(theta: Sequence[int], backward: Iterable[tuple[int, int]]) -> Tournament:
    """Tournament whose backward arcs under ``theta`` are exactly ``backward``.

    ``theta`` lists the vertices 0..n-1 in order; every other pair points forward.
    """
    n = len(theta)
    pos = {v: p for p, v in enumerate(theta)}
    if sorted(pos) != list(range(n)):
        raise ValueError("theta must be a permutation of 0..n-1")
    arcs = []
    back = set()
    for u, v in backward:
        if u not in pos or v not in pos:
            raise ValueError(f"arc ({u},{v}) uses a vertex outside theta")
        if pos[u] <= pos[v]:
            raise ValueError(f"arc ({u},{v}) is not backward under theta")
        if (u, v) in back:
            raise ValueError(f"arc ({u},{v}) listed twice")
        back.add((u, v))
    for p in range(n):
        for q in range(p + 1, n):
            a, b = theta[p], theta[q]
            arcs.append((b, a) if (b, a) in back else (a, b))
    return build(n, arcs)


def transitive_tournament(n: int) -> Tournament:
    return build(n, [])


def complement(t: Tournament) -> Tournament:
    return Tournament(t.n, tuple(t.in_mask(v) for v in range(t.n)))


def relabel(t: Tournament, perm: Sequence[int]) -> Tournament:
    """Copy of ``t`` in which old vertex ``v`` becomes ``perm[v]``."""
    n = t.n
    if sorted(perm) != list(range(n)):
        raise ValueError("perm must be a permutation of 0..n-1")
    out = [0] * n
    for u in range(n):
        m = 0
        for v in members(t.out[u]):
            m |= 1 << perm[v]
        out[perm[u]] = m
    return Tournament(n, tuple(out))


def induced(t: Tournament, X: VertexSet) -> Tournament:
    """Subtournament on ``X``, relabelled 0..|X|-1 in increasing vertex order."""
    verts = members(as_mask(X, t.n))
    if not verts:
        raise ValueError("induced subtournament needs a nonempty vertex set")
    index = {v: i for i, v in enumerate(verts)}
    out = []
    for v in verts:
        m = 0
        for u in members(t.out[v] & as_mask(verts, t.n)):
            m |= 1 << index[u]
        out.append(m)
    return Tournament(len(verts), tuple(out))


def add_vertex(t: Tournament, out_to: VertexSet) -> Tournament:
    """``t`` plus a new vertex ``n`` that beats exactly ``out_to`` and loses to the rest."""
    n = t.n
    beat = as_mask(out_to, n)
    out = [o | (0 if (beat >> v) & 1 else 1 << n) for v, o in enumerate(t.out)]
    out.append(beat)
    return Tournament(n + 1, tuple(out))


# --- canonical forms ---------------------------------------------------

@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Isomorphism-class key: vertex count plus the maximal pair code."""

    n: int
    code: int

    @property
    def bits(self) -> str:
        k = comb(self.n, 2)
        return format(self.code, f"0{k}b") if k else ""

    @property
    def hex(self) -> str:
        width = max(1, -(-comb(self.n, 2) // 4))
        return f"{self.n}:{self.code:0{width}x}"

    @classmethod
    def from_hex(cls, s: str) -> "CanonicalForm":
        n, h = s.split(":")
        return cls(int(n), int(h, 16))

    def tournament(self) -> Tournament:
        """The canonical representative (the labelling that realises the code)."""
        return from_orientation(self.n, self.bits)


def refined_cells(t: Tournament) -> list[list[int]]:
    """Ordered vertex partition from iterated score refinement.

    Cells and their order depend only on the isomorphism class.
    """
    n = t.n
    color = list(t.scores())
    ncolors = len(set(color))
    while True:
        sigs = [(color[v], tuple(sorted(color[u] for u in members(t.out[v])))) for v in range(n)]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        color = [rank[s] for s in sigs]
        if len(rank) == ncolors:
            break
        ncolors = len(rank)
    cells: dict[int, list[int]] = {}
    for v in range(n):
        cells.setdefault(color[v], []).append(v)
    return [cells[c] for c in sorted(cells)]


def canonical_labeling(t: Tournament) -> tuple[CanonicalForm, tuple[int, ...]]:
    """Canonical form and a labelling ``p`` (position -> vertex) that realises it."""
    if t.n > MAX_CANON_N:
        raise ValueError(f"canonical forms supported for n <= {MAX_CANON_N}, got {t.n}")
    cells = refined_cells(t)
    order = np.asarray([v for cell in cells for v in cell], dtype=np.int64)
    bounds = np.cumsum([0] + [len(c) for c in cells]).astype(np.int64)
    code, p = kernels.best_cell_labeling(t.adjacency(), order, bounds)
    return CanonicalForm(t.n, int(code)), tuple(int(x) for x in p)


def canonical_form(t: Tournament) -> CanonicalForm:
    return canonical_labeling(t)[0]


def canonical_representative(t: Tournament) -> Tournament:
    return canonical_form(t).tournament()


# --- isomorphism and containment ---------------------------------------

def find_isomorphism(a: Tournament, b: Tournament) -> tuple[int, ...] | None:
    """A bijection ``phi`` with ``a.beats(u, v) == b.beats(phi[u], phi[v])``, or None.

    Backtracking over vertices of ``a``, candidates filtered by score.
    """
    if a.n != b.n or sorted(a.scores()) != sorted(b.scores()):
        return None
    n = a.n
    sa, sb = a.scores(), b.scores()
    phi = [-1] * n
    used = [False] * n

    def extend(u):
        if u == n:
            return True
        for w in range(n):
            if used[w] or sb[w] != sa[u]:
                continue
            if all(a.beats(x, u) == b.beats(phi[x], w) for x in range(u)):
                phi[u] = w
                used[w] = True
                if extend(u + 1):
                    return True
                used[w] = False
        phi[u] = -1
        return False

    return tuple(phi) if extend(0) else None


def is_isomorphic(a: Tournament, b: Tournament) -> bool:
    if a.n != b.n or sorted(a.scores()) != sorted(b.scores()):
        return False
    if a.n <= MAX_CANON_N:
        return canonical_form(a) == canonical_form(b)
    return find_isomorphism(a, b) is not None


@lru_cache(maxsize=256)
def labelled_codes(h: Tournament) -> np.ndarray:
    """Sorted pair codes of every relabelling of ``h`` (one per labelled copy)."""
    k = h.n
    if k > MAX_TABLE_K:
        raise ValueError(f"code tables limited to k <= {MAX_TABLE_K}")
    adj = h.adjacency()
    perms = np.asarray(list(permutations(range(k))), dtype=np.int64).reshape(-1, k)
    iu, ju = np.triu_indices(k, 1)
    bits = adj[perms[:, iu], perms[:, ju]].astype(np.int64)
    weights = np.left_shift(np.int64(1), np.arange(len(iu) - 1, -1, -1, dtype=np.int64))
    return np.unique(bits @ weights)


def _find_copy(t: Tournament, h: Tournament, must: int = 0, avail: int | None = None) -> int:
    n, k = t.n, h.n
    if avail is None:
        avail = (1 << n) - 1
    if k <= MAX_TABLE_K:
        codes = labelled_codes(h)
        if n <= kernels.MAX_KERNEL_N:
            return int(kernels.find_subset(t.out_array(), n, k, codes, must, avail))
        return int(ref.find_subset(list(t.out), n, k, codes, must, avail))
    target = sorted(h.scores())
    pool = [v for v in members(avail & ~must)]
    for extra in combinations(pool, k - must.bit_count()):
        s = must | as_mask(extra, n)
        sub = induced(t, s)
        if sorted(sub.scores()) == target and is_isomorphic(sub, h):
            return s
    return 0


def contains(t: Tournament, h: Tournament) -> tuple[int, ...] | None:
    """First vertex subset (combination order) inducing a copy of ``h``, or None."""
    if h.n > t.n:
        raise ValueError(f"pattern has {h.n} vertices, host only {t.n}")
    s = _find_copy(t, h)
    return members(s) if s else None


def is_free(t: Tournament, forbidden: Iterable[Tournament]) -> bool:
    return all(h.n > t.n or contains(t, h) is None for h in forbidden)
