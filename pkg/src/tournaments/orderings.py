"""Backward arcs under vertex orderings, star decompositions and galaxies.

An ordering is a sequence ``theta`` with ``theta[p]`` the vertex at position p.
Backward-graph edges and star components are expressed in positions.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from . import kernels
from .core import Tournament
from .kernels import ref

MAX_SEARCH_N = 9


def _check(t: Tournament, theta: Sequence[int]) -> tuple[int, ...]:
    theta = tuple(int(v) for v in theta)
    if len(theta) != t.n:
        raise ValueError(f"ordering has {len(theta)} entries, tournament has {t.n} vertices")
    if sorted(theta) != list(range(t.n)):
        raise ValueError("ordering is not a permutation of the vertices")
    return theta


def backward_arcs(t: Tournament, theta: Sequence[int]) -> list[tuple[int, int]]:
    """Arcs pointing from a later position to an earlier one.

    Sorted by the later position, then by the earlier one.
    """
    theta = _check(t, theta)
    return [(theta[q], theta[p]) for q in range(t.n) for p in range(q)
            if t.beats(theta[q], theta[p])]


def forward_arcs(t: Tournament, theta: Sequence[int]) -> list[tuple[int, int]]:
    theta = _check(t, theta)
    return [(theta[p], theta[q]) for q in range(t.n) for p in range(q)
            if t.beats(theta[p], theta[q])]


@dataclass(frozen=True)
class BackwardGraph:
    theta: tuple[int, ...]
    edges: frozenset[tuple[int, int]]  # position pairs (p, q), p < q

    def neighbors(self, p: int) -> list[int]:
        return sorted([b for a, b in self.edges if a == p] + [a for a, b in self.edges if b == p])


def backward_graph(t: Tournament, theta: Sequence[int]) -> BackwardGraph:
    theta = _check(t, theta)
    edges = frozenset((p, q) for q in range(t.n) for p in range(q) if t.beats(theta[q], theta[p]))
    return BackwardGraph(theta, edges)


@dataclass(frozen=True)
class StarComponent:
    center: int  # position
    leaves: tuple[int, ...]  # positions
    chirality: str  # "left": center before all leaves; "right": after
    # single-edge stars: either endpoint may be the center
    ambiguous: bool = False


def _components(b: BackwardGraph) -> list[list[int]]:
    n = len(b.theta)
    adj = {p: b.neighbors(p) for p in range(n)}
    seen, comps = set(), []
    for s in range(n):
        if s in seen or not adj[s]:
            continue
        stack, comp = [s], []
        seen.add(s)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


def star_decomposition(b: BackwardGraph) -> list[StarComponent] | None:
    """Star components of a backward graph, or None if it is not a star ordering.

    Singletons are omitted. A single edge is reported as a left star with
    ``ambiguous=True``.
    """
    stars = []
    for comp in _components(b):
        if len(comp) == 2:
            stars.append(StarComponent(comp[0], (comp[1],), "left", True))
            continue
        degree = {p: len(b.neighbors(p)) for p in comp}
        centers = [p for p in comp if degree[p] == len(comp) - 1]
        if len(centers) != 1 or any(degree[p] != 1 for p in comp if p != centers[0]):
            return None
        c = centers[0]
        leaves = tuple(p for p in comp if p != c)
        if c < min(leaves):
            stars.append(StarComponent(c, leaves, "left"))
        elif c > max(leaves):
            stars.append(StarComponent(c, leaves, "right"))
        else:
            return None
    return stars


def is_star_ordering(t: Tournament, theta: Sequence[int]) -> bool:
    return star_decomposition(backward_graph(t, theta)) is not None


def _between_leaves(center: int, leaves: Sequence[int]) -> bool:
    return len(leaves) >= 2 and min(leaves) < center < max(leaves)


def is_galaxy_ordering(t: Tournament, theta: Sequence[int]) -> bool:
    """Star ordering in which no center lies strictly between two leaves of another star.

    Every center assignment for single-edge stars is tried.
    """
    stars = star_decomposition(backward_graph(t, theta))
    if stars is None:
        return False
    fixed = [(s.center, s.leaves) for s in stars if not s.ambiguous]
    loose = [(s.center, s.leaves[0]) for s in stars if s.ambiguous]
    for choice in product((0, 1), repeat=len(loose)):
        all_stars = fixed + [((a, (b,)) if c == 0 else (b, (a,))) for (a, b), c in zip(loose, choice)]
        if not any(_between_leaves(c1, l2)
                   for i, (c1, _) in enumerate(all_stars)
                   for j, (_, l2) in enumerate(all_stars) if i != j):
            return True
    return False


def find_galaxy_ordering(t: Tournament) -> tuple[int, ...] | None:
    """Lexicographically first galaxy ordering by exhaustive search, or None."""
    if t.n > MAX_SEARCH_N:
        raise ValueError(f"exhaustive galaxy search supports n <= {MAX_SEARCH_N}, got {t.n}")
    if t.n <= kernels.MAX_KERNEL_N:
        perm = kernels.galaxy_search(t.out_array(), t.n)
    else:
        perm = ref.galaxy_search(list(t.out), t.n)
    if perm[0] < 0:
        return None
    theta = tuple(int(v) for v in perm)
    if not is_galaxy_ordering(t, theta):
        raise AssertionError(f"search returned a non-galaxy ordering {theta}")
    return theta


def is_galaxy(t: Tournament) -> bool:
    return find_galaxy_ordering(t) is not None
