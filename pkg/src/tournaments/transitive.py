"""Transitive subtournaments: testing, exact tr with witness, and the
2^(k-1) Ramsey bound over all small tournaments."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .core import Tournament, VertexSet, as_mask, members
from .kernels import ref

EXACT_LIMIT = 30


@dataclass(frozen=True)
class TrResult:
    size: int
    witness: tuple[int, ...]
    exact: bool = True
    # only differs from size in best-effort mode
    upper_bound: int | None = None


def is_transitive_mask(t: Tournament, mask: int) -> bool:
    """Transitive iff the scores inside the set are pairwise distinct."""
    seen = 0
    for v in members(mask):
        d = (t.out[v] & mask).bit_count()
        if (seen >> d) & 1:
            return False
        seen |= 1 << d
    return True


def is_transitive(t: Tournament) -> bool:
    return is_transitive_mask(t, (1 << t.n) - 1)


def transitive_order(t: Tournament, X: VertexSet | None = None) -> tuple[int, ...]:
    """Vertices of a transitive set from source to sink."""
    mask = (1 << t.n) - 1 if X is None else as_mask(X, t.n)
    if not is_transitive_mask(t, mask):
        raise ValueError("vertex set is not transitive")
    return tuple(sorted(members(mask), key=lambda v: -(t.out[v] & mask).bit_count()))


def _max_trans(succ, cand: int) -> int:
    if len(succ) <= kernels.MAX_KERNEL_N:
        return int(kernels.max_transitive(np.asarray(succ, dtype=np.int64), np.int64(cand)))
    return ref.max_transitive(list(succ), cand)


def max_transitive_size(t: Tournament, X: VertexSet | None = None) -> int:
    cand = (1 << t.n) - 1 if X is None else as_mask(X, t.n)
    return _max_trans(t.out, cand)


def _constrained_succ(t: Tournament, chosen: int, cand: int) -> list[int]:
    """Successor masks for extending the transitive set ``chosen`` by vertices of ``cand``.

    A candidate's slot is the number of chosen vertices beating it; vertices
    in different slots must be oriented from the lower slot to the higher one.
    """
    slot = [(t.in_mask(v) & chosen).bit_count() for v in range(t.n)]
    succ = [0] * t.n
    for u in members(cand):
        m = 0
        for w in members(t.out[u] & cand):
            if slot[w] >= slot[u]:
                m |= 1 << w
        succ[u] = m
    return succ


def _lex_smallest_witness(t: Tournament, target: int, cand: int) -> tuple[int, ...]:
    chosen = 0
    for v in members(cand):
        if chosen.bit_count() == target:
            break
        trial = chosen | (1 << v)
        if not is_transitive_mask(t, trial):
            continue
        later = cand & ~((1 << (v + 1)) - 1)
        ext = 0
        for u in members(later):
            if is_transitive_mask(t, trial | (1 << u)):
                ext |= 1 << u
        best = trial.bit_count() + _max_trans(_constrained_succ(t, trial, ext), ext)
        if best >= target:
            chosen = trial
    return members(chosen)


def tr(t: Tournament, X: VertexSet | None = None, exact: bool | None = None) -> TrResult:
    """Largest transitive subtournament (of ``T|X`` when ``X`` is given).

    The witness is the lexicographically smallest maximum set. Exact mode is the
    default up to 30 vertices; beyond that, ``exact=False`` returns a greedy lower
    bound with a score-based upper bound.
    """
    cand = (1 << t.n) - 1 if X is None else as_mask(X, t.n)
    if exact is None:
        exact = cand.bit_count() <= EXACT_LIMIT
    if exact:
        size = _max_trans(t.out, cand)
        return TrResult(size, _lex_smallest_witness(t, size, cand), True, size)
    # greedy: repeatedly take the vertex with the most remaining out-neighbours
    witness = []
    rest = cand
    while rest:
        v = max(members(rest), key=lambda x: (t.out[x] & rest).bit_count())
        witness.append(v)
        rest &= t.out[v]
    upper = 1 + max((t.out[v] & cand).bit_count() for v in members(cand)) if cand else 0
    return TrResult(len(witness), tuple(sorted(witness)), False, upper)


def brute_force_tr(t: Tournament) -> int:
    """tr by checking every subset; the independent oracle for small n."""
    best = 0
    for mask in range(1 << t.n):
        c = mask.bit_count()
        if c > best and is_transitive_mask(t, mask):
            best = c
    return best


def count_transitive_subsets(t: Tournament, k: int, cap: int = 1 << 40, X: VertexSet | None = None) -> int:
    """Number of transitive k-subsets, saturating at ``cap``."""
    cand = (1 << t.n) - 1 if X is None else as_mask(X, t.n)
    if t.n <= kernels.MAX_KERNEL_N:
        return int(kernels.count_transitive(t.out_array(), np.int64(cand), k, cap))
    return ref.count_transitive(list(t.out), cand, k, cap)


@dataclass(frozen=True)
class RamseyReport:
    k: int
    n: int
    classes: int
    holds: bool
    min_tr: int
    counterexample: Tournament | None = None


def check_ramsey_bound(k: int) -> RamseyReport:
    """Every tournament on 2^(k-1) vertices has tr >= k, checked class by class."""
    if not 2 <= k <= 4:
        raise ValueError("k must be in 2..4 (2^(k-1) <= 8)")
    from .landscape import enumerate_classes

    n = 2 ** (k - 1)
    classes = enumerate_classes(n)
    worst, counter = None, None
    for t in classes:
        s = max_transitive_size(t)
        if worst is None or s < worst:
            worst = s
        if s < k and counter is None:
            counter = t
    return RamseyReport(k, n, len(classes), counter is None, worst, counter)
