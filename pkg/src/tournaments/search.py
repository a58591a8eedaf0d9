"""Local search for H-free tournaments with a small largest transitive subtournament.

Each restart starts from a randomly labelled transitive tournament and walks
over single-arc flips. A flip is kept when the result stays free of every
forbidden pattern and the objective ``(tr, number of transitive tr-sets)`` does
not get worse. Restarts draw independent PCG64 streams spawned from one seed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import kernels
from .core import MAX_TABLE_K, Tournament, _find_copy, is_free, labelled_codes
from .io import resolve
from .transitive import EXACT_LIMIT, count_transitive_subsets, max_transitive_size

# transitive tr-sets are counted exactly up to this many, which is plenty to rank plateaus
COUNT_CAP = 1 << 16


@dataclass(frozen=True)
class SearchConfig:
    n: int
    forbidden: tuple[str, ...] = ()
    seed: int = 0
    max_steps: int = 10_000
    restarts: int = 1

    def __post_init__(self):
        object.__setattr__(self, "forbidden", tuple(self.forbidden))
        if not 1 <= self.n <= min(EXACT_LIMIT, kernels.MAX_KERNEL_N):
            raise ValueError(f"n must be in 1..{EXACT_LIMIT} for certified search, got {self.n}")
        if self.max_steps < 0 or self.restarts < 1:
            raise ValueError("max_steps must be >= 0 and restarts >= 1")


@dataclass
class RestartTrace:
    sub_seed: int
    best_tr: int
    # (step, tr) each time the restart's tr dropped; never increases
    history: list[tuple[int, int]] = field(default_factory=list)
    accepted: int = 0
    rejected_forbidden: int = 0


@dataclass
class SearchResult:
    best: Tournament
    tr_value: int
    free_certificate: bool
    trace: list[RestartTrace]
    best_restart: int

    def to_json(self) -> dict:
        return {
            "n": self.best.n,
            "tr": self.tr_value,
            "free_certificate": self.free_certificate,
            "best_restart": self.best_restart,
            "orientation": self.best.orientation_bits(),
            "trace": [{"restart": r.sub_seed, "best_tr": r.best_tr,
                       "history": [list(h) for h in r.history],
                       "accepted": r.accepted, "rejected_forbidden": r.rejected_forbidden}
                      for r in self.trace],
        }


class _Forbidden:
    """Containment test restricted to copies that use two given vertices."""

    def __init__(self, patterns: Sequence[Tournament], n: int):
        self.patterns = [h for h in patterns if h.n <= n]
        self.n = n
        self.full = np.int64((1 << n) - 1)
        self.tables = [labelled_codes(h) if h.n <= MAX_TABLE_K else None for h in self.patterns]

    def hit(self, out: np.ndarray, must: int) -> bool:
        for h, codes in zip(self.patterns, self.tables):
            if codes is not None:
                if kernels.find_subset(out, self.n, h.n, codes, np.int64(must), self.full):
                    return True
            elif _find_copy(Tournament(self.n, tuple(int(x) for x in out)), h, must):
                return True
        return False


def _objective(out: np.ndarray, full: np.int64) -> tuple[int, int]:
    size = int(kernels.max_transitive(out, full))
    return size, int(kernels.count_transitive(out, full, size, COUNT_CAP))


def _flip(out: np.ndarray, u: int, v: int) -> None:
    out[u] ^= np.int64(1 << v)
    out[v] ^= np.int64(1 << u)


def _restart(n: int, forb: _Forbidden, rng: np.random.Generator, steps: int,
             index: int) -> tuple[np.ndarray, tuple[int, int], RestartTrace]:
    perm = rng.permutation(n)
    out = np.zeros(n, dtype=np.int64)
    for p in range(n):
        for q in range(p + 1, n):
            out[perm[p]] |= np.int64(1 << int(perm[q]))
    full = np.int64((1 << n) - 1)
    score = _objective(out, full)
    trace = RestartTrace(index, score[0], [(0, score[0])])
    if n < 2:
        return out, score, trace
    pairs = rng.integers(0, n * (n - 1) // 2, size=steps)
    iu, ju = np.triu_indices(n, 1)
    for step, idx in enumerate(pairs, start=1):
        u, v = int(iu[idx]), int(ju[idx])
        _flip(out, u, v)
        if forb.hit(out, (1 << u) | (1 << v)):
            trace.rejected_forbidden += 1
            _flip(out, u, v)
            continue
        cand = _objective(out, full)
        if cand <= score:
            trace.accepted += 1
            if cand[0] < score[0]:
                trace.history.append((step, cand[0]))
            score = cand
        else:
            _flip(out, u, v)
    trace.best_tr = score[0]
    return out, score, trace


def local_search(cfg: SearchConfig) -> SearchResult:
    """Run every restart and keep the lowest tr; ties go to the earliest restart."""
    patterns = [resolve(ref) if ":" in ref or "/" in ref or ref.endswith(".trn") else _named(ref)
                for ref in cfg.forbidden]
    for ref, h in zip(cfg.forbidden, patterns):
        if h.n > cfg.n:
            raise ValueError(f"forbidden tournament {ref} has {h.n} vertices, more than n={cfg.n}")
    forb = _Forbidden(patterns, cfg.n)
    start_probe = Tournament(cfg.n, tuple(((1 << cfg.n) - 1) & ~((1 << (v + 1)) - 1)
                                          for v in range(cfg.n)))
    if not is_free(start_probe, patterns):
        raise ValueError("a forbidden tournament is transitive, so no start point is free of it")

    best = None
    traces = []
    streams = np.random.SeedSequence(cfg.seed).spawn(cfg.restarts)
    for i, ss in enumerate(streams):
        rng = np.random.Generator(np.random.PCG64(ss))
        out, score, trace = _restart(cfg.n, forb, rng, cfg.max_steps, i)
        traces.append(trace)
        if best is None or score[0] < best[1][0]:
            best = (out.copy(), score, i)

    out, score, idx = best
    t = Tournament(cfg.n, tuple(int(x) for x in out))
    # certificate: recompute everything from scratch through the public API
    value = max_transitive_size(t)
    certified = (is_free(t, patterns) and value == score[0]
                 and count_transitive_subsets(t, value, COUNT_CAP) == score[1])
    return SearchResult(t, value, certified, traces, idx)


def _named(ref: str) -> Tournament:
    from .catalog import build_named
    return build_named(ref)
