"""Homogeneous sets, primality, directed density and smooth structures.

All densities are exact :class:`fractions.Fraction` values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import kernels
from .core import Tournament, VertexSet, as_mask, members
from .kernels import ref
from .transitive import is_transitive_mask, max_transitive_size

MAX_HOMOGENEOUS_N = 20


def is_homogeneous(t: Tournament, S: VertexSet) -> bool:
    s = as_mask(S, t.n)
    rest = ((1 << t.n) - 1) & ~s
    return all((t.out[v] & s) in (0, s) for v in members(rest))


def nontrivial_homogeneous_sets(t: Tournament) -> list[tuple[int, ...]]:
    """Every homogeneous set S with 1 < |S| < n, ordered by bitmask value."""
    if t.n > MAX_HOMOGENEOUS_N:
        raise ValueError(f"homogeneous-set sweep supports n <= {MAX_HOMOGENEOUS_N}, got {t.n}")
    if t.n < 3:
        return []
    if t.n <= kernels.MAX_KERNEL_N:
        masks = kernels.homogeneous_masks(t.out_array(), t.n)
    else:
        masks = ref.homogeneous_masks(list(t.out), t.n)
    return [members(int(m)) for m in masks]


def is_prime(t: Tournament) -> bool:
    return not nontrivial_homogeneous_sets(t)


def directed_density(t: Tournament, X: VertexSet, Y: VertexSet) -> Fraction:
    """Fraction of pairs in X x Y oriented from X to Y."""
    x, y = as_mask(X, t.n), as_mask(Y, t.n)
    if not x or not y:
        raise ValueError("density needs two nonempty sets")
    if x & y:
        raise ValueError("density needs disjoint sets")
    arcs = sum((t.out[v] & y).bit_count() for v in members(x))
    return Fraction(arcs, x.bit_count() * y.bit_count())


def _fraction(v) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(str(v))


@dataclass(frozen=True)
class SmoothStructureSpec:
    """Candidate smooth (c, lambda, w)-structure: disjoint sets with 0/1 kinds.

    ``w[i] == 0`` marks a linear set, ``w[i] == 1`` a transitive one.
    """

    c: Fraction
    lam: Fraction
    w: tuple[int, ...]
    sets: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "c", _fraction(self.c))
        object.__setattr__(self, "lam", _fraction(self.lam))
        object.__setattr__(self, "w", tuple(int(b) for b in self.w))
        object.__setattr__(self, "sets", tuple(tuple(sorted(int(v) for v in s)) for s in self.sets))
        if not 0 < self.c <= 1:
            raise ValueError(f"c must lie in (0, 1], got {self.c}")
        if not 0 < self.lam < 1:
            raise ValueError(f"lambda must lie in (0, 1), got {self.lam}")
        if any(b not in (0, 1) for b in self.w):
            raise ValueError("w must be a 0/1 vector")
        if len(self.w) != len(self.sets):
            raise ValueError(f"w has length {len(self.w)} but there are {len(self.sets)} sets")
        seen: set[int] = set()
        for i, s in enumerate(self.sets):
            if not s:
                raise ValueError(f"set {i} is empty")
            if len(set(s)) != len(s) or seen & set(s):
                raise ValueError(f"set {i} overlaps an earlier set or repeats a vertex")
            seen |= set(s)

    @classmethod
    def from_json(cls, doc: dict) -> "SmoothStructureSpec":
        return cls(Fraction(doc["c"]), Fraction(doc["lambda"]), tuple(doc["w"]),
                   tuple(tuple(s) for s in doc["sets"]))

    def to_json(self) -> dict:
        return {"c": str(self.c), "lambda": str(self.lam), "w": list(self.w),
                "sets": [list(s) for s in self.sets]}


@dataclass
class SmoothReport:
    valid: bool
    tr_value: int
    violations: list[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"valid": self.valid, "tr": self.tr_value, "violations": self.violations}


def validate_smooth_structure(t: Tournament, spec: SmoothStructureSpec) -> SmoothReport:
    """Check every clause and list each violation.

    Violations come ordered by set index, then vertex index.
    """
    n = t.n
    masks = [as_mask(s, n) for s in spec.sets]
    trv = max_transitive_size(t)
    one = 1 - spec.lam
    bad: list[dict] = []
    for i, (kind, m) in enumerate(zip(spec.w, masks)):
        size = m.bit_count()
        if kind == 0:
            if size < spec.c * n:
                bad.append({"clause": "linear_size", "set": i, "size": size,
                            "required": str(spec.c * n)})
        else:
            if not is_transitive_mask(t, m):
                bad.append({"clause": "transitive", "set": i})
            if size < spec.c * trv:
                bad.append({"clause": "transitive_size", "set": i, "size": size,
                            "required": str(spec.c * trv)})
    k = len(masks)
    for i in range(k):
        for j in range(i + 1, k):
            mi, mj = masks[i], masks[j]
            for v in members(mi):
                d = Fraction((t.out[v] & mj).bit_count(), mj.bit_count())
                if d < one:
                    bad.append({"clause": "out_density", "i": i, "j": j, "vertex": v, "value": str(d)})
            for v in members(mj):
                d = Fraction((t.in_mask(v) & mi).bit_count(), mi.bit_count())
                if d < one:
                    bad.append({"clause": "in_density", "i": i, "j": j, "vertex": v, "value": str(d)})
    return SmoothReport(not bad, trv, bad)


def restricted_neighbourhood(t: Tournament, spec: SmoothStructureSpec, j: int, x: int,
                             within: VertexSet | None = None) -> tuple[int, ...]:
    """Vertices of set ``j`` (or of ``within`` inside it) on the smooth side of ``x``.

    For x in an earlier set these are the out-neighbours of x, for x in a later
    set the in-neighbours.
    """
    home = next((i for i, s in enumerate(spec.sets) if x in s), None)
    if home is None or home == j:
        raise ValueError(f"vertex {x} must lie in a set other than {j}")
    target = as_mask(spec.sets[j] if within is None else within, t.n)
    side = t.out[x] if home < j else t.in_mask(x)
    return members(side & target)


@dataclass
class IntersectionReport:
    j: int
    k: int
    gamma: Fraction
    intersection: int
    bound: Fraction
    holds: bool

    def to_json(self) -> dict:
        return {"j": self.j, "k": self.k, "gamma": str(self.gamma),
                "intersection": self.intersection, "bound": str(self.bound), "holds": self.holds}


def check_intersection_bound(t: Tournament, spec: SmoothStructureSpec, j: int,
                             sstar: VertexSet, A: Sequence[int]) -> IntersectionReport:
    """Compare the common smooth neighbourhood of ``A`` inside ``sstar`` with
    ``(1 - |A| * lam / gamma) * |sstar|``, where gamma = |sstar| / |S_j|."""
    if not 0 <= j < len(spec.sets):
        raise ValueError(f"set index {j} out of range")
    if not validate_smooth_structure(t, spec).valid:
        raise ValueError("spec is not a smooth structure of this tournament")
    sj = as_mask(spec.sets[j], t.n)
    star = as_mask(sstar, t.n)
    if not star or star & ~sj:
        raise ValueError("sstar must be a nonempty subset of the chosen set")
    others = 0
    for i, s in enumerate(spec.sets):
        if i != j:
            others |= as_mask(s, t.n)
    amask = as_mask(A, t.n)
    if amask & ~others:
        raise ValueError("A must lie in the union of the other sets")
    inter = star
    for x in members(amask):
        inter &= as_mask(restricted_neighbourhood(t, spec, j, x, star), t.n)
    gamma = Fraction(star.bit_count(), sj.bit_count())
    k = amask.bit_count()
    bound = (1 - k * spec.lam / gamma) * star.bit_count()
    return IntersectionReport(j, k, gamma, inter.bit_count(), bound, inter.bit_count() >= bound)
