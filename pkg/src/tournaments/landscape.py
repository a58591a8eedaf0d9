"""Exhaustive enumeration of small tournaments and classification of every
seven-vertex class against galaxies, the S/R/H families and non-prime K6-free
tournaments."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .core import (CanonicalForm, Tournament, add_vertex, canonical_form, complement,
                   contains, members)
from .orderings import find_galaxy_ordering
from .structure import is_prime, nontrivial_homogeneous_sets

MAX_ENUM_N = 8
FLAGS = ("is_galaxy", "in_H", "in_R", "in_S", "nonprime_and_K6free", "residual")

# regression constants, frozen after the first exhaustive run
FROZEN_COUNTS = {6: 56, 7: 456}


@lru_cache(maxsize=None)
def _class_forms(n: int) -> tuple[CanonicalForm, ...]:
    if n < 1 or n > MAX_ENUM_N:
        raise ValueError(f"enumeration supports 1 <= n <= {MAX_ENUM_N}, got {n}")
    if n == 1:
        return (canonical_form(Tournament(1, (0,))),)
    forms = set()
    for f in _class_forms(n - 1):
        base = f.tournament()
        for nb in range(1 << (n - 1)):
            forms.add(canonical_form(add_vertex(base, nb)))
    return tuple(sorted(forms))


def enumerate_classes(n: int) -> list[Tournament]:
    """One canonical representative per isomorphism class, sorted by canonical form."""
    return [f.tournament() for f in _class_forms(n)]


def class_forms(n: int) -> tuple[CanonicalForm, ...]:
    return _class_forms(n)


def class_counts(max_n: int = 7) -> dict[int, int]:
    return {n: len(_class_forms(n)) for n in range(1, max_n + 1)}


@dataclass(frozen=True)
class DegreeProfile:
    """Number of vertices with each out-degree (index d counts vertices with d^+ = d)."""

    counts: tuple[int, ...]

    @classmethod
    def of(cls, t: Tournament) -> "DegreeProfile":
        c = [0] * t.n
        for s in t.scores():
            c[s] += 1
        return cls(tuple(c))

    def n(self, out: int, inn: int) -> int:
        if out + inn != len(self.counts) - 1:
            raise ValueError("out + in must equal n - 1")
        return self.counts[out]

    @property
    def balanced(self) -> bool:
        """Every out-degree lies in {2, 3, 4} (only meaningful for n = 7)."""
        return len(self.counts) == 7 and sum(self.counts[2:5]) == 7

    def identity_holds(self) -> bool:
        n42, n33, n24 = self.counts[4], self.counts[3], self.counts[2]
        return 4 * n42 + 3 * n33 + 2 * n24 == 21 and 2 * n42 + 3 * n33 + 4 * n24 == 21

    def to_json(self) -> dict:
        return {f"n_{d}_{len(self.counts) - 1 - d}": c for d, c in enumerate(self.counts)}


@dataclass
class ClassificationRecord:
    form: CanonicalForm
    flags: dict[str, bool]
    profile: DegreeProfile
    prime: bool
    witnesses: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"form": self.form.hex, "flags": dict(self.flags), "prime": self.prime,
                "degree_profile": self.profile.to_json(), "witnesses": self.witnesses}


def _family_forms(fam: str) -> dict:
    from .catalog import family_forms
    return family_forms(fam)


def classify7(t: Tournament) -> ClassificationRecord:
    """Flag a seven-vertex tournament with each checkable outcome."""
    if t.n != 7:
        raise ValueError(f"classify7 needs 7 vertices, got {t.n}")
    from .catalog import build_named

    form = canonical_form(t)
    flags = dict.fromkeys(FLAGS, False)
    witnesses: dict = {}
    theta = find_galaxy_ordering(t)
    if theta is not None:
        flags["is_galaxy"] = True
        witnesses["galaxy_ordering"] = list(theta)
    for fam in "HRS":
        name = _family_forms(fam).get(form)
        if name is not None:
            flags[f"in_{fam}"] = True
            witnesses[f"catalog_{fam}"] = name
    homog = nontrivial_homogeneous_sets(t)
    prime = not homog
    if homog:
        witnesses["homogeneous_set"] = list(homog[0])
        if contains(t, build_named("K6")) is None:
            flags["nonprime_and_K6free"] = True
    flags["residual"] = not any(flags[f] for f in FLAGS[:-1])
    return ClassificationRecord(form, flags, DegreeProfile.of(t), prime, witnesses)


# The two seven-vertex tournaments shown with a constellation ordering in the
# hand case analysis, fully pinned down by the case assumptions. Labels a..f, v.
CONSTELLATION_CASES = {
    "cyclic abc, e -> {b, c}, d -> a": (
        "va vb vc vd ve fv fd fe af bf cf ed ab bc ca eb ec ae da bd cd", "vaebcfd"),
    "cyclic abc, d -> {a, b, c}, e -> {a, b, d}": (
        "va vb vc vd ve fv fe af bf cf df ab bc ca da db dc ea ed eb ce", "vcedabf"),
}


def constellation_cases() -> list[dict]:
    """Rebuild the exhibited constellation cases and check what is checkable.

    The ordering must be a star ordering that is not a galaxy ordering, and the
    tournament must be prime with no galaxy ordering at all.
    """
    from .catalog import S_LABELS
    from .core import build
    from .orderings import is_galaxy_ordering, is_star_ordering

    idx = {ch: i for i, ch in enumerate(S_LABELS)}
    out = []
    for name, (arcs, theta) in CONSTELLATION_CASES.items():
        t = build(7, [(idx[a], idx[b]) for a, b in arcs.split()])
        order = [idx[ch] for ch in theta]
        out.append({
            "case": name,
            "form": canonical_form(t).hex,
            "complement_form": canonical_form(complement(t)).hex,
            "star_ordering": is_star_ordering(t, order),
            "galaxy_ordering": is_galaxy_ordering(t, order),
            "prime": is_prime(t),
            "galaxy": find_galaxy_ordering(t) is not None,
        })
    return out


def _residual_checks(t: Tournament) -> dict:
    from .catalog import build_named
    from .core import is_free

    return {
        "prime": is_prime(t),
        "galaxy": find_galaxy_ordering(t) is not None,
        "k6_l1_l2_free": is_free(t, [build_named(x) for x in ("K6", "L1", "L2")]),
    }


def run_landscape() -> dict:
    """Classify every seven-vertex class and collect the summary report."""
    from .catalog import build_named

    reps = enumerate_classes(7)
    records = [classify7(t) for t in reps]
    counts = {f: sum(r.flags[f] for r in records) for f in FLAGS}
    overlap = {f: {g: sum(r.flags[f] and r.flags[g] for r in records) for g in FLAGS} for f in FLAGS}
    uncovered = [r.form.hex for r in records if not any(r.flags.values())]

    residuals = []
    for t, r in zip(reps, records):
        if r.flags["residual"]:
            residuals.append({"form": r.form.hex, "degree_profile": r.profile.to_json(),
                              **_residual_checks(t)})

    regular = [t for t in reps if t.is_regular()]
    expected = {"H39": build_named("H39"), "R11": build_named("R11"), "S15": build_named("S15")}
    matched = {}
    for name, ref in expected.items():
        f = canonical_form(ref)
        matched[name] = next((canonical_form(t).hex for t in regular if canonical_form(t) == f), None)
    regular_ok = len(regular) == 3 and all(matched.values()) and len(set(matched.values())) == 3

    profile_failures = [r.form.hex for r in records
                        if r.profile.balanced and not r.profile.identity_holds()]
    # a vertex dominating (or dominated by) everything else makes the rest homogeneous
    extreme = [r for t, r in zip(reps, records) if 6 in t.scores() or 0 in t.scores()]
    extreme_failures = [r.form.hex for r in extreme if r.prime or not any(r.flags.values())]

    cases = constellation_cases()
    explained = {c["form"] for c in cases} | {c["complement_form"] for c in cases}
    unexplained = [r["form"] for r in residuals if r["form"] not in explained]

    return {
        "classes": len(records),
        "coverage": not uncovered,
        "uncovered": uncovered,
        "flag_counts": counts,
        "overlap": overlap,
        "residual_count": len(residuals),
        "residuals": residuals,
        # residual classes not matched by an exhibited constellation case or its complement
        "constellation_cases": cases,
        "unexplained_residuals": unexplained,
        "regular": {"count": len(regular), "matches": matched, "ok": regular_ok},
        "degree_identity_failures": profile_failures,
        "extreme_degree_failures": extreme_failures,
        "records": [r.to_json() for r in records],
    }


def complement_closed(n: int) -> bool:
    forms = set(_class_forms(n))
    return all(canonical_form(complement(f.tournament())) in forms for f in forms)


__all__ = ["ClassificationRecord", "DegreeProfile", "FLAGS", "FROZEN_COUNTS", "class_counts",
           "class_forms", "classify7", "complement_closed", "constellation_cases",
           "enumerate_classes", "members", "run_landscape"]
