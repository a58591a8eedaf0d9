"""Named tournaments and their claimed orderings.

Vertex labels are bound to indices once and for all:

* S family: ``a b c d e f v`` -> 0..6
* C5, L1, L2, K6, R and H families: ``v1 .. v7`` -> 0..6

Orderings are written compactly: for the S family a string of letters such as
``"dfvabec"`` with arcs ``"vd bd"`` (arc v -> d, then b -> d); for the other
families a string of digits ``"7123465"`` with arcs ``"52 51"`` (v5 -> v2, ...).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import (Tournament, add_vertex, build, canonical_form, complement,
                   from_ordering, is_isomorphic)
from .orderings import backward_arcs, find_galaxy_ordering
from .structure import is_prime

S_LABELS = "abcdefv"


def _s_index(ch: str) -> int:
    return S_LABELS.index(ch)


def _v_index(ch: str) -> int:
    return int(ch) - 1


def _decode(theta: str, arcs: str, letters: bool):
    idx = _s_index if letters else _v_index
    order = tuple(idx(ch) for ch in theta)
    back = [(idx(a[0]), idx(a[1])) for a in arcs.split()]
    return order, back


def label(family: str, v: int) -> str:
    return S_LABELS[v] if family == "S" else f"v{v + 1}"


# --- defining data ------------------------------------------------------

C5_ARCS = "12 23 34 45 51 24 13 52 41 35"
K6_ORDER = ("123456", "41 63 61 52")

S_DEFS = {
    1: ("dfvabec", "vd bd cd ef ea"),
    2: ("vdefabc", "fv ad bd ca"),
    3: ("fvbecda", "ef de df ab"),
    4: ("vdfcaeb", "fv ef bc bd"),
    5: ("vabcfed", "fv da eb db"),
    6: ("vabcfed", "fv da eb ea"),
    7: ("vbeacfd", "fv db dc fe ab"),
    8: ("vcafedb", "fv bc bf da"),
    9: ("vabcdfe", "fv ca ec eb"),
    10: ("veabdcf", "fv fe de ca"),
    11: ("bcvadef", "fc fv dv ab eb"),
    12: ("bcafvde", "da ec db ab ef"),
    13: ("bcdafve", "fb ec vd ab ef"),
    14: ("bcdaevf", "fb ec vd ab fe"),
    15: ("abdcevf", "ea va fa vb fb fd"),
}

# in-neighbours of the added vertex v7 over K6
R_INNEIGHBOURS = {
    1: "", 2: "1", 3: "13456", 4: "12", 5: "124", 6: "1346",
    7: "15", 8: "135", 9: "256", 10: "56", 11: "356",
}

# (base, "+" for N^+(v7) or "-" for N^-(v7), neighbourhood)
H_DEFS = {
    1: ("L1", "+", "6"), 2: ("L1", "-", "3"), 3: ("L1", "-", "34"), 4: ("L1", "-", "2"),
    5: ("L1", "-", "13"), 6: ("L1", "-", "1"), 7: ("L2", "+", "3"), 8: ("L2", "+", "6"),
    9: ("L1", "-", "4"), 10: ("L2", "-", "2"), 11: ("L1", "-", "14"), 12: ("L2", "+", "5"),
    13: ("L1", "+", "3"), 14: ("L1", "-", "345"), 15: ("L1", "+", "2"), 16: ("L2", "+", "1"),
    17: ("L1", "+", "1"), 18: ("L2", "-", "3"), 19: ("L1", "-", "5"), 20: ("L2", "-", "6"),
    21: ("L1", "+", "4"), 22: ("L1", "+", "136"), 23: ("L2", "+", "4"), 24: ("L2", "-", "5"),
    25: ("L1", "-", "6"), 26: ("L1", "+", "45"), 27: ("L2", "-", "24"), 28: ("L2", "-", "14"),
    29: ("L1", "+", "15"), 30: ("L2", "+", "36"), 31: ("L2", "+", "56"), 32: ("L2", "+", "15"),
    33: ("L2", "+", "25"), 34: ("L2", "+", "34"), 35: ("L2", "-", "46"), 36: ("L2", "-", "16"),
    37: ("L1", "+", "345"), 38: ("L1", "+", "34"), 39: ("L2", "+", "124"), 40: ("L1", "-", "46"),
    41: ("L2", "-", "25"), 42: ("L1", "-", "16"), 43: ("L2", "-", "13"), 44: ("L2", "-", "26"),
    45: ("L1", "-", "26"), 46: ("L2", "+", "235"), 47: ("L1", "-", "36"), 48: ("L2", "+", "13"),
    49: ("L2", "+", "23"), 50: ("L1", "+", "23"), 51: ("L1", "+", "24"), 52: ("L1", "+", "13"),
    53: ("L2", "+", "123"), 54: ("L1", "-", "56"), 55: ("L2", "-", "35"), 56: ("L1", "+", "123"),
    57: ("L2", "-", "36"), 58: ("L2", "+", "126"), 59: ("L2", "+", "24"),
}

# printed text that could not be used verbatim, and what is used instead
CORRECTIONS = [
    {"where": "S4 defining ordering", "printed": "(v,d,f,c,\\\\alpha,e,b)",
     "used": "(v,d,f,c,a,e,b)", "reason": "LaTeX artifact for label a; matches the S4 path ordering"},
    {"where": "S7 defining backward arcs", "printed": "(d,\\\\beta)",
     "used": "(d,b)", "reason": "LaTeX artifact for label b"},
    {"where": "S9 defining ordering", "printed": "(v,a,b,c,d,f,\\\\e)",
     "used": "(v,a,b,c,d,f,e)", "reason": "line-break artifact before e"},
    {"where": "forest ordering of S10", "printed": "(f,v\\\\)",
     "used": "(f,v)", "reason": "line-break artifact"},
    {"where": "orderings of H22, H33, H19, H36, H28, H24, H49", "printed": "(v_{3},\\\\v_{4}) and similar",
     "used": "(v3,v4) and similar", "reason": "line-break artifacts inside arc pairs"},
]


@dataclass(frozen=True)
class ClaimedOrdering:
    target: str
    label: str
    theta: str
    backward: str
    group: str

    @property
    def letters(self) -> bool:
        return self.target.startswith("S")

    def decoded(self):
        return _decode(self.theta, self.backward, self.letters)


def _claims():
    rows = [
        # tournaments of class S with two crucial orderings
        ("S1", "star ordering", "dfvabec", "vd bd cd ef ea", "S-pairs"),
        ("S1", "cyclic ordering", "fvbecda", "de df ef ab ac", "S-pairs"),
        ("S2", "forest ordering", "efvabdc", "ve df de ca", "S-pairs"),
        ("S2", "cyclic ordering", "fveabdc", "ef df de ca", "S-pairs"),
        ("S3", "forest ordering", "fvbcdea", "ef df ec ab", "S-pairs"),
        ("S3", "cyclic ordering", "fvbecda", "ef df de ab", "S-pairs"),
        ("S4", "path ordering", "vdfcaeb", "fv bc bd ef", "S-pairs"),
        ("S4", "cyclic ordering", "vdefabc", "fv bd ae ca ce", "S-pairs"),
        ("S5", "forest ordering", "vacfedb", "bc bf da fv", "S-pairs"),
        ("S5", "cyclic ordering", "afvcedb", "bf bc cf va da", "S-pairs"),
        ("S9", "forest ordering", "vbcadfe", "fv ab ec eb", "S-pairs"),
        ("S9", "cyclic ordering", "vcabdfe", "fv bc eb ec", "S-pairs"),
        ("S10", "forest ordering", "vdeabcf", "ad bd ca fe fv", "S-pairs"),
        ("S10", "cyclic ordering", "vdebcaf", "bd ad ab fe fv", "S-pairs"),
        # class H, forest and cyclic orderings
        ("H18", "forest ordering", "7123465", "52 51 41 37 63", "H-pairs"),
        ("H18", "cyclic ordering", "7241635", "12 52 51 37 34", "H-pairs"),
        ("H37", "forest ordering", "1273465", "52 51 41 67", "H-pairs"),
        ("H37", "cyclic ordering", "2413675", "12 52 51 73 74 34", "H-pairs"),
        ("H3", "forest ordering", "3475126", "13 24 65 23", "H-pairs"),
        ("H3", "cyclic ordering", "7241365", "12 52 51 37 47 34", "H-pairs"),
        ("H8", "forest ordering", "1234657", "52 51 41 76 63", "H-pairs"),
        ("H8", "cyclic ordering", "2416357", "12 52 51 76 34", "H-pairs"),
        ("H20", "forest ordering", "7123465", "52 51 41 67 63", "H-pairs"),
        ("H20", "cyclic ordering", "7241635", "12 52 51 67 34", "H-pairs"),
        ("H2", "forest ordering", "3745126", "13 24 65 23", "H-pairs"),
        ("H2", "cyclic ordering", "7241365", "12 52 51 37 34", "H-pairs"),
        ("H26", "forest ordering", "1237465", "52 51 41 67", "H-pairs"),
        ("H26", "cyclic ordering", "2413675", "12 52 51 74 34", "H-pairs"),
        ("H1", "forest ordering", "1234657", "52 51 41 76", "H-pairs"),
        ("H1", "cyclic ordering", "2413657", "12 52 51 76 34", "H-pairs"),
        ("H25", "forest ordering", "7123465", "52 51 41 67", "H-pairs"),
        ("H25", "cyclic ordering", "7241365", "12 52 51 67 34", "H-pairs"),
        ("H31", "forest ordering", "1234765", "52 51 41 63", "H-pairs"),
        ("H31", "cyclic ordering", "2416375", "12 52 51 76 34", "H-pairs"),
        ("H12", "forest ordering", "1234675", "52 51 41 63", "H-pairs"),
        ("H12", "cyclic ordering", "2416375", "12 52 51 34", "H-pairs"),
        # forbidding two tournaments
        ("S7", "path ordering", "vabfedc", "cf fv db ea", "forbid-two"),
        ("S8", "forest ordering", "vcafedb", "bf fv da bc", "forbid-two"),
        ("S12", "cyclic ordering", "cabefdv", "db dc bc ve va", "forbid-two"),
        ("S13", "forest ordering", "bcdaefv", "vd ec ab ve fb", "forbid-two"),
        ("S14", "forest ordering", "bcdavfe", "vd ec ab ev fb", "forbid-two"),
        ("H15", "forest ordering", "3451726", "23 24 13 65 67", "forbid-two"),
        ("H47", "forest ordering", "7123465", "51 52 41 37 67", "forbid-two"),
        ("H6", "forest ordering", "1723465", "52 51 41", "forbid-two"),
        ("H10", "cyclic ordering", "2741635", "12 52 51 34", "forbid-two"),
        ("H38", "cyclic ordering", "2413657", "12 52 51 73 34 74", "forbid-two"),
        ("H45", "cyclic ordering", "2741365", "12 52 51 34 67", "forbid-two"),
        ("H27", "cyclic ordering", "2471635", "12 52 51 34", "forbid-two"),
        ("H44", "cyclic ordering", "2741635", "12 52 51 34 67", "forbid-two"),
        ("H4", "cyclic ordering", "2741365", "12 52 51 34", "forbid-two"),
        ("H34", "cyclic ordering", "2416357", "12 52 51 34 73 74", "forbid-two"),
        ("H13", "forest ordering", "1234657", "51 52 41 73", "forbid-two"),
        ("H13", "cyclic ordering", "2413657", "12 52 51 73 34", "forbid-two"),
        # forbidding three tournaments
        ("H5", "forest ordering", "1723465", "52 51 41 37", "forbid-three"),
        ("H14", "forest ordering", "3457126", "23 24 13 65", "forbid-three"),
        ("H22", "cyclic ordering 1", "2471365", "52 12 51 57 34", "forbid-three"),
        ("H22", "cyclic ordering 2", "5247136", "34 35 45 65 12", "forbid-three"),
        ("S6", "forest ordering", "veabcfd", "ce da fe fv", "forbid-three"),
        ("S11", "forest ordering 1", "bcvadef", "ab eb dv fc fv", "forbid-three"),
        ("S11", "forest ordering 2", "bcdvaef", "ab eb ad fc fv", "forbid-three"),
        ("H33", "cyclic ordering 1", "2416375", "52 12 51 72 34", "forbid-three"),
        ("H33", "cyclic ordering 2", "4163752", "34 24 23 26 51", "forbid-three"),
        ("H19", "cyclic ordering", "7241365", "12 52 51 57 34", "forbid-three"),
        ("H36", "forest ordering", "1723465", "52 51 41 67 63", "forbid-three"),
        ("H28", "cyclic ordering 1", "4176352", "23 26 24 51 34", "forbid-three"),
        ("H28", "cyclic ordering 2", "2417635", "51 72 12 34 52", "forbid-three"),
        ("H24", "cyclic ordering", "7241635", "51 57 12 34 52", "forbid-three"),
        ("H42", "forest ordering", "1723465", "52 51 41 67", "forbid-three"),
        ("H49", "cyclic ordering", "2416735", "51 57 72 12 34 52", "forbid-three"),
    ]
    return [ClaimedOrdering(*r) for r in rows]


CLAIMED_ORDERINGS = _claims()


# --- construction ------------------------------------------------------

def _c5() -> Tournament:
    return build(5, [(_v_index(a), _v_index(b)) for a, b in C5_ARCS.split()])


def _base(name: str) -> Tournament:
    c5 = _c5()
    if name == "C5":
        return c5
    if name == "L1":
        # v6 -> v5 only
        return add_vertex(c5, [4])
    if name == "L2":
        # v6 beaten by v1, v2, v4
        return add_vertex(c5, [2, 4])
    if name == "K6":
        order, back = _decode(*K6_ORDER, letters=False)
        return from_ordering(order, back)
    raise KeyError(name)


def _vset(digits: str) -> set[int]:
    return {_v_index(ch) for ch in digits}


def all_ids() -> list[str]:
    return (["C5", "L1", "L2", "K6"] + [f"S{i}" for i in S_DEFS]
            + [f"R{i}" for i in R_INNEIGHBOURS] + [f"H{i}" for i in H_DEFS])


@lru_cache(maxsize=None)
def build_named(name: str) -> Tournament:
    """Tournament for a catalog id such as ``C5``, ``S3``, ``R11`` or ``H39``.

    A trailing ``^c`` (or ``c``) after a family member returns its complement.
    """
    if name.endswith("^c"):
        return complement(build_named(name[:-2]))
    if name in ("C5", "L1", "L2", "K6"):
        return _base(name)
    fam, num = name[:1], name[1:]
    if not num.isdigit():
        raise KeyError(f"unknown tournament id {name!r}")
    i = int(num)
    if fam == "S" and i in S_DEFS:
        order, back = _decode(*S_DEFS[i], letters=True)
        return from_ordering(order, back)
    if fam == "R" and i in R_INNEIGHBOURS:
        beaten_by = _vset(R_INNEIGHBOURS[i])
        return add_vertex(_base("K6"), set(range(6)) - beaten_by)
    if fam == "H" and i in H_DEFS:
        base, sign, nbrs = H_DEFS[i]
        nb = _vset(nbrs)
        return add_vertex(_base(base), nb if sign == "+" else set(range(6)) - nb)
    raise KeyError(f"unknown tournament id {name!r}")


def family(fam: str) -> list[str]:
    table = {"S": S_DEFS, "R": R_INNEIGHBOURS, "H": H_DEFS}[fam]
    return [f"{fam}{i}" for i in table]


@lru_cache(maxsize=None)
def family_forms(fam: str) -> dict:
    """Canonical form -> id for every member and every complement of a family.

    A self-complementary member is recorded under its own id.
    """
    forms = {}
    for name in family(fam):
        forms.setdefault(canonical_form(build_named(name)), name)
        forms.setdefault(canonical_form(complement(build_named(name))), name + "^c")
    return forms


def describe(name: str) -> dict:
    t = build_named(name)
    fam = "S" if name.startswith("S") else "V"
    return {
        "id": name,
        "n": t.n,
        "labels": [label(fam, v) for v in range(t.n)],
        "scores": list(t.scores()),
        "orientation": t.orientation_bits(),
        "adjacency": ["".join("1" if t.beats(u, v) else "0" for v in range(t.n)) for u in range(t.n)],
    }


# --- verification ------------------------------------------------------

def verify_ordering(claim: ClaimedOrdering) -> dict:
    """Rebuild the tournament from a claimed (theta, E(theta)) and compare with its target."""
    order, back = claim.decoded()
    built = from_ordering(order, back)
    target = build_named(claim.target)
    recomputed = backward_arcs(built, order)
    return {
        "target": claim.target,
        "label": claim.label,
        "group": claim.group,
        "theta": claim.theta,
        "backward_count": len(back),
        "consistent": sorted(recomputed) == sorted(back),
        "isomorphic": is_isomorphic(built, target),
    }


def _pairwise_distinct(names: list[str]) -> list[list[str]]:
    groups: dict = {}
    for n in names:
        groups.setdefault(canonical_form(build_named(n)), []).append(n)
    return [g for g in groups.values() if len(g) > 1]


def _symmetric_pairs(names: list[str]) -> list[list[str]]:
    forms = {canonical_form(build_named(n)): n for n in names}
    pairs = []
    for n in names:
        other = forms.get(canonical_form(complement(build_named(n))))
        if other is not None and other != n and [other, n] not in pairs:
            pairs.append([n, other])
    return pairs


def verify_catalog() -> dict:
    """Run the full claim suite over the catalog; mismatches are reported, not raised."""
    from .core import is_free

    k6, l1, l2 = (build_named(x) for x in ("K6", "L1", "L2"))
    checks = []

    def record(name, ok, detail=None):
        checks.append({"claim": name, "ok": bool(ok), "detail": detail})

    record("C5 regular with out-degree 2", build_named("C5").scores() == (2,) * 5)
    record("C5 prime", is_prime(build_named("C5")))
    record("C5 not a galaxy", find_galaxy_ordering(build_named("C5")) is None)
    record("K6 prime", is_prime(k6))
    record("K6 not a galaxy", find_galaxy_ordering(k6) is None)

    s_ids = family("S")
    not_prime = [s for s in s_ids if not is_prime(build_named(s))]
    record("every S_i prime", not not_prime, not_prime)
    not_free = [s for s in s_ids if not is_free(build_named(s), [k6, l1, l2])]
    record("every S_i (K6,L1,L2)-free", not not_free, not_free)
    galaxies = [s for s in s_ids if find_galaxy_ordering(build_named(s)) is not None]
    record("no S_i is a galaxy", not galaxies, galaxies)
    record("S_i pairwise nonisomorphic", not _pairwise_distinct(s_ids), _pairwise_distinct(s_ids))

    h_ids = family("H")
    not_prime = [h for h in h_ids if not is_prime(build_named(h))]
    record("every H_i prime", not not_prime, not_prime)
    record("H_i pairwise nonisomorphic", not _pairwise_distinct(h_ids), _pairwise_distinct(h_ids))

    r_ids = family("R")
    record("R_i pairwise nonisomorphic", not _pairwise_distinct(r_ids), _pairwise_distinct(r_ids))

    self_comp = {fam: [x for x in family(fam)
                       if is_isomorphic(build_named(x), complement(build_named(x)))]
                 for fam in "SRH"}
    symmetric = {fam: _symmetric_pairs(family(fam)) for fam in "SRH"}
    record("no S_i isomorphic to the complement of another S_j", not symmetric["S"], symmetric["S"])

    orderings = [verify_ordering(c) for c in CLAIMED_ORDERINGS]
    failed = [f"{o['target']} {o['label']}" for o in orderings
              if not (o["isomorphic"] and o["consistent"])]
    record("every claimed ordering reconstructs its target", not failed, failed)

    return {
        "checks": checks,
        "self_complementary": self_comp,
        "symmetric_pairs": symmetric,
        "orderings": orderings,
        "corrections": CORRECTIONS,
        "passed": all(c["ok"] for c in checks),
    }
