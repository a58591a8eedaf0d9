import pytest

import oracles
from tournaments import catalog
from tournaments.catalog import (CLAIMED_ORDERINGS, CORRECTIONS, all_ids, build_named, family,
                                 family_forms, verify_catalog, verify_ordering)
from tournaments.core import canonical_form, complement, is_isomorphic
from tournaments.io import to_trn


def test_ids_and_sizes():
    ids = all_ids()
    assert len(ids) == 89 and len(set(ids)) == 89
    assert len(family("S")) == 15 and len(family("R")) == 11 and len(family("H")) == 59
    for name in ids:
        t = build_named(name)
        assert t.n == (5 if name == "C5" else 6 if name in ("L1", "L2", "K6") else 7)


def test_unknown_ids():
    for bad in ("S16", "R0", "H60", "X1", "S", "K7"):
        with pytest.raises(KeyError):
            build_named(bad)


def test_defining_data():
    c5 = build_named("C5")
    assert c5.scores() == (2,) * 5
    assert build_named("R1").out_degree(6) == 6
    h1 = build_named("H1")
    assert h1.out_neighbors(6) == (5,)
    l1 = build_named("L1")
    assert l1.out_neighbors(5) == (4,)
    l2 = build_named("L2")
    assert l2.out_neighbors(5) == (2, 4)
    k6 = build_named("K6")
    assert [(u, v) for u in range(6) for v in range(u) if k6.beats(u, v)] == [(3, 0), (4, 1), (5, 0), (5, 2)]
    s1 = build_named("S1")
    a, b, c, d, e, f, v = range(7)
    assert s1.beats(v, d) and s1.beats(e, a) and s1.beats(d, f)


def test_label_binding_is_stable():
    first = [to_trn(build_named(n)) for n in all_ids()]
    build_named.cache_clear()
    assert first == [to_trn(build_named(n)) for n in all_ids()]


def test_complement_ids():
    assert build_named("S3^c") == complement(build_named("S3"))


def test_c5_is_the_unique_regular_five_vertex_class():
    from tournaments.landscape import enumerate_classes
    regular = [t for t in enumerate_classes(5) if t.is_regular()]
    assert len(regular) == 1 and is_isomorphic(regular[0], build_named("C5"))


def test_family_forms_cover_complements():
    forms = family_forms("S")
    for name in family("S"):
        assert canonical_form(complement(build_named(name))) in forms


def test_claimed_orderings_count_by_group():
    groups = {}
    for c in CLAIMED_ORDERINGS:
        groups[c.group] = groups.get(c.group, 0) + 1
    assert groups == {"S-pairs": 14, "H-pairs": 22, "forbid-two": 17, "forbid-three": 16}


def test_cyclic_ordering_of_s1():
    claim = next(c for c in CLAIMED_ORDERINGS if c.target == "S1" and c.label == "cyclic ordering")
    rep = verify_ordering(claim)
    assert rep["isomorphic"] and rep["consistent"] and rep["backward_count"] == 5
    order, back = claim.decoded()
    from tournaments.core import from_ordering
    assert oracles.isomorphic(from_ordering(order, back), build_named("S1"))


def test_mismatch_is_reported_not_raised():
    bogus = catalog.ClaimedOrdering("S1", "bogus", "abcdefv", "ba", "S-pairs")
    rep = verify_ordering(bogus)
    assert rep["consistent"] and not rep["isomorphic"]


def test_verify_catalog_report():
    rep = verify_catalog()
    assert rep["passed"], [c for c in rep["checks"] if not c["ok"]]
    assert rep["corrections"] == CORRECTIONS
    assert all(o["isomorphic"] and o["consistent"] for o in rep["orderings"])
    assert rep["symmetric_pairs"] == {"S": [], "R": [], "H": []}
    # brute-force cross-check of the self-complementary lists
    for fam in "SR":
        expect = [n for n in family(fam) if oracles.isomorphic(build_named(n), complement(build_named(n)))]
        assert rep["self_complementary"][fam] == expect


def test_s_family_galaxy_free_by_brute_force():
    # a slow independent check on a few members
    for name in ("S1", "S8", "S15"):
        assert not oracles.is_galaxy(build_named(name))
