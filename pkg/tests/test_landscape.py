import pytest

import oracles
from conftest import random_tournament
from tournaments.catalog import build_named
from tournaments.core import canonical_form, relabel, transitive_tournament
from tournaments.landscape import (FROZEN_COUNTS, DegreeProfile, class_counts, classify7,
                                   complement_closed, constellation_cases, enumerate_classes,
                                   run_landscape)


def test_counts_match_orbit_oracle():
    counts = class_counts(5)
    assert [counts[n] for n in range(1, 6)] == [oracles.orbit_count(n) for n in range(1, 6)]


def test_frozen_counts():
    counts = class_counts(7)
    assert counts[6] == FROZEN_COUNTS[6] and counts[7] == FROZEN_COUNTS[7]


def test_representatives_are_canonical_and_sorted():
    forms = [canonical_form(t) for t in enumerate_classes(6)]
    assert forms == sorted(set(forms))
    assert all(t == f.tournament() for t, f in zip(enumerate_classes(6), forms))


def test_complement_closure():
    for n in range(1, 8):
        assert complement_closed(n)


def test_enumeration_limit():
    with pytest.raises(ValueError):
        enumerate_classes(9)
    with pytest.raises(ValueError):
        enumerate_classes(0)


def test_classify_examples():
    r = classify7(build_named("S1"))
    assert r.flags["in_S"] and not r.flags["is_galaxy"] and r.prime
    r = classify7(build_named("R1"))
    assert r.flags["in_R"] and not r.prime and not r.flags["nonprime_and_K6free"]
    r = classify7(transitive_tournament(7))
    assert r.flags["is_galaxy"] and r.witnesses["galaxy_ordering"] == list(range(7))
    r = classify7(build_named("H5^c"))
    assert r.flags["in_H"] and r.witnesses["catalog_H"] == "H5^c"
    with pytest.raises(ValueError):
        classify7(transitive_tournament(6))


def test_flags_are_isomorphism_invariant(rng):
    for _ in range(20):
        t = random_tournament(7, rng)
        perm = list(range(7))
        rng.shuffle(perm)
        assert classify7(t).flags == classify7(relabel(t, perm)).flags


def test_degree_profile():
    p = DegreeProfile.of(build_named("S15"))
    assert p.n(3, 3) == 7 and p.balanced and p.identity_holds()
    assert DegreeProfile.of(transitive_tournament(7)).counts == (1,) * 7
    assert sum(DegreeProfile.of(build_named("H3")).counts) == 7
    with pytest.raises(ValueError):
        p.n(3, 4)


def test_run_landscape_summary():
    rep = run_landscape()
    assert rep["classes"] == 456 and rep["coverage"]
    assert rep["regular"]["ok"] and rep["regular"]["count"] == 3
    assert not rep["degree_identity_failures"] and not rep["extreme_degree_failures"]
    for r in rep["residuals"]:
        assert r["prime"] and not r["galaxy"] and r["k6_l1_l2_free"]
    assert rep["residual_count"] == rep["flag_counts"]["residual"]
    assert rep["overlap"]["in_S"]["in_S"] == rep["flag_counts"]["in_S"]


def test_constellation_cases():
    cases = constellation_cases()
    assert len(cases) == 2
    for c in cases:
        assert c["star_ordering"] and not c["galaxy_ordering"]
        assert c["prime"] and not c["galaxy"]
    residual = {r.form.hex for r in map(classify7, enumerate_classes(7)) if r.flags["residual"]}
    forms = {c["form"] for c in cases} | {c["complement_form"] for c in cases}
    assert residual == forms
