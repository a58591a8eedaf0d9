import pytest

from tournaments.catalog import build_named
from tournaments.core import contains, transitive_tournament
from tournaments.io import write
from tournaments.search import SearchConfig, local_search
from tournaments.transitive import max_transitive_size


def test_cyclic_triangle_is_found():
    res = local_search(SearchConfig(3, (), seed=1, max_steps=100, restarts=2))
    assert res.tr_value == 2 and res.free_certificate


def test_k6_free_certificate():
    res = local_search(SearchConfig(6, ("K6",), seed=3, max_steps=400, restarts=2))
    assert res.free_certificate
    assert contains(res.best, build_named("K6")) is None
    assert max_transitive_size(res.best) == res.tr_value


def test_determinism():
    cfg = SearchConfig(10, ("C5",), seed=11, max_steps=300, restarts=3)
    a, b = local_search(cfg), local_search(cfg)
    assert a.to_json() == b.to_json()
    assert local_search(SearchConfig(10, ("C5",), seed=12, max_steps=300, restarts=3)).to_json() != a.to_json()


def test_trace_is_monotone():
    res = local_search(SearchConfig(12, ("L1",), seed=5, max_steps=500, restarts=3))
    for r in res.trace:
        values = [v for _, v in r.history]
        assert values == sorted(values, reverse=True)
        assert r.best_tr == values[-1]
    assert res.tr_value == min(r.best_tr for r in res.trace)
    assert res.best_restart == min(i for i, r in enumerate(res.trace) if r.best_tr == res.tr_value)


def test_forbidden_from_file(tmp_path):
    write(build_named("C5"), tmp_path / "c5.trn")
    res = local_search(SearchConfig(8, (str(tmp_path / "c5.trn"),), seed=0, max_steps=200))
    assert res.free_certificate and contains(res.best, build_named("C5")) is None


def test_config_errors():
    with pytest.raises(ValueError):
        local_search(SearchConfig(5, ("S1",)))
    with pytest.raises(ValueError):
        SearchConfig(31)
    with pytest.raises(ValueError):
        SearchConfig(5, restarts=0)
    with pytest.raises(KeyError):
        local_search(SearchConfig(8, ("Q7",)))


def test_transitive_pattern_is_rejected(tmp_path):
    write(transitive_tournament(3), tmp_path / "tt3.trn")
    with pytest.raises(ValueError):
        local_search(SearchConfig(6, (str(tmp_path / "tt3.trn"),)))
