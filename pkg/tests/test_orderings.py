import pytest
from hypothesis import given, settings

import oracles
from conftest import random_tournament, tournaments
from tournaments.catalog import build_named
from tournaments.core import build, from_ordering, transitive_tournament
from tournaments.orderings import (backward_arcs, backward_graph, find_galaxy_ordering, forward_arcs,
                                   is_galaxy, is_galaxy_ordering, is_star_ordering, star_decomposition)


def test_backward_arcs_sorted_by_positions():
    t = from_ordering([0, 1, 2, 3], [(3, 0), (2, 1)])
    assert backward_arcs(t, [0, 1, 2, 3]) == [(2, 1), (3, 0)]
    assert len(forward_arcs(t, [0, 1, 2, 3])) == 4


def test_ordering_must_be_a_permutation():
    t = transitive_tournament(3)
    with pytest.raises(ValueError):
        backward_arcs(t, [0, 1])
    with pytest.raises(ValueError):
        backward_arcs(t, [0, 1, 1])


@settings(max_examples=100, deadline=None)
@given(tournaments(min_n=2, max_n=8))
def test_from_ordering_round_trip(t):
    theta = list(range(t.n))[::-1]
    assert from_ordering(theta, backward_arcs(t, theta)) == t


def test_star_decomposition_shapes():
    # left star: position 0 joined backwards to positions 2 and 3
    t = from_ordering(range(4), [(2, 0), (3, 0)])
    stars = star_decomposition(backward_graph(t, range(4)))
    assert len(stars) == 1 and stars[0].center == 0 and stars[0].chirality == "left"
    # path of three edges is no star
    t = from_ordering(range(4), [(1, 0), (2, 1), (3, 2)])
    assert star_decomposition(backward_graph(t, range(4))) is None
    # center between its leaves is not a star ordering
    t = from_ordering(range(3), [(1, 0), (2, 1)])
    assert not is_star_ordering(t, range(3))


def test_center_between_leaves_of_another_star():
    # stars {0; 3, 4} and {2; 5, 6}: neither center inside the other's leaf span
    t = from_ordering(range(7), [(3, 0), (4, 0), (5, 2), (6, 2)])
    assert is_galaxy_ordering(t, range(7))
    # star {0; 2, 4} and star {3; 5, 6}: center 3 between leaves 2 and 4
    t = from_ordering(range(7), [(2, 0), (4, 0), (5, 3), (6, 3)])
    assert is_star_ordering(t, range(7)) and not is_galaxy_ordering(t, range(7))


def test_single_edge_star_may_pick_its_center():
    # star {0; 2, 5} and edge {3, 4}: either endpoint lies between leaves 2 and 5
    t = from_ordering(range(6), [(2, 0), (5, 0), (4, 3)])
    assert is_star_ordering(t, range(6)) and not is_galaxy_ordering(t, range(6))
    # star {0; 2, 4} and edge {1, 3}: taking 1 as the center keeps it outside 2..4
    t = from_ordering(range(5), [(2, 0), (4, 0), (3, 1)])
    assert is_galaxy_ordering(t, range(5))
    assert oracles.galaxy_ordering(t, list(range(5)))


@settings(max_examples=300, deadline=None)
@given(tournaments(min_n=2, max_n=7))
def test_galaxy_ordering_matches_definition(t):
    theta = list(range(t.n))
    assert is_galaxy_ordering(t, theta) == oracles.galaxy_ordering(t, theta)


def test_galaxy_search_matches_exhaustive_oracle(rng):
    for _ in range(25):
        t = random_tournament(rng.randint(3, 6), rng)
        theta = find_galaxy_ordering(t)
        assert (theta is not None) == oracles.is_galaxy(t)


def test_named_non_galaxies():
    for name in ("C5", "K6", "S1", "S15"):
        assert not is_galaxy(build_named(name))
    assert is_galaxy(transitive_tournament(7))
    assert find_galaxy_ordering(transitive_tournament(7)) == tuple(range(7))


def test_search_size_limit():
    with pytest.raises(ValueError):
        find_galaxy_ordering(transitive_tournament(10))


def test_cyclic_triangle_is_galaxy():
    assert is_galaxy(build(3, [(2, 0)]))
