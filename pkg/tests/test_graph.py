import itertools

import pytest
from hypothesis import given, settings

from conftest import brute_independent_sets, graphs
from twcolor.config import SizeError
from twcolor.graph import (
    Graph,
    InputError,
    enumerate_independent_sets,
    is_clique_free,
    is_independent,
    is_proper,
)

K2 = Graph.complete(2)
C5 = Graph.cycle(5)
K4 = Graph.complete(4)


def test_is_independent_examples():
    assert not is_independent(K2, {0, 1})
    assert is_independent(K2, {0})
    assert is_independent(C5, {0, 2})
    with pytest.raises(InputError):
        is_independent(K2, {5})


def test_is_clique_free_examples():
    assert is_clique_free(C5, 3)
    assert not is_clique_free(K4, 4)
    k4_minus = Graph.from_edges(4, [e for e in K4.edges() if e != (0, 1)])
    assert is_clique_free(k4_minus, 4)
    assert not is_clique_free(k4_minus, 3)
    with pytest.raises(InputError):
        is_clique_free(C5, 1)


def test_enumerate_independent_sets_examples():
    assert set(enumerate_independent_sets(K2, {0, 1})) == {frozenset(), frozenset({0}), frozenset({1})}
    assert len(enumerate_independent_sets(Graph(2), {0, 1})) == 4
    p3 = Graph.path(3)
    assert set(enumerate_independent_sets(p3, {0, 1, 2})) == {
        frozenset(), frozenset({0}), frozenset({1}), frozenset({2}), frozenset({0, 2})
    }


def test_enumerate_cap():
    with pytest.raises(SizeError):
        enumerate_independent_sets(Graph(5), range(5), cap=4)


def test_enumerate_cap_from_env(monkeypatch):
    monkeypatch.setenv("TWCOLOR_CAPS", "subsets=3")
    with pytest.raises(SizeError):
        enumerate_independent_sets(Graph(4))


def test_is_proper_examples():
    assert is_proper(K2, {0: 1, 1: 2})
    assert not is_proper(K2, {0: 1, 1: 1})
    assert is_proper(C5, {0: 1, 1: 2, 2: 1, 3: 2, 4: 3})
    with pytest.raises(InputError):
        is_proper(K2, {0: 1})


def test_graph_rejects_bad_adjacency():
    with pytest.raises(InputError):
        Graph(2, [{1}, set()])
    with pytest.raises(InputError):
        Graph(1, [{0}])
    with pytest.raises(InputError):
        Graph.from_edges(2, [(0, 2)])


@given(graphs())
def test_adjacency_invariants(g):
    for v in g.vertices():
        assert v not in g.neighbors(v)
        for u in g.neighbors(v):
            assert v in g.neighbors(u) and u < g.n


@given(graphs(max_n=7))
def test_independent_sets_match_power_set_filter(g):
    found = enumerate_independent_sets(g)
    assert all(is_independent(g, s) for s in found)
    assert sorted(map(sorted, found)) == sorted(map(sorted, brute_independent_sets(g, range(g.n))))


@settings(max_examples=200)
@given(graphs(max_n=8))
def test_triangle_free_matches_common_neighbourhood_check(g):
    # independent formulation: no edge uv with a common neighbor
    expected = all(not (g.neighbors(u) & g.neighbors(v)) for u, v in g.edges())
    assert is_clique_free(g, 3) == expected


@given(graphs(max_n=7))
def test_clique_free_matches_subset_enumeration(g):
    for k in (2, 3, 4):
        has = any(
            all(g.has_edge(a, b) for a, b in itertools.combinations(s, 2))
            for s in itertools.combinations(range(g.n), k)
        )
        assert is_clique_free(g, k) == (not has)
