import pytest
from hypothesis import given, settings

from conftest import brute_chromatic, brute_treewidth, graphs
from twcolor.config import SizeError, parse_caps
from twcolor.decomposition import validate, width
from twcolor.graph import Graph
from twcolor.oracles import chromatic_number_exact, is_k_colorable, treewidth_exact


def test_chromatic_examples():
    assert chromatic_number_exact(Graph.cycle(5)) == 3
    assert chromatic_number_exact(Graph.complete(4)) == 4
    assert chromatic_number_exact(Graph.petersen()) == 3
    assert chromatic_number_exact(Graph(0)) == 0
    assert chromatic_number_exact(Graph(3)) == 1


def test_chromatic_cap():
    with pytest.raises(SizeError):
        chromatic_number_exact(Graph(17))
    assert chromatic_number_exact(Graph(17), cap=20) == 1


def test_treewidth_examples():
    assert treewidth_exact(Graph.complete(4))[0] == 3
    assert treewidth_exact(Graph.path(5))[0] == 1
    star = Graph.from_edges(5, [(0, i) for i in range(1, 5)])
    assert treewidth_exact(star)[0] == 1
    assert treewidth_exact(Graph.cycle(5))[0] == 2
    assert treewidth_exact(Graph.petersen())[0] == 4
    assert treewidth_exact(Graph(0))[0] == 0
    with pytest.raises(SizeError):
        treewidth_exact(Graph(15))


def test_caps_parse():
    caps = parse_caps("treewidth=10, chromatic=12")
    assert (caps.subsets, caps.chromatic, caps.treewidth) == (24, 12, 10)
    with pytest.raises(ValueError):
        parse_caps("colors=3")


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7))
def test_oracles_match_brute_force(g):
    assert chromatic_number_exact(g) == brute_chromatic(g)
    tw, td = treewidth_exact(g)
    assert tw == brute_treewidth(g)
    assert validate(g, td).ok
    assert max(width(td), 0) == tw


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8))
def test_k_colorable_witness_is_proper(g):
    k = chromatic_number_exact(g)
    coloring = is_k_colorable(g, k)
    assert coloring is not None
    assert all(coloring[a] != coloring[b] for a, b in g.edges())
    if k:
        assert is_k_colorable(g, k - 1) is None
