import json

import pytest
from hypothesis import given

from strategies import graphs
from cliquecover.errors import HostMismatch, InvalidInput, NotACliqueError
from cliquecover.graph_core import (CliqueCover, Graph, complement, cover_from_json, cover_from_lists,
                                    cover_to_json, from_mask, induced_subgraph, iter_bits, merge_cliques,
                                    parse_edge_list, read_edge_list, to_mask, verify_cover, write_edge_list)


def edge_cover(g):
    return cover_from_lists(g, [set(e) for e in g.edges()])


def test_mask_roundtrip():
    vs = {0, 3, 7, 64}
    assert from_mask(to_mask(vs)) == vs
    assert list(iter_bits(to_mask(vs))) == sorted(vs)


def test_rejects_loops_and_bad_labels():
    with pytest.raises(InvalidInput):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(InvalidInput):
        Graph.from_edges(2, [(0, 2)])
    with pytest.raises(InvalidInput):
        Graph.from_edges(2, [], ["a", "a"])
    with pytest.raises(InvalidInput):
        Graph(2, (2, 0))


@given(graphs())
def test_edge_count_and_degrees(g):
    assert g.m == len(g.edges()) == sum(g.degree(v) for v in range(g.n)) // 2


@given(graphs())
def test_complement_is_involution(g):
    h = complement(g)
    assert complement(h) == g
    assert g.m + h.m == g.n * (g.n - 1) // 2


@given(graphs())
def test_edges_always_cover(g):
    v = verify_cover(g, edge_cover(g))
    assert v.ok and str(v) == "OK"


@given(graphs(min_n=2))
def test_dropping_an_edge_is_detected(g):
    c = edge_cover(g)
    if not len(c):
        return
    v = verify_cover(g, CliqueCover(c.cliques[1:], g))
    assert v.kind == "Uncovered" and v.pair == tuple(sorted(c.cliques[0]))


def test_non_clique_reported_with_pair():
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    v = verify_cover(g, cover_from_lists(g, [{0, 1, 2}]))
    assert v.kind == "NotAClique" and v.index == 0 and v.pair == (0, 2)


def test_degenerate_cliques_are_legal():
    g = Graph.from_edges(3, [(0, 1)])
    v = verify_cover(g, cover_from_lists(g, [{0, 1}, {2}, set()]))
    assert v.ok and v.degenerate == (1, 2)


def test_host_mismatch():
    g = Graph.from_edges(2, [(0, 1)])
    h = Graph.from_edges(2, [])
    with pytest.raises(HostMismatch):
        verify_cover(h, edge_cover(g))


def test_merge_cliques():
    g = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    c = merge_cliques(edge_cover(g), [0, 2])
    assert len(c) == 2 and c[0] == {0, 1, 2} and verify_cover(g, c).ok
    with pytest.raises(NotACliqueError):
        merge_cliques(edge_cover(g.remove_edges([(0, 2)])), [0, 1])


@given(graphs())
def test_edge_list_roundtrip(tmp_path_factory, g):
    path = str(tmp_path_factory.mktemp("el") / "g.txt")
    write_edge_list(g, path)
    assert read_edge_list(path) == g


def test_edge_list_labels_sidecar(tmp_path):
    g = Graph.from_labeled_edges(["a", "b", "c"], [("a", "c")])
    path = str(tmp_path / "g.txt")
    write_edge_list(g, path)
    back = read_edge_list(path)
    assert back.labels == ("a", "b", "c") and back.has_edge(0, 2)


@pytest.mark.parametrize("text", ["", "3\n", "2 2\n0 1\n", "2 1\n0 1 1\n"])
def test_edge_list_parse_errors(text):
    with pytest.raises(InvalidInput):
        parse_edge_list(text)


def test_cover_json_roundtrip():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    c = cover_from_lists(g, [{0, 1, 2}, {2, 3}])
    text = cover_to_json(c)
    assert json.loads(text) == {"n": 4, "cliques": [[0, 1, 2], [2, 3]]}
    assert cover_from_json(g, text) == c
    with pytest.raises(HostMismatch):
        cover_from_json(Graph.from_edges(5, []), text)


@given(graphs(min_n=1))
def test_induced_subgraph_keeps_adjacency(g):
    keep = list(range(0, g.n, 2))
    h, ids = induced_subgraph(g, keep)
    assert ids == keep and h.n == len(keep)
    for a in range(h.n):
        for b in range(h.n):
            if a != b:
                assert h.has_edge(a, b) == g.has_edge(keep[a], keep[b])


def test_connectivity():
    assert Graph.from_edges(3, [(0, 1), (1, 2)]).is_connected()
    assert not Graph.from_edges(3, [(0, 1)]).is_connected()
