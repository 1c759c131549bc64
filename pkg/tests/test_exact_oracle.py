from itertools import combinations, product

import pytest
from hypothesis import given

from strategies import graphs
from cliquecover.errors import BudgetExhausted, CapExceeded
from cliquecover.exact_oracle import (chromatic_number, exact_clique_cover, graph_metrics, local_chromatic_values,
                                      lower_bound_cc)
from cliquecover.generators import line_graph, named_graph, power_of_cycle
from cliquecover.graph_core import Graph, verify_cover


def brute_cc(g):
    """Smallest number of cliques covering every edge, by trying all families."""
    cliques = [frozenset(s) for k in range(2, g.n + 1) for s in combinations(range(g.n), k) if g.is_clique(s)]
    edges = [frozenset(e) for e in g.edges()]
    for k in range(len(edges) + 1):
        for fam in combinations(cliques, k):
            if all(any(e <= c for c in fam) for e in edges):
                return k


def brute_chi(g):
    for k in range(g.n + 1):
        if any(all(col[u] != col[v] for u, v in g.edges())
               for col in product(range(k), repeat=g.n)):
            return k


def complete(n):
    return Graph.from_edges(n, combinations(range(n), 2))


@given(graphs(max_n=6))
def test_exact_matches_brute_force(g):
    k, cover = exact_clique_cover(g)
    assert k == len(cover) == brute_cc(g)
    assert verify_cover(g, cover).ok


@given(graphs(max_n=7))
def test_chromatic_number_matches_brute_force(g):
    assert chromatic_number(g) == brute_chi(g)


@given(graphs(max_n=8))
def test_lower_bound_sandwich(g):
    lb = lower_bound_cc(g)
    assert lb <= exact_clique_cover(g)[0]
    assert lb == graph_metrics(g).cc_lower


@pytest.mark.parametrize("g,cc", [
    (complete(1), 0), (complete(5), 1), (power_of_cycle(5, 1), 5),
    (Graph.from_edges(6, [(i, j) for i in range(3) for j in range(3, 6)]), 9),
    (line_graph(complete(4)), 4), (named_graph("IcosaG0"), 12), (named_graph("twister"), 10),
])
def test_frozen_values(g, cc):
    assert exact_clique_cover(g)[0] == cc


def test_local_chromatic_values_on_cycle():
    assert local_chromatic_values(power_of_cycle(6, 1)) == [2] * 6
    assert lower_bound_cc(power_of_cycle(6, 1)) == 6


def test_caps_and_budget(monkeypatch):
    big = power_of_cycle(30, 4)
    with pytest.raises(CapExceeded):
        exact_clique_cover(big)
    assert exact_clique_cover(power_of_cycle(30, 1))[0] == 30
    monkeypatch.setenv("CLIQUECOVER_CAP_N", "40")
    with pytest.raises(BudgetExhausted):
        exact_clique_cover(big, budget=10)


def test_metrics_json():
    m = graph_metrics(power_of_cycle(7, 2), with_exact=True)
    d = m.to_json()
    assert d["n"] == 7 and d["m"] == 14 and d["omega"] == 3 and d["alpha"] == 2
    assert d["cc_lower"] <= d["cc_exact"] == 7
