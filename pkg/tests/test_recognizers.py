import random
from itertools import combinations, product

import pytest
from hypothesis import given

from strategies import graphs
from cliquecover.errors import NoTriad, NotAntiprismatic
from cliquecover.generators import named_graph, power_of_cycle, rotator_complement, schlafli
from cliquecover.graph_core import Graph, complement
from cliquecover.recognizers import (StructureReport, changeable_pairs, clique_number, find_claw, find_rotator,
                                     first_triad, independence_number, is_antiprismatic, is_claw_free,
                                     is_k_substantial, is_rotator, local_independence_number,
                                     power_of_cycle_order, simplicial_vertices, square_forcers,
                                     three_clique_partition, triads)


def brute_omega(g):
    return max((k for k in range(g.n + 1) for s in combinations(range(g.n), k) if g.is_clique(s)), default=0)


def brute_claw(g):
    for c in range(g.n):
        for leaves in combinations(sorted(g.neighbors(c)), 3):
            if g.is_stable(leaves):
                return True
    return False


def brute_antiprismatic(g):
    for t in combinations(range(g.n), 3):
        if g.is_stable(t):
            for v in set(range(g.n)) - set(t):
                if sum(g.has_edge(v, x) for x in t) != 2:
                    return False
    return True


@given(graphs())
def test_clique_and_independence_numbers(g):
    assert clique_number(g) == brute_omega(g)
    assert independence_number(g) == brute_omega(complement(g))


@given(graphs())
def test_claw_detection(g):
    claw = find_claw(g)
    assert (claw is not None) == brute_claw(g) == (not is_claw_free(g))
    if claw is not None:
        assert StructureReport("Claw", claw).check(g)


@given(graphs())
def test_triads_are_stable_triples(g):
    want = [t for t in combinations(range(g.n), 3) if g.is_stable(t)]
    assert sorted(map(tuple, map(sorted, triads(g)))) == want
    assert (first_triad(g) is None) == (not want)


@given(graphs())
def test_antiprismatic_matches_definition(g):
    ok, bad = is_antiprismatic(g)
    assert ok == brute_antiprismatic(g)
    if not ok:
        t, v = bad
        assert StructureReport("Triad", t).check(g) and v not in t


@given(graphs(max_n=8))
def test_three_clique_partition(g):
    part = three_clique_partition(g)
    brute = any(all(g.is_clique([v for v in range(g.n) if col[v] == c]) for c in range(3))
                for col in product(range(3), repeat=g.n))
    assert (part is not None) == brute
    if part is not None:
        assert StructureReport("ThreeCliquePartition", part).check(g)


@given(graphs())
def test_local_independence_number(g):
    want = max((brute_omega(complement(g.__class__.from_edges(
        len(nb), [(a, b) for a, b in combinations(range(len(nb)), 2) if g.has_edge(nb[a], nb[b])])))
        for nb in (sorted(g.neighbors(v)) for v in range(g.n)) if nb), default=0)
    assert local_independence_number(g) == want


@given(graphs())
def test_simplicial_and_square_forcers(g):
    for v in range(g.n):
        assert (v in simplicial_vertices(g)) == g.is_clique(g.neighbors(v))
    for u, v in square_forcers(g):
        assert g.is_clique(g.neighbors(u) & g.neighbors(v))
        assert StructureReport("SquareForcer", (u, v)).check(g)


def test_twister_changeable_pairs_and_errors():
    g = named_graph("twister")
    labels = {tuple(sorted((g.label(u), g.label(v)))) for u, v in changeable_pairs(g)}
    assert labels == {("v1", "v5"), ("v2", "v6"), ("v3", "v7"), ("v4", "v8")}
    for u, v in changeable_pairs(g):
        assert StructureReport("ChangeablePair", (u, v)).check(g)
    with pytest.raises(NotAntiprismatic):
        changeable_pairs(Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)]))


def test_k_substantial():
    with pytest.raises(NoTriad):
        is_k_substantial(Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)]), 2)
    three = Graph.from_edges(3, [])
    assert is_k_substantial(three, 1) and not is_k_substantial(three, 2)
    assert is_k_substantial(schlafli(), 2)


def test_schlafli_is_antiprismatic_with_rotator():
    g = schlafli()
    assert is_antiprismatic(g)[0]
    rho = find_rotator(g)
    assert rho is not None and is_rotator(g, rho)
    assert StructureReport("Rotator", rho).check(g)


def test_rotator_complement_is_its_own_rotator():
    g = rotator_complement()
    assert g.n == 9 and find_rotator(g) is not None
    assert not is_rotator(g, tuple(range(8)))


@pytest.mark.parametrize("n,p", [(n, p) for n in range(3, 13) for p in range(1, (n - 1) // 2 + 1)])
def test_power_of_cycle_order_recovers_shuffled_power(n, p):
    g = power_of_cycle(n, p)
    perm = list(range(n))
    random.Random(n * 31 + p).shuffle(perm)
    h = Graph.from_edges(n, [(perm[u], perm[v]) for u, v in g.edges()])
    order = power_of_cycle_order(h)
    assert order is not None and sorted(order) == list(range(n))
    for i, j in combinations(range(n), 2):
        d = min(j - i, n - (j - i))
        assert h.has_edge(order[i], order[j]) == (d <= p)


@pytest.mark.parametrize("name", ["IcosaG0", "TwisterComplement"])
def test_power_of_cycle_order_rejects(name):
    assert power_of_cycle_order(named_graph(name)) is None
