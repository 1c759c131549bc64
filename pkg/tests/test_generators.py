import random
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from cliquecover.errors import InvalidInput
from cliquecover.exact_oracle import lower_bound_cc
from cliquecover.generators import (ChainTerm, CircularIntervalRep, ThickeningSpec, TriangleChainParams,
                                    WornHexChain, build_triangle_chain, check_triangle_chain,
                                    circular_interval_graph, line_graph, mantled, named_graph, parallel_square,
                                    power_of_cycle, power_of_cycle_rep, random_antiprismatic, random_circular,
                                    random_circular_rep, random_instance, random_mantled_params,
                                    random_ring_params, random_three_cliqued, random_tree, random_tree_line,
                                    random_triangle_chain_params, ring_of_five, schlafli, skew_square, thicken,
                                    triad_term, triangle_chain_graph, worn_hex_chain)
from cliquecover.graph_core import Graph
from cliquecover.recognizers import (find_claw, first_triad, is_antiprismatic, power_of_cycle_order,
                                     simplicial_vertices)


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete(n):
    return Graph.from_edges(n, combinations(range(n), 2))


def star(k):
    return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


# fixed graphs

@given(st.integers(3, 20).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, (n - 1) // 2))))
def test_power_of_cycle_is_regular(np_):
    n, p = np_
    g = power_of_cycle(n, p)
    want = n - 1 if n == 2 * p + 1 else 2 * p
    assert all(g.degree(v) == want for v in range(n))
    assert g.m == n * want // 2


def test_small_powers():
    assert power_of_cycle(5, 1).m == 5
    assert power_of_cycle(7, 3) == complete(7)
    g = power_of_cycle(9, 2)
    assert g.m == 18 and find_claw(g) is None


def test_icosahedron_and_twister():
    g = named_graph("IcosaG0")
    assert g.n == 12 and all(g.degree(v) == 5 for v in range(12))
    assert named_graph("IcosaG1").n == 11 and named_graph("IcosaG2").n == 10
    tw = named_graph("TwisterComplement")
    assert lower_bound_cc(tw) == 10 and is_antiprismatic(tw)[0]
    with pytest.raises(InvalidInput):
        named_graph("petersen")


def test_schlafli_is_strongly_regular():
    g = schlafli()
    assert g.n == 27 and all(g.degree(v) == 16 for v in range(27))
    for u, v in combinations(range(27), 2):
        common = len(g.neighbors(u) & g.neighbors(v))
        assert common == (10 if g.has_edge(u, v) else 8)
    assert len(set(g.labels)) == 27


def test_line_graph_small_cases():
    assert line_graph(star(3)) == complete(3)
    assert line_graph(path(4)) == path(3)


@given(st.integers(0, 10 ** 6), st.integers(1, 25))
def test_line_graphs_of_trees(seed, edges):
    t = random_tree(seed, edges)
    assert t.n == edges + 1 and t.m == edges and t.is_connected()
    g = line_graph(t)
    assert g.n == edges and find_claw(g) is None


# circular interval graphs

@pytest.mark.parametrize("n,p", [(5, 1), (7, 2), (9, 2), (10, 3), (12, 3)])
def test_power_of_cycle_rep(n, p):
    assert circular_interval_graph(power_of_cycle_rep(n, p)).adj == power_of_cycle(n, p).adj


def test_circular_simple_reps():
    whole = CircularIntervalRep((0, 0.25, 0.5, 0.75), ((0.9, 0.6),))
    g = circular_interval_graph(whole)
    assert g.is_clique([0, 1, 2]) and g.degree(3) == 0
    two = circular_interval_graph(CircularIntervalRep((0, 0.25, 0.5, 0.75), ((0.9, 0.3), (0.4, 0.8))))
    assert two.edges() == [(0, 1), (2, 3)]


def test_circular_rejects_three_arcs_covering_circle():
    rep = CircularIntervalRep((0, 0.3, 0.6), ((0.95, 0.35), (0.25, 0.65), (0.55, 0.05)))
    with pytest.raises(InvalidInput):
        circular_interval_graph(rep)


@given(st.integers(0, 10 ** 6), st.integers(4, 14), st.booleans())
def test_random_circular_reps_are_valid(seed, m, fuzzy):
    rep = random_circular_rep(seed, m, fuzzy=fuzzy)
    g = circular_interval_graph(rep)
    assert find_claw(g) is None
    for u, v in rep.F:
        assert sum({u, v} <= rep.members(i) for i in range(len(rep.intervals))) == 1


# thickenings

def test_thicken_unit_sizes_is_identity():
    h = power_of_cycle(7, 2)
    g, blocks = thicken(ThickeningSpec(h))
    assert g.adj == h.adj and blocks == [[v] for v in range(7)]


def test_thicken_edge_gives_complete():
    g, _ = thicken(ThickeningSpec(path(2), (), (2, 3)))
    assert g == Graph.from_edges(5, combinations(range(5), 2), g.labels)


def test_thicken_fuzzy_pair():
    spec = ThickeningSpec(Graph.from_edges(2, []), ((0, 1),), (2, 2), {(0, 1): ((1, 0), (0, 0))})
    g, blocks = thicken(spec)
    assert g.m == 3
    with pytest.raises(InvalidInput):
        thicken(ThickeningSpec(Graph.from_edges(2, []), ((0, 1),), (2, 2), {(0, 1): ((1, 1), (1, 1))}))


# triangle chains and structured families

def test_triangle_chain_rejects_bad_hat():
    params = random_triangle_chain_params(random.Random(0), "path", 2)
    bad = TriangleChainParams.from_json({**params.to_json(), "hat": [2] + params.hat[1:]})
    with pytest.raises(InvalidInput, match=r"\(P1\)"):
        build_triangle_chain(bad)


@given(st.integers(0, 10 ** 6), st.sampled_from([("path", 1), ("path", 2), ("path", 4), ("cycle", 5), ("cycle", 8)]))
def test_triangle_chains_are_antiprismatic(seed, km):
    kind, m = km
    params = random_triangle_chain_params(random.Random(seed), kind, m)
    g, st_ = build_triangle_chain(params)
    check_triangle_chain(g, st_)
    assert is_antiprismatic(g)[0]
    assert triangle_chain_graph(params.to_json()) == g


def test_ring_and_mantled_minimal():
    g, parts = ring_of_five({"sizes": [0] * 6, "bits": [[] for _ in range(5)]})
    assert g.n == 10 and len(parts["a"]) == 5
    g, _ = mantled({"upper": [0, 0, 0], "lower": [0, 0, 0], "upper_bits": {}, "lower_bits": {}})
    assert g.n == 9 and is_antiprismatic(g)[0]
    assert parallel_square({"A": [1], "B": [1], "C": [1], "D": [1], "Z": False}).n == 8


@given(st.integers(0, 10 ** 6))
def test_random_structured_are_antiprismatic(seed):
    rng = random.Random(seed)
    assert is_antiprismatic(ring_of_five(random_ring_params(rng))[0])[0]
    assert is_antiprismatic(mantled(random_mantled_params(rng))[0])[0]
    assert is_antiprismatic(skew_square({"A": [1, 2], "B": [3], "C": [1, 4]}))[0]


@given(st.integers(0, 10 ** 6))
def test_random_antiprismatic(seed):
    g, fam = random_antiprismatic(seed)
    assert is_antiprismatic(g)[0] and first_triad(g) is not None


# random families

@given(st.integers(0, 10 ** 6), st.integers(1, 16))
def test_random_three_cliqued(seed, size):
    g, (A, B, C) = random_three_cliqued(seed, size)
    assert g.n == size and A | B | C == set(range(size)) and len(A) + len(B) + len(C) == size
    assert all(g.is_clique(p) for p in (A, B, C)) and find_claw(g) is None


def test_random_instances_are_seeded():
    assert random_instance(7, "RandomCircular", 12) == random_instance(7, "RandomCircular", 12)
    g = random_tree_line(1, 10)
    assert find_claw(g) is None and simplicial_vertices(g)
    assert find_claw(random_circular(2, 12)) is None


# worn hex-chains

@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_chain_of_triads_is_power_of_cycle(k):
    g, parts = worn_hex_chain(WornHexChain(tuple(triad_term() for _ in range(k))))
    assert g.n == 3 * k and sum(map(len, parts)) == 3 * k
    if k == 1:
        assert g.m == 0
    else:
        assert all(g.degree(v) == 2 * (k - 1) for v in range(g.n)) and power_of_cycle_order(g) is not None


def test_single_term_is_itself():
    term = ChainTerm(Graph.from_edges(3, [(0, 1)]), {0, 1}, {2}, set())
    g, (A, B, C) = worn_hex_chain(WornHexChain((term,)))
    assert g.adj == term.graph.adj and A == {0, 1} and B == {2} and not C


def test_worn_rejects_bad_terms_and_w3():
    with pytest.raises(InvalidInput, match=r"\(W1\)"):
        worn_hex_chain(WornHexChain((ChainTerm(Graph.from_edges(2, []), {0, 1}, set(), set()),)))
    chain = WornHexChain((triad_term(), triad_term()), (((0, 0), (1, 0)),))
    with pytest.raises(InvalidInput, match=r"\(W3\)"):
        worn_hex_chain(chain)


def test_worn_json_roundtrip():
    chain = WornHexChain((triad_term(), triad_term()))
    assert WornHexChain.from_json(chain.to_json()).to_json() == chain.to_json()
