"""The eleven acceptance criteria, each at its stated tolerance.

Every test records a one-line verdict that the terminal summary prints, so
the run ends with one PASS/FAIL line per criterion.
"""

import itertools
import random
import time
from math import ceil, log2

from conftest import ACCEPTANCE
from instances import random_antiprismatic_lift, random_chain_around, random_plain_lift
from cliquecover.coverers import (cover_antiprismatic_log, cover_menagerie, cover_named, cover_power_of_cycle,
                                  cover_simplicial, cover_three_cliqued, hard_edges, lift_thickening,
                                  lift_worn_hex_chain, p_extra_edges, random_schlafli_subset,
                                  rotator_collections, rotator_decompose, schlafli_collections,
                                  uncovered_edges, verified_mu)
from cliquecover.coverers.rotator import canonical_rho
from cliquecover.errors import NoTriad, TripodInput
from cliquecover.exact_oracle import exact_clique_cover, lower_bound_cc
from cliquecover.generators import (ChainTerm, build_triangle_chain, line_graph, named_graph, power_of_cycle,
                                    random_antiprismatic, random_mantled_params, random_ring_params,
                                    random_three_cliqued, random_tree, schlafli, worn_hex_chain)
from cliquecover.generators.triangles import random_triangle_chain_params
from cliquecover.graph_core import Graph, verify_cover
from cliquecover.recognizers import changeable_pairs, simplicial_vertices

# every cover produced below, re-verified by criterion 11
EMITTED = []


def record(k: int, ok: bool, detail: str, started: float, limit: float) -> None:
    took = time.perf_counter() - started
    ok = ok and took < limit
    ACCEPTANCE[k] = (ok, f"{detail} [{took:.1f}s, limit {limit:.0f}s]")
    assert ok, detail


def keep(bc):
    EMITTED.append(bc)
    return bc


def test_criterion_01_power_of_cycle_threshold():
    t0 = time.perf_counter()
    bad = []
    count = 0
    for n in range(3, 13):
        for p in range(1, (n - 1) // 2 + 1):
            count += 1
            cc = exact_clique_cover(power_of_cycle(n, p))[0]
            bc = keep(cover_power_of_cycle(n, p))
            if n == 2 * p + 1:
                good = cc == 1 and len(bc) == 1
            elif n >= 3 * p + 1:
                good = cc == n and len(bc) == n
            else:
                good = cc <= n - 1
            if not good:
                bad.append((n, p, cc, len(bc)))
    record(1, not bad, f"{count} pairs (n, p), mismatches {bad}", t0, 120)


def test_criterion_02_icosahedron():
    t0 = time.perf_counter()
    g0 = keep(cover_named("IcosaG0"))
    lb = lower_bound_cc(named_graph("IcosaG0"))
    g1 = keep(cover_named("IcosaG1"))
    g2 = keep(cover_named("IcosaG2"))
    ok = len(g0) == 12 and lb == 12 and len(g1) <= 10 and len(g2) <= 9
    ok = ok and all(verify_cover(b.graph, b.cover).ok for b in (g0, g1, g2))
    record(2, ok, f"G0 size {len(g0)} lower bound {lb}; G1 {len(g1)}; G2 {len(g2)}", t0, 10)


def test_criterion_03_twister():
    t0 = time.perf_counter()
    bc = keep(cover_named("TwisterComplement"))
    g = named_graph("TwisterComplement")
    lb = lower_bound_cc(g)
    pairs = {frozenset((g.label(u), g.label(v))) for u, v in changeable_pairs(g)}
    want = {frozenset(("v1", "v5")), frozenset(("v2", "v6")), frozenset(("v3", "v7")), frozenset(("v4", "v8"))}
    ok = len(bc) == 10 and lb == 10 and pairs == want
    record(3, ok, f"size {len(bc)}, lower bound {lb}, changeable pairs {sorted(map(sorted, pairs))}", t0, 10)


def test_criterion_04_simplicial_line_graphs_of_trees():
    t0 = time.perf_counter()
    rng = random.Random(4)
    bad, exact_checked = [], 0
    for trial in range(200):
        edges = rng.randint(5, 40)
        g = line_graph(random_tree(rng.randrange(10 ** 9), edges))
        bc, simplicial, _ = cover_simplicial(g)
        keep(bc)
        z = simplicial_vertices(g)
        if not (simplicial and verify_cover(g, bc.cover).ok and len(bc) == g.n - len(z) + 1):
            bad.append(trial)
        if edges <= 11:
            exact_checked += 1
            if exact_clique_cover(g)[0] != g.n + 1 - len(z):
                bad.append(("exact", trial))
    record(4, not bad, f"200 trees, {exact_checked} checked exactly, failures {bad}", t0, 300)


def test_criterion_05_three_cliqued():
    t0 = time.perf_counter()
    bad, small = [], 0
    for seed in range(1000):
        rng = random.Random(seed)
        g, (A, B, C) = random_three_cliqued(rng, rng.randint(3, 30))
        if g.n > 30:
            continue
        bc = keep(cover_three_cliqued(g, A, B, C))
        if len(bc) > g.n + 1 or not verify_cover(g, bc.cover).ok:
            bad.append(seed)
        if g.n <= 12:
            small += 1
            if exact_clique_cover(g)[0] > len(bc):
                bad.append(("exact", seed))
    record(5, not bad, f"1000 instances, {small} with n <= 12 checked exactly, failures {bad}", t0, 600)


def test_criterion_06_thickening_lifts():
    t0 = time.perf_counter()
    done = {"plain": 0, "antiprismatic": 0}
    bad = []
    seed = 0
    while sum(done.values()) < 300:
        seed += 1
        rng = random.Random(seed)
        anti = seed % 2 == 0
        inst = random_antiprismatic_lift(rng) if anti else random_plain_lift(rng)
        if inst is None:
            continue
        cover, spec, t = inst
        try:
            bc = keep(lift_thickening(cover, spec, t, antiprismatic=anti))
        except NoTriad:  # a thickening without a triad is outside the antiprismatic lift
            continue
        done["antiprismatic" if anti else "plain"] += 1
        if not verify_cover(bc.graph, bc.cover).ok or len(bc) > bc.graph.n - t:
            bad.append(seed)
    record(6, not bad, f"{done['plain']} plain and {done['antiprismatic']} antiprismatic lifts, failures {bad}",
           t0, 120)


def test_criterion_07_menagerie():
    t0 = time.perf_counter()
    rng = random.Random(7)
    bad = []
    counts = dict.fromkeys(("ring", "mantled", "cycle", "path", "composed"), 0)

    empty = keep(cover_menagerie("RingOfFive", {"sizes": [0] * 6, "bits": [[] for _ in range(5)]}))
    if len(empty) != 6:
        bad.append(("ring-empty", len(empty)))
    for _ in range(30):
        bc = keep(cover_menagerie("RingOfFive", random_ring_params(rng)))
        counts["ring"] += 1
        if len(bc) > bc.graph.n - 2:
            bad.append("ring")
        bc = keep(cover_menagerie("MantledLK33", random_mantled_params(rng)))
        counts["mantled"] += 1
        if len(bc) > bc.graph.n - 1:
            bad.append("mantled")
    while counts["cycle"] < 30:
        params = random_triangle_chain_params(rng, "cycle", rng.choice((5, 8)))
        bc = keep(cover_menagerie("CycleOfTriangles", params))
        counts["cycle"] += 1
        if len(bc) > bc.graph.n - 1:
            bad.append("cycle")
    while counts["path"] < 30:
        params = random_triangle_chain_params(rng, "path", rng.randint(1, 5))
        try:
            sc = cover_menagerie("PathOfTriangles", params)
        except TripodInput:
            continue
        keep(sc.bounded)
        sc.check()
        counts["path"] += 1
        g = sc.bounded.graph
        if len(sc) > g.n - 1:
            bad.append("path")
        _, st = build_triangle_chain(params)
        chain, i0 = random_chain_around(rng, ChainTerm(g, *st.three_cliques()))
        lifted = keep(lift_worn_hex_chain(chain, i0, sc, 1))
        counts["composed"] += 1
        big, _ = worn_hex_chain(chain)
        if len(lifted) > big.n - 1 or not verify_cover(big, lifted.cover).ok:
            bad.append("composed")
    record(7, not bad and len(empty) == 6, f"counts {counts}, empty ring size {len(empty)}, failures {bad}",
           t0, 300)


def test_criterion_08_schlafli_collections():
    t0 = time.perf_counter()
    verified_mu()
    gamma = schlafli()
    full = [keep(schlafli_collections(gamma.labels, w)) for w in "SM"]
    ok = all(len(b) <= 18 and verify_cover(b.graph, b.cover).ok for b in full)
    subsets_ok = 0
    for seed in range(50):
        sub = random_schlafli_subset(seed)
        for w in "SM":
            b = keep(schlafli_collections(sub, w))
            subsets_ok += verify_cover(b.graph, b.cover).ok and len(b) <= 18
    ok = ok and subsets_ok == 100
    record(8, ok, f"mu checked on all 351 pairs; S {len(full[0])}, M {len(full[1])}; "
                  f"{subsets_ok}/100 subset covers verify", t0, 60)


def test_criterion_09_rotator_collections():
    t0 = time.perf_counter()
    g = schlafli()
    d = rotator_decompose(g, canonical_rho(g))
    hard = hard_edges(d)
    left_o = uncovered_edges(g, rotator_collections(d, "O"))
    P = rotator_collections(d, "P")
    left_p = uncovered_edges(g, P)
    extra = p_extra_edges(d)
    ok = left_o <= hard and left_p <= hard and not (left_p & extra) and len(P) <= 18
    record(9, ok, f"O leaves {len(left_o)} edges, all in the hard set: {left_o <= hard}; P ({len(P)} cliques) "
                  f"leaves {len(left_p)}, none among the {len(extra)} extra edges: {not (left_p & extra)}", t0, 60)


def test_criterion_10_antiprismatic_log():
    t0 = time.perf_counter()
    bad = []
    for seed in range(100):
        g, _ = random_antiprismatic(seed)
        bc = keep(cover_antiprismatic_log(g))
        if not verify_cover(g, bc.cover).ok or len(bc) > g.n + 6 * ceil(log2(g.n)) + 6:
            bad.append(seed)
    record(10, not bad, f"100 instances, failures {bad}", t0, 120)


def test_criterion_11_global_soundness():
    t0 = time.perf_counter()
    bad_covers = [b.provenance for b in EMITTED if not verify_cover(b.graph, b.cover).ok or len(b) > b.bound]
    rng = random.Random(11)
    bad_lb = []
    for trial in range(500):
        n = rng.randint(1, 10)
        p = rng.random()
        g = Graph.from_edges(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])
        if lower_bound_cc(g) > exact_clique_cover(g)[0]:
            bad_lb.append(trial)
    record(11, not bad_covers and not bad_lb,
           f"{len(EMITTED)} emitted covers re-verified, failures {bad_covers}; 500 random graphs, "
           f"lower bound above cc in {bad_lb}", t0, 300)
