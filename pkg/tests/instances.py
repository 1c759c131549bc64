"""Random instance builders shared by the unit and acceptance tests."""

from __future__ import annotations

import itertools
import random

from cliquecover.coverers.base import emit, make_splitting
from cliquecover.exact_oracle import exact_clique_cover
from cliquecover.generators import (ChainTerm, ThickeningSpec, WornHexChain, random_antiprismatic,
                                    random_three_cliqued, triad_term, worn_hex_chain)
from cliquecover.graph_core import Graph
from cliquecover.recognizers import changeable_pairs, core_vertices


def cross_matrix(rng: random.Random, a: int, b: int) -> list:
    """A 0/1 matrix that is neither all zeros nor all ones."""
    while True:
        m = [[rng.randint(0, 1) for _ in range(b)] for _ in range(a)]
        s = sum(map(sum, m))
        if 0 < s < a * b:
            return m


def random_matching(rng: random.Random, pairs: list, p: float = 0.5) -> list:
    pairs = list(pairs)
    rng.shuffle(pairs)
    used, out = set(), []
    for u, v in pairs:
        if u not in used and v not in used and rng.random() < p:
            out.append((min(u, v), max(u, v)))
            used |= {u, v}
    return out


def _spec(rng, h, F, choices):
    sizes = [rng.choice(choices) for _ in range(h.n)]
    for u, v in F:
        if sizes[u] * sizes[v] < 2:
            sizes[u] = 2
    cross = {p: cross_matrix(rng, sizes[p[0]], sizes[p[1]]) for p in F}
    return ThickeningSpec(h, tuple(F), tuple(sizes), cross)


def random_plain_lift(rng: random.Random):
    """(cover of H minus F, spec, t) meeting the plain lift's preconditions, or None."""
    n = rng.randint(2, 8)
    h = Graph.from_edges(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.5])
    F = random_matching(rng, list(itertools.combinations(range(n), 2)))
    hf = h.remove_edges(F)
    if any(hf.degree(v) == 0 for p in F for v in p):
        return None
    spec = _spec(rng, h, F, [1, 1, 2, 3])
    k, cover = exact_clique_cover(hf)
    return list(cover.cliques), spec, n - k


def random_antiprismatic_lift(rng: random.Random):
    """(cover of H, spec, t) for an antiprismatic H with changeable pairs, or None."""
    h, _ = random_antiprismatic(rng)
    if h.n > 12:
        return None
    F = random_matching(rng, changeable_pairs(h))
    spec = _spec(rng, h, F, [1, 1, 2])
    k, cover = exact_clique_cover(h)
    return list(cover.cliques), spec, min(1, h.n - k)


def trivial_splitting(term: ChainTerm):
    """The splitting cover {A, B, C} of a term whose parts have no edges between them."""
    g = term.graph
    parts = (term.A, term.B, term.C)
    return make_splitting(emit(g, parts, g.n, "trivial"), parts, core_vertices(g))


def lk33_term() -> tuple:
    """L(K_3,3) with rows as the three parts, plus its rows-and-columns splitting cover."""
    cells = [(i, j) for i in range(3) for j in range(3)]
    idx = {v: k for k, v in enumerate(cells)}
    g = Graph.from_edges(9, [(idx[a], idx[b]) for a, b in itertools.combinations(cells, 2)
                             if a[0] == b[0] or a[1] == b[1]])
    rows = [frozenset(idx[i, j] for j in range(3)) for i in range(3)]
    cols = [frozenset(idx[i, j] for i in range(3)) for j in range(3)]
    term = ChainTerm(g, *rows)
    sc = make_splitting(emit(g, rows + cols, 6, "rows-cols"), tuple(rows), core_vertices(g))
    return term, sc


def random_chain_around(rng: random.Random, term: ChainTerm, k_max: int = 3) -> tuple:
    """A worn hex-chain with ``term`` inserted among random terms; returns (chain, i0)."""
    k = rng.randint(0, k_max)
    terms = []
    for _ in range(k):
        if rng.random() < 0.3:
            terms.append(triad_term())
        else:
            g, (A, B, C) = random_three_cliqued(rng, rng.randint(1, 6))
            terms.append(ChainTerm(g, A, B, C))
    i0 = rng.randrange(k + 1)
    terms.insert(i0, term)
    chain = WornHexChain(tuple(terms))
    worn_hex_chain(chain)
    return chain, i0
