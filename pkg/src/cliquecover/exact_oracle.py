"""Exact clique cover number, chromatic number and the neighbourhood lower bound.

The clique cover solver branches on the lexicographically first uncovered
edge and tries every maximal clique containing it.  A greedy set of
pairwise "incompatible" uncovered edges (no two fit in a common clique)
gives the lower bound used for pruning.  Everything is deterministic.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Optional

from .errors import BudgetExhausted, CapExceeded
from .graph_core import CliqueCover, Graph, complement, from_mask, induced_subgraph, iter_bits
from .recognizers import clique_number, independence_number

DEFAULT_CAP_N = 20
DEFAULT_CAP_M = 80
DEFAULT_BUDGET = 2_000_000


def _cap_n() -> int:
    return int(os.environ.get("CLIQUECOVER_CAP_N", DEFAULT_CAP_N))


def _maximal_cliques_containing(adj: tuple, u: int, v: int) -> list:
    """Maximal cliques (as masks) that contain the edge uv, in a fixed order."""
    out = []

    def bk(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        # pivot keeps the enumeration small
        px = p | x
        pivot = max(iter_bits(px), key=lambda w: (adj[w] & p).bit_count())
        for w in iter_bits(p & ~adj[pivot]):
            bk(r | 1 << w, p & adj[w], x & adj[w])
            p &= ~(1 << w)
            x |= 1 << w

    bk(1 << u | 1 << v, adj[u] & adj[v], 0)
    out.sort()
    return out


class _Solver:
    def __init__(self, g: Graph, budget: int):
        self.g = g
        self.adj = g.adj
        self.budget = budget
        self.nodes = 0
        self.edges = g.edges()
        self.eid = {e: i for i, e in enumerate(self.edges)}
        self.cache = {}
        self.best = None
        self.best_size = len(self.edges) + 1

    def edges_in(self, clique: int) -> int:
        mask = 0
        vs = list(iter_bits(clique))
        for i, a in enumerate(vs):
            for b in vs[i + 1:]:
                mask |= 1 << self.eid[(a, b)]
        return mask

    def branches(self, e: int) -> list:
        if e not in self.cache:
            u, v = self.edges[e]
            cl = _maximal_cliques_containing(self.adj, u, v)
            self.cache[e] = [(c, self.edges_in(c)) for c in cl]
        return self.cache[e]

    def lower_bound(self, uncovered: int) -> int:
        chosen = []
        for e in iter_bits(uncovered):
            a, b = self.edges[e]
            ok = True
            for c, d in chosen:
                # two edges share a clique iff their endpoints span a clique
                if not self._spans_clique(a, b, c, d):
                    continue
                ok = False
                break
            if ok:
                chosen.append((a, b))
        return len(chosen)

    def _spans_clique(self, a: int, b: int, c: int, d: int) -> bool:
        adj = self.adj
        for x in (c, d):
            if x != a and not adj[a] >> x & 1:
                return False
            if x != b and not adj[b] >> x & 1:
                return False
        return c == d or adj[c] >> d & 1 == 1

    def search(self, uncovered: int, chosen: list) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExhausted(f"node budget {self.budget} exhausted before optimality was proven")
        if not uncovered:
            if len(chosen) < self.best_size:
                self.best_size = len(chosen)
                self.best = list(chosen)
            return
        if len(chosen) + self.lower_bound(uncovered) >= self.best_size:
            return
        e = (uncovered & -uncovered).bit_length() - 1
        opts = self.branches(e)
        # most newly covered edges first, ties by clique mask
        opts = sorted(opts, key=lambda ce: (-(ce[1] & uncovered).bit_count(), ce[0]))
        for clique, emask in opts:
            chosen.append(clique)
            self.search(uncovered & ~emask, chosen)
            chosen.pop()


def exact_clique_cover(g: Graph, budget: Optional[int] = None) -> tuple:
    """Return (cc(g), witness cover).  Raises CapExceeded or BudgetExhausted."""
    cap = _cap_n()
    m = g.m
    if g.n > cap and m > DEFAULT_CAP_M:
        raise CapExceeded(f"exact cover is capped at n <= {cap} or m <= {DEFAULT_CAP_M} (got n={g.n}, m={m})")
    solver = _Solver(g, DEFAULT_BUDGET if budget is None else budget)
    solver.search((1 << len(solver.edges)) - 1, [])
    cliques = tuple(from_mask(c) for c in solver.best)
    return len(cliques), CliqueCover(cliques, g)


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number by DSATUR-ordered branch and bound."""
    if g.n > _cap_n():
        raise CapExceeded(f"chromatic_number is capped at n <= {_cap_n()} (got n={g.n})")
    if g.n == 0:
        return 0
    adj = g.adj
    best = g.n
    colour = [-1] * g.n

    def pick() -> int:
        bestv, key = -1, None
        for v in range(g.n):
            if colour[v] >= 0:
                continue
            sat = len({colour[u] for u in iter_bits(adj[v]) if colour[u] >= 0})
            k = (sat, adj[v].bit_count(), -v)
            if key is None or k > key:
                bestv, key = v, k
        return bestv

    def go(done: int, used: int) -> None:
        nonlocal best
        if used >= best:
            return
        if done == g.n:
            best = used
            return
        v = pick()
        forbidden = {colour[u] for u in iter_bits(adj[v]) if colour[u] >= 0}
        for c in range(used + 1):
            if c in forbidden:
                continue
            colour[v] = c
            go(done + 1, max(used, c + 1))
            colour[v] = -1

    go(0, 0)
    return best


def local_chromatic_values(g: Graph) -> list:
    """chi_v = chromatic number of the complement of G[N(v)], per vertex."""
    out = []
    for v in range(g.n):
        sub, _ = induced_subgraph(g, g.neighbors(v))
        out.append(chromatic_number(complement(sub)))
    return out


def lower_bound_cc(g: Graph) -> int:
    """ceil(sum_v chi_v / omega(G)), with chi_v as in local_chromatic_values."""
    if g.m == 0:
        return 0
    total = sum(local_chromatic_values(g))
    omega = clique_number(g)
    return -(-total // omega)


@dataclass(frozen=True)
class GraphMetrics:
    n: int
    m: int
    omega: int
    alpha: int
    chi_local: tuple
    cc_lower: int
    cc_exact: Optional[int] = None

    def to_json(self) -> dict:
        return {
            "n": self.n, "m": self.m, "omega": self.omega, "alpha": self.alpha,
            "chi_local": list(self.chi_local), "cc_lower": self.cc_lower, "cc_exact": self.cc_exact,
        }


def graph_metrics(g: Graph, with_exact: bool = False, budget: Optional[int] = None) -> GraphMetrics:
    chi = tuple(local_chromatic_values(g))
    omega = clique_number(g) if g.n else 0
    cc_lower = -(-sum(chi) // omega) if g.m else 0
    exact = exact_clique_cover(g, budget)[0] if with_exact else None
    return GraphMetrics(g.n, g.m, omega, independence_number(g) if g.n else 0, chi, cc_lower, exact)
