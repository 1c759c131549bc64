"""Simplicial clique covers of connected claw-free graphs with simplicial vertices."""

from __future__ import annotations

from itertools import combinations

from ..errors import PreconditionError
from ..graph_core import Graph, from_mask, iter_bits, to_mask
from ..recognizers import find_claw, simplicial_vertices
from .base import emit


def _layers(g: Graph, root: int) -> list:
    dist = [-1] * g.n
    dist[root] = 0
    frontier = [root]
    while frontier:
        nxt = []
        for v in frontier:
            for w in iter_bits(g.adj[v]):
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    nxt.append(w)
        frontier = nxt
    return dist


def _components(g: Graph, vs: frozenset) -> list:
    left, out = set(vs), []
    mask = to_mask(vs)
    while left:
        start = min(left)
        comp, frontier = 1 << start, 1 << start
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.adj[v] & mask
            frontier = nxt & ~comp
            comp |= nxt
        c = from_mask(comp)
        out.append(c)
        left -= c
    return out


def cover_simplicial(g: Graph) -> tuple:
    """Return (BoundedCover, simplicial, line_of_tree).

    ``simplicial`` reports that N[z] is in the cover for every simplicial z;
    ``line_of_tree`` is True when the graph is irreducible, in which case it
    is the line graph of a tree and the bound is n - |Z| + 1 instead of n - |Z|.
    """
    if g.n == 0 or not g.is_connected():
        raise PreconditionError("the graph must be connected and nonempty")
    if find_claw(g) is not None:
        raise PreconditionError("the graph must be claw-free")
    Z = simplicial_vertices(g)
    if not Z:
        raise PreconditionError("Z(G) empty: the graph has no simplicial vertex")
    z0 = min(Z)
    dist = _layers(g, z0)
    adj = g.adj
    layer_mask = {}
    for v in range(g.n):
        layer_mask[dist[v]] = layer_mask.get(dist[v], 0) | 1 << v

    def prev(v):
        return adj[v] & layer_mask.get(dist[v] - 1, 0)

    C = []
    n_plus = []
    for v in range(g.n):
        same = adj[v] & layer_mask[dist[v]]
        n_circ = 0
        for w in iter_bits(same):
            if not prev(v) & prev(w):
                n_circ |= 1 << w
        plus = adj[v] & layer_mask.get(dist[v] + 1, 0)
        n_plus.append(plus)
        C.append(n_circ | plus | 1 << v)

    comps = sorted(_components(g, Z), key=lambda c: (z0 not in c, min(c)))
    zmask = to_mask(Z)
    others = comps[1:]
    N = [adj[min(c)] & ~zmask for c in others]
    v_prime = zmask & ~(1 << z0)
    for c in others:
        v_prime |= to_mask(u for u in range(g.n) if adj[u] & to_mask(c) and dist[u] == dist[min(c)] - 1)
    v_dd = [v for v in range(g.n) if not v_prime >> v & 1]

    cliques = [C[v] for v in v_dd] + [N[i] | to_mask(c) for i, c in enumerate(others)]
    owners = list(v_dd) + [None] * len(others)
    nonz = [v for v in range(g.n) if v not in Z]
    reducible = False
    r1 = next((v for v in nonz if not n_plus[v]), None)
    if r1 is not None:
        reducible = True
        i = owners.index(r1)
        del cliques[i], owners[i]
    else:
        for u, v in combinations(nonz, 2):
            k = C[u] | C[v]
            if g.is_clique_mask(k):
                reducible = True
                if u in owners and v in owners:
                    i, j = owners.index(u), owners.index(v)
                    cliques[i], owners[i] = k, (u, v)
                    del cliques[j], owners[j]
                break
    bound = g.n - len(Z) + (0 if reducible else 1)
    bc = emit(g, [from_mask(c) for c in cliques], bound, "stripe",
              {"z0": z0, "Z": sorted(Z), "reducible": reducible})
    present = set(bc.cover.cliques)
    simplicial = all(from_mask(adj[z] | 1 << z) in present for z in Z)
    if not simplicial:
        raise PreconditionError("construction lost a closed neighbourhood of a simplicial vertex")
    return bc, simplicial, not reducible
