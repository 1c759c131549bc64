"""Lifting a clique cover of a graph to a cover of one of its thickenings."""

from __future__ import annotations

from ..errors import NoTriad, NotAntiprismatic, PreconditionError
from ..generators.thickening import ThickeningSpec, thicken
from ..graph_core import CliqueCover, closed_neighborhood_family, verify_cover
from ..recognizers import first_triad, is_antiprismatic
from .base import BoundedCover, emit


def _checked_cover(cover_h, host) -> list:
    cliques = [frozenset(c) for c in getattr(cover_h, "cliques", cover_h)]
    verdict = verify_cover(host, CliqueCover(tuple(cliques), host))
    if not verdict.ok:
        raise PreconditionError(f"the given cover does not cover the base graph: {verdict}")
    return cliques


def _pair_family(g, blocks, spec, u, v) -> list:
    """N[X_a; X_b] with a the endpoint whose clique is smaller (ties: smaller id)."""
    a, b = (u, v) if spec.sizes[u] <= spec.sizes[v] else (v, u)
    return closed_neighborhood_family(g, blocks[a], blocks[b])


def lift_thickening(cover_h, spec: ThickeningSpec, t: int, antiprismatic: bool = False) -> BoundedCover:
    """Lift ``cover_h`` to the thickening described by ``spec``.

    Plain variant: ``cover_h`` covers H with the pairs of F deleted, has at
    most |V(H)| - t cliques, and no isolated vertex of that graph lies in a
    pair of F.  Antiprismatic variant: H is antiprismatic, F consists of
    changeable pairs, the thickening has a triad, t <= 1 and ``cover_h``
    covers H.  Either way the result has at most |V(G)| - t cliques.
    """
    spec.validate()
    h = spec.base
    g, blocks = thicken(spec)
    bound = g.n - t

    if antiprismatic:
        if t > 1:
            raise PreconditionError("the antiprismatic lift needs t <= 1")
        if not is_antiprismatic(h)[0]:
            raise NotAntiprismatic("the base graph is not antiprismatic")
        if any(h.has_edge(u, v) for u, v in spec.F):
            raise PreconditionError("pairs of F must be non-edges of the base graph")
        for u, v in spec.F:
            if not is_antiprismatic(h.add_edge(u, v))[0]:
                raise PreconditionError(f"pair ({u}, {v}) is not changeable")
        if first_triad(g) is None:
            raise NoTriad("the thickened graph has no triad")

    hf = h.remove_edges(spec.F)
    cliques = _checked_cover(cover_h, hf)
    if len(cliques) > h.n - t:
        raise PreconditionError(f"the given cover has {len(cliques)} cliques, more than |V(H)| - t = {h.n - t}")
    isolated = [v for v in range(h.n) if hf.degree(v) == 0]
    in_pairs = {x for p in spec.F for x in p}
    lone = [v for v in isolated if v in in_pairs]

    if lone and antiprismatic:
        u1 = lone[0]
        v1 = next(y for p in spec.F if u1 in p for y in p if y != u1)
        rest = [v for v in range(h.n) if v not in (u1, v1)]
        # v1 misses exactly one vertex of the clique on the other vertices
        v1p = [v for v in rest if not h.has_edge(v1, v)]
        if len(v1p) != 1 or len(spec.F) != 1:
            raise PreconditionError("an isolated endpoint of a changeable pair forces a unique special shape")
        v1p = v1p[0]
        X = lambda vs: frozenset(x for v in vs for x in blocks[v])
        out = _pair_family(g, blocks, spec, u1, v1)
        out += [X([u1]), X([v for v in range(h.n) if v not in (u1, v1p)])]
        if len(X(rest)) >= 2:
            out.append(X(rest))
        return emit(g, out, bound, "thickening", {"variant": "antiprismatic-isolated", "pair": (u1, v1)})

    if lone:
        raise PreconditionError("an isolated vertex of H minus F lies in a pair of F")
    out = [frozenset(x for v in c for x in blocks[v]) for c in cliques]
    for u, v in spec.F:
        out += _pair_family(g, blocks, spec, u, v)
    out += [frozenset(blocks[v]) for v in isolated if spec.sizes[v] >= 2]
    return emit(g, out, bound, "thickening", {"variant": "antiprismatic" if antiprismatic else "plain"})
