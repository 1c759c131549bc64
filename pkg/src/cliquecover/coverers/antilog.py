"""Covers of antiprismatic graphs with a triad using n + O(log n) cliques."""

from __future__ import annotations

from math import ceil, log2

from ..errors import NoTriad, NotAntiprismatic, PreconditionError
from ..graph_core import Graph, closed_nbhd
from ..recognizers import first_triad, is_antiprismatic
from .base import BoundedCover, emit


def code_bits(t: int) -> int:
    return ceil(log2(t)) if t > 1 else 0


def matching_complement_cliques(g: Graph, vs) -> list:
    """Cover the edges inside ``vs``, where G[vs] is complete minus a matching.

    Matched pairs (a_j, b_j) get distinct binary codes; besides the sets of all
    a's and all b's, each bit position gives two cliques, one taking a_j where
    the bit is 0 and b_j where it is 1, the other the reverse.  Unmatched
    vertices join every clique.  At most 2 * ceil(log2 t) + 2 cliques.
    """
    vs = sorted(vs)
    pairs, single = [], []
    seen = set()
    for v in vs:
        miss = [w for w in vs if w != v and not g.has_edge(v, w)]
        if len(miss) > 1:
            raise PreconditionError(f"vertex {g.label(v)} has two non-neighbours in a set that must be complete minus a matching")
        if v in seen:
            continue
        if miss:
            pairs.append((v, miss[0]))
            seen.update((v, miss[0]))
        else:
            single.append(v)
    if not pairs:
        return [frozenset(vs)] if len(vs) > 1 else []
    S = frozenset(single)
    out = [S | {a for a, _ in pairs}, S | {b for _, b in pairs}]
    for bit in range(code_bits(len(pairs))):
        zero = {a if not (j >> bit) & 1 else b for j, (a, b) in enumerate(pairs)}
        one = {b if not (j >> bit) & 1 else a for j, (a, b) in enumerate(pairs)}
        out += [S | zero, S | one]
    return out


def antilog_bound(n: int) -> int:
    return n + 6 * ceil(log2(n)) + 6 if n > 1 else n + 6


def cover_antiprismatic_log(g: Graph) -> BoundedCover:
    tri = first_triad(g)
    if tri is None:
        raise NoTriad("the graph has no triad")
    ok, bad = is_antiprismatic(g)
    if not ok:
        t, v = bad
        raise NotAntiprismatic(f"vertex {g.label(v)} does not see exactly two vertices of triad {sorted(t)}")
    x, y, z = tri
    non = lambda u: frozenset(w for w in range(g.n) if w != u and not g.has_edge(u, w))
    X, Y, Z = non(x), non(y), non(z)
    out = []
    for part in (X, Y, Z):
        out += matching_complement_cliques(g, part)
    for part, nxt, drop in ((X, Y, {y, z}), (Y, Z, {x, z}), (Z, X, {x, y})):
        out += [closed_nbhd(g, u, nxt) for u in sorted(part - drop)]
    return emit(g, out, antilog_bound(g.n), "anti-log", {"triad": tri})
