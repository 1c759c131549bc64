"""Extending a splitting cover of one term of a worn hex-chain to the whole chain."""

from __future__ import annotations

from ..errors import PreconditionError
from ..generators.worn import WornHexChain, worn_hex_chain
from ..graph_core import closed_nbhd
from ..recognizers import core_vertices
from .base import BoundedCover, SplittingCover, emit


def _rotate(t):
    i, a, b, c = t
    return (i, b, c, a)


def _shift(terms: list, i0: int, j0: int) -> list:
    """Reorder so that term i0 sits at position j0 with its parts unchanged.

    Terms that wrap around the end move to the front with parts (C, A, B);
    terms that wrap past the front move to the back with parts (B, C, A).
    """
    k = len(terms)
    out = []
    for i in range(k):
        s = i + i0 - j0
        if 0 <= s < k:
            out.append(terms[s])
        elif s < 0:
            j, a, b, c = terms[s + k]
            out.append((j, c, a, b))
        else:
            j, a, b, c = terms[s - k]
            out.append((j, b, c, a))
    return out


def _swap_bc(terms: list, i0: int) -> list:
    """Reverse the chain around i0 so that term i0 gets parts (A, C, B)."""
    k = len(terms)
    out = []
    for i in range(k):
        s = 2 * i0 - i
        if 0 <= s < k:
            j, a, b, c = terms[s]
            out.append((j, a, c, b))
        elif s < 0:
            j, a, b, c = terms[s + k]
            out.append((j, c, b, a))
        else:
            j, a, b, c = terms[s - k]
            out.append((j, b, a, c))
    return out


def normalize_chain(terms: list, i0: int, want: tuple) -> list:
    """Reorder and relabel ``terms`` (tuples (id, A, B, C)) into an equivalent
    chain whose first term is term ``i0`` with parts exactly ``want``."""
    want = tuple(frozenset(p) for p in want)
    base = [terms, _swap_bc(terms, i0)]
    for cand in base:
        pos = next(p for p, t in enumerate(cand) if t[0] == terms[i0][0])
        for _ in range(3):
            if tuple(cand[pos][1:]) == want:
                return _shift(cand, pos, 0)
            cand = [_rotate(t) for t in cand]
    raise PreconditionError("the cover's parts are not a permutation of the term's parts")


def lift_worn_hex_chain(chain: WornHexChain, i0: int, sc: SplittingCover, t: int) -> BoundedCover:
    """Cover of the composed chain with at most |V(G)| - t cliques, built from
    a splitting cover ``sc`` of term ``i0`` (0-based) with at most
    |V(G_i0)| - t cliques."""
    g, _ = worn_hex_chain(chain)
    k = len(chain.terms)
    if not 0 <= i0 < k:
        raise PreconditionError(f"term index {i0} out of range")
    term = chain.terms[i0]
    if sc.bounded.graph != term.graph:
        raise PreconditionError("the splitting cover is not a cover of the chosen term")
    sc.check()
    local_core = core_vertices(term.graph)
    missing = [u for u in range(term.graph.n) if u not in local_core and u not in sc.witnesses]
    if missing:
        raise PreconditionError(f"non-core vertices {missing} have no witness clique (SP2)")

    off = chain.offsets()
    glob = lambda i, vs: frozenset(off[i] + v for v in vs)
    terms = [(i, glob(i, tm.A), glob(i, tm.B), glob(i, tm.C)) for i, tm in enumerate(chain.terms)]
    order = normalize_chain(terms, i0, tuple(glob(i0, p) for p in sc.parts))
    A = frozenset().union(*(x[1] for x in order))
    B = frozenset().union(*(x[2] for x in order))
    C = frozenset().union(*(x[3] for x in order))
    _, A1, B1, C1 = order[0]
    # an empty part counts as a member of the cover, as it must be by SP1
    empties = sum(1 for p, whole in ((A1, A), (B1, B), (C1, C)) if not p and whole)
    n_i0 = term.graph.n
    if len(sc) + empties > n_i0 - t:
        raise PreconditionError(f"the splitting cover has more than |V(G_i0)| - t = {n_i0 - t} cliques")

    cl = [glob(i0, c) for c in sc.cover.cliques]
    # the part each clique of term i0 extends into, keyed by its first-term part
    ext = {}
    for u_loc, idx in sorted(sc.witnesses.items()):
        u = off[i0] + u_loc
        if u in A1:
            extra = closed_nbhd(g, u, B - B1)
        elif u in B1:
            extra = closed_nbhd(g, u, C - C1)
        else:
            extra = closed_nbhd(g, u, A - A1)
        ext.setdefault(idx, []).append(extra)

    out, leftover = [], []
    for idx, c in enumerate(cl):
        if c == A1 and A1:
            out.append(A)
        elif c == B1 and B1:
            out.append(B)
        elif c == C1 and C1:
            out.append(C)
        elif idx in ext:
            merged = c.union(*ext[idx])
            if g.is_clique(merged):
                out.append(merged)
            else:
                out.append(c | ext[idx][0])
                leftover += [c | e for e in ext[idx][1:]]
        else:
            out.append(c)
    for p, whole in ((A1, A), (B1, B), (C1, C)):
        if not p and whole:
            out.append(whole)
    for part, nxt in ((A - A1, B), (B - B1, C), (C - C1, A)):
        out += [closed_nbhd(g, x, nxt) for x in sorted(part)]
    out += leftover
    return emit(g, out, g.n - t, "worn", {"i0": i0, "shared_witness_extra": len(leftover)})
