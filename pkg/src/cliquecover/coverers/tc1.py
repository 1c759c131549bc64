"""Covers of three-cliqued claw-free graphs with at most n + 1 cliques."""

from __future__ import annotations

from itertools import combinations

from ..errors import PreconditionError
from ..graph_core import Graph, closed_nbhd
from ..recognizers import find_claw
from .base import BoundedCover, emit


def check_three_cliqued(g: Graph, A, B, C) -> tuple:
    parts = tuple(frozenset(p) for p in (A, B, C))
    if set().union(*parts) != set(range(g.n)) or sum(map(len, parts)) != g.n:
        raise PreconditionError("A, B, C must partition the vertex set")
    for name, p in zip("ABC", parts):
        if not g.is_clique(p):
            raise PreconditionError(f"part {name} is not a clique")
    return parts


def cover_three_cliqued(g: Graph, A, B, C) -> BoundedCover:
    parts = check_three_cliqued(g, A, B, C)
    if find_claw(g) is not None:
        raise PreconditionError("the graph must be claw-free")
    n = g.n
    # C[1] <= C[2] <= C[3] by size; stable on the A, B, C order
    order = sorted(range(3), key=lambda i: len(parts[i]))
    P = {k + 1: parts[order[k]] for k in range(3)}

    def N(x, i):  # open neighbourhood in part i
        return g.neighbors(x) & P[i]

    def Nc(x, i):
        return closed_nbhd(g, x, P[i])

    def fam(i, j):  # the family N[C_i; C_j], as (owner, clique) pairs
        return [((x, j), Nc(x, j)) for x in sorted(P[i])]

    def internal_uncovered(i, by) -> list:
        """Pairs in C_i with no common neighbour in any of the parts ``by``."""
        return [(x, y) for x, y in combinations(sorted(P[i]), 2)
                if all(not (N(x, j) & N(y, j)) for j in by)]

    bound = n + 1
    base = fam(1, 2) + fam(1, 3) + fam(2, 3)
    if len(P[3]) - len(P[1]) >= 2:
        return emit(g, [c for _, c in base] + [P[1], P[2], P[3]], bound, "tc1", {"case": "baseline"})

    for i0 in (1, 2, 3):
        bad = internal_uncovered(i0, [j for j in (1, 2, 3) if j != i0])
        if bad:
            j0, k0 = [j for j in (1, 2, 3) if j != i0]
            x, y = bad[0]
            items = fam(i0, j0) + fam(i0, k0) + fam(j0, k0)
            merged = []
            for v in (x, y):
                merged.append(Nc(v, j0) | Nc(v, k0))
            keep = [c for (own, c) in items[:2 * len(P[i0])] if own[0] not in (x, y)]
            keep += [c for _, c in items[2 * len(P[i0]):]]
            tail = [P[1], P[3]] if i0 == 3 else [P[1], P[2], P[3]]
            return emit(g, merged + keep + tail, bound, "tc1", {"case": "internal", "i0": i0, "pair": (x, y)})

    if not internal_uncovered(2, [3]) and not internal_uncovered(1, [2]):
        cl = fam(1, 3) + fam(2, 1) + fam(3, 2)
        return emit(g, [c for _, c in cl] + [P[3]], bound, "tc1", {"case": "rotated"})

    # relabel so that the uncovered internal edge lies in part b, missing part c
    if internal_uncovered(2, [3]):
        a, b, c = 1, 2, 3
    else:
        a, b, c = 3, 1, 2
    x, y = internal_uncovered(b, [c])[0]
    items = fam(a, c) + fam(b, a) + fam(b, c)
    drop = {(x, a), (x, c), (y, a), (y, c)}
    keep = [cl for own, cl in items if own not in drop]
    nax, nay = N(x, a), N(y, a)
    repl = [
        (nax & nay) | {x, y},
        (Nc(x, a) | Nc(x, c)) - nay,
        (Nc(y, a) | Nc(y, c)) - nax,
    ]
    return emit(g, keep + repl + [P[a], P[b]], bound, "tc1",
                {"case": "replace", "relabel": (a, b, c), "pair": (x, y)})
