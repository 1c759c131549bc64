"""Covers of long circular interval graphs and of their fuzzy thickenings."""

from __future__ import annotations

from typing import Optional

from ..errors import InvalidInput, PreconditionError
from ..generators.circular import CircularIntervalRep, circular_interval_graph
from ..generators.thickening import ThickeningSpec, thicken
from ..graph_core import closed_nbhd
from .base import BoundedCover, emit
from .simple import power_of_cycle_cliques


def interval_runs(rep: CircularIntervalRep) -> list:
    """Each interval's vertices in clockwise order from its opening point."""
    out = []
    for i, (o, _) in enumerate(rep.intervals):
        mem = rep.members(i)
        out.append(tuple(sorted(mem, key=lambda v: (rep.points[v] - o) % 1)))
    return out


def normalized_runs(rep: CircularIntervalRep) -> list:
    """Runs with empty, repeated and contained ones removed, sorted by first vertex.

    What remains is a family in which no member set contains another, so the
    first vertices are distinct and appear around the circle in the same
    order as the last ones.
    """
    runs = interval_runs(rep)
    sets = [frozenset(r) for r in runs]
    kept = []
    for i, r in enumerate(runs):
        if not r:
            continue
        if any(sets[i] < sets[j] or (sets[i] == sets[j] and j < i) for j in range(len(runs)) if j != i):
            continue
        kept.append(r)
    return sorted(kept, key=lambda r: r[0])


def gaps(runs: list, m: int) -> list:
    """Number of vertices from the start of each run up to the start of the next."""
    k = len(runs)
    if k == 1:
        return [m]
    return [(runs[(i + 1) % k][0] - runs[i][0]) % m for i in range(k)]


def _check_spec(rep: CircularIntervalRep, spec: ThickeningSpec):
    h = circular_interval_graph(rep)
    if spec.base.n != h.n or spec.base.adj != h.adj:
        raise InvalidInput("the thickening base is not the graph of the representation")
    legal = set(rep.F)
    for pair in spec.F:
        if pair not in legal:
            raise InvalidInput(f"pair {pair} is not a fuzzy pair of the representation", "(F)")


def cover_circular_interval(rep: CircularIntervalRep, spec: Optional[ThickeningSpec] = None) -> BoundedCover:
    """Cover of H (or of a thickening of (H, F) given by ``spec``) with at most
    n cliques, and at most n - 1 unless the input is a power of a cycle C_n^p
    with n >= 3p + 1."""
    rep.validate()
    m = rep.m
    runs = normalized_runs(rep)
    gs = gaps(runs, m)
    every_gap_one = bool(runs) and all(x == 1 for x in gs)
    if spec is not None:
        _check_spec(rep, spec)
        if all(s == 1 for s in spec.sizes) and not spec.F:
            spec = None

    if spec is None:
        g = circular_interval_graph(rep)
        if every_gap_one:
            t = len(runs[0])
            p = t - 1
            if p == 0:
                return emit(g, [], 0, "circ", {"case": "edgeless"})
            if 2 * p + 1 >= m:
                return emit(g, [range(m)], 1, "circ", {"case": "complete"})
            bound = m if m >= 3 * p + 1 else m - 1
            return emit(g, power_of_cycle_cliques(m, p), bound, "circ", {"case": "power", "p": p})
        cl = [r for r in runs if len(r) > 1]
        return emit(g, cl, max(m - 1, 0), "circ", {"case": "intervals", "k": len(runs)})

    g, blocks = thicken(spec)
    n = g.n
    if not g.is_connected():
        raise PreconditionError("the thickened graph must be connected")

    def X(run) -> frozenset:
        return frozenset(x for v in run for x in blocks[v])

    C = [X(r) for r in runs]
    carrier = {}
    for pair in spec.F:
        idx = next(i for i, r in enumerate(runs) if set(pair) <= set(r))
        carrier[pair] = idx

    def in_other_run(v, idx) -> bool:
        return any(v in r for j, r in enumerate(runs) if j != idx)

    size = lambda v: spec.sizes[v]
    cliques, used = [], set(carrier.values())
    notes = {"case": "power-thickened" if every_gap_one else "intervals-thickened", "pairs": []}
    bound = n - 1

    if every_gap_one:
        # orient every pair the same way; flip so that some far endpoint is big
        def ends(pair, d):
            r = runs[carrier[pair]]
            first, last = r[0], r[-1]
            return (first, last) if d > 0 else (last, first)

        d = 1
        if spec.F and not any(size(ends(pr, 1)[1]) >= 2 for pr in spec.F):
            d = -1
        for pair in spec.F:
            u, v = ends(pair, d)
            Y = C[carrier[pair]] - frozenset(blocks[u])
            cliques += [closed_nbhd(g, x, Y) for x in blocks[u]]
            notes["pairs"].append((u, v))
        notes["direction"] = d
    else:
        for pair in spec.F:
            idx = carrier[pair]
            a, b = pair
            if in_other_run(a, idx):
                u, v = a, b
            elif in_other_run(b, idx):
                u, v = b, a
            else:
                # one interval carries everything; X_u needs its own clique
                u, v = (a, b) if size(a) <= size(b) else (b, a)
                if size(u) >= 2:
                    cliques.append(frozenset(blocks[u]))
                    if n == 4:
                        bound = n
                notes["lone_carrier"] = True
            Y = C[idx] - frozenset(blocks[u])
            if size(v) >= 2:
                cliques.append(Y)
            cliques += [closed_nbhd(g, x, Y) for x in blocks[u]]
            notes["pairs"].append((u, v))
    cliques += [c for i, c in enumerate(C) if i not in used]
    return emit(g, [c for c in cliques if len(c) > 1], bound, "circ", notes)
