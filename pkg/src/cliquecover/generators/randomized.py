"""Seeded random instances for tests and the CLI hunt command."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from ..errors import InvalidInput
from ..graph_core import Graph
from ..recognizers import find_claw, first_triad
from .basic import line_graph, power_of_cycle
from .circular import CircularIntervalRep, arc_contains
from .structured import mantled, parallel_square, random_mantled_params, random_ring_params, ring_of_five, skew_square
from .triangles import build_triangle_chain, random_triangle_chain_params


def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_tree(seed, edges: int) -> Graph:
    """Uniform random attachment tree with ``edges`` edges."""
    rng = _rng(seed)
    if edges < 1:
        raise InvalidInput("a random tree needs at least one edge")
    es = [(rng.randrange(v), v) for v in range(1, edges + 1)]
    return Graph.from_edges(edges + 1, es, [f"t{i}" for i in range(edges + 1)])


def random_tree_line(seed, size: int) -> Graph:
    return line_graph(random_tree(seed, size))


def random_circular_rep(seed, m: int, arcs: int = None, fuzzy: bool = False,
                        connected: bool = False) -> CircularIntervalRep:
    """m points at i/m and ``arcs`` random arcs each spanning fewer than m/3
    points, so no three arcs can cover the circle.  With ``fuzzy``, some arcs
    end exactly on points and their end pairs go into F.  With ``connected``,
    short arcs are added until consecutive points always share an arc."""
    rng = _rng(seed)
    if m < 4:
        raise InvalidInput("random circular instances need m >= 4")
    k = arcs if arcs is not None else rng.randint(max(1, m // 2), m)
    max_span = (m - 1) // 3
    eps = Fraction(1, 4 * m * (k + m + 2))
    pts = [Fraction(i, m) for i in range(m)]
    out, F, exact_used = [], [], set()
    for idx in range(k):
        i = rng.randrange(m)
        j = (i + rng.randint(0, max_span)) % m
        if fuzzy and i != j and i not in exact_used and j not in exact_used and rng.random() < 0.5:
            out.append((pts[i], pts[j]))
            exact_used.update((i, j))
            F.append((i, j))
            continue
        out.append(((pts[i] - eps * (idx + 1)) % 1, (pts[j] + eps * (idx + 1)) % 1))
    if connected:
        for i in range(m):
            j = (i + 1) % m
            if not any(arc_contains(a, pts[i]) and arc_contains(a, pts[j]) for a in out):
                idx = len(out)
                out.append(((pts[i] - eps * (idx + 1)) % 1, (pts[j] + eps * (idx + 1)) % 1))
    rep = CircularIntervalRep(tuple(pts), tuple(out), ())
    # keep only the fuzzy pairs that lie in exactly one interval
    good = []
    for u, v in F:
        if sum(1 for a in range(len(out)) if {u, v} <= rep.members(a)) == 1:
            good.append((u, v))
    rep = CircularIntervalRep(tuple(pts), tuple(out), tuple(good))
    rep.validate()
    return rep


def random_circular(seed, size: int) -> Graph:
    from .circular import circular_interval_graph
    return circular_interval_graph(random_circular_rep(seed, size))


def random_three_cliqued(seed, size: int, p: float = None) -> tuple:
    """Random (G, A, B, C) with A, B, C cliques partitioning V(G), G claw-free.

    Cross edges are sampled independently; then, while a claw exists, an edge
    is added between two of its leaves.  Every claw here has its leaves in a
    triad and adding edges never creates a triad, so this terminates.
    """
    rng = _rng(seed)
    if size < 1:
        raise InvalidInput("size must be positive")
    p = rng.uniform(0.2, 0.8) if p is None else p
    part = [rng.randrange(3) for _ in range(size)]
    parts = [[v for v in range(size) if part[v] == k] for k in range(3)]
    edges = set()
    for u, v in combinations(range(size), 2):
        if part[u] == part[v] or rng.random() < p:
            edges.add((u, v))
    g = Graph.from_edges(size, sorted(edges))
    while True:
        claw = find_claw(g)
        if claw is None:
            break
        a, b = sorted(rng.sample(claw[1:], 2))
        g = g.add_edge(a, b)
    labels = [f"{'ABC'[part[v]]}{v}" for v in range(size)]
    g = Graph(g.n, g.adj, tuple(labels))
    return g, tuple(frozenset(x) for x in parts)


ANTIPRISMATIC_FAMILIES = ("power", "path", "cycle", "ring", "mantled", "parallel", "skew")


def random_antiprismatic(seed, family: str = None) -> tuple:
    """A random antiprismatic graph with a triad; returns (graph, family)."""
    rng = _rng(seed)
    while True:
        fam = family or rng.choice(ANTIPRISMATIC_FAMILIES)
        if fam == "power":
            p = rng.randint(1, 4)
            g = power_of_cycle(3 * p + 3, p)
        elif fam in ("path", "cycle"):
            m = rng.randint(1, 4) if fam == "path" else 5
            g = build_triangle_chain(random_triangle_chain_params(rng, fam, m))[0]
        elif fam == "ring":
            g = ring_of_five(random_ring_params(rng))[0]
        elif fam == "mantled":
            g = mantled(random_mantled_params(rng))[0]
        elif fam == "parallel":
            pick = lambda: rng.sample(range(1, 6), rng.randint(1, 3))
            g = parallel_square({"A": pick(), "B": pick(), "C": pick(), "D": pick(), "Z": rng.random() < 0.5})
        elif fam == "skew":
            pick = lambda: rng.sample(range(1, 7), rng.randint(1, 3))
            g = skew_square({"A": pick(), "B": pick(), "C": pick()})
        else:
            raise InvalidInput(f"unknown antiprismatic family {fam!r}")
        if first_triad(g) is not None:
            return g, fam


RANDOM_KINDS = ("RandomTreeLine", "RandomCircular", "RandomThreeCliqued")


def random_instance(seed, kind: str, size: int) -> Graph:
    key = kind.replace("-", "").replace("_", "").lower()
    if key == "randomtreeline":
        return random_tree_line(seed, size)
    if key == "randomcircular":
        return random_circular(seed, size)
    if key == "randomthreecliqued":
        return random_three_cliqued(seed, size)[0]
    raise InvalidInput(f"unknown random kind {kind!r}; expected one of {', '.join(RANDOM_KINDS)}")
