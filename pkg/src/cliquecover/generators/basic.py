"""Powers of cycles, line graphs and the small named graphs."""

from __future__ import annotations

from itertools import combinations

from ..errors import InvalidInput
from ..graph_core import Graph, induced_subgraph


def power_of_cycle(n: int, p: int) -> Graph:
    """C_n^p: v_i ~ v_j iff (i - j) mod n or (j - i) mod n lies in 1..p."""
    if p < 1 or n < 2 * p + 1:
        raise InvalidInput(f"power_of_cycle needs p >= 1 and n >= 2p+1 (got n={n}, p={p})")
    edges = set()
    for i in range(n):
        for d in range(1, p + 1):
            j = (i + d) % n
            edges.add((min(i, j), max(i, j)))
    return Graph.from_edges(n, sorted(edges), [f"v{i}" for i in range(n)])


def line_graph(h: Graph) -> Graph:
    """Line graph of h; vertex i is labelled by its source edge 'u-v'."""
    edges = h.edges()
    if not edges:
        raise InvalidInput("line graph of an edgeless graph is empty")
    out = []
    for i, j in combinations(range(len(edges)), 2):
        if set(edges[i]) & set(edges[j]):
            out.append((i, j))
    names = []
    for u, v in edges:
        names.append(f"{h.label(u)}-{h.label(v)}")
    return Graph.from_edges(len(edges), out, names)


# icosahedron family


ICOSA_LABELS = [f"v{i}" for i in range(12)]


def _icosa_edges() -> list:
    edges = set()
    cyc = list(range(1, 11))  # v1..v10, subscripts read cyclically in 1..10
    for k, v in enumerate(cyc):
        for step in (1, 2):
            w = cyc[(k + step) % 10]
            edges.add((min(v, w), max(v, w)))
    for v in (1, 3, 5, 7, 9):
        edges.add((0, v))
    for v in (2, 4, 6, 8, 10):
        edges.add((v, 11))
    return sorted(edges)


def icosahedron() -> Graph:
    return Graph.from_edges(12, _icosa_edges(), ICOSA_LABELS)


# the complement of a twister is fixed by its ten covering triangles

TWISTER_LABELS = ["u1", "u2"] + [f"v{i}" for i in range(1, 9)]
TWISTER_CLIQUES = [
    ("u2", "v1", "v7"), ("u2", "v3", "v5"), ("u1", "v4", "v6"), ("u1", "v2", "v8"),
    ("v1", "v3", "v6"), ("v2", "v5", "v7"), ("v3", "v6", "v8"), ("v3", "v5", "v8"),
    ("v1", "v4", "v7"), ("v2", "v4", "v7"),
]


def twister_complement() -> Graph:
    edges = set()
    for c in TWISTER_CLIQUES:
        for a, b in combinations(c, 2):
            edges.add(tuple(sorted((a, b), key=TWISTER_LABELS.index)))
    return Graph.from_labeled_edges(TWISTER_LABELS, sorted(edges))


# Schlafli graph on r/s/t vertices with a superscript i and a subscript j


def schlafli_label(letter: str, i: int, j: int) -> str:
    """Name of the vertex with superscript i and subscript j, e.g. 's_2^1'."""
    return f"{letter}_{j}^{i}"


SCHLAFLI_LABELS = [schlafli_label(x, i, j) for x in "rst" for i in (1, 2, 3) for j in (1, 2, 3)]


def _schlafli_adjacent(a: tuple, b: tuple) -> bool:
    (x, i, j), (y, k, l) = a, b
    if x == y:
        return (i == k) != (j == l)
    # s -> t -> r -> s: the first letter's subscript must differ from the second's superscript
    nxt = {"s": "t", "t": "r", "r": "s"}
    if nxt[x] == y:
        return j != k
    return l != i


def schlafli_vertices() -> list:
    return [(x, i, j) for x in "rst" for i in (1, 2, 3) for j in (1, 2, 3)]


def schlafli() -> Graph:
    vs = schlafli_vertices()
    edges = [(a, b) for a, b in combinations(range(27), 2) if _schlafli_adjacent(vs[a], vs[b])]
    return Graph.from_edges(27, edges, SCHLAFLI_LABELS)


ROTATOR_LABELS = [f"v{i}" for i in range(1, 10)]


def rotator_complement() -> Graph:
    """Vertices v1..v9; {v4,v5,v6}, {v7,v8,v9} triangles; v_i complete to
    {v4..v9} minus {v_{i+3}, v_{i+6}} for i = 1, 2, 3."""
    edges = [(3, 4), (3, 5), (4, 5), (6, 7), (6, 8), (7, 8)]
    for i in range(3):
        for w in range(3, 9):
            if w not in (i + 3, i + 6):
                edges.append((i, w))
    return Graph.from_edges(9, edges, ROTATOR_LABELS)


NAMED = ("IcosaG0", "IcosaG1", "IcosaG2", "TwisterComplement", "Schlafli", "RotatorComplement")


def named_graph(name: str) -> Graph:
    key = name.replace("-", "").replace("_", "").lower()
    if key == "icosag0":
        return icosahedron()
    if key == "icosag1":
        return induced_subgraph(icosahedron(), range(11))[0]
    if key == "icosag2":
        return induced_subgraph(icosahedron(), range(10))[0]
    if key in ("twistercomplement", "twister"):
        return twister_complement()
    if key == "schlafli":
        return schlafli()
    if key in ("rotatorcomplement", "rotator"):
        return rotator_complement()
    raise InvalidInput(f"unknown named graph {name!r}; expected one of {', '.join(NAMED)}")
