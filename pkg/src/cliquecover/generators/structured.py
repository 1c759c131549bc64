"""Ring of five, mantled L(K_3,3) (both as complements) and the two square types.

Where a definition leaves adjacency free, parameters carry explicit 0/1
matrices.  ``random_*_params`` build such matrices from a seeded RNG.
"""

from __future__ import annotations

import json
from itertools import combinations

from ..errors import InvalidInput
from ..graph_core import Graph


def _matrix(bits, rows: int, cols: int, what: str, clause: str) -> list:
    if bits is None:
        bits = [[0] * cols for _ in range(rows)]
    if len(bits) != rows or any(len(r) != cols for r in bits):
        raise InvalidInput(f"{what} must be a {rows}x{cols} 0/1 matrix", clause)
    if any(b not in (0, 1) for r in bits for b in r):
        raise InvalidInput(f"{what} has entries other than 0/1", clause)
    return [list(r) for r in bits]


class _Builder:
    def __init__(self):
        self.labels: list = []
        self.edges: set = set()

    def add(self, label: str) -> int:
        self.labels.append(label)
        return len(self.labels) - 1

    def join(self, xs, ys) -> None:
        for x in xs:
            for y in ys:
                if x != y:
                    self.edges.add((min(x, y), max(x, y)))

    def clique(self, xs) -> None:
        for x, y in combinations(xs, 2):
            self.edges.add((min(x, y), max(x, y)))

    def graph(self) -> Graph:
        return Graph.from_edges(len(self.labels), sorted(self.edges), self.labels)


# ring of five


def ring_of_five(params) -> tuple:
    """params: {"sizes": [|V_0|, ..., |V_5|], "bits": [M_1, ..., M_5]} with M_i
    the |V_i| x |V_{i+1}| adjacency matrix (indices mod 5).

    Returns (graph, parts) with parts = {"a": [a_1..a_5], "b": [b_1..b_5],
    "V": [V_0, ..., V_5]} (1-based symbols stored at list index i-1 for a, b).
    """
    if isinstance(params, str):
        params = json.loads(params)
    sizes = list(params.get("sizes", [0] * 6))
    if len(sizes) != 6 or min(sizes) < 0:
        raise InvalidInput("ring of five needs six nonnegative sizes V_0..V_5", "(ring)")
    raw = params.get("bits") or [None] * 5
    if len(raw) != 5:
        raise InvalidInput("ring of five needs five consecutive-pair matrices", "(ring)")
    bits = [_matrix(raw[i], sizes[i + 1], sizes[(i + 1) % 5 + 1], f"V_{i + 1}-V_{(i + 1) % 5 + 1} bits", "(ring)")
            for i in range(5)]
    b = _Builder()
    a_ids = [b.add(f"a{i}") for i in range(1, 6)]
    b_ids = [b.add(f"b{i}") for i in range(1, 6)]
    V = [[b.add(f"V{i}_{k}") for k in range(sizes[i])] for i in range(6)]

    def a(i):
        return a_ids[(i - 1) % 5]

    def bb(i):
        return b_ids[(i - 1) % 5]

    def Vi(i):
        return V[(i - 1) % 5 + 1]

    for i in range(1, 6):
        b.clique([a(i), bb(i + 1), a(i + 2)])
    b.clique(b_ids)
    b.join(V[0], a_ids)
    for vs in V:
        b.clique(vs)
    for i in range(1, 6):
        miss = {a(i - 1), bb(i), a(i + 1)}
        b.join(Vi(i), [w for w in a_ids + b_ids if w not in miss])
        b.join(V[0], Vi(i))
        b.join(Vi(i), Vi(i + 2))
        for r, x in enumerate(Vi(i)):
            for c, y in enumerate(Vi(i + 1)):
                if bits[i - 1][r][c]:
                    b.join([x], [y])
    return b.graph(), {"a": a_ids, "b": b_ids, "V": V}


def random_ring_params(rng, max_size: int = 2, p: float = 0.5) -> dict:
    sizes = [rng.randint(0, max_size) for _ in range(6)]
    bits = [[[int(rng.random() < p) for _ in range(sizes[(i + 1) % 5 + 1])] for _ in range(sizes[i + 1])]
            for i in range(5)]
    return {"sizes": sizes, "bits": bits}


# mantled L(K_3,3)

_PAIRS = ("12", "13", "23")


def _has_triad(adj: dict, vs: list) -> bool:
    return any(not adj(x, y) and not adj(x, z) and not adj(y, z) for x, y, z in combinations(vs, 3))


def mantled(params) -> tuple:
    """params: {"upper": [|V^1|, |V^2|, |V^3|], "lower": [|V_1|, |V_2|, |V_3|],
    "upper_bits": {"12": M, "13": M, "23": M}, "lower_bits": {...}}.

    Returns (graph, parts) with parts = {"a": a[i][j] for the vertex a^{i+1}_{j+1},
    "upper": [V^1, V^2, V^3], "lower": [V_1, V_2, V_3]}.
    """
    if isinstance(params, str):
        params = json.loads(params)
    up = list(params.get("upper", [0, 0, 0]))
    lo = list(params.get("lower", [0, 0, 0]))
    if len(up) != 3 or len(lo) != 3 or min(up + lo) < 0:
        raise InvalidInput("mantled needs three upper and three lower nonnegative sizes", "(mantled)")
    ubits = {k: _matrix((params.get("upper_bits") or {}).get(k), up[int(k[0]) - 1], up[int(k[1]) - 1],
                        f"V^{k[0]}-V^{k[1]} bits", "(mantled)") for k in _PAIRS}
    lbits = {k: _matrix((params.get("lower_bits") or {}).get(k), lo[int(k[0]) - 1], lo[int(k[1]) - 1],
                        f"V_{k[0]}-V_{k[1]} bits", "(mantled)") for k in _PAIRS}
    b = _Builder()
    a = [[b.add(f"a^{i}_{j}") for j in (1, 2, 3)] for i in (1, 2, 3)]
    upper = [[b.add(f"V^{i}#{k}") for k in range(up[i - 1])] for i in (1, 2, 3)]
    lower = [[b.add(f"V_{i}#{k}") for k in range(lo[i - 1])] for i in (1, 2, 3)]
    W = [x for row in a for x in row]
    for i in range(3):
        for j in range(3):
            for i2 in range(3):
                for j2 in range(3):
                    if (i, j) < (i2, j2) and (i == i2 or j == j2):
                        b.join([a[i][j]], [a[i2][j2]])
    for i in range(3):
        b.clique(upper[i])
        b.clique(lower[i])
        b.join(upper[i], [w for w in W if w not in a[i]])
        b.join(lower[i], [w for w in W if w not in (a[0][i], a[1][i], a[2][i])])
    b.join([x for vs in upper for x in vs], [x for vs in lower for x in vs])
    for side, bits in ((upper, ubits), (lower, lbits)):
        for k in _PAIRS:
            p, q = side[int(k[0]) - 1], side[int(k[1]) - 1]
            for r, x in enumerate(p):
                for c, y in enumerate(q):
                    if bits[k][r][c]:
                        b.join([x], [y])
    g = b.graph()
    for name, side in (("V^1 u V^2 u V^3", upper), ("V_1 u V_2 u V_3", lower)):
        if _has_triad(g.has_edge, [x for vs in side for x in vs]):
            raise InvalidInput(f"{name} contains a triad", "(mantled)")
    return g, {"a": a, "upper": upper, "lower": lower}


def _random_triad_free_bits(rng, sizes: list, p: float) -> dict:
    """Random cross matrices, then add edges until the union of the three cliques has no triad."""
    bits = {k: [[int(rng.random() < p) for _ in range(sizes[int(k[1]) - 1])] for _ in range(sizes[int(k[0]) - 1])]
            for k in _PAIRS}
    verts = [(i, r) for i in range(3) for r in range(sizes[i])]

    def adj(x, y):
        (i, r), (j, c) = sorted((x, y))
        return i == j or bool(bits[f"{i + 1}{j + 1}"][r][c])

    while True:
        triad = next(((x, y, z) for x, y, z in combinations(verts, 3)
                      if not adj(x, y) and not adj(x, z) and not adj(y, z)), None)
        if triad is None:
            return bits
        x, y = sorted(rng.sample(list(triad), 2))
        bits[f"{x[0] + 1}{y[0] + 1}"][x[1]][y[1]] = 1


def random_mantled_params(rng, max_size: int = 2, p: float = 0.5) -> dict:
    up = [rng.randint(0, max_size) for _ in range(3)]
    lo = [rng.randint(0, max_size) for _ in range(3)]
    return {"upper": up, "lower": lo,
            "upper_bits": _random_triad_free_bits(rng, up, p),
            "lower_bits": _random_triad_free_bits(rng, lo, p)}


# square types


def _index_set(params: dict, key: str, clause: str, allow_empty: bool = False) -> list:
    xs = sorted(set(int(i) for i in params.get(key, [])))
    if (not xs and not allow_empty) or any(i < 1 for i in xs):
        raise InvalidInput(f"{key} must be a nonempty set of positive indices", clause)
    return xs


def parallel_square(params) -> Graph:
    """params: {"A": [...], "B": [...], "C": [...], "D": [...], "Z": bool};
    index lists name the vertices a_i, b_i, c_i, d_i."""
    if isinstance(params, str):
        params = json.loads(params)
    sets = {k: _index_set(params, k, "(parallel-square)") for k in "ABCD"}
    b = _Builder()
    ids = {k: {i: b.add(f"{k.lower()}{i}") for i in sets[k]} for k in "ABCD"}
    Z = [b.add("z")] if params.get("Z") else []
    u, v, x, y = (b.add(s) for s in "uvxy")
    A, B, C, D = (list(ids[k].values()) for k in "ABCD")
    b.clique(A + [u, y])
    b.clique(B + [u, v])
    b.clique(C + [v, x])
    b.clique(D + [x, y])
    b.join(Z, A + B + C + D)
    for i, ai in ids["A"].items():
        for j, w in ids["B"].items():
            if i != j:
                b.join([ai], [w])
        for j, w in ids["D"].items():
            if i != j:
                b.join([ai], [w])
        for j, w in ids["C"].items():
            if i == j:
                b.join([ai], [w])
    for i, bi in ids["B"].items():
        for j, w in ids["C"].items():
            if i != j:
                b.join([bi], [w])
        for j, w in ids["D"].items():
            if i == j:
                b.join([bi], [w])
    for i, ci in ids["C"].items():
        for j, w in ids["D"].items():
            if i != j:
                b.join([ci], [w])
    return b.graph()


def skew_square(params) -> Graph:
    """params: {"A": [...], "B": [...], "C": [...]} index lists."""
    if isinstance(params, str):
        params = json.loads(params)
    sets = {k: _index_set(params, k, "(skew-square)") for k in "ABC"}
    b = _Builder()
    ids = {k: {i: b.add(f"{k.lower()}{i}") for i in sets[k]} for k in "ABC"}
    s, t = b.add("s"), b.add("t")
    d = {i: b.add(f"d{i}") for i in (1, 2, 3)}
    A, B, C = (list(ids[k].values()) for k in "ABC")
    for vs in (A, B, C, [s, t] + list(d.values())):
        b.clique(vs)
    b.join([s], B)
    b.join([t], A)
    for i, ai in ids["A"].items():
        for j, bj in ids["B"].items():
            if i == j:
                b.join([ai], [bj])
    for key in "AB":
        for i, w in ids[key].items():
            for j, cj in ids["C"].items():
                if i != j:
                    b.join([w], [cj])
    for i, di in d.items():
        for key in "AB":
            for j, w in ids[key].items():
                if i == j or j >= 4:
                    b.join([di], [w])
        for j, cj in ids["C"].items():
            if i != j and 1 <= j <= 3:
                b.join([di], [cj])
    return b.graph()


STRUCTURED = ("RingOfFive", "MantledLK33", "ParallelSquare", "SkewSquare")


def structured_graph(kind: str, params) -> Graph:
    key = kind.replace("-", "").replace("_", "").lower()
    if key in ("ringoffive", "ring"):
        return ring_of_five(params)[0]
    if key in ("mantledlk33", "mantled"):
        return mantled(params)[0]
    if key in ("parallelsquare", "parallel"):
        return parallel_square(params)
    if key in ("skewsquare", "skew"):
        return skew_square(params)
    raise InvalidInput(f"unknown structured kind {kind!r}; expected one of {', '.join(STRUCTURED)}")
