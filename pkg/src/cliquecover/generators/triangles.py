"""Complements of path-of-triangles and cycle-of-triangles graphs.

The vertex set is a sequence of cliques X_1, X_2, ...  Odd-indexed cliques
split as L, M, R; even-indexed cliques split into a hat part and a tilde
part (X minus hat).  Where the defining conditions leave freedom, the
parameters carry explicit choices:

* ``choices[i]``: for every tilde vertex of X_{2i} (hat of size one), a bit
  per anti-matched pair (R_{2i-1}[k], L_{2i+1}[k]); 0 means the tilde vertex
  sees R_{2i-1}[k], 1 means it sees L_{2i+1}[k].
* ``tilde_edges``: extra edges between tilde vertices of X_{2a}, X_{2b}
  with b - a = 1 (mod 3), given as label pairs such as ("T2_0", "T4_1").

Anti-matchings are by position: M_{2i+1}[k] misses hat_{2i+2}[k] and
hat_{2i}[k], and R_{2i-1}[k] misses L_{2i+1}[k].  When |hat_{2i}| > 1, a
vertex of X_{2i-1} and a vertex of X_{2i+1} are adjacent exactly when they
miss the same hat vertex; in particular L_{2i-1} is anticomplete to
R_{2i+1}, which is what keeps the graph antiprismatic.

Labels: ``L3_0``, ``M3_0``, ``R3_0`` for odd parts, ``H2_0`` for hat and
``T2_0`` for tilde vertices.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from ..errors import InvalidInput
from ..graph_core import Graph


@dataclass
class TriangleChainParams:
    kind: str  # "path" or "cycle"
    m: int
    odd: list  # [L, M, R] sizes for X_1, X_3, ... (m+1 entries for a path, m for a cycle)
    hat: list  # |hat X_{2i}| for i = 1..m
    tilde: list  # |X_{2i} minus hat| for i = 1..m
    choices: list = field(default_factory=list)  # per i: list of bit lists, one per tilde vertex
    tilde_edges: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {"kind": self.kind, "m": self.m, "odd": self.odd, "hat": self.hat,
                "tilde": self.tilde, "choices": self.choices, "tilde_edges": self.tilde_edges}

    @classmethod
    def from_json(cls, data) -> "TriangleChainParams":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(data["kind"], int(data["m"]), [list(x) for x in data["odd"]], list(data["hat"]),
                   list(data["tilde"]), [list(map(list, c)) for c in data.get("choices", [])],
                   [list(e) for e in data.get("tilde_edges", [])])


@dataclass
class ChainStructure:
    """Index bookkeeping for a built triangle chain (1-based X indices)."""

    kind: str
    m: int
    X: dict
    L: dict
    M: dict
    R: dict
    hat: dict
    tilde: dict

    @property
    def top(self) -> int:
        return 2 * self.m + 1 if self.kind == "path" else 2 * self.m

    def norm(self, i: int) -> Optional[int]:
        if self.kind == "cycle":
            return (i - 1) % (2 * self.m) + 1
        return i if 1 <= i <= self.top else None

    def get(self, table: dict, i: int) -> list:
        j = self.norm(i)
        return table.get(j, []) if j is not None else []

    def part_of(self) -> dict:
        """vertex -> (X index, role) with role in L, M, R, H, T."""
        out = {}
        for i, vs in self.X.items():
            for v in vs:
                if i % 2:
                    role = "L" if v in self.L[i] else "M" if v in self.M[i] else "R"
                else:
                    role = "H" if v in self.hat[i] else "T"
                out[v] = (i, role)
        return out

    def three_cliques(self) -> tuple:
        """A_1, A_2, A_3 with A_k the union of X_i for i = k (mod 3)."""
        parts = [set(), set(), set()]
        for i, vs in self.X.items():
            parts[(i - 1) % 3].update(vs)
        return tuple(frozenset(p) for p in parts)


def _anti_matched(g: Graph, xs: list, ys: list) -> bool:
    if len(xs) != len(ys):
        return False
    for a in xs:
        if sum(1 for b in ys if not g.has_edge(a, b)) != 1:
            return False
    for b in ys:
        if sum(1 for a in xs if not g.has_edge(a, b)) != 1:
            return False
    return True


def _check_params(p: TriangleChainParams) -> None:
    path = p.kind == "path"
    if p.kind not in ("path", "cycle"):
        raise InvalidInput(f"unknown triangle chain kind {p.kind!r}")
    m = p.m
    if path and m < 1:
        raise InvalidInput("a path of triangles needs m >= 1", "(P1)")
    if not path and (m < 5 or m % 3 != 2):
        raise InvalidInput("a cycle of triangles needs m >= 5 and m = 2 (mod 3)", "(C1)")
    n_odd = m + 1 if path else m
    if len(p.odd) != n_odd or any(len(t) != 3 or min(t) < 0 for t in p.odd):
        raise InvalidInput(f"expected {n_odd} (L, M, R) size triples", "(P3)" if path else "(C3)")
    if len(p.hat) != m or len(p.tilde) != m or min(p.tilde, default=0) < 0:
        raise InvalidInput(f"expected {m} hat and tilde sizes", "(P1)" if path else "(C1)")
    c1 = "(P1)" if path else "(C1)"
    if min(p.hat) < 1:
        raise InvalidInput("every hat set must be nonempty", c1)
    if path and (p.hat[0] != 1 or p.hat[-1] != 1):
        raise InvalidInput("|hat X_2| and |hat X_2m| must be 1", "(P1)")
    pairs = range(m - 1) if path else range(m)
    for i in pairs:
        if p.hat[i] > 1 and p.hat[(i + 1) % m] > 1:
            raise InvalidInput(f"hat X_{2 * i + 2} and hat X_{2 * i + 4} both exceed one", c1)

    def odd(i):  # sizes of X_i for odd 1-based i
        if path:
            return p.odd[(i - 1) // 2] if 1 <= i <= 2 * m + 1 else (0, 0, 0)
        return p.odd[((i - 1) % (2 * m)) // 2]

    def hat(i):  # |hat X_{2i}|, i 1-based
        if path:
            return p.hat[i - 1] if 1 <= i <= m else 0
        return p.hat[(i - 1) % m]

    if path:
        if p.odd[0][0] or p.odd[0][1] or p.odd[-1][1] or p.odd[-1][2]:
            raise InvalidInput("L_1, M_1, M_2m+1, R_2m+1 must be empty", "(P3)")
        if p.odd[0][2] == 0 and not (m >= 2 and hat(2) > 1):
            raise InvalidInput("R_1 empty needs m >= 2 and |hat X_4| > 1", "(P4)")
        if p.odd[-1][0] == 0 and not (m >= 2 and hat(m - 1) > 1):
            raise InvalidInput("L_2m+1 empty needs m >= 2 and |hat X_2m-2| > 1", "(P4)")
    c5, c6 = ("(P6)", "(P7)") if path else ("(C5)", "(C6)")
    for i in range(1, m + 1):
        left, right = odd(2 * i - 1), odd(2 * i + 1)
        if hat(i) == 1:
            if left[2] != right[0]:
                raise InvalidInput(f"R_{2 * i - 1} and L_{2 * i + 1} cannot be anti-matched (sizes differ)", c5)
            if (i > 1 or not path) and left[1] != hat(i - 1):
                raise InvalidInput(f"M_{2 * i - 1} and hat X_{2 * i - 2} cannot be anti-matched", c5)
            if (i < m or not path) and right[1] != hat(i + 1):
                raise InvalidInput(f"M_{2 * i + 1} and hat X_{2 * i + 2} cannot be anti-matched", c5)
        elif (1 < i < m) or not path:
            if left[2] or right[0]:
                raise InvalidInput(f"R_{2 * i - 1} and L_{2 * i + 1} must be empty", c6)
    c4 = "(P5)" if path else "(C4)"
    for i in range(1, m + 1):
        ch = p.choices[i - 1] if i - 1 < len(p.choices) else []
        t = p.tilde[i - 1]
        k = odd(2 * i - 1)[2] if hat(i) == 1 else 0
        if k == 0:
            if ch and any(ch):
                raise InvalidInput(f"choice bits given for X_{2 * i} but there are no R-L non-edges", c4)
            continue
        if len(ch) != t or any(len(row) != k or any(b not in (0, 1) for b in row) for row in ch):
            raise InvalidInput(f"X_{2 * i} needs {t} rows of {k} choice bits", c4)


def build_triangle_chain(params: TriangleChainParams) -> tuple:
    """Validate ``params`` and return (graph, ChainStructure)."""
    if isinstance(params, dict):
        params = TriangleChainParams.from_json(params)
    _check_params(params)
    p = params
    path = p.kind == "path"
    m = p.m
    top = 2 * m + 1 if path else 2 * m
    labels = []
    X, L, M, R, H, T = {}, {}, {}, {}, {}, {}

    def add(tag, i, k):
        labels.append(f"{tag}{i}_{k}")
        return len(labels) - 1

    for i in range(1, top + 1):
        if i % 2:
            nl, nm, nr = p.odd[(i - 1) // 2]
            L[i] = [add("L", i, k) for k in range(nl)]
            M[i] = [add("M", i, k) for k in range(nm)]
            R[i] = [add("R", i, k) for k in range(nr)]
            X[i] = L[i] + M[i] + R[i]
        else:
            H[i] = [add("H", i, k) for k in range(p.hat[i // 2 - 1])]
            T[i] = [add("T", i, k) for k in range(p.tilde[i // 2 - 1])]
            X[i] = H[i] + T[i]
    st = ChainStructure(p.kind, m, X, L, M, R, H, T)
    role = st.part_of()
    index = {v: i for v, (i, _) in role.items()}
    pos = {}
    for table in (L, M, R, H, T):
        for vs in table.values():
            for k, v in enumerate(vs):
                pos[v] = k
    lab2id = {lab: v for v, lab in enumerate(labels)}
    free = set()
    for a, b in p.tilde_edges:
        if a not in lab2id or b not in lab2id:
            raise InvalidInput(f"unknown tilde vertex in edge ({a}, {b})", "(P2)" if path else "(C2)")
        u, v = lab2id[a], lab2id[b]
        free.add((min(u, v), max(u, v)))

    def hat_size(e):  # e is an even index
        return len(st.get(H, e))

    def miss(v, e):
        """Hat vertex of X_e that odd vertex v misses, or None."""
        i, r = role[v]
        if r == "M":
            hs = st.get(H, e)
            return hs[pos[v]] if pos[v] < len(hs) else None
        return None

    def consecutive(x, y):
        # x in X_e (even), y in X_o (odd) with o = e - 1 or e + 1
        e, rx = role[x]
        o, ry = role[y]
        left = st.norm(e - 1) == o
        if (left and ry == "L") or (not left and ry == "R"):
            return True
        if rx == "T":
            if ry == "M":
                return True
            # y is in R_{e-1} or L_{e+1}; choice bit decides
            bits = p.choices[e // 2 - 1][pos[x]]
            return bits[pos[y]] == (0 if left else 1)
        # hat vertex
        if hat_size(e) == 1:
            return False
        return miss(y, e) != x

    def odd_pair(u, v):
        # u in X_o, v in X_{o+2}; e = o + 1 is the even index between them
        o, ru = role[u]
        _, rv = role[v]
        e = st.norm(o + 1)
        if hat_size(e) == 1:
            if ru == "L" or rv == "R":
                return False
            if ru == "R" and rv == "L":
                return pos[u] != pos[v]
            return True
        mu = miss(u, e)
        return mu is not None and mu == miss(v, e)

    edges = []
    n = len(labels)
    for u, v in combinations(range(n), 2):
        i, j = index[u], index[v]
        if i == j:
            edges.append((u, v))
            continue
        if path:
            if i > j:
                u, v, i, j = v, u, j, i
            d = j - i
        else:
            d = (j - i) % (2 * m)
            if d > m:  # orient so that the forward distance is the short one
                u, v, i, j = v, u, j, i
                d = 2 * m - d
        if d == 1:
            adj = consecutive(u, v) if i % 2 == 0 else consecutive(v, u)
        elif d % 3 != 2:
            adj = True
        elif d == 2 and i % 2 == 1:
            adj = odd_pair(u, v)
        elif i % 2 == 0 and role[u][1] == "T" and role[v][1] == "T":
            adj = (min(u, v), max(u, v)) in free
        else:
            adj = False
        if not path and d % 3 != 2 and d != 1:
            # the forward distance may be == 2 mod 3 the other way round
            if (2 * m - d) % 3 == 2:
                raise AssertionError("inconsistent cyclic distance")
        if adj:
            edges.append((u, v))
    for a, b in free:
        if role[a][1] != "T" or role[b][1] != "T":
            raise InvalidInput(f"edge {labels[a]}-{labels[b]} is not between tilde vertices",
                               "(P2)" if path else "(C2)")
    g = Graph.from_edges(n, edges, labels)
    check_triangle_chain(g, st)
    return g, st


def triangle_chain_graph(params) -> Graph:
    return build_triangle_chain(params)[0]


def check_triangle_chain(g: Graph, st: ChainStructure) -> None:
    """Check every defining clause directly on the adjacency of g."""
    path = st.kind == "path"
    m = st.m
    top = st.top
    tag = (lambda a, b: a) if path else (lambda a, b: b)
    for i, vs in st.X.items():
        if not g.is_clique(vs):
            raise InvalidInput(f"X_{i} is not a clique", tag("(P2)", "(C2)"))
    H = st.hat
    # (P1)/(C1)
    for i in range(1, m + 1):
        if not H[2 * i]:
            raise InvalidInput(f"hat X_{2 * i} is empty", tag("(P1)", "(C1)"))
    # (P2)/(C2)
    for i in range(1, top + 1):
        for j in range(i + 1, top + 1):
            if path:
                ks = [(j - i, i, j)]
            else:
                ks = [((j - i) % (2 * m), i, j), ((i - j) % (2 * m), j, i)]
            for k, a, b in ks:
                if path:
                    lo = 2
                else:
                    if not (2 <= k <= 2 * m - 2):
                        continue
                    lo = 2
                if k < lo and path:
                    continue
                if k % 3 == 2:
                    for u in st.X[a]:
                        for v in st.X[b]:
                            if not g.has_edge(u, v):
                                continue
                            both_odd = a % 2 == 1 and b % 2 == 1
                            if both_odd and (k == 2 or (not path and k == 2 * m - 2)):
                                continue
                            if a % 2 == 0 and b % 2 == 0 and u not in H[a] and v not in H[b]:
                                continue
                            raise InvalidInput(f"{g.label(u)}-{g.label(v)} is a forbidden edge",
                                               tag("(P2)", "(C2)"))
                elif k >= 2 or not path:
                    if path and k == 1:
                        continue
                    for u in st.X[a]:
                        for v in st.X[b]:
                            if not g.has_edge(u, v):
                                raise InvalidInput(f"X_{a} is not complete to X_{b}", tag("(P2)", "(C2)"))
    L, M, R, T = st.L, st.M, st.R, st.tilde
    get = st.get

    def complete(xs, ys):
        return all(g.has_edge(x, y) for x in xs for y in ys)

    def anticomplete(xs, ys):
        return not any(g.has_edge(x, y) for x in xs for y in ys)

    c5 = tag("(P5)", "(C4)")
    c6 = tag("(P6)", "(C5)")
    c7 = tag("(P7)", "(C6)")
    for i in range(1, m + 1):
        e = 2 * i
        xe = st.X[e]
        lo, hi = st.norm(e - 1), st.norm(e + 1)
        if not complete(xe, get(L, e - 1) + get(R, e + 1)):
            raise InvalidInput(f"X_{e} is not complete to L_{lo} and R_{hi}", c5)
        if not complete(T[e], get(M, e - 1) + get(M, e + 1)):
            raise InvalidInput(f"X_{e} minus hat is not complete to M_{lo} and M_{hi}", c5)
        nonedges = [(r, l) for r in get(R, e - 1) for l in get(L, e + 1) if not g.has_edge(r, l)]
        for x in T[e]:
            for r, l in nonedges:
                if g.has_edge(x, r) == g.has_edge(x, l):
                    raise InvalidInput(f"{g.label(x)} does not see exactly one end of {g.label(r)}-{g.label(l)}", c5)
        if len(H[e]) == 1:
            h = H[e]
            if not _anti_matched(g, get(R, e - 1), get(L, e + 1)):
                raise InvalidInput(f"R_{lo} and L_{hi} are not anti-matched", c6)
            for u in get(M, e - 1) + get(R, e - 1):
                for v in get(L, e + 1) + get(M, e + 1):
                    if not g.has_edge(u, v) and not (u in get(R, e - 1) and v in get(L, e + 1)):
                        raise InvalidInput(f"non-edge {g.label(u)}-{g.label(v)} outside R-L", c6)
            if not anticomplete(h, get(R, e - 1) + get(M, e - 1) + get(L, e + 1) + get(M, e + 1)):
                raise InvalidInput(f"hat X_{e} has a forbidden neighbour", c6)
            if not anticomplete(get(L, e - 1), get(st.X, e + 1)):
                raise InvalidInput(f"L_{lo} is not anticomplete to X_{hi}", c6)
            if not anticomplete(get(st.X, e - 1), get(R, e + 1)):
                raise InvalidInput(f"X_{lo} is not anticomplete to R_{hi}", c6)
            if (i > 1 or not path) and not _anti_matched(g, get(M, e - 1), get(H, e - 2)):
                raise InvalidInput(f"M_{lo} and hat X_{st.norm(e - 2)} are not anti-matched", c6)
            if (i < m or not path) and not _anti_matched(g, get(M, e + 1), get(H, e + 2)):
                raise InvalidInput(f"M_{hi} and hat X_{st.norm(e + 2)} are not anti-matched", c6)
        elif (1 < i < m) or not path:
            if get(R, e - 1) or get(L, e + 1):
                raise InvalidInput(f"R_{lo} or L_{hi} is nonempty", c7)
            hs = set(H[e])
            for u in get(st.X, e - 1):
                mu = frozenset(h for h in hs if not g.has_edge(u, h))
                for v in get(st.X, e + 1):
                    mv = frozenset(h for h in hs if not g.has_edge(v, h))
                    if g.has_edge(u, v) != (bool(mu) and mu == mv):
                        raise InvalidInput(f"{g.label(u)}-{g.label(v)} breaks the hat rule", c7)
    if path:
        if L[1] or M[1] or M[top] or R[top]:
            raise InvalidInput("L_1, M_1, M_2m+1, R_2m+1 must be empty", "(P3)")
        if len(H[2]) != 1 or len(H[2 * m]) != 1:
            raise InvalidInput("|hat X_2| and |hat X_2m| must be 1", "(P1)")
        if not R[1] and not (m >= 2 and len(H[4]) > 1):
            raise InvalidInput("R_1 empty needs m >= 2 and |hat X_4| > 1", "(P4)")
        if not L[top] and not (m >= 2 and len(H[2 * m - 2]) > 1):
            raise InvalidInput("L_2m+1 empty needs m >= 2 and |hat X_2m-2| > 1", "(P4)")


def is_tripod(g: Graph, st: ChainStructure) -> bool:
    """A path of triangles with m = 1, |X_1| = |X_3| <= 2 and every tilde
    vertex complete to one of X_1, X_3 and anticomplete to the other."""
    if st.kind != "path" or st.m != 1:
        return False
    x1, x3 = st.X[1], st.X[3]
    if not (1 <= len(x1) == len(x3) <= 2):
        return False
    for x in st.tilde[2]:
        a = [g.has_edge(x, y) for y in x1]
        b = [g.has_edge(x, y) for y in x3]
        if not ((all(a) and not any(b)) or (all(b) and not any(a))):
            return False
    return True


def random_triangle_chain_params(rng, kind: str = "path", m: int = 2, max_part: int = 2,
                                 tilde_edge_prob: float = 0.3) -> TriangleChainParams:
    """Sample a parameter set satisfying every clause (``rng`` is a random.Random)."""
    path = kind == "path"
    if path and m < 1 or not path and (m < 5 or m % 3 != 2):
        raise InvalidInput(f"no {kind} of triangles with m={m}", "(P1)" if path else "(C1)")
    while True:
        hat = []
        for i in range(m):
            big = rng.random() < 0.4
            if path and i in (0, m - 1):
                big = False
            if i > 0 and hat[i - 1] > 1:
                big = False
            if not path and i == m - 1 and hat[0] > 1:
                big = False
            hat.append(rng.randint(2, max_part + 1) if big else 1)
        # k[i]: |R_{2i-1}| = |L_{2i+1}| around X_{2i} (0 when its hat is big)
        k = [rng.randint(0, max_part) if h == 1 else 0 for h in hat]
        if path and k[0] == 0 and not (m >= 2 and hat[1] > 1):
            k[0] = rng.randint(1, max_part)
        if path and k[-1] == 0 and not (m >= 2 and hat[-2] > 1):
            k[-1] = rng.randint(1, max_part)
        break
    n_odd = m + 1 if path else m
    odd = []
    for j in range(n_odd):  # X_{2j+1}, between hats j-1 and j (0-based)
        left = hat[j - 1] if (j >= 1 or not path) else None
        right = hat[j] if (j < m) else None
        if path and (j == 0 or j == m):
            msize = 0
        elif left > 1:
            msize = left
        elif right > 1:
            msize = right
        else:
            msize = 1
        lsize = k[j - 1] if (j >= 1 or not path) else 0
        rsize = k[j] if j < m else 0
        odd.append([lsize, msize, rsize])
    tilde = [rng.randint(0, max_part) for _ in range(m)]
    choices = []
    for i in range(m):
        if k[i]:
            choices.append([[rng.randint(0, 1) for _ in range(k[i])] for _ in range(tilde[i])])
        else:
            choices.append([])
    edges = []
    top = 2 * m + 1 if path else 2 * m
    evens = range(2, top + 1, 2)
    for a in evens:
        for b in evens:
            if b <= a:
                continue
            d = b - a if path else min((b - a) % (2 * m), (a - b) % (2 * m))
            if d % 3 != 2:
                continue
            for x in range(tilde[a // 2 - 1]):
                for y in range(tilde[b // 2 - 1]):
                    if rng.random() < tilde_edge_prob:
                        edges.append([f"T{a}_{x}", f"T{b}_{y}"])
    return TriangleChainParams(kind, m, odd, hat, tilde, choices, edges)
