"""The decomposition of an antiprismatic graph around a rotator of its
complement, the two clique collections built on it, and the two 18-clique
covers of Schlafli-antiprismatic graphs.

Indices follow the Schlafli naming: superscript ``i`` and subscript ``j`` run
over 1..3 and are read modulo 3.  A rotator is passed as the ordered tuple
``(s_1^1, s_2^2, s_3^3, t_3^1, t_3^2, t_3^3, r_1^3, r_2^3, r_3^3)``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Optional

from ..errors import InvalidInput, NotACliqueError, NotAntiprismatic, PreconditionError
from ..generators.basic import schlafli, schlafli_label
from ..graph_core import Graph, induced_subgraph
from ..recognizers import is_antiprismatic, is_rotator
from .base import BoundedCover, emit

IDX = (1, 2, 3)
J = tuple((i, j) for i in IDX for j in IDX if i != j)


def nx(i: int, k: int = 1) -> int:
    """i + k modulo 3, kept in 1..3."""
    return (i - 1 + k) % 3 + 1


@dataclass(frozen=True)
class RotatorDecomposition:
    """Partition of the vertices outside a rotator into S_j^i, T^i and R_i."""

    graph: Graph
    rho: tuple
    S_parts: dict  # (i, j) -> S_j^i
    T_parts: dict  # i -> T^i
    R_parts: dict  # i -> R_i
    notes: dict = field(default_factory=dict, compare=False)

    # rotator vertices
    def s(self, i: int) -> int:
        return self.rho[i - 1]

    def t3(self, i: int) -> int:
        """t_3^i"""
        return self.rho[2 + i]

    def r3(self, j: int) -> int:
        """r_j^3"""
        return self.rho[5 + j]

    @property
    def T3(self) -> frozenset:
        return frozenset(self.rho[3:6])

    @property
    def R3(self) -> frozenset:
        return frozenset(self.rho[6:9])

    # derived unions
    @property
    def S(self) -> frozenset:
        return frozenset().union(*self.S_parts.values())

    @property
    def T(self) -> frozenset:
        return frozenset().union(*self.T_parts.values())

    @property
    def R(self) -> frozenset:
        return frozenset().union(*self.R_parts.values())

    @property
    def S_prime(self) -> frozenset:
        return self.S | frozenset(self.rho[0:3])

    @property
    def T_prime(self) -> frozenset:
        return self.T | self.T3

    @property
    def R_prime(self) -> frozenset:
        return self.R | self.R3

    def S_sup(self, i: int) -> frozenset:
        """S^i = S_{i+1}^i | S_{i+2}^i"""
        return self.S_parts[i, nx(i)] | self.S_parts[i, nx(i, 2)]

    def S_sub(self, j: int) -> frozenset:
        """S_j = S_j^{j+1} | S_j^{j+2}"""
        return self.S_parts[nx(j), j] | self.S_parts[nx(j, 2), j]

    @property
    def I_T(self) -> frozenset:
        return frozenset(i for i in IDX if self.T_parts[i])

    @property
    def I_R(self) -> frozenset:
        return frozenset(i for i in IDX if self.R_parts[i])

    def labelled(self) -> dict:
        """Parts keyed by readable names, members given by vertex label."""
        g = self.graph
        out = {}
        for (i, j), p in sorted(self.S_parts.items()):
            out[f"S_{j}^{i}"] = sorted(g.label(v) for v in p)
        for i in IDX:
            out[f"T^{i}"] = sorted(g.label(v) for v in self.T_parts[i])
            out[f"R_{i}"] = sorted(g.label(v) for v in self.R_parts[i])
        return out


def _classify(g: Graph, rho: tuple, v: int) -> list:
    s = lambda i: rho[i - 1]
    t = lambda i: rho[2 + i]
    r = lambda j: rho[5 + j]
    adj = lambda a: g.has_edge(v, a)
    hits = []
    for i in IDX:
        if adj(s(i)):
            continue
        a, b = nx(i), nx(i, 2)
        if adj(r(a)) and adj(r(b)) and not adj(t(a)) and not adj(t(b)):
            hits.append(("T", i))
        if adj(t(a)) and adj(t(b)) and not adj(r(a)) and not adj(r(b)):
            hits.append(("R", i))
        if adj(t(a)) and adj(r(b)) and not adj(t(b)) and not adj(r(a)):
            hits.append(("S", a, b))
        if adj(t(b)) and adj(r(a)) and not adj(t(a)) and not adj(r(b)):
            hits.append(("S", b, a))
    return hits


def rotator_decompose(g: Graph, rho: tuple, check_antiprismatic: bool = True) -> RotatorDecomposition:
    """Classify every vertex outside ``rho`` by its adjacency to the rotator."""
    rho = tuple(rho)
    if not is_rotator(g, rho):
        raise PreconditionError("the tuple does not induce the complement of a rotator")
    if check_antiprismatic and not is_antiprismatic(g)[0]:
        raise NotAntiprismatic("the graph is not antiprismatic")
    S = {k: set() for k in J}
    T = {i: set() for i in IDX}
    R = {i: set() for i in IDX}
    inside = set(rho)
    for v in range(g.n):
        if v in inside:
            continue
        hits = _classify(g, rho, v)
        if len(hits) != 1:
            raise PreconditionError(f"vertex {g.label(v)} matches {len(hits)} classes of the decomposition")
        h = hits[0]
        if h[0] == "T":
            T[h[1]].add(v)
        elif h[0] == "R":
            R[h[1]].add(v)
        else:
            S[h[1], h[2]].add(v)
    freeze = lambda d: {k: frozenset(v) for k, v in d.items()}
    d = RotatorDecomposition(g, rho, freeze(S), freeze(T), freeze(R))
    parts = list(d.S_parts.values()) + list(d.T_parts.values()) + list(d.R_parts.values())
    for p in parts:
        if not g.is_clique(p):
            raise NotACliqueError(f"decomposition part {sorted(g.label(v) for v in p)} is not a clique")
    big = [f"S_{j}^{i}" for (i, j), p in sorted(d.S_parts.items()) if len(p) > 1]
    if big:
        d.notes["large_S_parts"] = big
    return d


def hard_edges(d: RotatorDecomposition) -> frozenset:
    """The edges between T^i and T^j, between R_i and R_j, between T' and R',
    and inside T_3 and R^3: the set the collections are not asked to cover."""
    g = d.graph
    out = set()

    def between(a, b):
        for u in a:
            for v in b:
                if u != v and g.has_edge(u, v):
                    out.add(frozenset((u, v)))

    for i, j in J:
        between(d.T_parts[i], d.T_parts[j])
        between(d.R_parts[i], d.R_parts[j])
    between(d.T_prime, d.R_prime)
    between(d.T3, d.T3)
    between(d.R3, d.R3)
    return frozenset(out)


def p_extra_edges(d: RotatorDecomposition) -> frozenset:
    """E(T, R^3) | E(T_3, R) | E(T_3) | E(R^3)."""
    g = d.graph
    out = set()
    for a, b in ((d.T, d.R3), (d.T3, d.R), (d.T3, d.T3), (d.R3, d.R3)):
        for u in a:
            for v in b:
                if u != v and g.has_edge(u, v):
                    out.add(frozenset((u, v)))
    return frozenset(out)


def X_set(d: RotatorDecomposition, i: int, j: int) -> frozenset:
    return d.S_sub(j) | d.T_parts[i] | {d.s(j), d.t3(i)}


def Z_set(d: RotatorDecomposition, i: int, j: int) -> frozenset:
    return d.R_parts[j] | d.S_sup(i) | {d.s(i), d.r3(j)}


def delta(d: RotatorDecomposition, i: int, j: int) -> frozenset:
    return (d.S_sup(i) - d.S_parts[i, j]) | {d.s(i)} | d.T_parts[j] | (d.R3 - {d.r3(i)})


def nabla(d: RotatorDecomposition, i: int, j: int) -> frozenset:
    return (d.S_sub(i) - d.S_parts[j, i]) | {d.s(i)} | (d.T3 - {d.t3(i)}) | d.R_parts[j]


def omega_sup(d: RotatorDecomposition, i: int) -> frozenset:
    return d.S_sup(i) | d.T_parts[i] | {d.t3(i)}


def omega_sub(d: RotatorDecomposition, i: int) -> frozenset:
    return d.S_sub(i) | d.R_parts[i] | {d.r3(i)}


def _p_keys(d: RotatorDecomposition) -> list:
    """Names of the cliques chosen by steps P2-P7, first occurrences kept."""
    keys = {}  # dicts keep insertion order: an ordered set
    add = lambda k: keys.setdefault(k, None)
    for i in IDX:
        if d.T_parts[i]:
            add(("D", nx(i), i))
            add(("D", nx(i, 2), i))
    for i in IDX:
        if d.T_parts[i] or len(d.S_sup(i)) == 2:
            add(("Wup", i))
    for i in IDX:
        if d.R_parts[i]:
            add(("N", nx(i), i))
            add(("N", nx(i, 2), i))
    for i in IDX:
        if d.R_parts[i] or len(d.S_sub(i)) == 2:
            add(("Wdn", i))
    for i, j in J:
        if d.S_parts[i, j]:
            add(("D", i, 6 - i - j))
            add(("N", j, 6 - i - j))
    for kind in ("D", "N"):
        for i in IDX:
            if not any(k[0] == kind and k[1] == i for k in keys):
                add((kind, i, nx(i)))
    return list(keys)


def rotator_collections(d: RotatorDecomposition, which: str) -> list:
    """The 12 cliques X_j^i, Z_j^i (``"O"``) or the at most 18 cliques picked
    by steps P1-P7 (``"P"``).  Each set is checked to be a clique."""
    if which == "O":
        out = [X_set(d, i, j) for i, j in J] + [Z_set(d, i, j) for i, j in J]
    elif which == "P":
        build = {"D": lambda k: delta(d, k[1], k[2]), "N": lambda k: nabla(d, k[1], k[2]),
                 "Wup": lambda k: omega_sup(d, k[1]), "Wdn": lambda k: omega_sub(d, k[1])}
        out = [build[k[0]](k) for k in _p_keys(d)]
    else:
        raise InvalidInput(f"unknown collection {which!r}; expected O or P")
    for c in out:
        if not d.graph.is_clique(c):
            raise NotACliqueError(f"collection {which} set {sorted(d.graph.label(v) for v in c)} is not a clique")
    return out


def uncovered_edges(g: Graph, cliques: Iterable[Iterable[int]]) -> frozenset:
    covered = set()
    for c in cliques:
        covered.update(frozenset(p) for p in combinations(sorted(c), 2))
    return frozenset(frozenset(e) for e in g.edges()) - covered


# Schlafli graph


CANONICAL_RHO_LABELS = tuple(
    [schlafli_label("s", i, i) for i in IDX]
    + [schlafli_label("t", i, 3) for i in IDX]
    + [schlafli_label("r", 3, j) for j in IDX]
)

# the automorphism, written as "x_sub^sup" label pairs
_MU_TEXT = """
r_1^1 s_1^1  s_2^2 s_2^1  t_3^3 s_3^1  r_3^2 t_1^1  s_2^1 t_2^1  t_1^3 t_3^1  r_2^3 r_1^1  t_2^3 r_2^1  s_2^3 r_3^1
s_3^3 s_1^2  t_1^1 s_2^2  r_2^2 s_3^2  t_3^2 t_1^2  r_2^1 t_2^2  s_1^3 t_3^2  t_1^2 r_1^2  s_1^2 r_2^2  r_1^2 r_3^2
t_2^2 s_1^3  r_3^3 s_2^3  s_1^1 s_3^3  s_3^2 t_1^3  t_2^1 t_2^3  r_1^3 t_3^3  s_3^1 r_1^3  r_3^1 r_2^3  t_3^1 r_3^3
"""


def mu_map() -> dict:
    words = _MU_TEXT.split()
    return dict(zip(words[0::2], words[1::2]))


@lru_cache(maxsize=None)
def verified_mu() -> tuple:
    """mu as a tuple of vertex ids of the Schlafli graph, after checking every
    one of the 351 vertex pairs keeps its adjacency."""
    g = schlafli()
    m = mu_map()
    if len(m) != 27 or set(m) != set(g.labels) or set(m.values()) != set(g.labels):
        raise PreconditionError("mu is not a permutation of the Schlafli vertices")
    perm = tuple(g.index(m[g.label(v)]) for v in range(27))
    for u, v in combinations(range(27), 2):
        if g.has_edge(u, v) != g.has_edge(perm[u], perm[v]):
            raise PreconditionError(f"mu does not preserve the pair {g.label(u)}, {g.label(v)}")
    return perm


def canonical_rho(g: Graph) -> tuple:
    return tuple(g.index(lab) for lab in CANONICAL_RHO_LABELS)


def Y_set(g: Graph, i: int, j: int) -> frozenset:
    """{t_j^1, t_j^2, t_j^3, r_1^i, r_2^i, r_3^i}"""
    return frozenset([g.index(schlafli_label("t", k, j)) for k in IDX]
                     + [g.index(schlafli_label("r", i, k)) for k in IDX])


def _subset_ids(g: Graph, subset) -> frozenset:
    ids = set()
    for v in subset:
        ids.add(g.index(v) if isinstance(v, str) else int(v))
    for v in ids:
        if not 0 <= v < g.n:
            raise InvalidInput(f"vertex {v} is not a Schlafli vertex")
    return frozenset(ids)


def check_schlafli_subset(subset) -> frozenset:
    """Ids of ``subset`` (labels or ids) after checking it contains the
    canonical rotator, so that T^i and R_i have the required shape."""
    g = schlafli()
    ids = _subset_ids(g, subset)
    missing = [lab for lab in CANONICAL_RHO_LABELS if g.index(lab) not in ids]
    if missing:
        raise PreconditionError(f"subset misses rotator vertices {missing}")
    d = rotator_decompose(g, canonical_rho(g), check_antiprismatic=False)
    for i in IDX:
        if not d.T_parts[i] <= {g.index(schlafli_label("t", i, 1)), g.index(schlafli_label("t", i, 2))}:
            raise PreconditionError(f"T^{i} is not inside {{t_1^{i}, t_2^{i}}}")
        if not d.R_parts[i] <= {g.index(schlafli_label("r", 1, i)), g.index(schlafli_label("r", 2, i))}:
            raise PreconditionError(f"R_{i} is not inside {{r_{i}^1, r_{i}^2}}")
    return ids


def schlafli_collections(subset, which: str) -> BoundedCover:
    """The 18-clique cover S (``"S"``) or M (``"M"``) of the Schlafli graph,
    restricted to the induced subgraph on ``subset``."""
    if which not in ("S", "M"):
        raise InvalidInput(f"unknown collection {which!r}; expected S or M")
    ids = check_schlafli_subset(subset)
    gamma = schlafli()
    h, order = induced_subgraph(gamma, ids)
    pos = {v: k for k, v in enumerate(order)}
    if which == "S":
        d = rotator_decompose(h, tuple(pos[v] for v in canonical_rho(gamma)))
        local = rotator_collections(d, "O")
        ys = [Y_set(gamma, i, j) for i, j in J]
        local += [frozenset(pos[v] for v in y if v in pos) for y in ys]
        return emit(h, local, 18, "S", {"vertices": [h.label(v) for v in range(h.n)]})
    mu = verified_mu()
    inv = {mu[v]: v for v in range(27)}
    d = rotator_decompose(gamma, canonical_rho(gamma), check_antiprismatic=False)
    full = ([X_set(d, i, j) for i, j in J] + [Y_set(gamma, i, j) for i, j in J]
            + [Z_set(d, i, j) for i, j in J])
    pulled = [frozenset(inv[v] for v in c) for c in full]
    local = [frozenset(pos[v] for v in c if v in pos) for c in pulled]
    return emit(h, local, 18, "M", {"vertices": [h.label(v) for v in range(h.n)]})


def random_schlafli_subset(seed: int, keep: Optional[float] = None) -> frozenset:
    """Labels of a random vertex set of the Schlafli graph containing the
    canonical rotator; each other vertex is kept with probability ``keep``."""
    rng = random.Random(seed)
    p = rng.random() if keep is None else keep
    g = schlafli()
    rest = [lab for lab in g.labels if lab not in CANONICAL_RHO_LABELS]
    return frozenset(CANONICAL_RHO_LABELS) | {lab for lab in rest if rng.random() < p}
