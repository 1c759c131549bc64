"""Graph representation, set helpers and the clique cover verifier.

Vertices are dense ids ``0..n-1``.  Adjacency is stored as one Python int
per vertex used as a bitset, which keeps neighbourhood intersections cheap.
Vertex sets handed across the public API are ``frozenset``s of ids.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence

from .errors import HostMismatch, InvalidInput, NotACliqueError

VertexSet = frozenset


def to_mask(vs: Iterable[int]) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def from_mask(mask: int) -> frozenset:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return frozenset(out)


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with bitset adjacency and optional labels."""

    n: int
    adj: tuple
    labels: Optional[tuple] = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise InvalidInput("adjacency length differs from n")
        full = (1 << self.n) - 1
        for v, a in enumerate(self.adj):
            if a & ~full:
                raise InvalidInput(f"vertex {v} has a neighbour out of range")
            if a >> v & 1:
                raise InvalidInput(f"loop at vertex {v}")
            for u in iter_bits(a):
                if not self.adj[u] >> v & 1:
                    raise InvalidInput(f"asymmetric adjacency between {v} and {u}")
        if self.labels is not None:
            if len(self.labels) != self.n or len(set(self.labels)) != self.n:
                raise InvalidInput("labels must be total and pairwise distinct")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple], labels: Optional[Sequence[str]] = None) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidInput(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InvalidInput(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), tuple(labels) if labels is not None else None)

    @classmethod
    def from_labeled_edges(cls, labels: Sequence[str], edges: Iterable[tuple]) -> "Graph":
        idx = {lab: i for i, lab in enumerate(labels)}
        return cls.from_edges(len(labels), ((idx[a], idx[b]) for a, b in edges), labels)

    # basic queries

    @property
    def m(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    @property
    def vertices(self) -> frozenset:
        return frozenset(range(self.n))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> frozenset:
        return from_mask(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list:
        """All edges as (u, v) with u < v, in lexicographic order."""
        out = []
        for u in range(self.n):
            for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1)):
                out.append((u, v))
        return out

    def is_clique(self, vs: Iterable[int]) -> bool:
        mask = to_mask(vs)
        for v in iter_bits(mask):
            if (mask & ~self.adj[v]) != 1 << v:
                return False
        return True

    def is_clique_mask(self, mask: int) -> bool:
        for v in iter_bits(mask):
            if (mask & ~self.adj[v]) != 1 << v:
                return False
        return True

    def is_stable(self, vs: Iterable[int]) -> bool:
        mask = to_mask(vs)
        return all(not (self.adj[v] & mask) for v in iter_bits(mask))

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def index(self, label: str) -> int:
        if self.labels is None:
            return int(label)
        try:
            return self.labels.index(label)
        except ValueError:
            raise InvalidInput(f"unknown vertex label {label!r}") from None

    def add_edge(self, u: int, v: int) -> "Graph":
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, tuple(adj), self.labels)

    def remove_edges(self, pairs: Iterable[tuple]) -> "Graph":
        adj = list(self.adj)
        for u, v in pairs:
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
        return Graph(self.n, tuple(adj), self.labels)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= nxt
        return seen == self.full_mask


def complement(g: Graph) -> Graph:
    full = g.full_mask
    adj = tuple(full & ~a & ~(1 << v) for v, a in enumerate(g.adj))
    return Graph(g.n, adj, g.labels)


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple:
    """Return ``(g[s], ids)`` where ``ids[i]`` is the host id of new vertex i."""
    ids = sorted(set(s))
    for v in ids:
        if not 0 <= v < g.n:
            raise InvalidInput(f"vertex {v} out of range for n={g.n}")
    pos = {v: i for i, v in enumerate(ids)}
    adj = []
    for v in ids:
        adj.append(to_mask(pos[u] for u in iter_bits(g.adj[v]) if u in pos))
    labels = tuple(g.labels[v] for v in ids) if g.labels is not None else None
    return Graph(len(ids), tuple(adj), labels), ids


def closed_neighborhood_family(g: Graph, x: Iterable[int], y: Iterable[int]) -> list:
    """The family N[v, Y] = (N(v) & Y) | {v} for v in X, ascending in v."""
    ym = to_mask(y)
    return [from_mask((g.adj[v] & ym) | 1 << v) for v in sorted(set(x))]


def closed_nbhd(g: Graph, v: int, y: Iterable[int]) -> frozenset:
    return from_mask((g.adj[v] & to_mask(y)) | 1 << v)


# covers


@dataclass(frozen=True)
class CliqueCover:
    cliques: tuple
    host: Graph

    def __post_init__(self):
        object.__setattr__(self, "cliques", tuple(frozenset(c) for c in self.cliques))

    def __len__(self) -> int:
        return len(self.cliques)

    def __iter__(self):
        return iter(self.cliques)

    def __getitem__(self, i):
        return self.cliques[i]

    def to_json(self) -> dict:
        return {"n": self.host.n, "cliques": [sorted(c) for c in self.cliques]}


@dataclass(frozen=True)
class Verdict:
    """Outcome of :func:`verify_cover`.

    ``kind`` is ``"OK"``, ``"NotAClique"`` or ``"Uncovered"``.  For
    ``NotAClique`` the offending clique index and a non-adjacent pair inside
    it are given; for ``Uncovered`` the first uncovered edge.  ``degenerate``
    lists indices of cliques of size at most one (legal, informational).
    """

    kind: str
    index: Optional[int] = None
    pair: Optional[tuple] = None
    degenerate: tuple = ()

    @property
    def ok(self) -> bool:
        return self.kind == "OK"

    def __str__(self) -> str:
        if self.kind == "OK":
            return "OK"
        if self.kind == "NotAClique":
            return f"NotAClique(index={self.index}, non-edge={self.pair})"
        return f"Uncovered(edge={self.pair})"


def verify_cover(g: Graph, c: CliqueCover) -> Verdict:
    if c.host != g:
        raise HostMismatch("cover was built for a different graph")
    degenerate = tuple(i for i, s in enumerate(c.cliques) if len(s) <= 1)
    covered = [0] * g.n
    for i, s in enumerate(c.cliques):
        for v in s:
            if not 0 <= v < g.n:
                raise InvalidInput(f"clique {i} contains out-of-range vertex {v}")
        mask = to_mask(s)
        for u in sorted(s):
            miss = mask & ~g.adj[u] & ~(1 << u)
            if miss:
                w = min(x for x in iter_bits(miss))
                return Verdict("NotAClique", i, (min(u, w), max(u, w)), degenerate)
            covered[u] |= mask
    for u in range(g.n):
        left = g.adj[u] & ~covered[u]
        left >>= u + 1
        if left:
            w = (left & -left).bit_length() - 1 + u + 1
            return Verdict("Uncovered", None, (u, w), degenerate)
    return Verdict("OK", None, None, degenerate)


def merge_cliques(c: CliqueCover, idxs: Sequence[int]) -> CliqueCover:
    """Replace the cliques at ``idxs`` by their union, placed at the first index."""
    idxs = sorted(set(idxs))
    if not idxs:
        return c
    union = frozenset().union(*(c.cliques[i] for i in idxs))
    if not c.host.is_clique(union):
        raise NotACliqueError(f"union of cliques {idxs} is not a clique")
    out = []
    for i, s in enumerate(c.cliques):
        if i == idxs[0]:
            out.append(union)
        elif i not in idxs:
            out.append(s)
    return CliqueCover(tuple(out), c.host)


def cover_from_lists(g: Graph, cliques: Iterable[Iterable[int]]) -> CliqueCover:
    return CliqueCover(tuple(frozenset(s) for s in cliques), g)


def all_pairs(vs: Iterable[int]) -> Iterator[tuple]:
    return combinations(sorted(vs), 2)


# file formats


def write_edge_list(g: Graph, path: str) -> None:
    edges = g.edges()
    with open(path, "w") as fh:
        fh.write(f"{g.n} {len(edges)}\n")
        for u, v in edges:
            fh.write(f"{u} {v}\n")
    if g.labels is not None:
        with open(path + ".labels", "w") as fh:
            for lab in g.labels:
                fh.write(f"{lab}\n")


def parse_edge_list(text: str, labels: Optional[Sequence[str]] = None) -> Graph:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise InvalidInput("empty edge list")
    head = lines[0].split()
    if len(head) != 2:
        raise InvalidInput("header must be 'n m'")
    n, m = int(head[0]), int(head[1])
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise InvalidInput(f"bad edge line {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    if len(edges) != m:
        raise InvalidInput(f"header promises {m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges, labels)


def read_edge_list(path: str) -> Graph:
    with open(path) as fh:
        text = fh.read()
    labels = None
    try:
        with open(path + ".labels") as fh:
            labels = [ln.rstrip("\n") for ln in fh if ln.strip()]
    except FileNotFoundError:
        pass
    return parse_edge_list(text, labels)


def cover_to_json(c: CliqueCover) -> str:
    return json.dumps(c.to_json())


def cover_from_json(g: Graph, text: str) -> CliqueCover:
    data = json.loads(text)
    if data.get("n") != g.n:
        raise HostMismatch(f"cover is for n={data.get('n')}, graph has n={g.n}")
    return cover_from_lists(g, data["cliques"])
