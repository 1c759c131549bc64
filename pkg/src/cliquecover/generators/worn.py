"""Worn hex-chains of three-cliqued terms."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import InvalidInput
from ..graph_core import Graph
from ..recognizers import core_vertices


@dataclass(frozen=True)
class ChainTerm:
    graph: Graph
    A: frozenset
    B: frozenset
    C: frozenset

    def __post_init__(self):
        for name in "ABC":
            object.__setattr__(self, name, frozenset(getattr(self, name)))

    def validate(self, idx: int) -> None:
        g = self.graph
        if g.n == 0:
            raise InvalidInput(f"term {idx} is empty", "(W1)")
        parts = (self.A, self.B, self.C)
        if set().union(*parts) != set(range(g.n)) or sum(map(len, parts)) != g.n:
            raise InvalidInput(f"A, B, C do not partition term {idx}", "(W1)")
        for name, p in zip("ABC", parts):
            if not g.is_clique(p):
                raise InvalidInput(f"part {name} of term {idx} is not a clique", "(W1)")


@dataclass(frozen=True)
class WornHexChain:
    """Terms in order; ``w3_edges`` are extra cross edges ((i, u), (j, v)) with
    i < j between a free pair A_i-B_j, B_i-C_j or C_i-A_j (local ids)."""

    terms: tuple
    w3_edges: tuple = field(default=())

    def offsets(self) -> list:
        out, acc = [], 0
        for t in self.terms:
            out.append(acc)
            acc += t.graph.n
        return out

    def to_json(self) -> dict:
        return {
            "terms": [{"n": t.graph.n, "edges": [list(e) for e in t.graph.edges()],
                       "A": sorted(t.A), "B": sorted(t.B), "C": sorted(t.C)} for t in self.terms],
            "w3_edges": [[list(a), list(b)] for a, b in self.w3_edges],
        }

    @classmethod
    def from_json(cls, data: dict) -> "WornHexChain":
        terms = []
        for t in data["terms"]:
            g = Graph.from_edges(t["n"], [tuple(e) for e in t["edges"]])
            terms.append(ChainTerm(g, frozenset(t["A"]), frozenset(t["B"]), frozenset(t["C"])))
        w3 = tuple((tuple(a), tuple(b)) for a, b in data.get("w3_edges", []))
        return cls(tuple(terms), w3)


def _free_pair(ti: ChainTerm, u: int, tj: ChainTerm, v: int) -> bool:
    return ((u in ti.A and v in tj.B) or (u in ti.B and v in tj.C) or (u in ti.C and v in tj.A))


def worn_hex_chain(chain: WornHexChain) -> tuple:
    """Compose the chain.  Returns (G, (A, B, C)) in global ids."""
    if not chain.terms:
        raise InvalidInput("a worn hex-chain needs at least one term", "(W1)")
    for i, t in enumerate(chain.terms):
        t.validate(i)
    off = chain.offsets()
    n = off[-1] + chain.terms[-1].graph.n
    edges = []
    labels = []
    for i, t in enumerate(chain.terms):
        for v in range(t.graph.n):
            part = "A" if v in t.A else "B" if v in t.B else "C"
            labels.append(f"{part}{i + 1}.{v}")
        edges += [(off[i] + u, off[i] + v) for u, v in t.graph.edges()]
    k = len(chain.terms)
    for i in range(k):
        ti = chain.terms[i]
        for j in range(i + 1, k):
            tj = chain.terms[j]
            for u in range(ti.graph.n):
                for v in range(tj.graph.n):
                    if not _free_pair(ti, u, tj, v):
                        edges.append((off[i] + u, off[j] + v))
    extra = []
    for (i, u), (j, v) in chain.w3_edges:
        if not (0 <= i < j < k):
            raise InvalidInput(f"W3 edge between terms {i} and {j} must have i < j", "(W3)")
        ti, tj = chain.terms[i], chain.terms[j]
        if not (0 <= u < ti.graph.n and 0 <= v < tj.graph.n) or not _free_pair(ti, u, tj, v):
            raise InvalidInput(f"({i},{u})-({j},{v}) is not an A-B, B-C or C-A free pair", "(W3)")
        extra.append((off[i] + u, off[j] + v))
    g = Graph.from_edges(n, edges + extra, labels)
    core = core_vertices(g)
    for x, y in extra:
        if x in core or y in core:
            raise InvalidInput(f"edge {g.label(x)}-{g.label(y)} has an endpoint in a triad", "(W3)")
    A = frozenset(off[i] + v for i, t in enumerate(chain.terms) for v in t.A)
    B = frozenset(off[i] + v for i, t in enumerate(chain.terms) for v in t.B)
    C = frozenset(off[i] + v for i, t in enumerate(chain.terms) for v in t.C)
    return g, (A, B, C)


def triad_term() -> ChainTerm:
    """A single triad with one vertex in each part."""
    return ChainTerm(Graph.from_edges(3, []), frozenset({0}), frozenset({1}), frozenset({2}))
