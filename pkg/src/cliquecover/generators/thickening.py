"""Thickenings: blow each vertex up to a clique, fuzzy on the pairs of F."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import InvalidInput
from ..graph_core import Graph


@dataclass(frozen=True)
class ThickeningSpec:
    """Base graph H, valid pair set F, clique sizes |X_v| and, for each pair
    {u, v} in F (stored with u < v), a |X_u| x |X_v| 0/1 matrix."""

    base: Graph
    F: tuple = ()
    sizes: tuple = ()
    cross: dict = field(default_factory=dict)

    def __post_init__(self):
        F = tuple(tuple(sorted(p)) for p in self.F)
        object.__setattr__(self, "F", F)
        sizes = tuple(self.sizes) if self.sizes else (1,) * self.base.n
        object.__setattr__(self, "sizes", sizes)
        # a matrix given for (v, u) with v > u is transposed into (u, v) order
        fixed = {}
        for (u, v), mat in self.cross.items():
            if u > v:
                mat = tuple(zip(*mat))
            fixed[(min(u, v), max(u, v))] = tuple(tuple(int(b) for b in row) for row in mat)
        object.__setattr__(self, "cross", fixed)

    def validate(self) -> None:
        h = self.base
        if len(self.sizes) != h.n or any(s < 1 for s in self.sizes):
            raise InvalidInput("every vertex needs a positive clique size", "(T1)")
        seen = set()
        for u, v in self.F:
            if u == v or not (0 <= u < h.n and 0 <= v < h.n):
                raise InvalidInput(f"bad pair ({u}, {v}) in F", "(F)")
            if u in seen or v in seen:
                raise InvalidInput(f"F is not valid: a vertex of ({u}, {v}) is in two pairs", "(F)")
            seen.update((u, v))
            mat = self.cross.get((u, v))
            if mat is None:
                raise InvalidInput(f"no cross matrix for pair ({u}, {v})", "(T4)")
            if len(mat) != self.sizes[u] or any(len(r) != self.sizes[v] for r in mat):
                raise InvalidInput(f"cross matrix for ({u}, {v}) has the wrong shape", "(T4)")
            bits = [b for r in mat for b in r]
            if all(bits) or not any(bits):
                raise InvalidInput(f"X_{u} is complete or anticomplete to X_{v}", "(T4)")
        for k in self.cross:
            if k not in self.F:
                raise InvalidInput(f"cross matrix given for pair {k} outside F", "(F)")

    def blocks(self) -> list:
        """X_v as lists of thickened vertex ids, consecutive per base vertex."""
        out, nxt = [], 0
        for s in self.sizes:
            out.append(list(range(nxt, nxt + s)))
            nxt += s
        return out

    def to_json(self) -> dict:
        return {
            "base": {"n": self.base.n, "edges": [list(e) for e in self.base.edges()],
                     "labels": list(self.base.labels) if self.base.labels else None},
            "F": [list(p) for p in self.F],
            "sizes": list(self.sizes),
            "cross": [{"pair": list(k), "matrix": [list(r) for r in m]} for k, m in self.cross.items()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "ThickeningSpec":
        b = data["base"]
        base = Graph.from_edges(b["n"], [tuple(e) for e in b["edges"]], b.get("labels"))
        cross = {tuple(c["pair"]): c["matrix"] for c in data.get("cross", [])}
        return cls(base, tuple(tuple(p) for p in data.get("F", [])), tuple(data.get("sizes", [])), cross)


def thicken(spec: ThickeningSpec) -> tuple:
    """Return (G, blocks) with blocks[v] the ids of X_v in G."""
    spec.validate()
    h = spec.base
    blocks = spec.blocks()
    n = sum(spec.sizes)
    fset = set(spec.F)
    edges = []
    labels = []
    for v in range(h.n):
        for k, x in enumerate(blocks[v]):
            labels.append(h.label(v) if spec.sizes[v] == 1 else f"{h.label(v)}#{k}")
        for a in range(len(blocks[v])):
            for b in range(a + 1, len(blocks[v])):
                edges.append((blocks[v][a], blocks[v][b]))
    for u in range(h.n):
        for v in range(u + 1, h.n):
            if (u, v) in fset:
                mat = spec.cross[(u, v)]
                for a, x in enumerate(blocks[u]):
                    for b, y in enumerate(blocks[v]):
                        if mat[a][b]:
                            edges.append((x, y))
            elif h.has_edge(u, v):
                edges += [(x, y) for x in blocks[u] for y in blocks[v]]
    return Graph.from_edges(n, edges, labels), blocks
