"""Result types shared by every covering construction."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from ..errors import BoundViolation, CoverFailure, PreconditionError
from ..graph_core import CliqueCover, Graph, verify_cover


@dataclass(frozen=True)
class BoundedCover:
    """A verified cover with the size bound it was built to meet."""

    cover: CliqueCover
    bound: int
    provenance: str
    notes: dict = field(default_factory=dict, compare=False)

    def __len__(self) -> int:
        return len(self.cover)

    @property
    def graph(self) -> Graph:
        return self.cover.host

    def to_json(self) -> dict:
        out = self.cover.to_json()
        out.update({"size": len(self.cover), "bound": self.bound, "provenance": self.provenance})
        return out


@dataclass(frozen=True)
class SplittingCover:
    """A bounded cover of a three-cliqued graph (G, A, B, C) with A, B, C among
    its members and, for each non-core vertex u, the index of a clique whose
    intersection with u's own part is exactly {u}."""

    bounded: BoundedCover
    parts: tuple
    witnesses: dict

    @property
    def cover(self) -> CliqueCover:
        return self.bounded.cover

    def __len__(self) -> int:
        return len(self.bounded)

    def check(self) -> None:
        cl = self.cover.cliques
        for name, part in zip("ABC", self.parts):
            if part and part not in cl:
                raise PreconditionError(f"part {name} is not a member of the cover (SP1)")
        for u, idx in self.witnesses.items():
            own = next(p for p in self.parts if u in p)
            if not (0 <= idx < len(cl)) or cl[idx] & own != {u} or cl[idx] == own:
                raise PreconditionError(f"witness clique for vertex {u} meets its part elsewhere (SP2)")


def normalize(cliques: Iterable[Iterable[int]]) -> list:
    """Drop empty sets and repeated sets, keeping first occurrences in order."""
    seen, out = set(), []
    for c in cliques:
        s = frozenset(c)
        if s and s not in seen:
            seen.add(s)
            out.append(s)
    return out


def emit(g: Graph, cliques: Iterable[Iterable[int]], bound: int, provenance: str,
         notes: Optional[dict] = None) -> BoundedCover:
    """Normalize, verify and bound-check a construction's output."""
    cover = CliqueCover(tuple(normalize(cliques)), g)
    verdict = verify_cover(g, cover)
    if not verdict.ok:
        raise CoverFailure(f"{provenance} cover does not verify: {verdict}", verdict)
    if len(cover) > bound:
        raise BoundViolation(f"{provenance} cover has {len(cover)} cliques, above the bound {bound}")
    return BoundedCover(cover, bound, provenance, dict(notes or {}))


def splitting_witnesses(g: Graph, cover: CliqueCover, parts: tuple, core: frozenset) -> dict:
    """For each non-core vertex, the first clique other than its own part that
    meets that part only in the vertex."""
    out = {}
    for u in range(g.n):
        if u in core:
            continue
        own = next((p for p in parts if u in p), None)
        if own is None:
            raise PreconditionError(f"vertex {u} is in none of the three parts")
        idx = next((i for i, c in enumerate(cover.cliques) if u in c and c & own == {u} and c != own), None)
        if idx is None:
            raise PreconditionError(f"no clique splits vertex {g.label(u)} from its part (SP2)")
        out[u] = idx
    return out


def make_splitting(bc: BoundedCover, parts: tuple, core: frozenset) -> SplittingCover:
    parts = tuple(frozenset(p) for p in parts)
    sc = SplittingCover(bc, parts, splitting_witnesses(bc.graph, bc.cover, parts, core))
    sc.check()
    return sc
