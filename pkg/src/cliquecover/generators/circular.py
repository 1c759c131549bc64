"""Circular interval graphs given by points and arcs on the unit circle."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from ..errors import InvalidInput
from ..graph_core import Graph


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(str(x))


def arc_contains(arc: tuple, x: Fraction) -> bool:
    o, c = arc
    if o <= c:
        return o <= x <= c
    return x >= o or x <= c


def arcs_cover_circle(arcs) -> bool:
    """True iff the closed arcs cover the whole circle [0, 1)."""
    if not arcs:
        return False
    cuts = sorted({e for a in arcs for e in a} | {Fraction(0)})
    probes = list(cuts)
    for a, b in zip(cuts, cuts[1:] + [cuts[0] + 1]):
        probes.append(((a + b) / 2) % 1)
    return all(any(arc_contains(a, x) for a in arcs) for x in probes)


@dataclass(frozen=True)
class CircularIntervalRep:
    """Vertices at ``points`` (strictly increasing in [0, 1)); arcs run
    clockwise from ``o`` to ``c``; ``F`` lists fuzzy pairs of vertex ids."""

    points: tuple
    intervals: tuple
    F: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(_frac(p) for p in self.points))
        object.__setattr__(self, "intervals", tuple((_frac(o), _frac(c)) for o, c in self.intervals))
        object.__setattr__(self, "F", tuple(tuple(sorted(p)) for p in self.F))

    @property
    def m(self) -> int:
        return len(self.points)

    def members(self, i: int) -> frozenset:
        return frozenset(v for v, x in enumerate(self.points) if arc_contains(self.intervals[i], x))

    def validate(self) -> None:
        pts = self.points
        if any(not (0 <= x < 1) for x in pts):
            raise InvalidInput("points must lie in [0, 1)", "(points)")
        if any(a >= b for a, b in zip(pts, pts[1:])):
            raise InvalidInput("points must be strictly increasing", "(points)")
        ends = []
        for o, c in self.intervals:
            if not (0 <= o < 1 and 0 <= c < 1) or o == c:
                raise InvalidInput(f"arc [{o}, {c}] is not a proper arc of the circle", "(arcs)")
            ends += [o, c]
        if len(set(ends)) != len(ends):
            raise InvalidInput("two intervals share an endpoint", "(endpoints)")
        for r in (1, 2, 3):
            for sub in combinations(self.intervals, r):
                if arcs_cover_circle(sub):
                    raise InvalidInput("three intervals have union the whole circle", "(long)")
        seen = set()
        for u, v in self.F:
            if u == v or not (0 <= u < self.m and 0 <= v < self.m):
                raise InvalidInput(f"bad fuzzy pair ({u}, {v})", "(F)")
            if u in seen or v in seen:
                raise InvalidInput(f"vertex of pair ({u}, {v}) is in two pairs", "(F)")
            seen.update((u, v))
            if self.carrier((u, v)) is None:
                raise InvalidInput(f"pair ({u}, {v}) is not the two endpoints of one interval", "(F)")
            both = [i for i in range(len(self.intervals)) if {u, v} <= self.members(i)]
            if len(both) != 1:
                raise InvalidInput(f"pair ({u}, {v}) lies in more than one interval", "(F)")

    def carrier(self, pair: tuple):
        """Index of the interval whose endpoints are exactly the two points of ``pair``."""
        u, v = pair
        want = {self.points[u], self.points[v]}
        for i, (o, c) in enumerate(self.intervals):
            if {o, c} == want:
                return i
        return None

    def mirrored(self) -> "CircularIntervalRep":
        """Reflect the circle: x -> -x.  Vertex ids are renumbered so points stay increasing."""
        m = self.m
        refl = [(-x) % 1 for x in self.points]
        order = sorted(range(m), key=lambda v: refl[v])
        new_id = {old: new for new, old in enumerate(order)}
        pts = [refl[v] for v in order]
        arcs = [((-c) % 1, (-o) % 1) for o, c in self.intervals]
        F = [(new_id[u], new_id[v]) for u, v in self.F]
        return CircularIntervalRep(tuple(pts), tuple(arcs), tuple(F)), new_id

    def to_json(self) -> dict:
        return {
            "points": [str(x) for x in self.points],
            "intervals": [[str(o), str(c)] for o, c in self.intervals],
            "F": [list(p) for p in self.F],
        }

    @classmethod
    def from_json(cls, data: dict) -> "CircularIntervalRep":
        return cls(tuple(data["points"]), tuple(tuple(a) for a in data["intervals"]),
                   tuple(tuple(p) for p in data.get("F", ())))


def circular_interval_graph(rep: CircularIntervalRep) -> Graph:
    rep.validate()
    edges = set()
    for i in range(len(rep.intervals)):
        for u, v in combinations(sorted(rep.members(i)), 2):
            edges.add((u, v))
    return Graph.from_edges(rep.m, sorted(edges), [f"v{i}" for i in range(rep.m)])


def power_of_cycle_rep(n: int, p: int, fuzzy=()) -> CircularIntervalRep:
    """Points i/n and, for each i, an arc from just before v_i to just after v_{i+p}.

    Arcs whose start is listed in ``fuzzy`` instead end exactly on v_i and
    v_{i+p}, and that pair goes into F.
    """
    eps = Fraction(1, 4 * n)
    pts = tuple(Fraction(i, n) for i in range(n))
    arcs, F = [], []
    for i in range(n):
        if i in fuzzy:
            arcs.append((pts[i], pts[(i + p) % n]))
            F.append((i, (i + p) % n))
            continue
        o = (Fraction(i, n) - eps) % 1
        c = (Fraction(i + p, n) + eps / 2) % 1
        arcs.append((o, c))
    return CircularIntervalRep(pts, tuple(arcs), tuple(F))
