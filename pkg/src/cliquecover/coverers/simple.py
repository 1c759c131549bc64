"""Covers of powers of cycles and of the small named graphs."""

from __future__ import annotations

from ..errors import InvalidInput
from ..generators.basic import TWISTER_CLIQUES, named_graph, power_of_cycle
from .base import BoundedCover, emit


def power_of_cycle_cliques(n: int, p: int) -> list:
    """The clique list for C_n^p on vertices 0..n-1 (before normalization)."""
    if p < 1 or n < 2 * p + 1:
        raise InvalidInput(f"need p >= 1 and n >= 2p+1 (got n={n}, p={p})")
    if n == 2 * p + 1:
        return [range(n)]
    if n >= 3 * p + 1:
        return [[(i + d) % n for d in range(p + 1)] for i in range(n)]
    # 2p+2 <= n <= 3p: even-start runs, the four-vertex clique K and the leftover S' pairs
    runs = [[(2 * i + d) % n for d in range(p + 1)] for i in range(-(-n // 2))]
    s_prime = [((2 * j + 1) % n, (2 * j + 1 + p) % n) for j in range(n // 2)]
    K = {1 % n, (p + 1) % n, (2 * p + 1) % n, (3 * p + 1) % n}
    used = {frozenset((1 % n, (p + 1) % n)), frozenset(((2 * p + 1) % n, (3 * p + 1) % n))}
    rest = [e for e in s_prime if frozenset(e) not in used]
    return runs + [K] + rest


def cover_power_of_cycle(n: int, p: int) -> BoundedCover:
    g = power_of_cycle(n, p)
    bound = 1 if n == 2 * p + 1 else n if n >= 3 * p + 1 else n - 1
    return emit(g, power_of_cycle_cliques(n, p), bound, "lemcirc")


def _labelled(g, groups) -> list:
    return [[g.index(x) for x in c] for c in groups]


ICOSA_C0 = [
    ("v0", "v1", "v9"), ("v0", "v1", "v3"), ("v2", "v3", "v4"), ("v3", "v4", "v5"), ("v0", "v5", "v7"),
    ("v1", "v2", "v10"), ("v8", "v9", "v10"), ("v7", "v8", "v9"), ("v4", "v6", "v11"),
    ("v2", "v10", "v11"), ("v6", "v8", "v11"), ("v5", "v6", "v7"),
]


def icosa_cliques(which: int) -> list:
    """C_0 for G_0; for G_1 the four cliques through v11 (and v5v6v7) make way
    for two triangles; for G_2 the two cliques through v10 become v1v2."""
    c = list(ICOSA_C0)
    if which >= 1:
        drop = {("v4", "v6", "v11"), ("v2", "v10", "v11"), ("v6", "v8", "v11"), ("v5", "v6", "v7")}
        c = [x for x in c if x not in drop] + [("v4", "v5", "v6"), ("v6", "v7", "v8")]
    if which >= 2:
        drop = {("v1", "v2", "v10"), ("v8", "v9", "v10")}
        c = [x for x in c if x not in drop] + [("v1", "v2")]
    return c


NAMED_BOUNDS = {"icosag0": 12, "icosag1": 10, "icosag2": 9, "twistercomplement": 10}


def cover_named(name: str) -> BoundedCover:
    key = name.replace("-", "").replace("_", "").lower()
    if key == "twister":
        key = "twistercomplement"
    if key not in NAMED_BOUNDS:
        raise InvalidInput(f"no named cover for {name!r}; expected IcosaG0, IcosaG1, IcosaG2 or TwisterComplement")
    g = named_graph(key)
    if key.startswith("icosa"):
        cliques = _labelled(g, icosa_cliques(int(key[-1])))
        tag = "icosa"
    else:
        cliques = _labelled(g, TWISTER_CLIQUES)
        tag = "twister"
    return emit(g, cliques, NAMED_BOUNDS[key], tag)
