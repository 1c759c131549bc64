"""Covers of the four structured antiprismatic families.

Ring of five and mantled L(K_3,3) get at most n - 2 and n - 1 cliques; the
cycle of triangles gets at most n - 1; the path of triangles (when it is not
a tripod) gets a splitting cover of at most n - 1 cliques.
"""

from __future__ import annotations

from ..errors import InvalidInput, PreconditionError, TripodInput
from ..generators.structured import mantled, ring_of_five
from ..generators.triangles import ChainStructure, build_triangle_chain, is_tripod
from ..graph_core import CliqueCover, Graph, closed_nbhd, verify_cover
from ..recognizers import core_vertices
from .base import BoundedCover, SplittingCover, emit, make_splitting, normalize


def _fam(g: Graph, xs, ys) -> list:
    return [closed_nbhd(g, x, ys) for x in sorted(xs)]


def _u(*sets) -> frozenset:
    return frozenset().union(*(frozenset(s) for s in sets))


# ring of five


def cover_ring(g: Graph, parts: dict) -> BoundedCover:
    a = lambda i: parts["a"][(i - 1) % 5]
    b = lambda i: parts["b"][(i - 1) % 5]
    V = parts["V"]
    Vi = lambda i: V[(i - 1) % 5 + 1]
    out = [frozenset(parts["b"])]
    out += [_u(Vi(i), Vi(i + 2), {a(i), b(i + 1), a(i + 2)}) for i in range(1, 6)]
    if V[0]:
        out += [_u(V[0], Vi(i), Vi(i + 2), {a(i), a(i + 2)}) for i in range(1, 4)]
    for i in range(1, 6):
        out += [closed_nbhd(g, x, Vi(i + 1)) | {b(i + 2), b(i + 3)} for x in Vi(i)]
    bound = g.n - 2 if V[0] else g.n - 4
    return emit(g, out, bound, "ring", {"V0_empty": not V[0]})


# mantled L(K_3,3)


class _Mantle:
    """Index view of a mantled graph under row/column relabelling and transposition."""

    def __init__(self, parts: dict, rows=(0, 1, 2), cols=(0, 1, 2), transpose=False):
        self.p, self.rows, self.cols, self.t = parts, rows, cols, transpose

    def a(self, i, j) -> int:  # a^i_j, indices mod 3 (1-based)
        i, j = (i - 1) % 3, (j - 1) % 3
        if self.t:
            i, j = j, i
        return self.p["a"][self.rows[i]][self.cols[j]]

    def up(self, i) -> list:  # V^i
        i = (i - 1) % 3
        return self.p["lower"][self.cols[i]] if self.t else self.p["upper"][self.rows[i]]

    def lo(self, i) -> list:  # V_i
        i = (i - 1) % 3
        return self.p["upper"][self.rows[i]] if self.t else self.p["lower"][self.cols[i]]

    def row(self, j) -> set:
        return {self.a(j, c) for c in (1, 2, 3)}

    def col(self, j) -> set:
        return {self.a(r, j) for r in (1, 2, 3)}


def _to_third(k: int) -> tuple:
    """A permutation of (0, 1, 2) sending position 2 to k (a transposition or identity)."""
    perm = [0, 1, 2]
    perm[2], perm[k] = perm[k], perm[2]
    return tuple(perm)


def cover_mantled(g: Graph, parts: dict) -> BoundedCover:
    up, lo = parts["upper"], parts["lower"]
    n = g.n
    p = next((i for i in range(3) if not up[i]), None)
    q = next((i for i in range(3) if not lo[i]), None)
    if p is not None and q is not None:
        v = _Mantle(parts, _to_third(p), _to_third(q))
        A = lambda i, j: _u(v.up(i), v.row(j))
        B = lambda i, j: _u(v.lo(i), v.col(j))
        out = (_fam(g, v.up(1), _u(v.up(2), v.lo(1))) + _fam(g, v.lo(1), _u(v.lo(2), v.up(2)))
               + _fam(g, v.up(2), v.lo(2)) + _fam(g, v.lo(2), v.up(1)))
        out += [X(i, j) for i in (1, 2) for j in (1, 2, 3) if j != i for X in (A, B)]
        return emit(g, out, n - 1, "mantled", {"case": "empty-pair", "rows": p, "cols": q})

    v = _Mantle(parts, transpose=p is not None)
    i0 = next((i for i in (1, 2, 3)
               if all(g.adj[x] & sum(1 << y for y in v.up(i)) for x in v.up(i + 1))), None)
    if i0 is None:
        raise PreconditionError("no index i0 with V^{i0+1} dominated by V^{i0}; V^1 u V^2 u V^3 has a triad")
    out = []
    for i in (1, 2, 3):
        if v.lo(i + 1):
            U = _u(v.up(i + 1), v.lo(i + 1), {v.a(i + 2, i), v.a(i + 2, i + 2)})
        else:
            U = _u(v.up(i + 1), {v.a(i + 2, i), v.a(i + 2, i + 1), v.a(i + 2, i + 2)})
        Ul = _u(v.lo(i + 1), v.up(i + 1), {v.a(i, i + 2), v.a(i + 2, i + 2)})
        out += [_u(v.up(i), v.row(i + 1)), _u(v.lo(i), v.col(i + 1))]
        out += _fam(g, v.up(i), U) + _fam(g, v.lo(i), Ul)
    patch = []
    for i in (1, 2, 3):
        need = (i in (i0, (i0 + 1) % 3 + 1) and v.lo(i)) or (not v.lo(i - 1) and v.lo(i + 1))
        if need:
            patch.append(_u(v.up(i), v.lo(i), {v.a(i + 2, i + 1)}))
    out += patch
    return emit(g, out, n - 1, "mantled",
                {"case": "all-nonempty", "transposed": v.t, "i0": i0, "patches": len(normalize(patch))})


# triangle chains


def _pick(st: ChainStructure):
    X = lambda i: st.get(st.X, i)
    L = lambda i: st.get(st.L, i)
    M = lambda i: st.get(st.M, i)
    R = lambda i: st.get(st.R, i)
    hat = lambda i: st.get(st.hat, i)
    til = lambda i: st.get(st.tilde, i)
    return X, L, M, R, hat, til


def _middle_clique(g, st, i, x) -> frozenset:
    """The clique through x in M_{2i+1} bridging X_{2i-1} and X_{2i+3}."""
    X, L, M, R, hat, _ = _pick(st)
    if len(hat(2 * i)) == 1:
        return _u(M(2 * i - 1), R(2 * i - 1), closed_nbhd(g, x, M(2 * i + 3)), L(2 * i + 3))
    return _u(closed_nbhd(g, x, _u(M(2 * i - 1), X(2 * i))), M(2 * i + 3), L(2 * i + 3))


def _tilde_clique(g, st, i, x, Y) -> frozenset:
    X, L, M, R, hat, _ = _pick(st)
    if len(hat(2 * i)) == 1:
        return closed_nbhd(g, x, _u(Y, M(2 * i - 1), R(2 * i - 1), M(2 * i + 1), L(2 * i + 1)))
    return closed_nbhd(g, x, Y)


def _cross_patch(g, xs, ys) -> list:
    """R u L cliques the proofs add for big hats, kept only when the two sets share edges."""
    if any(g.has_edge(x, y) for x in xs for y in ys):
        return [_u(xs, ys)]
    return []


def cover_cycle_of_triangles(g: Graph, st: ChainStructure) -> BoundedCover:
    if st.kind != "cycle":
        raise InvalidInput("expected a cycle of triangles structure")
    m = st.m
    k = (m - 2) // 3
    X, L, M, R, hat, til = _pick(st)
    C = {i: _u(L(2 * i - 1), *(X(2 * i + 3 * j) for j in range(2 * k + 1))) for i in range(1, m + 1)}
    out = list(C.values())
    for i in range(1, m + 1):
        out += [closed_nbhd(g, x, C[i]) for x in sorted(R(2 * i - 3))]
    plain = all(not L(2 * i - 1) and not R(2 * i - 1) and len(hat(2 * i)) == 1 for i in range(1, m + 1))
    if plain:
        out += [_u(M(4 * i - 3), M(4 * i - 1), M(4 * i + 1), M(4 * i + 3)) for i in range(1, (m + 1) // 2 + 1)]
    else:
        for i in range(1, m + 1):
            out += [_middle_clique(g, st, i, x) for x in sorted(M(2 * i + 1))]
    for i in range(1, m + 1):
        Y = _u(*(til(2 * i + 2 + 6 * j) for j in range(k + 1)))
        out += [_tilde_clique(g, st, i, x, Y) for x in sorted(til(2 * i))]
    for i in range(1, m + 1):
        if len(hat(2 * i)) > 1 and L(2 * i - 1):
            out += _cross_patch(g, L(2 * i - 1), R(2 * i + 1))
    return emit(g, out, g.n - 1, "cycle", {"special": plain})


def cover_path_of_triangles(g: Graph, st: ChainStructure) -> SplittingCover:
    if st.kind != "path":
        raise InvalidInput("expected a path of triangles structure")
    if is_tripod(g, st):
        raise TripodInput("the path of triangles graph is a tripod")
    m = st.m
    X, L, M, R, hat, til = _pick(st)
    span = range(0, 2 * m + 2)

    def C(i):
        idx = [2 * i - 2 - 3 * j for j in span] + [2 * i + 2 + 3 * j for j in span]
        return _u(R(2 * i - 1), *(X(t) for t in idx))

    out = [C(i) for i in range(-1, m)]
    for i in range(1, m):
        out += [closed_nbhd(g, x, C(i)) for x in sorted(L(2 * i + 1))]
    tail = _u(*(X(2 * m - 2 - 3 * j) for j in span))
    primes = [closed_nbhd(g, x, L(2 * m + 1)) | tail for x in sorted(R(2 * m - 1))]
    out += primes
    middles = {i: [_middle_clique(g, st, i, x) for x in sorted(M(2 * i + 1))] for i in range(1, m)}
    for i in range(1, m):
        out += middles[i]
    for i in range(1, m + 1):
        Y = _u(*(til(2 * i - 2 - 6 * j) for j in span), *(til(2 * i + 2 + 6 * j) for j in span))
        out += [_tilde_clique(g, st, i, x, Y) for x in sorted(til(2 * i))]
    A, B, Cc = st.three_cliques()
    notes = {"m": m}
    if m == 1:
        out.append(A)
        if len(R(1)) <= 2:
            # one of the C'_x is redundant; drop the first whose removal keeps a cover
            for c in primes:
                trial = [d for d in out if d != c]
                if verify_cover(g, CliqueCover(tuple(normalize(trial)), g)).ok:
                    out = trial
                    notes["dropped"] = sorted(c)
                    break
    else:
        for i in range(2, m):
            if len(hat(2 * i)) > 1 and R(2 * i + 1):
                out += _cross_patch(g, R(2 * i + 1), L(2 * i - 1))
        nonempty_r = sum(1 for i in range(1, m + 1) if R(2 * i - 1))
        if nonempty_r <= 1 and not R(1) and m >= 3:
            drop = set(middles[1])
            out = [c for c in out if c not in drop]
            notes["dropped_middles"] = len(drop)
    bc = emit(g, out, g.n - 1, "path", notes)
    return make_splitting(bc, (A, B, Cc), core_vertices(g))


MENAGERIE = ("RingOfFive", "MantledLK33", "CycleOfTriangles", "PathOfTriangles")


def cover_menagerie(kind: str, params):
    """Build the instance from ``params`` and cover it; returns a BoundedCover,
    or a SplittingCover for the path of triangles."""
    key = kind.replace("-", "").replace("_", "").lower()
    if key in ("ringoffive", "ring"):
        g, parts = ring_of_five(params)
        return cover_ring(g, parts)
    if key in ("mantledlk33", "mantled"):
        g, parts = mantled(params)
        return cover_mantled(g, parts)
    if key in ("cycleoftriangles", "cycle", "pathoftriangles", "path"):
        g, st = build_triangle_chain(params)
        want = "cycle" if key.startswith("cycle") else "path"
        if st.kind != want:
            raise InvalidInput(f"parameters describe a {st.kind} of triangles, not a {want}")
        return cover_cycle_of_triangles(g, st) if want == "cycle" else cover_path_of_triangles(g, st)
    raise InvalidInput(f"unknown family {kind!r}; expected one of {', '.join(MENAGERIE)}")
