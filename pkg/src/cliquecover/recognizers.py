"""Structural predicates: claws, triads, antiprismatic graphs, rotators and friends."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .errors import CapExceeded, InvalidInput, NoTriad, NotAntiprismatic
from .graph_core import Graph, complement, from_mask, iter_bits, to_mask

EXACT_CAP = 64


@dataclass(frozen=True)
class StructureReport:
    """A witness for one of the structural patterns.

    ``kind`` is one of Claw, Triad, Rotator, SquareForcer, ChangeablePair or
    ThreeCliquePartition.  ``witness`` is a vertex tuple, or a tuple of three
    frozensets for a partition.
    """

    kind: str
    witness: tuple

    def check(self, g: Graph) -> bool:
        w = self.witness
        if self.kind == "Claw":
            c, *leaves = w
            return all(g.has_edge(c, x) for x in leaves) and g.is_stable(leaves)
        if self.kind == "Triad":
            return len(set(w)) == 3 and g.is_stable(w)
        if self.kind == "Rotator":
            return is_rotator(g, w)
        if self.kind == "SquareForcer":
            return is_square_forcer(g, *w)
        if self.kind == "ChangeablePair":
            u, v = w
            return not g.has_edge(u, v) and is_antiprismatic(g.add_edge(u, v))[0]
        if self.kind == "ThreeCliquePartition":
            parts = [set(p) for p in w]
            union = set().union(*parts)
            return (union == set(range(g.n)) and sum(map(len, parts)) == g.n
                    and all(g.is_clique(p) for p in parts))
        raise InvalidInput(f"unknown report kind {self.kind!r}")


def _check_cap(g: Graph, what: str) -> None:
    if g.n > EXACT_CAP:
        raise CapExceeded(f"{what} is exact only up to n={EXACT_CAP} (got n={g.n})")


def find_claw(g: Graph) -> Optional[tuple]:
    """Return (center, a, b, c) of an induced K_{1,3}, or None."""
    for v in range(g.n):
        nb = g.adj[v]
        for a in iter_bits(nb):
            rest = nb & ~g.adj[a] & ~((1 << (a + 1)) - 1)
            for b in iter_bits(rest):
                third = rest & ~g.adj[b] & ~((1 << (b + 1)) - 1)
                if third:
                    c = (third & -third).bit_length() - 1
                    return (v, a, b, c)
    return None


def is_claw_free(g: Graph) -> bool:
    return find_claw(g) is None


def triads(g: Graph) -> list:
    """All stable 3-sets as sorted tuples, in lexicographic order."""
    out = []
    for a in range(g.n):
        na = ~g.adj[a] & ~((1 << (a + 1)) - 1) & g.full_mask
        for b in iter_bits(na):
            nb = na & ~g.adj[b] & ~((1 << (b + 1)) - 1)
            for c in iter_bits(nb):
                out.append((a, b, c))
    return out


def first_triad(g: Graph) -> Optional[tuple]:
    for a in range(g.n):
        na = ~g.adj[a] & ~((1 << (a + 1)) - 1) & g.full_mask
        for b in iter_bits(na):
            nb = na & ~g.adj[b] & ~((1 << (b + 1)) - 1)
            if nb:
                return (a, b, (nb & -nb).bit_length() - 1)
    return None


def core_vertices(g: Graph) -> frozenset:
    core = set()
    for t in triads(g):
        core.update(t)
    return frozenset(core)


def _max_clique_mask(adj: tuple, cand: int) -> int:
    """Largest clique inside ``cand`` (bitset branch and bound with colour bound)."""
    best = 0

    def colour_bound(p: int) -> list:
        # greedy colouring; returns vertices with their colour number, ascending
        order = []
        colour = 0
        while p:
            colour += 1
            q = p
            while q:
                v = (q & -q).bit_length() - 1
                q &= ~adj[v] & ~(1 << v)
                p &= ~(1 << v)
                order.append((v, colour))
        return order

    def expand(r: int, rsize: int, p: int) -> None:
        nonlocal best
        order = colour_bound(p)
        for v, col in reversed(order):
            if rsize + col <= best.bit_count():
                return
            nr = r | 1 << v
            np_ = p & adj[v]
            if np_:
                expand(nr, rsize + 1, np_)
            elif rsize + 1 > best.bit_count():
                best = nr
            p &= ~(1 << v)

    expand(0, 0, cand)
    return best


def maximum_clique(g: Graph, within: Optional[int] = None) -> frozenset:
    _check_cap(g, "clique search")
    cand = g.full_mask if within is None else within
    return from_mask(_max_clique_mask(g.adj, cand))


def clique_number(g: Graph) -> int:
    _check_cap(g, "clique_number")
    return _max_clique_mask(g.adj, g.full_mask).bit_count()


def independence_number(g: Graph) -> int:
    _check_cap(g, "independence_number")
    return clique_number(complement(g))


def local_independence_number(g: Graph) -> int:
    _check_cap(g, "local_independence_number")
    co = complement(g).adj
    best = 0
    for v in range(g.n):
        if g.adj[v]:
            best = max(best, _max_clique_mask(co, g.adj[v]).bit_count())
    return best


# antiprismatic graphs


def is_antiprismatic(g: Graph) -> tuple:
    """Return (True, None) or (False, (triad, v)) for the first violation found.

    A violation is a triad and an outside vertex that does not have exactly
    two neighbours in it.
    """
    for t in triads(g):
        tm = to_mask(t)
        for v in range(g.n):
            if tm >> v & 1:
                continue
            if (g.adj[v] & tm).bit_count() != 2:
                return False, (t, v)
    return True, None


def changeable_pairs(g: Graph) -> list:
    ok, _ = is_antiprismatic(g)
    if not ok:
        raise NotAntiprismatic("changeable pairs are defined for antiprismatic graphs only")
    out = []
    for u, v in combinations(range(g.n), 2):
        if not g.has_edge(u, v) and is_antiprismatic(g.add_edge(u, v))[0]:
            out.append((u, v))
    return out


def is_k_substantial(g: Graph, k: int) -> bool:
    """Every set of at most k-1 vertices misses some triad."""
    ts = [to_mask(t) for t in triads(g)]
    if not ts:
        raise NoTriad("k-substantiality needs a graph with a triad")
    for size in range(0, k):
        for s in combinations(range(g.n), size):
            sm = to_mask(s)
            if all(t & sm for t in ts):
                return False
    return True


def simplicial_vertices(g: Graph) -> frozenset:
    return frozenset(v for v in range(g.n) if g.is_clique_mask(g.adj[v]))


def three_clique_partition(g: Graph) -> Optional[tuple]:
    """Partition V into three cliques (a proper 3-colouring of the complement)."""
    _check_cap(g, "three_clique_partition")
    co = complement(g)
    # colour in order of decreasing degree in the complement for early failure
    order = sorted(range(g.n), key=lambda v: (-co.degree(v), v))
    colour = [-1] * g.n
    classes = [0, 0, 0]

    def place(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        used_new = False
        for c in range(3):
            if classes[c] & co.adj[v]:
                continue
            if classes[c] == 0:
                if used_new:
                    continue  # empty classes are interchangeable
                used_new = True
            colour[v] = c
            classes[c] |= 1 << v
            if place(i + 1):
                return True
            classes[c] &= ~(1 << v)
            colour[v] = -1
        return False

    if not place(0):
        return None
    parts = tuple(from_mask(m) for m in classes)
    # canonical order: by smallest member, empty parts last
    return tuple(sorted(parts, key=lambda p: (not p, min(p) if p else 0)))


# rotators and square-forcers


def is_rotator(g: Graph, rho: tuple) -> bool:
    """Check the complement-of-rotator pattern on (s1,s2,s3, t1,t2,t3, r1,r2,r3).

    In g: {s_i} is a triad, {t_j} and {r_j} are triangles, no t is adjacent
    to an r, and s_i is adjacent to t_j and to r_j exactly when i != j.
    """
    if len(rho) != 9 or len(set(rho)) != 9:
        return False
    s, t, r = rho[0:3], rho[3:6], rho[6:9]
    if not g.is_stable(s) or not g.is_clique(t) or not g.is_clique(r):
        return False
    if any(g.has_edge(a, b) for a in t for b in r):
        return False
    for i in range(3):
        for j in range(3):
            want = i != j
            if g.has_edge(s[i], t[j]) != want or g.has_edge(s[i], r[j]) != want:
                return False
    return True


def find_rotator(g: Graph) -> Optional[tuple]:
    for s in triads(g):
        cands = []
        for j in range(3):
            others = [s[i] for i in range(3) if i != j]
            cands.append([v for v in range(g.n) if v not in s and not g.has_edge(v, s[j])
                          and all(g.has_edge(v, o) for o in others)])
        for t1 in cands[0]:
            for t2 in cands[1]:
                if not g.has_edge(t1, t2):
                    continue
                for t3 in cands[2]:
                    if not (g.has_edge(t1, t3) and g.has_edge(t2, t3)):
                        continue
                    tm = to_mask((t1, t2, t3))
                    rc = [[r for r in cands[j] if not g.adj[r] & tm and not tm >> r & 1]
                          for j in range(3)]
                    for r1 in rc[0]:
                        for r2 in rc[1]:
                            if not g.has_edge(r1, r2):
                                continue
                            for r3 in rc[2]:
                                if g.has_edge(r1, r3) and g.has_edge(r2, r3):
                                    rho = (*s, t1, t2, t3, r1, r2, r3)
                                    if is_rotator(g, rho):
                                        return rho
    return None


def is_square_forcer(g: Graph, u: int, v: int) -> bool:
    """(u, v) is a square-forcer of complement(g).

    In the complement the pair is non-adjacent and its common
    non-neighbourhood is stable; read in g, u and v are adjacent and their
    common neighbourhood is a clique.
    """
    if u == v or not g.has_edge(u, v):
        return False
    common = g.adj[u] & g.adj[v]
    return g.is_clique_mask(common)


def square_forcers(g: Graph) -> list:
    return [(u, v) for u, v in g.edges() if is_square_forcer(g, u, v)]


def power_of_cycle_order(g: Graph) -> Optional[tuple]:
    """A cyclic order v_0..v_{n-1} with v_i ~ v_j exactly when their circular
    distance is at most p, for the p fixed by the degree, or None.

    Backtracking: each next vertex must be adjacent to the previous p placed
    ones and to none placed earlier (up to wrap-around, checked at the end).
    """
    n = g.n
    if n < 3:
        return None
    degs = {g.degree(v) for v in range(n)}
    if len(degs) != 1:
        return None
    d = degs.pop()
    if d % 2 or d == 0:
        return None
    p = d // 2
    if 2 * p + 1 > n:
        return None

    def ok_close(order):
        for i in range(n):
            for k in range(1, n):
                dist = min(k, n - k)
                if g.has_edge(order[i], order[(i + k) % n]) != (dist <= p):
                    return False
        return True

    order = [0]
    used = {0}

    def extend():
        if len(order) == n:
            return ok_close(order)
        k = len(order)
        for v in sorted(g.neighbors(order[-1])):
            if v in used:
                continue
            good = True
            for back in range(1, min(k, n) + 1):
                u = order[k - back]
                # wrap-around distances are only settled once the order is complete
                if back <= p and not g.has_edge(u, v):
                    good = False
                    break
                if p < back < n - p and g.has_edge(u, v):
                    good = False
                    break
            if good:
                order.append(v)
                used.add(v)
                if extend():
                    return True
                order.pop()
                used.discard(v)
        return False

    return tuple(order) if extend() else None
