"""Generate graphs, cover their edges with cliques, and check the results.

Subcommands build instances, run covering constructions, compute exact
values and bounds, and hunt for tight or violating small graphs.

JSON goes to stdout and a one-line summary per run to stderr.  The exit
status is 0 exactly when every verdict is OK and every bound is met.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from typing import Optional

from .coverers import (BoundedCover, canonical_rho, cover_antiprismatic_log, cover_circular_interval,
                       cover_menagerie, cover_named, cover_power_of_cycle, cover_simplicial,
                       cover_three_cliqued, hard_edges, lift_thickening, lift_worn_hex_chain,
                       make_splitting, p_extra_edges, random_schlafli_subset, rotator_collections,
                       rotator_decompose, schlafli_collections, uncovered_edges)
from .coverers.base import emit
from .errors import BudgetExhausted, CapExceeded, CliqueCoverError, InvalidInput
from .exact_oracle import exact_clique_cover, graph_metrics, lower_bound_cc
from .generators import (CircularIntervalRep, ThickeningSpec, WornHexChain, build_triangle_chain,
                         circular_interval_graph, line_graph, named_graph, power_of_cycle,
                         random_antiprismatic, random_instance, random_mantled_params, random_ring_params,
                         schlafli, structured_graph, thicken, worn_hex_chain)
from .generators.triangles import random_triangle_chain_params
from .graph_core import (Graph, closed_neighborhood_family, complement, induced_subgraph,
                         read_edge_list, verify_cover, write_edge_list)
from .recognizers import (core_vertices, find_claw, find_rotator, first_triad, independence_number, power_of_cycle_order,
                          three_clique_partition)

KINDS = (
    "graph", "power-of-cycle", "named", "line-graph", "random-tree-line", "random-circular",
    "random-three-cliqued", "random-antiprismatic", "triangle-chain", "ring-of-five", "mantled",
    "parallel-square", "skew-square", "circular-interval", "thickening", "worn-hex-chain",
    "schlafli-subset",
)
METHODS = ("lemcirc", "icosa", "twister", "named", "stripe", "simplicial", "tc1", "circ", "thickening",
           "worn", "ring", "mantled", "cycle", "path", "anti-log", "O", "P", "S", "M")
HUNT_FAMILIES = ("triad-free", "claw-free-random")


def _key(s: str) -> str:
    return s.replace("_", "-").lower()


# instances


class Instance:
    """A graph together with whatever structure its generator produced."""

    def __init__(self, kind: str, params: dict, graph: Graph, **extra):
        self.kind = kind
        self.params = params
        self.graph = graph
        self.extra = extra

    def describe(self) -> dict:
        return {"kind": self.kind, "params": self.params, "n": self.graph.n, "m": self.graph.m}


def parse_params(text: Optional[str], tokens: list) -> dict:
    """--params JSON merged with trailing key=value tokens (values parsed as JSON
    when possible) and a bare token taken as a name."""
    params = {}
    if text:
        try:
            params = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InvalidInput(f"--params is not valid JSON: {exc}") from None
        if not isinstance(params, dict):
            raise InvalidInput("--params must be a JSON object")
    for tok in tokens:
        if "=" in tok:
            k, v = tok.split("=", 1)
            try:
                params[k] = json.loads(v)
            except json.JSONDecodeError:
                params[k] = v
        else:
            params["name"] = tok
    return params


def _need(params: dict, *keys):
    missing = [k for k in keys if k not in params]
    if missing:
        raise InvalidInput(f"missing parameter(s): {', '.join(missing)}")
    return [params[k] for k in keys]


def _raw_graph(data: dict) -> Graph:
    n, edges = _need(data, "n", "edges")
    return Graph.from_edges(int(n), [tuple(e) for e in edges], data.get("labels"))


def build_instance(kind: str, params: dict, seed: int) -> Instance:
    k = _key(kind)
    rng = random.Random(seed)
    if k == "graph":
        return Instance(k, params, _raw_graph(params))
    if k == "power-of-cycle":
        n, p = _need(params, "n", "p")
        return Instance(k, params, power_of_cycle(int(n), int(p)))
    if k == "named":
        (name,) = _need(params, "name")
        return Instance(k, params, named_graph(str(name)), name=str(name))
    if k == "line-graph":
        return Instance(k, params, line_graph(_raw_graph(params)))
    if k in ("random-tree-line", "random-circular", "random-three-cliqued"):
        size = int(params.get("size", 10))
        return Instance(k, params, random_instance(seed, k, size))
    if k == "random-antiprismatic":
        g, fam = random_antiprismatic(seed, params.get("family"))
        return Instance(k, {**params, "family": fam}, g)
    if k == "triangle-chain":
        if not params:
            params = random_triangle_chain_params(rng).to_json()
        g, st = build_triangle_chain(params)
        return Instance(k, params, g, structure=st)
    if k in ("ring-of-five", "mantled", "parallel-square", "skew-square"):
        if not params and k == "ring-of-five":
            params = random_ring_params(rng)
        elif not params and k == "mantled":
            params = random_mantled_params(rng)
        return Instance(k, params, structured_graph(k, params))
    if k == "circular-interval":
        rep = CircularIntervalRep.from_json(params.get("rep", params))
        return Instance(k, params, circular_interval_graph(rep), rep=rep)
    if k == "thickening":
        spec = ThickeningSpec.from_json(params.get("spec", params))
        g, blocks = thicken(spec)
        return Instance(k, params, g, spec=spec, blocks=blocks)
    if k == "worn-hex-chain":
        chain = WornHexChain.from_json(params.get("chain", params))
        g, parts = worn_hex_chain(chain)
        return Instance(k, params, g, chain=chain, parts=parts)
    if k == "schlafli-subset":
        subset = params.get("subset") or sorted(random_schlafli_subset(seed))
        gamma = schlafli()
        ids = [gamma.index(x) if isinstance(x, str) else int(x) for x in subset]
        h, _ = induced_subgraph(gamma, ids)
        return Instance(k, {"subset": sorted(h.labels)}, h, subset=list(h.labels))
    raise InvalidInput(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")


def load_instance(args) -> Instance:
    if args.input:
        g = read_edge_list(args.input)
        return Instance("file", {"path": args.input}, g)
    if not args.kind:
        raise InvalidInput("give an input file or --kind")
    return build_instance(args.kind, parse_params(args.params, args.tokens), args.seed)


# covering


def _term_splitting(term, cover: Optional[list]):
    """Splitting cover of one chain term: the given cliques, or A, B, C plus
    N[A;B], N[B;C], N[C;A]."""
    g = term.graph
    parts = (term.A, term.B, term.C)
    if cover is None:
        cover = list(parts)
        for x, y in ((term.A, term.B), (term.B, term.C), (term.C, term.A)):
            cover += closed_neighborhood_family(g, x, y)
    bc = emit(g, cover, g.n + 3, "worn-term")
    return make_splitting(bc, parts, core_vertices(g))


def run_cover(inst: Instance, method: str, budget: Optional[int]) -> tuple:
    """Return (report dict, ok flag)."""
    g, p, m = inst.graph, inst.params, method
    if m in ("O", "P"):
        rho = tuple(p["rho"]) if "rho" in p else (canonical_rho(g) if inst.kind == "named"
                                                   and p.get("name", "").lower() == "schlafli"
                                                   else find_rotator(g))
        if rho is None:
            raise InvalidInput("the graph's complement has no rotator")
        d = rotator_decompose(g, rho)
        cl = rotator_collections(d, m)
        left = uncovered_edges(g, cl)
        hard = hard_edges(d)
        ok = left <= hard
        if m == "P":
            ok = ok and not (left & p_extra_edges(d))
        rep = {"method": m, "rho": [g.label(v) for v in rho], "parts": d.labelled(),
               "cliques": [sorted(g.label(v) for v in c) for c in cl], "size": len(cl),
               "uncovered": sorted(sorted(g.label(v) for v in e) for e in left),
               "residual_within_hard_edges": left <= hard, "verdict": "OK" if ok else "FAIL"}
        return rep, ok

    bc = _cover(inst, m, budget)
    verdict = verify_cover(bc.graph, bc.cover)
    ok = verdict.ok and len(bc) <= bc.bound
    rep = {"method": m, "provenance": bc.provenance, "size": len(bc), "bound": bc.bound,
           "verdict": str(verdict) if not verdict.ok else "OK", "bound_met": len(bc) <= bc.bound,
           "cover": bc.to_json(), "notes": _jsonable(bc.notes)}
    if bc.graph.n <= 12:
        rep["lower_bound"] = lower_bound_cc(bc.graph)
    return rep, ok


def _cover(inst: Instance, m: str, budget: Optional[int]) -> BoundedCover:
    g, p = inst.graph, inst.params
    if m == "lemcirc":
        if inst.kind != "power-of-cycle":
            raise InvalidInput("method lemcirc needs --kind power-of-cycle")
        return cover_power_of_cycle(int(p["n"]), int(p["p"]))
    if m in ("named", "icosa", "twister"):
        if inst.kind != "named":
            raise InvalidInput(f"method {m} needs --kind named")
        return cover_named(inst.extra["name"])
    if m in ("stripe", "simplicial"):
        return cover_simplicial(g)[0]
    if m == "tc1":
        parts = p.get("parts")
        if parts is None:
            parts = three_clique_partition(g)
            if parts is None:
                raise InvalidInput("the graph is not three-cliqued")
        return cover_three_cliqued(g, *[frozenset(x) for x in parts])
    if m == "circ":
        if inst.kind == "thickening":
            raise InvalidInput("method circ takes --kind circular-interval with an optional 'spec'")
        if inst.kind != "circular-interval":
            raise InvalidInput("method circ needs --kind circular-interval")
        spec = ThickeningSpec.from_json(p["spec"]) if "spec" in p else None
        return cover_circular_interval(inst.extra["rep"], spec)
    if m == "thickening":
        if inst.kind != "thickening":
            raise InvalidInput("method thickening needs --kind thickening")
        spec = inst.extra["spec"]
        anti = bool(p.get("antiprismatic", False))
        host = spec.base if anti else spec.base.remove_edges(spec.F)
        cover = p.get("cover")
        if cover is None:
            cover = list(exact_clique_cover(host, budget)[1].cliques)
        t = int(p.get("t", host.n - len(cover)))
        if anti:
            t = min(t, 1)
        return lift_thickening(cover, spec, t, antiprismatic=anti)
    if m == "worn":
        if inst.kind != "worn-hex-chain":
            raise InvalidInput("method worn needs --kind worn-hex-chain")
        chain = inst.extra["chain"]
        i0 = int(p.get("i0", 0))
        if not 0 <= i0 < len(chain.terms):
            raise InvalidInput(f"i0={i0} out of range")
        sc = _term_splitting(chain.terms[i0], p.get("cover"))
        t = int(p.get("t", chain.terms[i0].graph.n - len(sc)))
        return lift_worn_hex_chain(chain, i0, sc, t)
    if m in ("ring", "mantled", "cycle", "path"):
        kinds = {"ring": ("ring-of-five",), "mantled": ("mantled",), "cycle": ("triangle-chain",),
                 "path": ("triangle-chain",)}
        if inst.kind not in kinds[m]:
            raise InvalidInput(f"method {m} needs --kind {kinds[m][0]}")
        res = cover_menagerie(m, p)
        return res.bounded if hasattr(res, "bounded") else res
    if m == "anti-log":
        return cover_antiprismatic_log(g)
    if m in ("S", "M"):
        if inst.kind == "schlafli-subset":
            return schlafli_collections(inst.extra["subset"], m)
        if g == schlafli() and g.labels == schlafli().labels:
            return schlafli_collections(g.labels, m)
        raise InvalidInput(f"method {m} needs --kind schlafli-subset or the named Schlafli graph")
    raise InvalidInput(f"unknown method {m!r}; expected one of {', '.join(METHODS)}")


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = [_jsonable(v) for v in x]
        return sorted(items, key=repr) if isinstance(x, (set, frozenset)) else items
    return x


# hunting


def _triad_free(rng: random.Random, n: int) -> Graph:
    """Complement of a random maximal-ish triangle-free graph: alpha <= 2."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    keep = rng.uniform(0.3, 1.0)
    adj = [0] * n
    for u, v in pairs:
        if rng.random() > keep or adj[u] & adj[v]:
            continue
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    h = Graph(n, tuple(adj))
    return complement(h)


def _claw_free(rng: random.Random, n: int) -> Graph:
    for _ in range(400):
        p = rng.uniform(0.35, 0.9)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        g = Graph.from_edges(n, edges)
        if find_claw(g) is None:
            return g
    return random_instance(rng.randrange(2 ** 31), "random-circular", n)


def hunt_trial(family: str, seed: int, trial: int, n_min: int, n_max: int, budget: Optional[int]) -> dict:
    rng = random.Random(f"{seed}:{trial}")
    n = rng.randint(n_min, n_max)
    g = _triad_free(rng, n) if family == "triad-free" else _claw_free(rng, n)
    rec = {"trial": trial, "n": n, "m": g.m, "alpha": independence_number(g) if n else 0,
           "connected": g.is_connected(), "edges": [list(e) for e in g.edges()]}
    try:
        cc = exact_clique_cover(g, budget)[0]
    except (BudgetExhausted, CapExceeded) as exc:
        rec.update(cc=None, skipped=str(exc))
        return rec
    rec["cc"] = cc
    rec["violation"] = cc > n
    rec["tight"] = cc == n
    if cc == n:
        order = power_of_cycle_order(g)
        rec["power_of_cycle_shape"] = order is not None
    return rec


# commands


def _emit_json(obj, out: Optional[str]) -> None:
    text = json.dumps(obj, indent=2, sort_keys=True)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    print(text)


def cmd_generate(args) -> int:
    inst = load_instance(args)
    rep = inst.describe()
    g = inst.graph
    if args.out:
        write_edge_list(g, args.out)
        rep["path"] = args.out
    else:
        rep["edges"] = [list(e) for e in g.edges()]
    if g.labels is not None:
        rep["labels"] = list(g.labels)
    print(json.dumps(rep, indent=2, sort_keys=True))
    print(f"generated {inst.kind}: n={g.n} m={g.m}", file=sys.stderr)
    return 0


def cmd_cover(args) -> int:
    if not args.method:
        raise InvalidInput("cover needs --method")
    inst = load_instance(args)
    t0 = time.perf_counter()
    rep, ok = run_cover(inst, args.method, args.budget)
    rep["instance"] = inst.describe()
    _emit_json(rep, args.out)
    bound = f" bound={rep['bound']}" if "bound" in rep else ""
    print(f"cover {args.method}: size={rep['size']}{bound} verdict={rep['verdict']} "
          f"({time.perf_counter() - t0:.2f}s)", file=sys.stderr)
    return 0 if ok else 1


def cmd_exact(args) -> int:
    inst = load_instance(args)
    t0 = time.perf_counter()
    cc, cover = exact_clique_cover(inst.graph, args.budget)
    verdict = verify_cover(inst.graph, cover)
    rep = {"instance": inst.describe(), "cc": cc, "cover": cover.to_json(),
           "verdict": "OK" if verdict.ok else str(verdict)}
    _emit_json(rep, args.out)
    print(f"exact: cc={cc} ({time.perf_counter() - t0:.2f}s)", file=sys.stderr)
    return 0 if verdict.ok else 1


def cmd_bounds(args) -> int:
    inst = load_instance(args)
    met = graph_metrics(inst.graph)
    rep = {"instance": inst.describe(), **met.to_json(), "lower_bound": met.cc_lower,
           "triad": list(first_triad(inst.graph) or []) or None}
    _emit_json(rep, args.out)
    print(f"bounds: lower={met.cc_lower} n={met.n} omega={met.omega} alpha={met.alpha}", file=sys.stderr)
    return 0


def cmd_hunt(args) -> int:
    family = _key(args.kind or (args.tokens[0] if args.tokens else ""))
    if family not in HUNT_FAMILIES:
        raise InvalidInput(f"hunt needs --kind in {', '.join(HUNT_FAMILIES)}")
    params = parse_params(args.params, args.tokens[1:] if not args.kind else args.tokens)
    n_max = int(params.get("n_max", params.get("n", 10)))
    n_min = int(params.get("n_min", min(4, n_max)))
    trials = int(params.get("trials", args.trials))
    if not 1 <= n_min <= n_max:
        raise InvalidInput("need 1 <= n_min <= n_max")
    if trials < 0:
        raise InvalidInput("trials must be non-negative")
    records = [hunt_trial(family, args.seed, i, n_min, n_max, args.budget) for i in range(trials)]
    viol = [r["trial"] for r in records if r.get("violation")]
    tight = [r for r in records if r.get("tight")]
    rep = {"family": family, "seed": args.seed, "trials": trials, "n_min": n_min, "n_max": n_max,
           "violations": viol, "tight": [r["trial"] for r in tight],
           "tight_power_of_cycle": [r["trial"] for r in tight if r.get("power_of_cycle_shape")],
           "skipped": [r["trial"] for r in records if r.get("cc") is None], "records": records}
    _emit_json(rep, args.out)
    print(f"hunt {family}: {trials} trials, {len(viol)} violations, {len(tight)} tight", file=sys.stderr)
    return 0 if not viol else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cliquecover", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, with_input=True):
        if with_input:
            p.add_argument("--input", "-i", help="edge-list file (labels read from FILE.labels)")
        p.add_argument("--kind", help="instance kind: " + ", ".join(KINDS))
        p.add_argument("--params", help="JSON object of generator parameters")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--budget", type=int, default=None, help="node budget for the exact solver")
        p.add_argument("--out", "-o", help="output path")
        p.add_argument("tokens", nargs="*", help="KIND then key=value pairs or a name, e.g. named schlafli")

    for name, fn, helptext in (
        ("generate", cmd_generate, "build an instance and write it as an edge list"),
        ("cover", cmd_cover, "run a covering construction and verify it"),
        ("exact", cmd_exact, "exact clique cover number with a witness"),
        ("bounds", cmd_bounds, "neighbourhood lower bound and basic invariants"),
    ):
        p = sub.add_parser(name, help=helptext)
        common(p)
        if name == "cover":
            p.add_argument("--method", "-m", help="one of " + ", ".join(METHODS))
        p.set_defaults(func=fn)

    p = sub.add_parser("hunt", help="search small graphs for cc > n or cc = n")
    common(p, with_input=False)
    p.add_argument("--trials", type=int, default=100)
    p.set_defaults(func=cmd_hunt, input=None)
    return ap


def _normalize_tokens(args) -> None:
    """Let the first bare token stand for --kind (or an input file for
    commands that take one)."""
    if args.command == "hunt" or args.kind or not args.tokens:
        return
    first = args.tokens[0]
    if "=" in first:
        return
    if _key(first) in KINDS:
        args.kind = _key(first)
        args.tokens = args.tokens[1:]
    elif getattr(args, "input", None) is None:
        args.input = first
        args.tokens = args.tokens[1:]


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    _normalize_tokens(args)
    try:
        return args.func(args)
    except CliqueCoverError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (KeyError, ValueError, TypeError) as exc:
        print(f"error: bad parameters: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
