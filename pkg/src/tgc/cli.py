"""Command-line front end.

Exit-code contract, stable across commands: 0 = yes/success, 1 = negative
decision, 2 = usage, parse or resource-budget error.  JSON outputs are
key-sorted so identical inputs (and seeds) give byte-identical bytes.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import __version__
from .components import (
    Budget,
    BudgetExceededError,
    ComponentQuery,
    Kind,
    UnsupportedQueryError,
    enumerate_components,
    has_component_of_size,
    is_connected_set,
    is_maximal_component,
)
from .core import (
    GraphFormatError,
    Model,
    TemporalGraph,
    ValidationError,
    parse_temporal_graph,
    serialize_temporal_graph,
)
from .fpt import CapOverflowError
from .gadgets import (
    GadgetInstance,
    SimpleGraph,
    gadget_2club,
    gadget_2club_strict,
    gadget_clique_closed_dir_tau3,
    gadget_clique_dir_tau2,
    gadget_clique_tcc,
    gadget_linegraph_bipartite,
    gadget_sat_connected,
    gadget_sat_unilateral,
    parse_bipartite_graph,
    parse_sat_instance,
    parse_simple_graph,
)
from .oracle import BoundExceededError
from .randgen import random_bipartite_graph, random_sat_instance, random_simple_graph
from .reachability import reach_profile
from .selftest import run_selftest

USAGE_ERROR = 2
GEN_KINDS = (
    "line-bipartite",
    "clique-tcc",
    "dir-tau2",
    "closed-dir-tau3",
    "two-club",
    "sat-conn",
    "sat-uni",
)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_graph(path: str) -> TemporalGraph:
    return parse_temporal_graph(_read_text(path))


def _query(args) -> ComponentQuery:
    kind = Kind.MUTUAL if args.kind == "tcc" else Kind.UNILATERAL
    return ComponentQuery(kind, args.closed, Model.from_string(args.model))


def _budget(args) -> Budget:
    budget = Budget()
    if getattr(args, "max_cliques", None):
        budget = Budget(
            max_cliques=args.max_cliques,
            max_subsets_per_clique=budget.max_subsets_per_clique,
            max_supersets=budget.max_supersets,
            max_brute_subsets=budget.max_brute_subsets,
        )
    if getattr(args, "max_subsets", None):
        budget = Budget(
            max_cliques=budget.max_cliques,
            max_subsets_per_clique=args.max_subsets,
            max_supersets=args.max_subsets,
            max_brute_subsets=args.max_subsets,
        )
    return budget


def _vertex_list(g: TemporalGraph, spec: str) -> list[int]:
    return [g.vertex(token) for token in spec.split(",") if token]


def _names(g: TemporalGraph, vertices) -> list[str]:
    return [g.name_of(v) for v in sorted(vertices)]


def cmd_reach(args, out) -> int:
    g = _load_graph(args.input)
    model = Model.from_string(args.model)
    source = g.vertex(getattr(args, "from"))
    profile = reach_profile(g, source, model)
    if args.to is not None:
        target = g.vertex(args.to)
        hit = target in profile.final
        print("yes" if hit else "no", file=out)
        return 0 if hit else 1
    if args.profile:
        for i, layer in enumerate(profile.sets):
            print(f"{i}: " + " ".join(_names(g, layer)), file=out)
    else:
        print(" ".join(_names(g, profile.final)), file=out)
    return 0


def cmd_components(args, out) -> int:
    g = _load_graph(args.input)
    report = enumerate_components(g, _query(args), _budget(args))
    named = [[g.name_of(v) for v in comp] for comp in report.components]
    if args.format == "json":
        payload = {
            "query": {
                "kind": args.kind,
                "closed": args.closed,
                "model": Model.from_string(args.model).value,
            },
            "components": named,
            "max_size": report.max_size,
        }
        print(json.dumps(payload, sort_keys=True), file=out)
    else:
        for comp in named:
            print(" ".join(comp), file=out)
    return 0


def cmd_check(args, out) -> int:
    g = _load_graph(args.input)
    members = _vertex_list(g, args.set)
    query = _query(args)
    if args.maximal:
        ok = is_maximal_component(g, members, query, _budget(args))
    else:
        ok = is_connected_set(g, members, query)
    print("yes" if ok else "no", file=out)
    return 0 if ok else 1


def cmd_find(args, out) -> int:
    g = _load_graph(args.input)
    witness = has_component_of_size(g, _query(args), args.k, algo=args.algo, budget=_budget(args))
    if witness is None:
        print("none", file=out)
        return 1
    print(" ".join(_names(g, witness)), file=out)
    return 0


def _gen_source_graph(args) -> SimpleGraph:
    if args.input:
        return parse_simple_graph(_read_text(args.input))
    if not args.random:
        raise ValueError("provide --input FILE or --random")
    rng = random.Random(args.seed)
    return random_simple_graph(rng, args.n, args.p)


def _build_gadget(args) -> GadgetInstance:
    if args.gadget == "line-bipartite":
        if args.input:
            source = parse_bipartite_graph(_read_text(args.input))
        elif args.random:
            source = random_bipartite_graph(random.Random(args.seed), args.nx, args.ny, args.p)
        else:
            raise ValueError("provide --input FILE or --random")
        return gadget_linegraph_bipartite(source, requested_tau=args.requested_tau)
    if args.gadget in ("sat-conn", "sat-uni"):
        if args.input:
            phi = parse_sat_instance(_read_text(args.input))
        elif args.nx is not None:
            if args.nx != args.ny:
                raise ValueError("--nx and --ny must match")
            phi = random_sat_instance(random.Random(args.seed), args.nx, args.clauses)
        else:
            raise ValueError("provide --input FILE or --nx/--ny/--clauses")
        return gadget_sat_connected(phi) if args.gadget == "sat-conn" else gadget_sat_unilateral(phi)
    source = _gen_source_graph(args)
    if args.gadget == "clique-tcc":
        return gadget_clique_tcc(source)
    if args.gadget == "dir-tau2":
        return gadget_clique_dir_tau2(source)
    if args.gadget == "closed-dir-tau3":
        return gadget_clique_closed_dir_tau3(source, unilateral=args.unilateral)
    members = (
        range(source.n) if args.x_set is None else [int(tok) for tok in args.x_set.split(",") if tok]
    )
    if args.strict_variant:
        return gadget_2club_strict(source, members)
    return gadget_2club(source, members)


def cmd_gen(args, out) -> int:
    inst = _build_gadget(args)
    graph_path = f"{args.out}.tg"
    sidecar_path = f"{args.out}.json"
    with open(graph_path, "w", encoding="utf-8") as fh:
        fh.write(serialize_temporal_graph(inst.graph))
    with open(sidecar_path, "w", encoding="utf-8") as fh:
        json.dump(inst.equivalence.to_json_dict(), fh, sort_keys=True, indent=2)
        fh.write("\n")
    g = inst.graph
    print(f"wrote {graph_path} {sidecar_path} (n={g.n} tau={g.tau} M={g.M})", file=out)
    return 0


def cmd_selftest(args, out) -> int:
    results = run_selftest(args.trials, args.max_n, args.seed, inject_failure=args.inject_failure)
    failed = False
    for res in results:
        status = "ok" if res.ok else f"FAILED ({res.detail})"
        print(f"{res.name}: {status} [{res.trials} trials]", file=out)
        if not res.ok:
            failed = True
            if res.counterexample is not None:
                paths = res.counterexample.dump(f"{args.dump_prefix}-{res.name}")
                print(f"counterexample written to {paths[0]} and {paths[1]}", file=out)
    print("all suites passed" if not failed else "selftest failed", file=out)
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tgc", description="Temporal graph connectivity toolkit"
    )
    parser.add_argument("--version", action="version", version=f"tgc {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, model=True):
        p.add_argument("--input", default="-", help="graph file, or - for stdin")
        if model:
            p.add_argument("--model", default="nonstrict", choices=["nonstrict", "strict"])
        p.add_argument("--threads", type=int, default=1, help="upper bound on worker threads")

    def add_kind(p):
        p.add_argument("--kind", required=True, choices=["tcc", "tucc"])
        p.add_argument("--closed", action="store_true")

    def add_budget(p):
        p.add_argument("--max-cliques", type=int, default=None)
        p.add_argument("--max-subsets", type=int, default=None)

    p = sub.add_parser("reach", help="single-source reachability")
    add_common(p)
    p.add_argument("--from", required=True, dest="from")
    p.add_argument("--to", default=None)
    p.add_argument("--profile", action="store_true", help="print one line per timestep")
    p.set_defaults(func=cmd_reach)

    p = sub.add_parser("components", help="enumerate components")
    add_common(p)
    add_kind(p)
    add_budget(p)
    p.add_argument("--format", default="text", choices=["text", "json"])
    p.set_defaults(func=cmd_components)

    p = sub.add_parser("check", help="check a vertex set")
    add_common(p)
    add_kind(p)
    add_budget(p)
    p.add_argument("--set", required=True, help="comma-separated vertex names")
    p.add_argument("--maximal", action="store_true", help="check component, not just set")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("find", help="find a connected set of size >= k")
    add_common(p)
    add_kind(p)
    add_budget(p)
    p.add_argument("--k", required=True, type=int)
    p.add_argument("--algo", default="auto", choices=["auto", "brute", "fpt"])
    p.set_defaults(func=cmd_find)

    p = sub.add_parser("gen", help="generate a reduction gadget")
    p.add_argument("gadget", choices=GEN_KINDS)
    p.add_argument("--input", default=None, help="source instance file")
    p.add_argument("--random", action="store_true", help="draw a random source instance")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default="gadget", help="output prefix for .tg and .json")
    p.add_argument("--n", type=int, default=5, help="random graph size")
    p.add_argument("--p", type=float, default=0.5, help="random edge probability")
    p.add_argument("--nx", type=int, default=None)
    p.add_argument("--ny", type=int, default=None)
    p.add_argument("--clauses", type=int, default=3)
    p.add_argument("--requested-tau", type=int, default=2)
    p.add_argument("--unilateral", action="store_true", help="closed-dir-tau3 variant")
    p.add_argument("--x-set", default=None, help="two-club candidate set, comma-separated indices")
    p.add_argument("--strict-variant", action="store_true", help="two-club strict companion")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("selftest", help="randomized oracle and gadget suites")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--max-n", type=int, default=9)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--inject-failure", action="store_true", help=argparse.SUPPRESS)
    p.add_argument("--dump-prefix", default="counterexample")
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    try:
        return args.func(args, out)
    except (
        GraphFormatError,
        ValidationError,
        BudgetExceededError,
        UnsupportedQueryError,
        CapOverflowError,
        BoundExceededError,
        KeyError,
        ValueError,
        OSError,
    ) as exc:
        message = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {message}", file=sys.stderr)
        return USAGE_ERROR


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
