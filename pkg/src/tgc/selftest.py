"""Randomized self-test suites: oracle equivalences and gadget iffs.

Each suite runs a deterministic number of seeded trials and reports the
first failure as a counterexample (graph file text plus a query record),
greedily minimized by deleting vertices while the failure persists.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass

from . import oracle
from .components import ComponentQuery, Kind, enumerate_components
from .core import Model, TemporalGraph, serialize_temporal_graph, temporal_graph
from .fpt import fpt_find
from .gadgets import gadget_clique_dir_tau2, gadget_linegraph_bipartite, gadget_sat_connected
from .components import has_component_of_size, is_temporally_connected
from .randgen import (
    random_bipartite_graph,
    random_sat_instance,
    random_simple_graph,
    random_temporal_graph,
)
from .reachability import ReachabilityEngine, set_of


@dataclass
class Counterexample:
    graph: TemporalGraph
    query: dict

    def dump(self, prefix: str) -> tuple[str, str]:
        graph_path = f"{prefix}.tg"
        query_path = f"{prefix}.json"
        with open(graph_path, "w", encoding="utf-8") as fh:
            fh.write(serialize_temporal_graph(self.graph))
        with open(query_path, "w", encoding="utf-8") as fh:
            json.dump(self.query, fh, sort_keys=True, indent=2)
            fh.write("\n")
        return graph_path, query_path


@dataclass
class SuiteResult:
    name: str
    trials: int
    ok: bool
    detail: str = ""
    counterexample: Counterexample | None = None


def _drop_vertex(g: TemporalGraph, victim: int) -> TemporalGraph:
    keep = [v for v in range(g.n) if v != victim]
    remap = {v: i for i, v in enumerate(keep)}
    edges = [
        (remap[e.tail], remap[e.head], e.labels)
        for e in g.edges
        if e.tail != victim and e.head != victim
    ]
    names = tuple(g.names[v] for v in keep) if g.names else None
    return temporal_graph(g.directed, g.n - 1, edges, names)


def minimize_graph(g: TemporalGraph, still_fails) -> TemporalGraph:
    """Greedy vertex deletion while the failing predicate keeps failing."""
    changed = True
    while changed and g.n > 1:
        changed = False
        for victim in range(g.n):
            smaller = _drop_vertex(g, victim)
            if still_fails(smaller):
                g = smaller
                changed = True
                break
    return g


def _reach_mismatch(g: TemporalGraph, flip: bool = False) -> dict | None:
    for model in (Model.NON_STRICT, Model.STRICT):
        engine = ReachabilityEngine(g)
        for u in range(g.n):
            got = set_of(engine.reach_mask(u, model))
            want = oracle.oracle_reach_set(g, u, model)
            if flip:
                want = want ^ {(u + 1) % max(g.n, 1)}
            if got != want:
                return {
                    "suite": "reach-oracle",
                    "model": model.value,
                    "source": u,
                    "got": sorted(got),
                    "expected": sorted(want),
                }
    return None


def suite_reachability(rng: random.Random, trials: int, max_n: int, inject: bool = False) -> SuiteResult:
    for trial in range(trials):
        g = random_temporal_graph(rng, max_n, 6)
        failure = _reach_mismatch(g, flip=inject and trial == 0)
        if failure:
            small = minimize_graph(g, lambda h: _reach_mismatch(h, flip=inject and trial == 0))
            failure["injected"] = inject
            return SuiteResult(
                "reach-oracle", trials, False, "reach set mismatch", Counterexample(small, failure)
            )
    return SuiteResult("reach-oracle", trials, True)


def _component_mismatch(g: TemporalGraph) -> dict | None:
    if g.n > 10:
        return None
    for kind in (Kind.MUTUAL, Kind.UNILATERAL):
        for closed in (False, True):
            for model in (Model.NON_STRICT, Model.STRICT):
                query = ComponentQuery(kind, closed, model)
                mine = enumerate_components(g, query).components
                ref = oracle.oracle_enumerate_components(g, query).components
                if mine != ref:
                    return {
                        "suite": "components-oracle",
                        "query": {"kind": kind.value, "closed": closed, "model": model.value},
                        "got": [list(c) for c in mine],
                        "expected": [list(c) for c in ref],
                    }
    return None


def suite_components(rng: random.Random, trials: int, max_n: int) -> SuiteResult:
    for _ in range(trials):
        g = random_temporal_graph(rng, min(max_n, 7), 4)
        failure = _component_mismatch(g)
        if failure:
            small = minimize_graph(g, _component_mismatch)
            return SuiteResult(
                "components-oracle", trials, False, "component enumeration mismatch",
                Counterexample(small, failure),
            )
    return SuiteResult("components-oracle", trials, True)


def suite_fpt(rng: random.Random, trials: int, max_n: int) -> SuiteResult:
    for _ in range(trials):
        g = random_temporal_graph(rng, min(max_n, 9), 3, directed=False)
        for kind in (Kind.MUTUAL, Kind.UNILATERAL):
            for closed in (False, True):
                query = ComponentQuery(kind, closed, Model.NON_STRICT)
                for k in (2, 3):
                    fast = fpt_find(g, query, k)
                    slow = has_component_of_size(g, query, k, algo="brute")
                    if (fast is None) != (slow is None):
                        failure = {
                            "suite": "fpt-vs-brute",
                            "query": {"kind": kind.value, "closed": closed, "k": k},
                            "fpt": list(fast) if fast else None,
                            "brute": list(slow) if slow else None,
                        }
                        return SuiteResult(
                            "fpt-vs-brute", trials, False, "fpt/brute disagreement",
                            Counterexample(g, failure),
                        )
    return SuiteResult("fpt-vs-brute", trials, True)


def suite_gadgets(rng: random.Random, trials: int) -> SuiteResult:
    for _ in range(trials):
        src = random_simple_graph(rng, rng.randint(1, 5))
        inst = gadget_clique_dir_tau2(src)
        best_clique = oracle.oracle_max_clique(src)
        sizes = enumerate_components(
            inst.graph, ComponentQuery(Kind.MUTUAL, False, Model.NON_STRICT)
        )
        for k in (3, 4):
            if (best_clique >= k) != (sizes.max_size >= k):
                failure = {
                    "suite": "gadget-iff",
                    "gadget": "dir-tau2",
                    "k": k,
                    "max_clique": best_clique,
                    "max_tcc": sizes.max_size,
                    "source": inst.equivalence.source,
                }
                return SuiteResult(
                    "gadget-iff", trials, False, "clique gadget iff failed",
                    Counterexample(inst.graph, failure),
                )

        bip = random_bipartite_graph(rng, rng.randint(1, 3), rng.randint(1, 3))
        line = gadget_linegraph_bipartite(bip)
        closed_tcc = enumerate_components(
            line.graph, ComponentQuery(Kind.MUTUAL, True, Model.NON_STRICT)
        )
        if closed_tcc.max_size != oracle.oracle_biclique_edges(bip):
            failure = {
                "suite": "gadget-iff",
                "gadget": "line-bipartite",
                "max_closed_tcc": closed_tcc.max_size,
                "max_biclique_edges": oracle.oracle_biclique_edges(bip),
                "source": line.equivalence.source,
            }
            return SuiteResult(
                "gadget-iff", trials, False, "line-graph gadget iff failed",
                Counterexample(line.graph, failure),
            )

        phi = random_sat_instance(rng, 2, rng.randint(1, 4))
        conn = gadget_sat_connected(phi)
        if oracle.oracle_sat(phi) == is_temporally_connected(
            conn.graph, Kind.MUTUAL, Model.NON_STRICT
        ):
            failure = {
                "suite": "gadget-iff",
                "gadget": "sat-conn",
                "satisfiable": oracle.oracle_sat(phi),
                "source": conn.equivalence.source,
            }
            return SuiteResult(
                "gadget-iff", trials, False, "sat gadget iff failed",
                Counterexample(conn.graph, failure),
            )
    return SuiteResult("gadget-iff", trials, True)


def run_selftest(
    trials: int, max_n: int, seed: int, inject_failure: bool = False
) -> list[SuiteResult]:
    """Run all suites with deterministic per-suite seeds; trial counts scale
    down for the exponential suites."""
    results = [
        suite_reachability(random.Random(seed), trials, max_n, inject=inject_failure),
        suite_components(random.Random(seed + 1), max(trials // 5, 0), max_n),
        suite_fpt(random.Random(seed + 2), max(trials // 5, 0), max_n),
        suite_gadgets(random.Random(seed + 3), max(trials // 10, 0)),
    ]
    return results
