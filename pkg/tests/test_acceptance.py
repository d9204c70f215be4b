"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines.  Criterion 7c is expected red on its tucc sub-claim: the dir-tau2
construction admits a size-3 unilateral set {endpoint, hub, endpoint} for
every edge, so its "k-clique <-> tucc >= k" equivalence is false at exactly
k = 3 on triangle-free graphs with at least one edge (see the failure
message for concrete counterexamples).  The tcc half and all other criteria
pass.
"""

import io
import itertools
import random
import time

from corpus import FIG1_TEXT, all_bipartite, all_graphs, clause_universe, iso_classes
from tgc import oracle
from tgc.cli import main as cli_main
from tgc.components import (
    ComponentQuery,
    Kind,
    enumerate_components,
    is_connected_set,
    is_maximal_component,
    is_temporally_connected,
)
from tgc.core import Model, parse_temporal_graph
from tgc.fpt import fpt_find
from tgc.gadgets import (
    SatInstance,
    gadget_2club,
    gadget_2club_strict,
    gadget_clique_closed_dir_tau3,
    gadget_clique_dir_tau2,
    gadget_clique_tcc,
    gadget_linegraph_bipartite,
    gadget_sat_connected,
    gadget_sat_unilateral,
)
from tgc.components import has_component_of_size
from tgc.randgen import (
    random_bipartite_graph,
    random_sat_instance,
    random_temporal_graph,
)
from tgc.reachability import TemporalWalk, is_temporal_walk, reach_profile, reaches

NS = Model.NON_STRICT
ST = Model.STRICT

TCC = ComponentQuery(Kind.MUTUAL, False, NS)
TUCC = ComponentQuery(Kind.UNILATERAL, False, NS)
CLOSED_TCC = ComponentQuery(Kind.MUTUAL, True, NS)
CLOSED_TUCC = ComponentQuery(Kind.UNILATERAL, True, NS)


def report(cid: str, ok: bool, detail: str = ""):
    line = f"ACCEPTANCE {cid}: {'PASS' if ok else 'FAIL'}"
    if detail:
        line += f" ({detail})"
    print(line)


def fig1():
    return parse_temporal_graph(FIG1_TEXT)


def test_criterion_1_fig1_fixture_suite():
    start = time.time()
    g = fig1()
    ids = {name: g.vertex(name) for name in "abcdefg"}

    def group(letters):
        return [ids[ch] for ch in letters]

    ok = True
    ok &= is_connected_set(g, group("ab"), CLOSED_TCC)
    ok &= is_maximal_component(g, group("abcd"), CLOSED_TCC)
    ok &= is_maximal_component(g, group("abcde"), CLOSED_TUCC)
    ok &= not is_connected_set(g, group("abcde"), CLOSED_TCC)
    ok &= is_maximal_component(g, group("abcde"), TCC)
    ok &= is_maximal_component(g, group("abcdef"), TUCC)
    ok &= not is_connected_set(g, group("abcdef"), TCC)

    blue = TemporalWalk.from_flat([ids["a"], 1, ids["b"], 2, ids["c"], 2, ids["e"]])
    green = TemporalWalk.from_flat([ids["f"], 2, ids["g"], 3, ids["d"], 4, ids["a"]])
    red = TemporalWalk.from_flat([ids["c"], 3, ids["d"], 1, ids["f"]])
    ok &= is_temporal_walk(g, blue, NS) and not is_temporal_walk(g, blue, ST)
    ok &= is_temporal_walk(g, green, NS) and is_temporal_walk(g, green, ST)
    ok &= not is_temporal_walk(g, red, NS) and not is_temporal_walk(g, red, ST)

    elapsed = time.time() - start
    report("1 (fixture suite)", ok and elapsed < 1.0, f"{elapsed:.2f}s")
    assert ok
    assert elapsed < 1.0


def test_criterion_2_reachability_oracle_equivalence():
    start = time.time()
    rng = random.Random(20260401)
    mismatches = 0
    for trial in range(1000):
        g = random_temporal_graph(rng, 12, 6, directed=trial % 2 == 0)
        for model in (NS, ST):
            for u in range(g.n):
                final = reach_profile(g, u, model).final
                want = oracle.oracle_reach_set(g, u, model)
                if final != want:
                    mismatches += 1
                for v in (0, g.n - 1, u):
                    if reaches(g, u, v, model) != (v in want):
                        mismatches += 1
    elapsed = time.time() - start
    report("2 (reach vs oracle, 1000 graphs)", mismatches == 0 and elapsed < 60, f"{elapsed:.1f}s")
    assert mismatches == 0
    assert elapsed < 60


def _corpus3():
    rng = random.Random(20260402)
    return [random_temporal_graph(rng, 9, 4, directed=t % 2 == 0) for t in range(300)]


def _definitional_clique_check(g, model, kind, components):
    """Each reported set must be a clique of the right flavor in the
    oracle-built reachability relation, and inextendable."""
    reach = [oracle.oracle_reach_set(g, u, model) for u in range(g.n)]

    def linked(u, v):
        forward, backward = v in reach[u], u in reach[v]
        return (forward and backward) if kind is Kind.MUTUAL else (forward or backward)

    for comp in components:
        for u, v in itertools.combinations(comp, 2):
            if not linked(u, v):
                return False
        inside = set(comp)
        for w in range(g.n):
            if w not in inside and all(linked(w, u) for u in comp):
                return False
    return True


def test_criterion_3_open_enumeration_matches_cliques_and_oracle():
    start = time.time()
    bad = 0
    for g in _corpus3():
        for model in (NS, ST):
            for kind in (Kind.MUTUAL, Kind.UNILATERAL):
                q = ComponentQuery(kind, False, model)
                mine = enumerate_components(g, q).components
                if mine != oracle.oracle_enumerate_components(g, q).components:
                    bad += 1
                if not _definitional_clique_check(g, model, kind, mine):
                    bad += 1
    elapsed = time.time() - start
    report("3 (open kinds, 300 graphs)", bad == 0 and elapsed < 120, f"{elapsed:.1f}s")
    assert bad == 0
    assert elapsed < 120


def test_criterion_4_heredity_and_containment():
    start = time.time()
    violations = 0
    for g in _corpus3():
        for kind in (Kind.MUTUAL, Kind.UNILATERAL):
            open_q = ComponentQuery(kind, False, NS)
            for comp in enumerate_components(g, open_q).components:
                for r in range(len(comp) + 1):
                    for sub in itertools.combinations(comp, r):
                        if not is_connected_set(g, sub, open_q):
                            violations += 1
            closed_q = ComponentQuery(kind, True, NS)
            for comp in enumerate_components(g, closed_q).components:
                if not is_connected_set(g, comp, open_q):
                    violations += 1
        for closed in (False, True):
            mutual_q = ComponentQuery(Kind.MUTUAL, closed, NS)
            uni_q = ComponentQuery(Kind.UNILATERAL, closed, NS)
            for comp in enumerate_components(g, mutual_q).components:
                if not is_connected_set(g, comp, uni_q):
                    violations += 1
    elapsed = time.time() - start
    report("4 (heredity/containment)", violations == 0, f"{elapsed:.1f}s")
    assert violations == 0


def test_criterion_5_non_heredity_regression():
    g = fig1()
    abcd = [g.vertex(ch) for ch in "abcd"]
    abc = [g.vertex(ch) for ch in "abc"]
    ok = is_connected_set(g, abcd, CLOSED_TCC) and not is_connected_set(g, abc, CLOSED_TCC)
    report("5 (non-heredity regression)", ok)
    assert ok


def test_criterion_6_fpt_equals_brute_with_live_cap_assertions():
    start = time.time()
    rng = random.Random(20260403)
    mismatches = 0
    for _ in range(200):
        g = random_temporal_graph(rng, 12, 3, directed=False)
        for kind in (Kind.MUTUAL, Kind.UNILATERAL):
            for closed in (False, True):
                q = ComponentQuery(kind, closed, NS)
                for k in (2, 3, 4):
                    fast = fpt_find(g, q, k)  # cap asserts are live under pytest
                    slow = has_component_of_size(g, q, k, algo="brute")
                    if (fast is None) != (slow is None):
                        mismatches += 1
                    if fast is not None and not is_connected_set(g, fast, q):
                        mismatches += 1
    elapsed = time.time() - start
    report("6 (fpt vs brute, 200 graphs)", mismatches == 0 and elapsed < 300, f"{elapsed:.1f}s")
    assert mismatches == 0
    assert elapsed < 300


def test_criterion_7a_line_graph_gadget():
    start = time.time()
    failures = []

    def check(h):
        inst = gadget_linegraph_bipartite(h)
        g = inst.graph
        if enumerate_components(g, CLOSED_TCC).max_size != oracle.oracle_biclique_edges(h):
            failures.append(("closed-tcc", h))
        if enumerate_components(g, TCC).max_size != oracle.oracle_biclique_edges(h):
            failures.append(("tcc", h))
        if enumerate_components(g, CLOSED_TUCC).max_size != oracle.oracle_2k2free_edges(h):
            failures.append(("closed-tucc", h))
        if enumerate_components(g, TUCC).max_size != oracle.oracle_2k2free_edges(h):
            failures.append(("tucc", h))

    for h in all_bipartite(3, 3):
        check(h)
    rng = random.Random(20260404)
    for _ in range(100):
        check(random_bipartite_graph(rng, 4, 4))
    elapsed = time.time() - start
    report("7a (line-graph gadget)", not failures and elapsed < 300, f"{elapsed:.1f}s")
    assert not failures
    assert elapsed < 300


def _iso_corpus():
    reps = []
    for n in range(1, 6):
        reps.extend(iso_classes(n))
    return reps


def test_criterion_7b_mirrored_clique_gadget():
    start = time.time()
    failures = []
    for g in _iso_corpus():
        omega = oracle.oracle_max_clique(g)
        inst = gadget_clique_tcc(g)
        best = enumerate_components(inst.graph, TCC).max_size
        for k in (3, 4, 5):
            if (omega >= k) != (best >= 2 * k):
                failures.append((list(g.edges), k))
    elapsed = time.time() - start
    report("7b (mirrored clique gadget)", not failures and elapsed < 300, f"{elapsed:.1f}s")
    assert not failures
    assert elapsed < 300


def test_criterion_7c_directed_lifetime2_gadget():
    start = time.time()
    failures = []
    for g in _iso_corpus():
        omega = oracle.oracle_max_clique(g)
        inst = gadget_clique_dir_tau2(g)
        if g.edges and inst.graph.tau != 2:
            failures.append(("lifetime", list(g.edges)))
        best_tcc = enumerate_components(inst.graph, TCC).max_size
        best_tucc = enumerate_components(inst.graph, TUCC).max_size
        for k in (3, 4, 5):
            if (omega >= k) != (best_tcc >= k):
                failures.append(("tcc", list(g.edges), k, omega, best_tcc))
            if (omega >= k) != (best_tucc >= k):
                failures.append(("tucc", list(g.edges), k, omega, best_tucc))
    elapsed = time.time() - start
    report(
        "7c (directed lifetime-2 gadget)",
        not failures,
        f"{elapsed:.1f}s; known-red: hub vertices give size-3 unilateral sets, "
        f"so the tucc claim fails at k=3 on triangle-free inputs with an edge",
    )
    assert not failures, (
        "the stated k-clique <-> tucc >= k equivalence is false at k=3: a hub "
        "vertex h with arcs u->h(1), h->v(2) forms the unilateral set {u,h,v}; "
        f"first counterexamples: {failures[:3]}"
    )
    assert elapsed < 300


def test_criterion_7d_inout_split_gadget():
    start = time.time()
    failures = []
    for g in _iso_corpus():
        omega = oracle.oracle_max_clique(g)
        mutual = gadget_clique_closed_dir_tau3(g)
        unilateral = gadget_clique_closed_dir_tau3(g, unilateral=True)
        if g.n and (mutual.graph.tau != 3 or unilateral.graph.tau != 3):
            failures.append(("lifetime", list(g.edges)))
        best_m = enumerate_components(mutual.graph, CLOSED_TCC).max_size
        best_u = enumerate_components(unilateral.graph, CLOSED_TUCC).max_size
        for k in (3, 4, 5):
            if (omega >= k) != (best_m >= 2 * k):
                failures.append(("closed-tcc", list(g.edges), k))
            if (omega >= k) != (best_u >= 2 * k):
                failures.append(("closed-tucc", list(g.edges), k))
    elapsed = time.time() - start
    report("7d (in/out split gadget)", not failures and elapsed < 300, f"{elapsed:.1f}s")
    assert not failures
    assert elapsed < 300


def test_criterion_7e_two_club_gadget():
    start = time.time()
    failures = []
    for n in range(1, 6):
        for g in all_graphs(n):
            strict_inst = None
            for xbits in range(1 << n):
                members = [v for v in range(n) if xbits >> v & 1]
                left = oracle.oracle_is_maximal_2club(g, members)
                inst = gadget_2club(g, members)
                y = inst.equivalence.source["y_set"]
                got_tcc = is_maximal_component(inst.graph, y, CLOSED_TCC)
                got_tucc = is_maximal_component(inst.graph, y, CLOSED_TUCC)
                strict_inst = gadget_2club_strict(g, members)
                got_strict = is_maximal_component(
                    strict_inst.graph, members, ComponentQuery(Kind.MUTUAL, True, ST)
                )
                got_strict_uni = is_maximal_component(
                    strict_inst.graph, members, ComponentQuery(Kind.UNILATERAL, True, ST)
                )
                if not left == got_tcc == got_tucc == got_strict == got_strict_uni:
                    failures.append((list(g.edges), members))
    elapsed = time.time() - start
    report("7e (two-club gadget)", not failures and elapsed < 300, f"{elapsed:.1f}s")
    assert not failures
    assert elapsed < 300


def test_criterion_7f_sat_connectivity_gadgets():
    start = time.time()
    failures = []

    def check(phi):
        sat = oracle.oracle_sat(phi)
        conn = gadget_sat_connected(phi)
        uni = gadget_sat_unilateral(phi)
        if conn.graph.tau != 8 or uni.graph.tau != 7:
            failures.append(("lifetime", phi))
        if sat == is_temporally_connected(conn.graph, Kind.MUTUAL, NS):
            failures.append(("connected", phi))
        if sat == is_temporally_connected(uni.graph, Kind.UNILATERAL, NS):
            failures.append(("unilateral", phi))

    for m in range(1, 5):
        for clauses in itertools.combinations(clause_universe(1), m):
            check(SatInstance(1, 1, tuple(clauses)))
    universe2 = clause_universe(2)
    for m in range(1, 5):
        for clauses in itertools.combinations(universe2, m):
            check(SatInstance(2, 2, tuple(clauses)))
    rng = random.Random(20260405)
    for _ in range(100):
        check(random_sat_instance(rng, 3, rng.randint(1, 5)))
    elapsed = time.time() - start
    report("7f (sat gadgets)", not failures and elapsed < 300, f"{elapsed:.1f}s")
    assert not failures
    assert elapsed < 300


def test_criterion_8_structural_counts():
    start = time.time()
    bad = []
    for g in _iso_corpus():
        n, m = g.n, len(g.edges)
        inst = gadget_clique_tcc(g)
        if (inst.graph.n, inst.graph.tau, inst.graph.M) != (2 * n + 4 * m, 4 * m if m else 0, n + 8 * m):
            bad.append(("clique-tcc", n, m))
        inst = gadget_clique_dir_tau2(g)
        if (inst.graph.n, inst.graph.tau, inst.graph.M) != (n + 2 * m, 2 if m else 0, 4 * m):
            bad.append(("dir-tau2", n, m))
        inst = gadget_clique_closed_dir_tau3(g)
        if (inst.graph.n, inst.graph.tau, inst.graph.M) != (2 * n, 3 if n else 0, 4 * n + 2 * m):
            bad.append(("closed-dir-tau3", n, m))
        inst = gadget_clique_closed_dir_tau3(g, unilateral=True)
        if (inst.graph.n, inst.graph.tau, inst.graph.M) != (2 * n, 3 if n else 0, 4 * n + m):
            bad.append(("closed-dir-tau3-uni", n, m))
        inst = gadget_2club(g, range(n))
        if (inst.graph.n, inst.graph.tau, inst.graph.M) != (n + 2 * m, 5 if m else 0, 8 * m):
            bad.append(("two-club", n, m))
        inst = gadget_2club_strict(g, range(n))
        if (inst.graph.n, inst.graph.tau, inst.graph.M) != (n, 2 if m else 0, 2 * m):
            bad.append(("two-club-strict", n, m))
    for h in itertools.islice(all_bipartite(3, 3), 0, None, 7):
        inst = gadget_linegraph_bipartite(h)
        deg_x = [sum(1 for e in h.edges if e[0] == x) for x in range(h.nx)]
        deg_y = [sum(1 for e in h.edges if e[1] == y) for y in range(h.ny)]
        expect_m = sum(d * (d - 1) // 2 for d in deg_x + deg_y)
        tau = 2 if any(d > 1 for d in deg_y) else (1 if any(d > 1 for d in deg_x) else 0)
        if (inst.graph.n, inst.graph.tau, inst.graph.M) != (len(h.edges), tau, expect_m):
            bad.append(("line-bipartite", h.edges))
    rng = random.Random(20260406)
    for _ in range(60):
        nvars = rng.randint(1, 3)
        phi = random_sat_instance(rng, nvars, rng.randint(1, 5))
        half = 1 << nvars
        fail_x = sum(
            1 for c in phi.clauses for b in range(half) if phi.side_blocks_clause("x", b, c)
        )
        fail_y = sum(
            1 for c in phi.clauses for b in range(half) if phi.side_blocks_clause("y", b, c)
        )
        conn = gadget_sat_connected(phi).graph
        if (conn.n, conn.tau, conn.M) != (
            2 * half + phi.m + 1, 8, 3 * half + 4 * phi.m * half + fail_x + fail_y
        ):
            bad.append(("sat-conn", phi.nx, phi.m))
        uni = gadget_sat_unilateral(phi).graph
        if (uni.n, uni.tau, uni.M) != (
            2 * half + phi.m + 3, 7, 6 * half + 3 * phi.m + 3 + fail_x + fail_y
        ):
            bad.append(("sat-uni", phi.nx, phi.m))
    elapsed = time.time() - start
    report("8 (structural counts)", not bad, f"{elapsed:.1f}s")
    assert not bad


def _run_cli(*argv) -> tuple[int, str]:
    out = io.StringIO()
    code = cli_main(list(argv), out=out)
    return code, out.getvalue()


def test_criterion_9_determinism(tmp_path):
    graph_path = tmp_path / "fig1.tg"
    graph_path.write_text(FIG1_TEXT, encoding="utf-8")
    comp_args = ("components", "--input", str(graph_path), "--kind", "tucc",
                 "--closed", "--format", "json")
    ok = _run_cli(*comp_args) == _run_cli(*comp_args)
    selftest_args = ("selftest", "--trials", "25", "--max-n", "7", "--seed", "11",
                     "--dump-prefix", str(tmp_path / "cx"))
    ok &= _run_cli(*selftest_args) == _run_cli(*selftest_args)
    report("9 (determinism)", ok)
    assert ok
