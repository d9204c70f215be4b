import random
from itertools import chain, combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import vertices
from tgc import oracle
from tgc.components import (
    Budget,
    BudgetExceededError,
    ComponentQuery,
    Kind,
    enumerate_components,
    has_component_of_size,
    is_connected_set,
    is_maximal_component,
    is_temporally_connected,
)
from tgc.core import Model, temporal_graph
from tgc.randgen import random_temporal_graph

NS = Model.NON_STRICT

TCC = ComponentQuery(Kind.MUTUAL, False, NS)
TUCC = ComponentQuery(Kind.UNILATERAL, False, NS)
CLOSED_TCC = ComponentQuery(Kind.MUTUAL, True, NS)
CLOSED_TUCC = ComponentQuery(Kind.UNILATERAL, True, NS)


class TestConnectedSet:
    def test_fig1_caption_sets(self, fig1):
        assert is_connected_set(fig1, vertices(fig1, "ab"), CLOSED_TCC)
        assert is_connected_set(fig1, vertices(fig1, "abcd"), CLOSED_TCC)
        assert not is_connected_set(fig1, vertices(fig1, "abcde"), CLOSED_TCC)
        assert is_connected_set(fig1, vertices(fig1, "abcde"), CLOSED_TUCC)
        assert is_connected_set(fig1, vertices(fig1, "abcde"), TCC)
        assert is_connected_set(fig1, vertices(fig1, "abcdef"), TUCC)
        assert not is_connected_set(fig1, vertices(fig1, "abcdef"), TCC)

    def test_non_heredity_regression(self, fig1):
        # dropping d from the closed set {a,b,c,d} strands c
        assert is_connected_set(fig1, vertices(fig1, "abcd"), CLOSED_TCC)
        assert not is_connected_set(fig1, vertices(fig1, "abc"), CLOSED_TCC)

    def test_trivial_sets(self, fig1):
        for query in (TCC, TUCC, CLOSED_TCC, CLOSED_TUCC):
            assert is_connected_set(fig1, [], query)
            assert is_connected_set(fig1, [3], query)

    def test_invalid_vertex(self, fig1):
        with pytest.raises(ValueError):
            is_connected_set(fig1, [99], TCC)


class TestTemporallyConnected:
    def test_fig1(self, fig1):
        assert not is_temporally_connected(fig1, Kind.MUTUAL, NS)
        assert is_temporally_connected(temporal_graph(True, 1, []), Kind.MUTUAL, NS)

    def test_two_cycle(self):
        g = temporal_graph(True, 2, [(0, 1, [1]), (1, 0, [2])])
        assert is_temporally_connected(g, Kind.MUTUAL, NS)


class TestMaximality:
    def test_fig1_closed_tcc(self, fig1):
        assert is_maximal_component(fig1, vertices(fig1, "abcd"), CLOSED_TCC)
        assert not is_maximal_component(fig1, vertices(fig1, "ab"), CLOSED_TCC)

    def test_fig1_open_kinds(self, fig1):
        assert is_maximal_component(fig1, vertices(fig1, "abcdef"), TUCC)
        assert is_maximal_component(fig1, vertices(fig1, "abcde"), TCC)
        assert not is_maximal_component(fig1, vertices(fig1, "abcd"), TCC)

    def test_empty_set_is_never_maximal(self, fig1):
        assert not is_maximal_component(fig1, [], TCC)
        assert not is_maximal_component(fig1, [], CLOSED_TCC)

    def test_superset_budget(self, fig1):
        tiny = Budget(max_supersets=0)
        with pytest.raises(BudgetExceededError):
            is_maximal_component(fig1, vertices(fig1, "ab"), CLOSED_TCC, tiny)


class TestEnumeration:
    def test_fig1_expected_components(self, fig1):
        tccs = enumerate_components(fig1, TCC).components
        assert tuple(vertices(fig1, "abcde")) in tccs
        closed = enumerate_components(fig1, CLOSED_TCC).components
        assert tuple(vertices(fig1, "abcd")) in closed
        tuccs = enumerate_components(fig1, TUCC).components
        assert tuple(vertices(fig1, "abcdef")) in tuccs

    def test_tau1_undirected_matches_static_components(self):
        g = temporal_graph(False, 5, [(0, 1, [1]), (1, 2, [1]), (3, 4, [1])])
        report = enumerate_components(g, TCC)
        assert report.components == ((0, 1, 2), (3, 4))
        assert report.max_size == 2 + 1

    def test_edgeless_open_kinds_are_singletons(self):
        g = temporal_graph(True, 3, [])
        for query in (TCC, TUCC):
            assert enumerate_components(g, query).components == ((0,), (1,), (2,))

    def test_report_is_canonical(self, fig1):
        report = enumerate_components(fig1, CLOSED_TUCC)
        assert list(report.components) == sorted(report.components)
        assert all(list(c) == sorted(c) for c in report.components)
        assert report.count == len(report.components)

    def test_every_output_passes_set_and_maximality_checks(self, fig1):
        for query in (TCC, TUCC, CLOSED_TCC, CLOSED_TUCC):
            for comp in enumerate_components(fig1, query).components:
                assert is_connected_set(fig1, comp, query)
                assert is_maximal_component(fig1, comp, query)

    def test_clique_budget(self, fig1):
        with pytest.raises(BudgetExceededError):
            enumerate_components(fig1, TUCC, Budget(max_cliques=1))

    def test_subset_budget(self, fig1):
        with pytest.raises(BudgetExceededError):
            enumerate_components(fig1, CLOSED_TCC, Budget(max_subsets_per_clique=2))

    def test_matches_oracle_all_kinds(self):
        rng = random.Random(9)
        for trial in range(40):
            g = random_temporal_graph(rng, 7, 4, directed=trial % 2 == 0)
            for kind in (Kind.MUTUAL, Kind.UNILATERAL):
                for closed in (False, True):
                    for model in (Model.NON_STRICT, Model.STRICT):
                        q = ComponentQuery(kind, closed, model)
                        assert (
                            enumerate_components(g, q).components
                            == oracle.oracle_enumerate_components(g, q).components
                        )


class TestWitnessSearch:
    def test_fig1_witnesses(self, fig1):
        assert has_component_of_size(fig1, TCC, 5) == tuple(vertices(fig1, "abcde"))
        assert has_component_of_size(fig1, TCC, 7) is None
        assert has_component_of_size(fig1, TCC, 1) == (0,)

    def test_whole_vertex_set_allowed(self):
        g = temporal_graph(True, 2, [(0, 1, [1]), (1, 0, [2])])
        assert has_component_of_size(g, TCC, 2) == (0, 1)
        assert is_maximal_component(g, [0, 1], TCC)

    def test_closed_witness_can_exceed_k(self, fig1):
        witness = has_component_of_size(fig1, CLOSED_TCC, 3)
        assert witness is not None and len(witness) >= 3
        assert is_connected_set(fig1, witness, CLOSED_TCC)

    def test_k_validation(self, fig1):
        with pytest.raises(ValueError):
            has_component_of_size(fig1, TCC, 0)
        with pytest.raises(ValueError):
            has_component_of_size(fig1, TCC, 2, algo="magic")

    def test_brute_budget(self, fig1):
        with pytest.raises(BudgetExceededError):
            has_component_of_size(fig1, TCC, 6, algo="brute", budget=Budget(max_brute_subsets=1))

    def test_auto_dispatch_on_directed_uses_brute(self, fig1):
        # directed input: auto must not touch the fpt path
        assert has_component_of_size(fig1, TCC, 5, algo="auto") is not None


def subsets(items):
    return chain.from_iterable(combinations(items, r) for r in range(len(items) + 1))


class TestStructuralProperties:
    def test_heredity_of_open_kinds(self):
        rng = random.Random(13)
        for trial in range(25):
            g = random_temporal_graph(rng, 7, 4, directed=trial % 2 == 0)
            for query in (TCC, TUCC):
                for comp in enumerate_components(g, query).components:
                    for sub in subsets(comp):
                        assert is_connected_set(g, sub, query)

    def test_containment_between_kinds(self):
        rng = random.Random(14)
        for _ in range(25):
            g = random_temporal_graph(rng, 7, 4)
            for closed in (False, True):
                mutual_q = ComponentQuery(Kind.MUTUAL, closed, NS)
                for comp in enumerate_components(g, mutual_q).components:
                    assert is_connected_set(g, comp, ComponentQuery(Kind.UNILATERAL, closed, NS))
            for kind in (Kind.MUTUAL, Kind.UNILATERAL):
                closed_q = ComponentQuery(kind, True, NS)
                for comp in enumerate_components(g, closed_q).components:
                    assert is_connected_set(g, comp, ComponentQuery(kind, False, NS))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.integers(2, 6))
def test_random_subsets_of_open_sets_stay_connected(seed, size):
    rng = random.Random(seed)
    g = random_temporal_graph(rng, size, 3)
    witness = has_component_of_size(g, TUCC, min(2, g.n), algo="brute")
    if witness is None:
        return
    for sub in subsets(witness):
        assert is_connected_set(g, sub, TUCC)
