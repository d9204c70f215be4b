"""Seeded random instance generators for self-tests and property suites."""

from __future__ import annotations

import random

from .core import TemporalGraph, temporal_graph
from .gadgets import BipartiteGraph, Literal, SatInstance, SimpleGraph


def random_temporal_graph(
    rng: random.Random,
    max_n: int,
    max_tau: int,
    directed: bool | None = None,
    edge_prob: float | None = None,
    min_label: int = 1,
) -> TemporalGraph:
    """A random temporal graph with n in [1, max_n] and labels in
    [min_label, max(tau_target, min_label)]."""
    n = rng.randint(1, max_n)
    if directed is None:
        directed = rng.random() < 0.5
    tau_target = rng.randint(max(1, min_label), max(max_tau, min_label, 1))
    p = edge_prob if edge_prob is not None else rng.uniform(0.1, 0.5)
    edges = []
    pairs = (
        [(u, v) for u in range(n) for v in range(n) if u != v]
        if directed
        else [(u, v) for u in range(n) for v in range(u + 1, n)]
    )
    for u, v in pairs:
        if rng.random() < p:
            count = rng.randint(1, min(3, tau_target - min_label + 1))
            labels = rng.sample(range(min_label, tau_target + 1), count)
            edges.append((u, v, labels))
    return temporal_graph(directed, n, edges)


def random_simple_graph(rng: random.Random, n: int, edge_prob: float = 0.5) -> SimpleGraph:
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < edge_prob
    ]
    return SimpleGraph(n, tuple(edges))


def random_bipartite_graph(
    rng: random.Random, nx: int, ny: int, edge_prob: float = 0.5
) -> BipartiteGraph:
    """Random bipartite graph with at least one edge."""
    edges = [(x, y) for x in range(nx) for y in range(ny) if rng.random() < edge_prob]
    if not edges:
        edges = [(rng.randrange(nx), rng.randrange(ny))]
    return BipartiteGraph(nx, ny, tuple(edges))


def random_sat_instance(
    rng: random.Random, n: int, m: int, max_clause: int = 3
) -> SatInstance:
    """Random CNF over x1..xn / y1..yn without repeated variables per clause."""
    variables = [("x", i + 1) for i in range(n)] + [("y", i + 1) for i in range(n)]
    clauses = []
    for _ in range(m):
        width = rng.randint(1, min(max_clause, len(variables)))
        picked = rng.sample(variables, width)
        clauses.append(
            tuple(Literal(side, idx, rng.random() < 0.5) for side, idx in picked)
        )
    return SatInstance(n, n, tuple(clauses))
