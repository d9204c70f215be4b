"""Parameter-bounded component search for undirected graphs, non-strict model.

Each of the four kinds gets a trivial-yes test plus a neighborhood-subset
search in the candidate graph (symmetric core for mutual kinds, underlying
reachability graph for unilateral kinds).  When no trivial-yes fires, the
candidate degrees are provably capped: (k-1)^tau for mutual kinds once every
snapshot component has fewer than k vertices, (k-2)^(k-1) for unilateral
kinds once every static degree is below k-1 and every temporal path spans
fewer than k vertices.  Those caps are asserted at runtime in debug mode.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .components import ComponentQuery, ConnectivityChecker, Kind, UnsupportedQueryError
from .core import Model, TemporalGraph
from .reachability import StaticGraph, iter_bits, mask_of


class CapOverflowError(OverflowError):
    """A degree cap exceeds the configured integer width; search refuses."""


CAP_WIDTH_BITS = 63


def degree_caps(k: int, tau: int, kind: Kind, width_bits: int = CAP_WIDTH_BITS) -> int:
    """Candidate-degree cap: (k-1)^tau for mutual, (k-2)^(k-1) for unilateral."""
    if k < 2:
        raise ValueError("caps are defined for k >= 2")
    cap = (k - 1) ** tau if kind is Kind.MUTUAL else (k - 2) ** (k - 1)
    if cap.bit_length() > width_bits:
        raise CapOverflowError(f"degree cap needs {cap.bit_length()} bits (limit {width_bits})")
    return cap


@dataclass(frozen=True)
class FptBudget:
    """Derived caps and trivial-yes bookkeeping for one (k, tau) search."""

    k: int
    tau: int
    mutual_cap: int
    unilateral_cap: int
    trivial_yes: str | None = None

    @classmethod
    def derive(cls, k: int, tau: int) -> "FptBudget":
        return cls(k, tau, degree_caps(k, tau, Kind.MUTUAL), degree_caps(k, tau, Kind.UNILATERAL))


def _static_adjacency(g: TemporalGraph) -> StaticGraph:
    adj = [0] * g.n
    for e in g.edges:
        adj[e.tail] |= 1 << e.head
        adj[e.head] |= 1 << e.tail
    return StaticGraph(g.n, tuple(adj))


def _snapshot_component_witness(checker: ConnectivityChecker, k: int) -> tuple[int, ...] | None:
    """Any snapshot component with >= k vertices (a closed connected set)."""
    for t in checker.engine.times:
        comps = sorted(checker.engine.snapshot_components(t), key=lambda m: m & -m)
        for comp in comps:
            if comp.bit_count() >= k:
                return tuple(iter_bits(comp))
    return None


def _temporal_path_witness(g: TemporalGraph, k: int) -> tuple[int, ...] | None:
    """Vertex set of some temporal path on exactly k vertices (non-strict);
    such a set is closed unilaterally connected via its subpaths."""
    arcs: dict[int, list[tuple[int, int]]] = {}
    for e in g.edges:
        for t in e.labels:
            arcs.setdefault(e.tail, []).append((t, e.head))
            arcs.setdefault(e.head, []).append((t, e.tail))
    for adj in arcs.values():
        adj.sort()

    def extend(v: int, last: int, visited: int, length: int) -> tuple[int, ...] | None:
        if length == k:
            return tuple(iter_bits(visited))
        for t, w in arcs.get(v, ()):  # labels ascending, heads ascending per label
            if t >= last and not visited >> w & 1:
                hit = extend(w, t, visited | 1 << w, length + 1)
                if hit is not None:
                    return hit
        return None

    for start in range(g.n):
        hit = extend(start, 0, 1 << start, 1)
        if hit is not None:
            return hit
    return None


def _clique_subset_search(
    checker: ConnectivityChecker,
    cand: StaticGraph,
    k: int,
    query: ComponentQuery,
) -> tuple[int, ...] | None:
    """Closed kinds: grow cliques of the candidate graph rooted at each
    vertex and test each of size >= k for closed connectivity."""
    adj = cand.adj_masks

    def grow(base: int, extensions: int) -> tuple[int, ...] | None:
        if base.bit_count() >= k and checker.closed_ok(base, query.kind):
            return tuple(iter_bits(base))
        for v in iter_bits(extensions):
            bit = 1 << v
            hit = grow(base | bit, extensions & adj[v] & ~(bit | bit - 1))
            if hit is not None:
                return hit
        return None

    for u in range(cand.n):
        hit = grow(1 << u, adj[u] & ~((1 << u + 1) - 1))
        if hit is not None:
            return hit
    return None


def _open_subset_search(cand: StaticGraph, k: int) -> tuple[int, ...] | None:
    """Open kinds: any k-clique of the candidate graph is a witness."""
    adj = cand.adj_masks
    for u in range(cand.n):
        nbrs = sorted(iter_bits(adj[u]))
        for chosen in combinations(nbrs, k - 1):
            mask = mask_of(chosen) | 1 << u
            if all(not mask & ~(adj[v] | 1 << v) for v in chosen):
                return tuple(iter_bits(mask))
    return None


def fpt_find(g: TemporalGraph, query: ComponentQuery, k: int) -> tuple[int, ...] | None:
    """A connected set of size >= k of the queried kind, or None.

    Supports undirected graphs under the non-strict model only (the
    snapshot-component argument behind the mutual trivial-yes is specific to
    that setting); anything else raises, never silently falls back.
    """
    if g.directed:
        raise UnsupportedQueryError("fpt search supports undirected graphs only")
    if query.model is not Model.NON_STRICT:
        raise UnsupportedQueryError("fpt search supports the non-strict model only")
    if k < 1:
        raise ValueError("k must be positive")
    if k == 1:
        return (0,) if g.n else None

    checker = ConnectivityChecker(g, Model.NON_STRICT)
    if k == 2:
        if query.closed:
            for e in sorted(g.edges, key=lambda e: (e.tail, e.head)):
                return (e.tail, e.head)
            return None
        cand = checker.candidate_graph(query.kind)
        for u in range(g.n):
            if cand.adj_masks[u]:
                return (u, min(iter_bits(cand.adj_masks[u])))
        return None

    if query.kind is Kind.MUTUAL:
        witness = _snapshot_component_witness(checker, k)
        if witness is not None:
            return witness
        # The cap exponent counts expansion rounds, i.e. distinct timesteps
        # carrying edges; with labels drawn from 1..tau that is at most tau.
        rounds = len(checker.engine.times)
        cap = degree_caps(k, rounds, Kind.MUTUAL)
        cand = checker.candidate_graph(Kind.MUTUAL)
        assert all(m.bit_count() <= cap for m in cand.adj_masks), "mutual degree cap violated"
    else:
        static = _static_adjacency(g)
        for u in range(g.n):
            if static.adj_masks[u].bit_count() >= k - 1:
                nbrs = sorted(iter_bits(static.adj_masks[u]))[: k - 1]
                return tuple(sorted([u] + nbrs))
        witness = _temporal_path_witness(g, k)
        if witness is not None:
            return witness
        cap = degree_caps(k, g.tau, Kind.UNILATERAL)
        cand = checker.candidate_graph(Kind.UNILATERAL)
        assert all(m.bit_count() <= cap for m in cand.adj_masks), "unilateral degree cap violated"

    if query.closed:
        return _clique_subset_search(checker, cand, k, query)
    return _open_subset_search(cand, k)
