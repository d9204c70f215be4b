"""Connected-set checks, component enumeration and maximality for the four
component notions (mutual/unilateral x open/closed).

Open kinds reduce to cliques of the reachability digraph: mutual sets are
cliques of its symmetric core, unilateral sets cliques of its underlying
graph.  Closed kinds are decided on the induced temporal subgraph and, since
closedness is not hereditary, enumeration and maximality fall back to
budgeted exponential search pruned to cliques of the reachability digraph
(every closed connected set is one).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .core import Model, TemporalGraph
from .reachability import (
    ReachabilityDigraph,
    ReachabilityEngine,
    StaticGraph,
    iter_bits,
    mask_of,
    symmetric_core,
    underlying_core,
)


class Kind(enum.Enum):
    MUTUAL = "mutual"
    UNILATERAL = "unilateral"


@dataclass(frozen=True)
class ComponentQuery:
    """One of the four component notions plus the walk model.

    (mutual, open) = tcc, (unilateral, open) = tucc, and the closed variants
    require the witnessing walks to stay inside the set.
    """

    kind: Kind
    closed: bool
    model: Model

    def describe(self) -> str:
        name = "tcc" if self.kind is Kind.MUTUAL else "tucc"
        return ("closed " if self.closed else "") + name


@dataclass(frozen=True)
class ComponentReport:
    query: ComponentQuery
    components: tuple[tuple[int, ...], ...]
    count: int = field(init=False, compare=False)
    max_size: int = field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "count", len(self.components))
        object.__setattr__(self, "max_size", max((len(c) for c in self.components), default=0))

    @classmethod
    def build(cls, query: ComponentQuery, sets: Iterable[Iterable[int]]) -> "ComponentReport":
        canon = sorted(tuple(sorted(s)) for s in sets)
        return cls(query, tuple(canon))


@dataclass(frozen=True)
class Budget:
    """Hard limits for the exponential searches; exceeding one raises."""

    max_cliques: int = 200_000
    max_subsets_per_clique: int = 1 << 20
    max_supersets: int = 1 << 20
    max_brute_subsets: int = 1 << 22


DEFAULT_BUDGET = Budget()


class BudgetExceededError(RuntimeError):
    """A configured resource budget was exhausted before an answer."""


class UnsupportedQueryError(ValueError):
    """The requested algorithm does not support this graph/model/query."""


class ConnectivityChecker:
    """Per-graph cache of reachability sweeps for repeated set checks."""

    def __init__(self, g: TemporalGraph, model: Model):
        self.g = g
        self.model = model
        self.engine = ReachabilityEngine(g)
        self._reach: dict[int, int] = {}
        self._closed: dict[tuple[int, Kind], bool] = {}
        self._digraph: ReachabilityDigraph | None = None

    def reach(self, u: int) -> int:
        m = self._reach.get(u)
        if m is None:
            m = self.engine.reach_mask(u, self.model)
            self._reach[u] = m
        return m

    def digraph(self) -> ReachabilityDigraph:
        if self._digraph is None:
            masks = self.engine.reach_all(self.model)
            self._digraph = ReachabilityDigraph(
                self.g.n, self.model, tuple(masks[u] & ~(1 << u) for u in range(self.g.n))
            )
            self._reach.update(masks)
        return self._digraph

    def open_ok(self, mask: int, kind: Kind) -> bool:
        members = list(iter_bits(mask))
        if kind is Kind.MUTUAL:
            return all(not mask & ~(self.reach(u) | 1 << u) for u in members)
        for i, u in enumerate(members):
            ru = self.reach(u)
            for v in members[i + 1:]:
                if not (ru >> v & 1 or self.reach(v) >> u & 1):
                    return False
        return True

    def closed_ok(self, mask: int, kind: Kind) -> bool:
        key = (mask, kind)
        cached = self._closed.get(key)
        if cached is not None:
            return cached
        members = list(iter_bits(mask))
        local = self.engine.reach_all(self.model, restrict=mask, sources=members)
        if kind is Kind.MUTUAL:
            ok = all(not mask & ~local[u] for u in members)
        else:
            ok = True
            for i, u in enumerate(members):
                for v in members[i + 1:]:
                    if not (local[u] >> v & 1 or local[v] >> u & 1):
                        ok = False
                        break
                if not ok:
                    break
        self._closed[key] = ok
        return ok

    def set_ok(self, mask: int, query: ComponentQuery) -> bool:
        if mask.bit_count() <= 1:
            return True
        if query.closed:
            return self.closed_ok(mask, query.kind)
        return self.open_ok(mask, query.kind)

    def candidate_graph(self, kind: Kind) -> StaticGraph:
        """Cliques of this graph are the only possible connected sets of the
        kind: symmetric core for mutual, underlying graph for unilateral."""
        r = self.digraph()
        return symmetric_core(r) if kind is Kind.MUTUAL else underlying_core(r)


def _validated_mask(g: TemporalGraph, vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
        mask |= 1 << v
    return mask


def is_connected_set(g: TemporalGraph, vertices: Iterable[int], query: ComponentQuery) -> bool:
    """Pairwise reachability over the whole graph (open) or inside the set
    (closed); empty and singleton sets are connected by convention."""
    mask = _validated_mask(g, vertices)
    return ConnectivityChecker(g, query.model).set_ok(mask, query)


def is_temporally_connected(g: TemporalGraph, kind: Kind, model: Model) -> bool:
    """Whether V(G) is one (open) connected set of the given kind."""
    return is_connected_set(g, range(g.n), ComponentQuery(kind, False, model))


def maximal_cliques(graph: StaticGraph, max_cliques: int = DEFAULT_BUDGET.max_cliques):
    """Maximal cliques of a static graph, pivoting Bron-Kerbosch.

    Output is canonical: each clique sorted, cliques sorted lexicographically.
    """
    found: list[int] = []
    adj = graph.adj_masks

    def extend(r: int, p: int, x: int):
        if not p and not x:
            if len(found) >= max_cliques:
                raise BudgetExceededError(f"more than {max_cliques} maximal cliques")
            found.append(r)
            return
        pivot = -1
        best = -1
        for u in iter_bits(p | x):
            score = (adj[u] & p).bit_count()
            if score > best:
                best, pivot = score, u
        for v in iter_bits(p & ~adj[pivot]):
            bit = 1 << v
            extend(r | bit, p & adj[v], x & adj[v])
            p &= ~bit
            x |= bit

    if graph.n:
        extend(0, (1 << graph.n) - 1, 0)
    return sorted(tuple(iter_bits(m)) for m in found)


def enumerate_components(
    g: TemporalGraph, query: ComponentQuery, budget: Budget = DEFAULT_BUDGET
) -> ComponentReport:
    """All components of the queried kind, canonically ordered.

    Open kinds are exactly the maximal cliques of the candidate graph; closed
    kinds scan the subsets of each maximal clique for closed connected sets
    (deduplicated across cliques) and keep the inclusion-maximal ones.
    """
    checker = ConnectivityChecker(g, query.model)
    cliques = maximal_cliques(checker.candidate_graph(query.kind), budget.max_cliques)
    if not query.closed:
        return ComponentReport.build(query, cliques)
    tested: dict[int, bool] = {}
    for clique in cliques:
        if 1 << len(clique) > budget.max_subsets_per_clique:
            raise BudgetExceededError(
                f"clique of size {len(clique)} exceeds the per-clique subset budget"
            )
        full = mask_of(clique)
        sub = full
        while sub:
            if sub not in tested:
                tested[sub] = checker.closed_ok(sub, query.kind)
            sub = (sub - 1) & full
    good = sorted((m for m, ok in tested.items() if ok), key=lambda m: -m.bit_count())
    maximal: list[int] = []
    for mask in good:
        if not any(mask & ~kept == 0 for kept in maximal):
            maximal.append(mask)
    return ComponentReport.build(query, (tuple(iter_bits(m)) for m in maximal))


def is_maximal_component(
    g: TemporalGraph,
    vertices: Iterable[int],
    query: ComponentQuery,
    budget: Budget = DEFAULT_BUDGET,
) -> bool:
    """Whether the set is a component: a connected set of its kind with no
    proper connected superset.

    Open kinds only need single-vertex extensions (connectivity is
    hereditary there); closed kinds search all supersets, pruned to cliques
    of the candidate graph and bounded by the superset budget.
    """
    mask = _validated_mask(g, vertices)
    if mask == 0:
        return False
    checker = ConnectivityChecker(g, query.model)
    if not checker.set_ok(mask, query):
        return False
    if not query.closed:
        return not any(
            checker.set_ok(mask | 1 << v, query) for v in range(g.n) if not mask >> v & 1
        )
    cand = checker.candidate_graph(query.kind)
    common = -1
    for u in iter_bits(mask):
        common &= cand.adj_masks[u]
    common &= ~mask & (1 << g.n) - 1
    tested = 0

    def grows(extension: int, candidates: int) -> bool:
        nonlocal tested
        for v in iter_bits(candidates):
            bit = 1 << v
            tested += 1
            if tested > budget.max_supersets:
                raise BudgetExceededError(f"more than {budget.max_supersets} supersets tested")
            bigger = extension | bit
            if checker.closed_ok(mask | bigger, query.kind):
                return True
            if grows(bigger, candidates & cand.adj_masks[v] & ~(bit - 1) & ~bit):
                return True
        return False

    return not grows(0, common)


def has_component_of_size(
    g: TemporalGraph,
    query: ComponentQuery,
    k: int,
    algo: str = "auto",
    budget: Budget = DEFAULT_BUDGET,
) -> tuple[int, ...] | None:
    """A connected set of size >= k of the queried kind, or None.

    A set witness suffices: a component of size >= k exists iff a connected
    set of size >= k does.  ``algo`` picks brute-force subset scan, the
    parameter-bounded search (undirected, non-strict only), or auto dispatch.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if algo not in ("auto", "brute", "fpt"):
        raise ValueError(f"unknown algorithm {algo!r}")
    if algo == "fpt" or (algo == "auto" and not g.directed and query.model is Model.NON_STRICT):
        from . import fpt

        if algo == "fpt":
            return fpt.fpt_find(g, query, k)
        try:
            return fpt.fpt_find(g, query, k)
        except fpt.CapOverflowError:
            pass  # caps too large to certify; auto falls back to brute force
    checker = ConnectivityChecker(g, query.model)
    sizes = range(k, k + 1) if not query.closed else range(k, g.n + 1)
    tested = 0
    for size in sizes:
        for comb in combinations(range(g.n), size):
            tested += 1
            if tested > budget.max_brute_subsets:
                raise BudgetExceededError(f"more than {budget.max_brute_subsets} subsets tested")
            if checker.set_ok(mask_of(comb), query):
                return comb
    return None
