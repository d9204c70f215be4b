"""Temporal walks, single-source reachability and the reachability digraph.

Reachability is computed by timestep-ordered sweeps: under the non-strict
model each timestep closes the reached set over its snapshot (a whole
snapshot component can be traversed at one time), under the strict model
each timestep contributes at most one hop.  Vertex sets are manipulated as
int bitmasks internally; the public types expose frozensets.

All functions are pure over immutable inputs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Model, TemporalGraph


def iter_bits(mask: int):
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def set_of(mask: int) -> frozenset[int]:
    return frozenset(iter_bits(mask))


@dataclass(frozen=True)
class TemporalWalk:
    """Alternating vertex/timestep sequence v0, t1, v1, ..., tq, vq."""

    vertices: tuple[int, ...]
    times: tuple[int, ...]

    def __post_init__(self):
        if len(self.vertices) != len(self.times) + 1 or not self.vertices:
            raise ValueError("walk needs q+1 vertices for q times")

    @classmethod
    def from_flat(cls, flat) -> "TemporalWalk":
        """Build from the flat form (v0, t1, v1, t2, v2, ...)."""
        items = tuple(flat)
        return cls(items[0::2], items[1::2])


@dataclass(frozen=True)
class ReachProfile:
    """Per-timestep reached sets of one source; sets[i] covers times <= i."""

    source: int
    model: Model
    sets: tuple[frozenset[int], ...]

    @property
    def final(self) -> frozenset[int]:
        return self.sets[-1]


@dataclass(frozen=True)
class ReachabilityDigraph:
    """Irreflexive relation: arc (u, v) iff u reaches v and u != v."""

    n: int
    model: Model
    succ_masks: tuple[int, ...]

    def arc(self, u: int, v: int) -> bool:
        return bool(self.succ_masks[u] >> v & 1)

    def successors(self, u: int) -> frozenset[int]:
        return set_of(self.succ_masks[u])


@dataclass(frozen=True)
class StaticGraph:
    """Plain undirected graph as per-vertex neighbor bitmasks."""

    n: int
    adj_masks: tuple[int, ...]

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.adj_masks[u] >> v & 1)

    def neighbors(self, u: int) -> frozenset[int]:
        return set_of(self.adj_masks[u])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj_masks[u]) if u < v]


class ReachabilityEngine:
    """Per-graph adjacency indexed by timestep, shared by all sweeps.

    ``out[t]`` maps a vertex to its out-neighbor mask in snapshot t (both
    directions for undirected graphs).  Undirected non-strict sweeps use the
    snapshot's connected components instead of per-source BFS, so checking a
    whole vertex-set costs one component pass per timestep.
    """

    def __init__(self, g: TemporalGraph):
        self.g = g
        out: dict[int, dict[int, int]] = {}
        for e in g.edges:
            for t in e.labels:
                adj = out.setdefault(t, {})
                adj[e.tail] = adj.get(e.tail, 0) | 1 << e.head
                if not g.directed:
                    adj[e.head] = adj.get(e.head, 0) | 1 << e.tail
        self.times: tuple[int, ...] = tuple(sorted(out))
        self.out: dict[int, dict[int, int]] = out
        self._comps: dict[int, tuple[int, ...]] = {}

    def snapshot_components(self, t: int, restrict: int = -1) -> tuple[int, ...]:
        """Masks of the connected components of snapshot t (undirected only),
        restricted to the given vertex mask; isolated vertices are omitted."""
        if restrict == -1 and t in self._comps:
            return self._comps[t]
        adj = self.out.get(t, {})
        comps = []
        seen = 0
        for root, nb in adj.items():
            bit = 1 << root
            if seen & bit or not restrict >> root & 1:
                continue
            comp = bit
            stack = [root]
            while stack:
                v = stack.pop()
                new = adj.get(v, 0) & restrict & ~comp
                comp |= new
                stack.extend(iter_bits(new))
            seen |= comp
            comps.append(comp)
        result = tuple(comps)
        if restrict == -1:
            self._comps[t] = result
        return result

    def _expand_nonstrict(self, cur: int, t: int, restrict: int) -> int:
        adj = self.out.get(t, {})
        if not self.g.directed:
            for comp in self.snapshot_components(t, restrict):
                if comp & cur:
                    cur |= comp
            return cur
        stack = [v for v in iter_bits(cur) if v in adj]
        while stack:
            v = stack.pop()
            new = adj.get(v, 0) & restrict & ~cur
            cur |= new
            stack.extend(iter_bits(new))
        return cur

    def _expand_strict(self, cur: int, t: int, restrict: int) -> int:
        adj = self.out.get(t, {})
        hop = 0
        for v in iter_bits(cur):
            hop |= adj.get(v, 0)
        return cur | hop & restrict

    def reach_steps(self, source: int, model: Model, restrict: int = -1):
        """Yield (time, mask reached by walks finishing at <= time) for each
        timestep carrying edges, in ascending order."""
        cur = 1 << source
        expand = self._expand_nonstrict if model is Model.NON_STRICT else self._expand_strict
        for t in self.times:
            cur = expand(cur, t, restrict)
            yield t, cur

    def reach_mask(self, source: int, model: Model, restrict: int = -1) -> int:
        cur = 1 << source
        for _, cur in self.reach_steps(source, model, restrict):
            pass
        return cur

    def reach_all(self, model: Model, restrict: int = -1, sources=None) -> dict[int, int]:
        """Final reach mask per source; components are shared across sources
        per timestep in the undirected non-strict case."""
        if sources is None:
            sources = range(self.g.n)
        if self.g.directed or model is Model.STRICT:
            return {u: self.reach_mask(u, model, restrict) for u in sources}
        masks = {u: 1 << u for u in sources}
        for t in self.times:
            comps = self.snapshot_components(t, restrict)
            for u, m in masks.items():
                for comp in comps:
                    if comp & m:
                        m |= comp
                masks[u] = m
        return masks


def check_walk(g: TemporalGraph, walk: TemporalWalk, model: Model) -> str | None:
    """Return None when the walk is valid, else a reason code."""
    for v in walk.vertices:
        if not 0 <= v < g.n:
            return "vertex-out-of-range"
    available: dict[tuple[int, int], tuple[int, ...]] = {}
    for e in g.edges:
        available[(e.tail, e.head)] = e.labels
        if not g.directed:
            available[(e.head, e.tail)] = e.labels
    last = None
    for (u, v), t in zip(zip(walk.vertices, walk.vertices[1:]), walk.times):
        labels = available.get((u, v))
        if labels is None:
            return "no-such-edge"
        if t not in labels:
            return "label-not-available"
        if last is not None:
            if model is Model.STRICT and t <= last:
                return "times-not-strictly-increasing"
            if model is Model.NON_STRICT and t < last:
                return "times-decreasing"
        last = t
    return None


def is_temporal_walk(g: TemporalGraph, walk: TemporalWalk, model: Model) -> bool:
    return check_walk(g, walk, model) is None


def reach_profile(g: TemporalGraph, source: int, model: Model) -> ReachProfile:
    """Sets of vertices reachable from ``source`` by walks finishing at each
    timestep 0..tau.  The source itself is always included."""
    if not 0 <= source < g.n:
        raise ValueError(f"vertex {source} out of range")
    engine = ReachabilityEngine(g)
    sets: list[frozenset[int]] = []
    cur_set = frozenset((source,))
    steps = iter(engine.reach_steps(source, model))
    pending = next(steps, None)
    for i in range(g.tau + 1):
        while pending is not None and pending[0] <= i:
            cur_set = set_of(pending[1])
            pending = next(steps, None)
        sets.append(cur_set)
    return ReachProfile(source, model, tuple(sets))


def reaches(g: TemporalGraph, u: int, v: int, model: Model) -> bool:
    """True iff a temporal u,v-walk exists; reflexively true by convention."""
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError("vertex out of range")
    if u == v:
        return True
    return bool(ReachabilityEngine(g).reach_mask(u, model) >> v & 1)


def reachability_digraph(g: TemporalGraph, model: Model) -> ReachabilityDigraph:
    """All-pairs reachability as an irreflexive digraph (n source sweeps)."""
    engine = ReachabilityEngine(g)
    masks = engine.reach_all(model)
    return ReachabilityDigraph(
        g.n, model, tuple(masks[u] & ~(1 << u) for u in range(g.n))
    )


def symmetric_core(r: ReachabilityDigraph) -> StaticGraph:
    """Undirected graph keeping exactly the mutually-reachable pairs."""
    adj = []
    for u in range(r.n):
        m = 0
        for v in iter_bits(r.succ_masks[u]):
            if r.succ_masks[v] >> u & 1:
                m |= 1 << v
        adj.append(m)
    return StaticGraph(r.n, tuple(adj))


def underlying_core(r: ReachabilityDigraph) -> StaticGraph:
    """Undirected graph keeping pairs reachable in at least one direction."""
    adj = [r.succ_masks[u] for u in range(r.n)]
    for u in range(r.n):
        for v in iter_bits(r.succ_masks[u]):
            adj[v] |= 1 << u
    return StaticGraph(r.n, tuple(adj))
