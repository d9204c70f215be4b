"""Brute-force reference implementations, independent of the main modules.

Everything here is written straight from the definitions: reachability goes
through an explicit time-expanded graph, component enumeration scans all
vertex subsets, the static problems (clique, biclique, 2K2-free subgraph,
2-club, SAT) are solved exhaustively.  These exist to be obviously correct,
not fast; each has a hard input-size bound.
"""

from __future__ import annotations

from dataclasses import dataclass

from .components import ComponentQuery, ComponentReport, Kind
from .core import Model, TemporalGraph
from .gadgets import BipartiteGraph, SatInstance, SimpleGraph


class BoundExceededError(ValueError):
    """Input exceeds the size bound an oracle is willing to handle."""


@dataclass(frozen=True)
class TimeExpandedGraph:
    """Layered graph with one node per (vertex, timestep), 0 <= t <= tau.

    Waiting arcs go (v,t) -> (v,t+1).  A non-strict traversal of an edge
    labeled t stays in layer t; a strict traversal consumes the timestep and
    lands in layer t+1 (label-tau traversals are recorded as terminal
    reaches instead of nodes, keeping the node count at n*(tau+1)).
    """

    n: int
    tau: int
    model: Model
    adjacency: tuple[tuple[int, ...], ...]
    terminal: tuple[tuple[int, ...], ...]

    def node(self, v: int, t: int) -> int:
        return v * (self.tau + 1) + t

    def reach_from(self, source: int) -> frozenset[int]:
        start = self.node(source, 0)
        seen_nodes = {start}
        reached = {source}
        stack = [start]
        while stack:
            node = stack.pop()
            reached.update(self.terminal[node])
            for nxt in self.adjacency[node]:
                if nxt not in seen_nodes:
                    seen_nodes.add(nxt)
                    reached.add(nxt // (self.tau + 1))
                    stack.append(nxt)
        return frozenset(reached)


def time_expanded_graph(g: TemporalGraph, model: Model, restrict=None) -> TimeExpandedGraph:
    """Build the layered oracle graph; ``restrict`` keeps only traversal arcs
    with both endpoints inside the given vertex set."""
    tau = g.tau
    width = tau + 1
    adjacency: list[list[int]] = [[] for _ in range(g.n * width)]
    terminal: list[list[int]] = [[] for _ in range(g.n * width)]
    for v in range(g.n):
        for t in range(tau):
            adjacency[v * width + t].append(v * width + t + 1)
    arcs = []
    for e in g.edges:
        arcs.append((e.tail, e.head, e.labels))
        if not g.directed:
            arcs.append((e.head, e.tail, e.labels))
    for u, v, labels in arcs:
        if restrict is not None and (u not in restrict or v not in restrict):
            continue
        for t in labels:
            if model is Model.NON_STRICT:
                adjacency[u * width + t].append(v * width + t)
            elif t < tau:
                adjacency[u * width + t].append(v * width + t + 1)
            else:
                terminal[u * width + t].append(v)
    return TimeExpandedGraph(
        g.n, tau, model,
        tuple(tuple(a) for a in adjacency),
        tuple(tuple(t) for t in terminal),
    )


def oracle_reach_set(g: TemporalGraph, u: int, model: Model, restrict=None) -> frozenset[int]:
    if not 0 <= u < g.n:
        raise ValueError(f"vertex {u} out of range")
    return time_expanded_graph(g, model, restrict).reach_from(u)


def oracle_reaches(g: TemporalGraph, u: int, v: int, model: Model) -> bool:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    return v in oracle_reach_set(g, u, model)


def walk_enumeration_reach_set(g: TemporalGraph, u: int, model: Model) -> frozenset[int]:
    """Third route: depth-first enumeration of temporal walks from ``u``,
    pruning walk states (vertex, last label) already explored."""
    arcs: dict[int, list[tuple[int, int]]] = {}
    for e in g.edges:
        for t in e.labels:
            arcs.setdefault(e.tail, []).append((e.head, t))
            if not g.directed:
                arcs.setdefault(e.head, []).append((e.tail, t))
    reached = {u}
    seen_states = {(u, -1)}
    stack = [(u, -1)]
    while stack:
        v, last = stack.pop()
        for w, t in arcs.get(v, ()):
            ok = t >= last if model is Model.NON_STRICT else t > last
            if ok and (w, t) not in seen_states:
                seen_states.add((w, t))
                reached.add(w)
                stack.append((w, t))
    return frozenset(reached)


def oracle_enumerate_components(
    g: TemporalGraph, query: ComponentQuery, max_n: int = 15
) -> ComponentReport:
    """All-subset scan for inclusion-maximal connected sets of the queried
    kind, re-deriving connectivity from the time-expanded oracle."""
    if g.n > max_n:
        raise BoundExceededError(f"n={g.n} exceeds oracle bound {max_n}")
    reach = [oracle_reach_set(g, u, query.model) for u in range(g.n)]

    def open_ok(members: tuple[int, ...]) -> bool:
        for i, u in enumerate(members):
            for v in members[i + 1:]:
                forward = v in reach[u]
                backward = u in reach[v]
                if query.kind is Kind.MUTUAL:
                    if not (forward and backward):
                        return False
                elif not (forward or backward):
                    return False
        return True

    def closed_ok(members: tuple[int, ...]) -> bool:
        inside = set(members)
        local = {u: oracle_reach_set(g, u, query.model, restrict=inside) for u in members}
        for i, u in enumerate(members):
            for v in members[i + 1:]:
                forward = v in local[u]
                backward = u in local[v]
                if query.kind is Kind.MUTUAL:
                    if not (forward and backward):
                        return False
                elif not (forward or backward):
                    return False
        return True

    check = closed_ok if query.closed else open_ok
    connected: list[tuple[int, ...]] = []
    for mask in range(1, 1 << g.n):
        members = tuple(v for v in range(g.n) if mask >> v & 1)
        if check(members):
            connected.append(members)
    connected.sort(key=len, reverse=True)
    maximal: list[tuple[int, ...]] = []
    for cand in connected:
        cand_set = set(cand)
        if not any(cand_set <= set(kept) for kept in maximal):
            maximal.append(cand)
    return ComponentReport.build(query, maximal)


def oracle_max_clique(g: SimpleGraph, max_n: int = 20) -> int:
    """Exact maximum clique size by branch and bound (0 for the empty graph)."""
    if g.n > max_n:
        raise BoundExceededError(f"n={g.n} exceeds oracle bound {max_n}")
    adj = g.adj_masks()
    best = 0

    def expand(candidates: int, size: int):
        nonlocal best
        if size + candidates.bit_count() <= best:
            return
        if not candidates:
            best = max(best, size)
            return
        rest = candidates
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            if size + rest.bit_count() <= best:
                return
            expand(rest & adj[v], size + 1)
            rest ^= low
        best = max(best, size)

    if g.n:
        expand((1 << g.n) - 1, 0)
    return best


def oracle_biclique_edges(h: BipartiteGraph, max_total: int = 16) -> int:
    """Maximum edge count |A|*|B| over complete bipartite pairs (A, B)."""
    if h.nx + h.ny > max_total:
        raise BoundExceededError("bipartite graph exceeds oracle bound")
    nbr = [0] * h.nx
    for x, y in h.edges:
        nbr[x] |= 1 << y
    best = 0
    for amask in range(1, 1 << h.nx):
        common = (1 << h.ny) - 1
        for x in range(h.nx):
            if amask >> x & 1:
                common &= nbr[x]
        best = max(best, amask.bit_count() * common.bit_count())
    return best


def oracle_2k2free_edges(h: BipartiteGraph, max_edges: int = 16) -> int:
    """Maximum size of an edge subset whose edge-induced subgraph contains no
    induced pair of independent edges.

    A bipartite edge set is 2K2-free exactly when the chosen neighborhoods of
    the X-side vertices are pairwise nested, so the search assigns each x a
    sub-neighborhood and enforces chain compatibility.
    """
    if len(h.edges) > max_edges:
        raise BoundExceededError("edge count exceeds oracle bound")
    nbr: dict[int, int] = {}
    for x, y in h.edges:
        nbr[x] = nbr.get(x, 0) | 1 << y
    xs = sorted(nbr, key=lambda x: -nbr[x].bit_count())
    suffix = [0] * (len(xs) + 1)
    for i in range(len(xs) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + nbr[xs[i]].bit_count()
    subsets_of: dict[int, list[int]] = {}
    for x in xs:
        full = nbr[x]
        subs = [0]
        rest = full
        while rest:
            low = rest & -rest
            subs = subs + [s | low for s in subs]
            rest ^= low
        subs.sort(key=lambda s: -s.bit_count())
        subsets_of[x] = subs
    best = 0

    def assign(i: int, chosen: list[int], total: int):
        nonlocal best
        if total + suffix[i] <= best:
            return
        if i == len(xs):
            best = max(best, total)
            return
        for s in subsets_of[xs[i]]:
            if all(s & c == s or s & c == c for c in chosen):
                chosen.append(s)
                assign(i + 1, chosen, total + s.bit_count())
                chosen.pop()

    assign(0, [], 0)
    return best


def _diameter_at_most_2(adj: list[int], members: int) -> bool:
    verts = [v for v in range(len(adj)) if members >> v & 1]
    for u in verts:
        ball = (1 << u) | (adj[u] & members)
        two = ball
        rest = ball
        while rest:
            low = rest & -rest
            two |= adj[low.bit_length() - 1] & members
            rest ^= low
        if members & ~two:
            return False
    return True


def oracle_is_maximal_2club(g: SimpleGraph, members, max_n: int = 15) -> bool:
    """True iff the induced subgraph has diameter <= 2 and no strict superset
    does; decided by scanning every superset (2-clubs are not hereditary)."""
    if g.n > max_n:
        raise BoundExceededError(f"n={g.n} exceeds oracle bound {max_n}")
    adj = g.adj_masks()
    base = 0
    for v in members:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
        base |= 1 << v
    if not _diameter_at_most_2(adj, base):
        return False
    outside = [v for v in range(g.n) if not base >> v & 1]
    for extra in range(1, 1 << len(outside)):
        cand = base
        for i, v in enumerate(outside):
            if extra >> i & 1:
                cand |= 1 << v
        if _diameter_at_most_2(adj, cand):
            return False
    return True


def oracle_sat(phi: SatInstance, max_vars: int = 20) -> bool:
    """Exhaustive satisfiability search over both variable blocks."""
    if phi.nx + phi.ny > max_vars:
        raise BoundExceededError("variable count exceeds oracle bound")
    for xb in range(1 << phi.nx):
        for yb in range(1 << phi.ny):
            if all(phi.clause_satisfied(c, xb, yb) for c in phi.clauses):
                return True
    return False
