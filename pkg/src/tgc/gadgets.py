"""Generators for the reduction constructions, each returning the gadget
graph plus an equivalence record and a vertex-role map for white-box tests.

Every generator is a pure function of its source instance; the stated
source-property <-> component-property equivalences are verified empirically
by the test suite (oracle module on the left side, components module on the
right).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .components import ComponentQuery, Kind
from .core import Model, TemporalGraph, temporal_graph


@dataclass(frozen=True)
class SimpleGraph:
    """Static simple undirected graph; edge-list order is significant (the
    label schedules of the clique gadgets follow it)."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "edges", tuple((min(u, v), max(u, v)) for u, v in self.edges)
        )
        seen = set()
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge endpoint out of range: {u},{v}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge {u},{v}")
            seen.add((u, v))

    def adj_masks(self) -> list[int]:
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return adj


@dataclass(frozen=True)
class BipartiteGraph:
    """Bipartite graph over index ranges X = [0, nx), Y = [0, ny)."""

    nx: int
    ny: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        seen = set()
        for x, y in self.edges:
            if not (0 <= x < self.nx and 0 <= y < self.ny):
                raise ValueError(f"edge ({x},{y}) out of range")
            if (x, y) in seen:
                raise ValueError(f"duplicate edge ({x},{y})")
            seen.add((x, y))


@dataclass(frozen=True)
class Literal:
    side: str  # "x" or "y"
    index: int  # 1-based within its side
    negated: bool = False

    def token(self) -> str:
        return ("-" if self.negated else "") + f"{self.side}{self.index}"


@dataclass(frozen=True)
class SatInstance:
    """CNF over two variable blocks x1..x_nx and y1..y_ny."""

    nx: int
    ny: int
    clauses: tuple[tuple[Literal, ...], ...]

    def __post_init__(self):
        if not self.clauses:
            raise ValueError("formula needs at least one clause")
        for clause in self.clauses:
            for lit in clause:
                limit = self.nx if lit.side == "x" else self.ny if lit.side == "y" else None
                if limit is None or not 1 <= lit.index <= limit:
                    raise ValueError(f"literal {lit.token()} references an undeclared variable")

    @property
    def m(self) -> int:
        return len(self.clauses)

    @staticmethod
    def _true(lit: Literal, bits: int) -> bool:
        return bool(bits >> (lit.index - 1) & 1) != lit.negated

    def clause_satisfied(self, clause: tuple[Literal, ...], x_bits: int, y_bits: int) -> bool:
        return any(self._true(l, x_bits if l.side == "x" else y_bits) for l in clause)

    def side_blocks_clause(self, side: str, bits: int, clause: tuple[Literal, ...]) -> bool:
        """Whether this side-assignment fails every literal it owns in the
        clause (vacuously true when the clause has no literal on the side)."""
        return not any(self._true(l, bits) for l in clause if l.side == side)


@dataclass(frozen=True)
class EquivalenceRecord:
    """The intended iff between a source-instance property and a component
    property of the generated gadget, for property testing and sidecars."""

    source: dict
    query: ComponentQuery
    threshold: int
    iff: str

    def to_json_dict(self) -> dict:
        return {
            "source": self.source,
            "query": {
                "kind": "tcc" if self.query.kind is Kind.MUTUAL else "tucc",
                "closed": self.query.closed,
                "model": self.query.model.value,
            },
            "threshold": self.threshold,
            "iff": self.iff,
        }


@dataclass
class GadgetInstance:
    graph: TemporalGraph
    equivalence: EquivalenceRecord
    roles: dict[str, int] = field(repr=False)

    def vertex(self, role: str) -> int:
        return self.roles[role]


def _instance(directed, n, edges, names, equivalence) -> GadgetInstance:
    graph = temporal_graph(directed, n, edges, names)
    return GadgetInstance(graph, equivalence, {name: i for i, name in enumerate(names)})


def gadget_linegraph_bipartite(h: BipartiteGraph, requested_tau: int = 2) -> GadgetInstance:
    """One vertex per bipartite edge; timestep 1 forms a clique per X-side
    star, timestep 2 one per Y-side star.

    Biclique edge counts of the source correspond to (closed) tcc sizes,
    2K2-free edge-subgraph sizes to (closed) tucc sizes.  ``requested_tau``
    >= 2 is recorded only; trailing empty snapshots carry no edges, so the
    serialized lifetime is the actual maximum label.
    """
    if not h.edges:
        raise ValueError("bipartite source graph has no edges")
    if requested_tau < 2:
        raise ValueError("requested lifetime must be at least 2")
    names = [f"x{x}y{y}" for x, y in h.edges]
    stars_x: dict[int, list[int]] = {}
    stars_y: dict[int, list[int]] = {}
    for i, (x, y) in enumerate(h.edges):
        stars_x.setdefault(x, []).append(i)
        stars_y.setdefault(y, []).append(i)
    edges = []
    for label, stars in ((1, stars_x), (2, stars_y)):
        for members in stars.values():
            edges.extend(
                (members[i], members[j], (label,))
                for i in range(len(members))
                for j in range(i + 1, len(members))
            )
    record = EquivalenceRecord(
        source={
            "type": "bipartite",
            "nx": h.nx,
            "ny": h.ny,
            "edges": [list(e) for e in h.edges],
            "requested_tau": requested_tau,
        },
        query=ComponentQuery(Kind.MUTUAL, True, Model.NON_STRICT),
        threshold=1,
        iff="max biclique edges >= k <-> (closed) tcc of size >= k; "
        "max 2K2-free subgraph edges >= k <-> (closed) tucc of size >= k",
    )
    return _instance(False, len(h.edges), edges, names, record)


def gadget_clique_tcc(g: SimpleGraph) -> GadgetInstance:
    """Two mirrored vertex layers joined by a timestep-0 matching, plus four
    hub vertices per source edge whose labels i / m+i / 2m+i / 3m+i stagger
    traversal by edge index.  Cliques of size k (k >= 3) correspond to tccs
    of size 2k; |V| = 2n + 4m, lifetime 4m, M = n + 8m."""
    n, m = g.n, len(g.edges)
    names = [f"v{u}" for u in range(n)] + [f"c{u}" for u in range(n)]
    edges: list[tuple[int, int, tuple[int, ...]]] = [(u, n + u, (0,)) for u in range(n)]
    for idx, (u, v) in enumerate(g.edges):
        i = idx + 1
        hub_u = 2 * n + 4 * idx
        hub_v, hub_uc, hub_vc = hub_u + 1, hub_u + 2, hub_u + 3
        names += [f"m{u}_{v}", f"m{v}_{u}", f"mc{u}_{v}", f"mc{v}_{u}"]
        edges += [
            (u, hub_u, (i,)),
            (v, hub_v, (i,)),
            (hub_u, v, (m + i,)),
            (hub_v, u, (m + i,)),
            (n + u, hub_uc, (2 * m + i,)),
            (n + v, hub_vc, (2 * m + i,)),
            (hub_uc, n + v, (3 * m + i,)),
            (hub_vc, n + u, (3 * m + i,)),
        ]
    record = EquivalenceRecord(
        source={"type": "graph", "n": n, "edges": [list(e) for e in g.edges]},
        query=ComponentQuery(Kind.MUTUAL, False, Model.NON_STRICT),
        threshold=2,
        iff="source has a clique of size >= k (k >= 3) <-> gadget has a tcc of size >= 2k",
    )
    return _instance(False, 2 * n + 4 * m, edges, names, record)


def gadget_clique_dir_tau2(g: SimpleGraph) -> GadgetInstance:
    """Directed two-timestep gadget: each source edge becomes a pair of
    one-way length-2 detours (out at 1, back in at 2).  Cliques of size k
    (k >= 3) correspond to both tccs and tuccs of size k; |V| = n + 2m,
    lifetime 2, M = 4m."""
    n = g.n
    names = [f"v{u}" for u in range(n)]
    edges = []
    for idx, (u, v) in enumerate(g.edges):
        hub_u = n + 2 * idx
        hub_v = hub_u + 1
        names += [f"m{u}_{v}", f"m{v}_{u}"]
        edges += [
            (u, hub_u, (1,)),
            (hub_u, v, (2,)),
            (v, hub_v, (1,)),
            (hub_v, u, (2,)),
        ]
    record = EquivalenceRecord(
        source={"type": "graph", "n": n, "edges": [list(e) for e in g.edges]},
        query=ComponentQuery(Kind.MUTUAL, False, Model.NON_STRICT),
        threshold=1,
        iff="source has a clique of size >= k (k >= 3) <-> gadget has a tcc "
        "(equivalently tucc) of size >= k",
    )
    return _instance(True, n + 2 * len(g.edges), edges, names, record)


def gadget_clique_closed_dir_tau3(g: SimpleGraph, unilateral: bool = False) -> GadgetInstance:
    """Directed in/out split with lifetime 3: each vertex becomes a 2-cycle
    active at 1 and 3, each source edge a cross arc at 2 (both directions,
    or only one when ``unilateral``).  Cliques of size k (k >= 3) correspond
    to closed tccs (resp. closed tuccs) of size 2k; |V| = 2n,
    M = 4n + 2m (resp. 4n + m)."""
    n = g.n
    names = []
    edges = []
    for u in range(n):
        names += [f"v{u}i", f"v{u}o"]
        edges += [(2 * u, 2 * u + 1, (1, 3)), (2 * u + 1, 2 * u, (1, 3))]
    for u, v in g.edges:
        edges.append((2 * u + 1, 2 * v, (2,)))
        if not unilateral:
            edges.append((2 * v + 1, 2 * u, (2,)))
    kind = Kind.UNILATERAL if unilateral else Kind.MUTUAL
    record = EquivalenceRecord(
        source={
            "type": "graph",
            "n": n,
            "edges": [list(e) for e in g.edges],
            "unilateral": unilateral,
        },
        query=ComponentQuery(kind, True, Model.NON_STRICT),
        threshold=2,
        iff="source has a clique of size >= k (k >= 3) <-> gadget has a closed "
        f"{'tucc' if unilateral else 'tcc'} of size >= 2k",
    )
    return _instance(True, 2 * n, edges, names, record)


def gadget_2club(g: SimpleGraph, members) -> GadgetInstance:
    """Subdivide every source edge twice; attachment edges carry labels
    {1,3,5}, the middle edges {2,4}.  The candidate set Y (the chosen
    vertices plus their adjacent subdivision vertices, stored in the record)
    is a closed tcc (equivalently closed tucc) iff the chosen set is a
    maximal 2-club; |V| = n + 2m, lifetime 5, M = 8m."""
    chosen = sorted(set(members))
    for v in chosen:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    n = g.n
    names = [f"v{u}" for u in range(n)]
    edges = []
    candidate = set(chosen)
    for idx, (u, v) in enumerate(g.edges):
        mid_u = n + 2 * idx
        mid_v = mid_u + 1
        names += [f"m{u}_{v}", f"m{v}_{u}"]
        edges += [
            (u, mid_u, (1, 3, 5)),
            (v, mid_v, (1, 3, 5)),
            (mid_u, mid_v, (2, 4)),
        ]
        if u in chosen:
            candidate.add(mid_u)
        if v in chosen:
            candidate.add(mid_v)
    record = EquivalenceRecord(
        source={
            "type": "2club",
            "n": n,
            "edges": [list(e) for e in g.edges],
            "x_set": chosen,
            "y_set": sorted(candidate),
        },
        query=ComponentQuery(Kind.MUTUAL, True, Model.NON_STRICT),
        threshold=len(candidate),
        iff="X is a maximal 2-club in the source <-> Y is a closed tcc "
        "(equivalently a closed tucc) in the gadget",
    )
    return _instance(False, n + 2 * len(g.edges), edges, names, record)


def gadget_2club_strict(g: SimpleGraph, members) -> GadgetInstance:
    """Strict-model companion: two identical snapshots of the source graph,
    so temporal paths have length <= 2.  X itself is the candidate set."""
    chosen = sorted(set(members))
    for v in chosen:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    names = [f"v{u}" for u in range(g.n)]
    edges = [(u, v, (1, 2)) for u, v in g.edges]
    record = EquivalenceRecord(
        source={
            "type": "2club-strict",
            "n": g.n,
            "edges": [list(e) for e in g.edges],
            "x_set": chosen,
            "y_set": chosen,
        },
        query=ComponentQuery(Kind.MUTUAL, True, Model.STRICT),
        threshold=len(chosen),
        iff="X is a maximal 2-club in the source <-> X is a closed tcc "
        "(equivalently a closed tucc) in the two-snapshot gadget",
    )
    return _instance(False, g.n, edges, names, record)


def _assignment_names(prefix: str, nvars: int) -> list[str]:
    return [prefix + format(bits, f"0{nvars}b")[::-1] for bits in range(1 << nvars)]


def gadget_sat_connected(phi: SatInstance, max_vars: int = 12) -> GadgetInstance:
    """Directed lifetime-8 gadget over all assignments of both variable
    blocks: the formula is satisfiable iff the gadget is NOT temporally
    connected (the only fragile pairs are X-assignment -> Y-assignment,
    joined through a clause both endpoints fail).  |V| = 2^(n+1) + m + 1."""
    if phi.nx != phi.ny:
        raise ValueError("both variable blocks must have the same size")
    n = phi.nx
    if n > max_vars:
        raise ValueError(f"variable count {n} exceeds the configured bound {max_vars}")
    half = 1 << n
    m = phi.m
    s = 0
    x_base, c_base, y_base = 1, 1 + half, 1 + half + m
    names = (
        ["s"]
        + _assignment_names("x", n)
        + [f"c{i + 1}" for i in range(m)]
        + _assignment_names("y", n)
    )
    edges = []
    for bits in range(half):
        edges.append((s, x_base + bits, (7,)))
        edges.append((x_base + bits, s, (6,)))
        edges.append((s, y_base + bits, (1,)))
    for ci, clause in enumerate(phi.clauses):
        for bits in range(half):
            x_labels = (4, 8) if phi.side_blocks_clause("x", bits, clause) else (8,)
            edges.append((x_base + bits, c_base + ci, x_labels))
            edges.append((c_base + ci, x_base + bits, (5,)))
            y_labels = (3, 5) if phi.side_blocks_clause("y", bits, clause) else (3,)
            edges.append((c_base + ci, y_base + bits, y_labels))
            edges.append((y_base + bits, c_base + ci, (2,)))
    record = EquivalenceRecord(
        source=_sat_source(phi),
        query=ComponentQuery(Kind.MUTUAL, False, Model.NON_STRICT),
        threshold=2 * half + m + 1,
        iff="formula satisfiable <-> gadget is NOT temporally connected",
    )
    return _instance(True, 2 * half + m + 1, edges, names, record)


def gadget_sat_unilateral(phi: SatInstance, max_vars: int = 12) -> GadgetInstance:
    """Directed lifetime-7 companion with one hub per block: satisfiable iff
    the gadget is NOT temporally unilaterally connected.
    |V| = 2^(n+1) + m + 3."""
    if phi.nx != phi.ny:
        raise ValueError("both variable blocks must have the same size")
    n = phi.nx
    if n > max_vars:
        raise ValueError(f"variable count {n} exceeds the configured bound {max_vars}")
    half = 1 << n
    m = phi.m
    x_base, c_base, y_base = 0, half, half + m
    hub_x, hub_c, hub_y = half + m + half, half + m + half + 1, half + m + half + 2
    names = (
        _assignment_names("x", n)
        + [f"c{i + 1}" for i in range(m)]
        + _assignment_names("y", n)
        + ["hx", "hc", "hy"]
    )
    edges = []
    for bits in range(half):
        # The X hub returns at 7 (after the conditional window at 4) and owns
        # time-0 edges into Y that nothing arriving at it can use, so the only
        # X-to-Y routes are the direct assignment->clause->assignment paths.
        edges += [(x_base + bits, hub_x, (1,)), (hub_x, x_base + bits, (7,))]
        edges.append((hub_x, y_base + bits, (0,)))
        edges += [(y_base + bits, hub_y, (1,)), (hub_y, y_base + bits, (2,))]
        edges.append((hub_c, y_base + bits, (6,)))
    for ci in range(m):
        edges += [(c_base + ci, hub_c, (1,)), (hub_c, c_base + ci, (2,))]
        edges.append((hub_x, c_base + ci, (6,)))
    edges += [(hub_x, hub_c, (7,)), (hub_x, hub_y, (7,)), (hub_c, hub_y, (7,))]
    for ci, clause in enumerate(phi.clauses):
        for bits in range(half):
            if phi.side_blocks_clause("x", bits, clause):
                edges.append((x_base + bits, c_base + ci, (4,)))
            if phi.side_blocks_clause("y", bits, clause):
                edges.append((c_base + ci, y_base + bits, (5,)))
    record = EquivalenceRecord(
        source=_sat_source(phi),
        query=ComponentQuery(Kind.UNILATERAL, False, Model.NON_STRICT),
        threshold=2 * half + m + 3,
        iff="formula satisfiable <-> gadget is NOT temporally unilaterally connected",
    )
    return _instance(True, 2 * half + m + 3, edges, names, record)


def _sat_source(phi: SatInstance) -> dict:
    return {
        "type": "sat",
        "nx": phi.nx,
        "ny": phi.ny,
        "clauses": [[lit.token() for lit in clause] for clause in phi.clauses],
    }


def parse_simple_graph(text: str) -> SimpleGraph:
    """``graph <n>`` header then ``u v`` edge lines; '#' comments."""
    records = _records(text)
    header = records[0]
    if len(header) != 2 or header[0] != "graph":
        raise ValueError("expected header 'graph <n>'")
    n = int(header[1])
    return SimpleGraph(n, tuple((int(u), int(v)) for u, v in (r[:2] for r in records[1:])))


def parse_bipartite_graph(text: str) -> BipartiteGraph:
    """``bipartite <nx> <ny>`` header then ``x y`` edge lines."""
    records = _records(text)
    header = records[0]
    if len(header) != 3 or header[0] != "bipartite":
        raise ValueError("expected header 'bipartite <nx> <ny>'")
    return BipartiteGraph(
        int(header[1]),
        int(header[2]),
        tuple((int(x), int(y)) for x, y in (r[:2] for r in records[1:])),
    )


def parse_sat_instance(text: str) -> SatInstance:
    """``sat <nx> <ny>`` header, then one clause per line of literal tokens
    like ``x1 -x2 y3``."""
    records = _records(text)
    header = records[0]
    if len(header) != 3 or header[0] != "sat":
        raise ValueError("expected header 'sat <nx> <ny>'")
    clauses = tuple(tuple(parse_literal(tok) for tok in line) for line in records[1:])
    return SatInstance(int(header[1]), int(header[2]), clauses)


def parse_literal(token: str) -> Literal:
    body = token
    negated = body.startswith("-")
    if negated:
        body = body[1:]
    if len(body) < 2 or body[0] not in "xy" or not body[1:].isdigit():
        raise ValueError(f"bad literal token {token!r}")
    return Literal(body[0], int(body[1:]), negated)


def _records(text: str) -> list[list[str]]:
    rows = [
        line.split()
        for line in (raw.strip() for raw in text.splitlines())
        if line and not line.startswith("#")
    ]
    if not rows:
        raise ValueError("empty instance file")
    return rows
