"""Temporal graph data model, validation, text format and snapshots.

A temporal graph is a static (di)graph whose edges each carry a non-empty
set of discrete availability timesteps.  The lifetime ``tau`` is the largest
label present (0 for an edgeless graph) and ``M`` counts edge/timestep
availabilities.  Instances are immutable after construction and safe to
share across threads.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class ValidationError(ValueError):
    """A temporal graph violates a structural invariant."""


class GraphFormatError(ValueError):
    """A graph file is malformed; carries the 1-based offending line."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class Model(enum.Enum):
    """Walk timing discipline: non-decreasing vs strictly increasing labels."""

    NON_STRICT = "nonstrict"
    STRICT = "strict"

    @classmethod
    def from_string(cls, token: str) -> "Model":
        t = token.strip().lower().replace("-", "").replace("_", "")
        if t == "strict":
            return cls.STRICT
        if t in ("nonstrict", "ns"):
            return cls.NON_STRICT
        raise ValueError(f"unknown model {token!r}")


@dataclass(frozen=True)
class TemporalEdge:
    """One (di)edge with its sorted, duplicate-free label tuple."""

    tail: int
    head: int
    labels: tuple[int, ...]


@dataclass(frozen=True)
class Snapshot:
    """The static (di)graph of edges available at one timestep."""

    index: int
    directed: bool
    n: int
    edges: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class TemporalGraph:
    directed: bool
    n: int
    edges: tuple[TemporalEdge, ...]
    names: tuple[str, ...] | None = None
    tau: int = field(init=False, compare=False)
    M: int = field(init=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValidationError("vertex count must be non-negative")
        if self.names is not None:
            if len(self.names) != self.n:
                raise ValidationError("name table size differs from vertex count")
            if len(set(self.names)) != self.n:
                raise ValidationError("duplicate vertex names")
        seen: set[tuple[int, int]] = set()
        tau = 0
        m = 0
        for e in self.edges:
            if not (0 <= e.tail < self.n and 0 <= e.head < self.n):
                raise ValidationError(f"edge endpoint out of range: {e.tail},{e.head}")
            if e.tail == e.head:
                raise ValidationError(f"self-loop at vertex {e.tail}")
            if not self.directed and e.tail > e.head:
                raise ValidationError("undirected edges must be stored tail < head")
            if not e.labels:
                raise ValidationError(f"edge {e.tail},{e.head} has no labels")
            if any(t < 0 for t in e.labels):
                raise ValidationError(f"edge {e.tail},{e.head} has a negative label")
            if any(a >= b for a, b in zip(e.labels, e.labels[1:])):
                raise ValidationError(f"edge {e.tail},{e.head} labels not strictly ascending")
            key = (e.tail, e.head)
            if key in seen:
                raise ValidationError(f"duplicate edge {e.tail},{e.head}")
            seen.add(key)
            tau = max(tau, e.labels[-1])
            m += len(e.labels)
        object.__setattr__(self, "tau", tau)
        object.__setattr__(self, "M", m)

    def name_of(self, v: int) -> str:
        return self.names[v] if self.names is not None else str(v)

    def vertex(self, token: str) -> int:
        """Resolve a vertex name (or index, when unnamed) to its index."""
        if self.names is not None:
            try:
                return self.names.index(token)
            except ValueError:
                raise KeyError(f"unknown vertex name {token!r}") from None
        try:
            v = int(token)
        except ValueError:
            raise KeyError(f"graph is unnamed; expected an integer index, got {token!r}") from None
        if not 0 <= v < self.n:
            raise KeyError(f"vertex index {v} out of range")
        return v


def temporal_graph(
    directed: bool,
    n: int,
    edges: Iterable[tuple[int, int, Iterable[int]]],
    names: Sequence[str] | None = None,
) -> TemporalGraph:
    """Build a validated graph, canonicalizing label order and edge orientation.

    Undirected edges are normalized to tail < head; labels are deduplicated
    and sorted.  Duplicate (u, v) entries are rejected, not merged.
    """
    built = []
    for u, v, labels in edges:
        if not directed and u > v:
            u, v = v, u
        built.append(TemporalEdge(u, v, tuple(sorted(set(labels)))))
    built.sort(key=lambda e: (e.tail, e.head))
    return TemporalGraph(directed, n, tuple(built), tuple(names) if names is not None else None)


def snapshot(g: TemporalGraph, i: int) -> Snapshot:
    """The subgraph of edges available at timestep ``i`` (0 <= i <= tau)."""
    if not 0 <= i <= g.tau:
        raise ValueError(f"timestep {i} out of range [0, {g.tau}]")
    pairs = tuple((e.tail, e.head) for e in g.edges if i in e.labels)
    return Snapshot(i, g.directed, g.n, pairs)


def underlying_undirected(g: TemporalGraph) -> TemporalGraph:
    """Forget orientations, merging label sets of opposite arcs."""
    if not g.directed:
        raise ValueError("graph is already undirected")
    merged: dict[tuple[int, int], set[int]] = {}
    for e in g.edges:
        key = (min(e.tail, e.head), max(e.tail, e.head))
        merged.setdefault(key, set()).update(e.labels)
    return temporal_graph(False, g.n, [(u, v, ls) for (u, v), ls in merged.items()], g.names)


def parse_temporal_graph(text: str) -> TemporalGraph:
    """Parse the one-record-per-line text format.

    Line 1: ``tg <directed|undirected> <n>``; optional ``names ...`` line;
    then ``<u> <v> <t1> <t2> ...`` edge lines.  ``#`` starts a comment line.
    Endpoints are names when a name table is declared, integer indices
    otherwise.
    """
    lines = text.splitlines()
    records: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(lines, start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        records.append((lineno, stripped.split()))
    if not records:
        raise GraphFormatError("missing header", 1)

    lineno, header = records[0]
    if len(header) != 3 or header[0] != "tg":
        raise GraphFormatError("malformed header, expected 'tg <directed|undirected> <n>'", lineno)
    if header[1] not in ("directed", "undirected"):
        raise GraphFormatError(f"unknown orientation token {header[1]!r}", lineno)
    directed = header[1] == "directed"
    try:
        n = int(header[2])
    except ValueError:
        raise GraphFormatError(f"vertex count {header[2]!r} is not an integer", lineno) from None
    if n < 0:
        raise GraphFormatError("vertex count must be non-negative", lineno)

    body = records[1:]
    names: tuple[str, ...] | None = None
    if body and body[0][1][0] == "names":
        lineno, tokens = body[0]
        names = tuple(tokens[1:])
        if len(names) != n:
            raise GraphFormatError(f"names line declares {len(names)} names for {n} vertices", lineno)
        if len(set(names)) != n:
            raise GraphFormatError("duplicate vertex names", lineno)
        body = body[1:]

    index: dict[str, int] = {name: i for i, name in enumerate(names)} if names else {}

    def resolve(token: str, lineno: int) -> int:
        if names is not None:
            if token not in index:
                raise GraphFormatError(f"unknown vertex name {token!r}", lineno)
            return index[token]
        try:
            v = int(token)
        except ValueError:
            raise GraphFormatError(f"expected a vertex index, got {token!r}", lineno) from None
        if not 0 <= v < n:
            raise GraphFormatError(f"vertex index {v} out of range [0, {n})", lineno)
        return v

    edges: list[tuple[int, int, tuple[int, ...]]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, tokens in body:
        if len(tokens) < 3:
            raise GraphFormatError("edge line needs two endpoints and at least one label", lineno)
        u = resolve(tokens[0], lineno)
        v = resolve(tokens[1], lineno)
        if u == v:
            raise GraphFormatError(f"self-loop at {tokens[0]!r}", lineno)
        labels = []
        for tok in tokens[2:]:
            try:
                t = int(tok)
            except ValueError:
                raise GraphFormatError(f"label {tok!r} is not an integer", lineno) from None
            if t < 0:
                raise GraphFormatError(f"label {t} out of range (must be >= 0)", lineno)
            labels.append(t)
        if any(a >= b for a, b in zip(labels, labels[1:])):
            raise GraphFormatError("labels must be strictly ascending", lineno)
        key = (u, v) if directed else (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"duplicate edge {tokens[0]} {tokens[1]}", lineno)
        seen.add(key)
        edges.append((u, v, tuple(labels)))

    try:
        return temporal_graph(directed, n, edges, names)
    except ValidationError as exc:  # pragma: no cover - parse rules above should catch first
        raise GraphFormatError(str(exc), records[0][0]) from exc


def serialize_temporal_graph(g: TemporalGraph) -> str:
    """Emit the text format; output re-parses to an equal graph."""
    out = [f"tg {'directed' if g.directed else 'undirected'} {g.n}"]
    if g.names is not None:
        out.append("names " + " ".join(g.names))
    for e in sorted(g.edges, key=lambda e: (e.tail, e.head)):
        out.append(f"{g.name_of(e.tail)} {g.name_of(e.head)} " + " ".join(map(str, e.labels)))
    return "\n".join(out) + "\n"
