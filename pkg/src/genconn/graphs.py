"""Core graph and problem-instance types.

Vertices are dense 0-based integers 0..n-1.  Edges are unordered pairs
stored as (u, v) with u < v; the edge list keeps construction order (the
line-graph construction indexes its vertices by it) while the canonical
file serialization sorts it lexicographically.

All types are immutable after construction, so any number of concurrent
readers is safe.  Internally, vertex and edge subsets are manipulated as
integer bitmasks (bit v of a vertex mask, bit j of an edge mask), which
keeps the search kernels allocation-free.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping

class GraphError(ValueError):
    """A graph or problem instance violates a structural invariant."""


def normalize_edge(u: int, v: int) -> tuple[int, int]:
    """Return the unordered pair {u, v} as (min, max); reject self-loops."""
    if u == v:
        raise GraphError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


def vertex_set(members: Iterable[int]) -> tuple[int, ...]:
    """Normalize a vertex collection to a sorted tuple of distinct ids."""
    return tuple(sorted(set(members)))


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph, optionally tagged with a tripartition.

    ``part_tag``, when present, assigns every vertex a part in {0, 1, 2}
    and every edge must join two distinct parts.
    """

    n: int
    edges: tuple[tuple[int, int], ...] = ()
    part_tag: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise GraphError(f"edge ({u},{v}) out of range for n={self.n}")
            if (u, v) in seen:
                raise GraphError(f"duplicate edge ({u},{v})")
            seen.add((u, v))
        if self.part_tag is not None:
            if len(self.part_tag) != self.n:
                raise GraphError(
                    f"part tags cover {len(self.part_tag)} of {self.n} vertices"
                )
            for v, p in enumerate(self.part_tag):
                if p not in (0, 1, 2):
                    raise GraphError(f"vertex {v} has invalid part {p}")
            for u, v in self.edges:
                if self.part_tag[u] == self.part_tag[v]:
                    raise GraphError(
                        f"edge ({u},{v}) joins two vertices of part {self.part_tag[u]}"
                    )

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        part_tag: Iterable[int] | None = None,
    ) -> "Graph":
        """Build a graph, normalizing each edge pair to (min, max)."""
        return cls(
            n,
            tuple(normalize_edge(u, v) for u, v in edges),
            None if part_tag is None else tuple(part_tag),
        )

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return normalize_edge(u, v) in self.edge_set

    @cached_property
    def incident(self) -> tuple[int, ...]:
        """Per-vertex bitmask of incident edge indices."""
        inc = [0] * self.n
        for j, (u, v) in enumerate(self.edges):
            inc[u] |= 1 << j
            inc[v] |= 1 << j
        return tuple(inc)

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """Per-vertex bitmask of neighbor vertices."""
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    @property
    def all_vertices_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def all_edges_mask(self) -> int:
        return (1 << self.m) - 1

    def parts(self) -> tuple[tuple[int, ...], ...]:
        """Vertices of each part, sorted; requires a tripartition tag."""
        if self.part_tag is None:
            raise GraphError("graph carries no tripartition")
        out: tuple[list[int], ...] = ([], [], [])
        for v, p in enumerate(self.part_tag):
            out[p].append(v)
        return tuple(tuple(p) for p in out)


@dataclass(frozen=True)
class SteinerTree:
    """A tree inside a host graph, given by its vertex and edge sets.

    ``vertices`` is sorted and ``edges`` holds (u, v) pairs with u < v in
    lexicographic order, so equality is structural.
    """

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    @classmethod
    def from_masks(cls, g: Graph, vmask: int, emask: int) -> "SteinerTree":
        vs = []
        while vmask:
            b = vmask & -vmask
            vmask ^= b
            vs.append(b.bit_length() - 1)
        es = []
        while emask:
            b = emask & -emask
            emask ^= b
            es.append(g.edges[b.bit_length() - 1])
        return cls(tuple(vs), tuple(sorted(es)))

    @property
    def vertex_mask(self) -> int:
        m = 0
        for v in self.vertices:
            m |= 1 << v
        return m


@dataclass(frozen=True)
class ThreeDMInstance:
    """Three ground sets of size n and a list of index triples."""

    n: int
    triples: tuple[tuple[int, int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"negative ground-set size {self.n}")
        seen = set()
        for t in self.triples:
            if len(t) != 3 or any(not (0 <= x < self.n) for x in t):
                raise GraphError(f"triple {t} out of range for n={self.n}")
            if t in seen:
                raise GraphError(f"duplicate triple {t}")
            seen.add(t)

    @property
    def m(self) -> int:
        return len(self.triples)


@dataclass(frozen=True)
class CnfFormula:
    """CNF with exactly three literals per clause.

    Literals are signed 1-based variable indices (DIMACS convention);
    duplicate literals inside a clause are permitted.
    """

    num_vars: int
    clauses: tuple[tuple[int, int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.num_vars < 0:
            raise GraphError(f"negative variable count {self.num_vars}")
        for c in self.clauses:
            if len(c) != 3:
                raise GraphError(f"clause {c} does not have exactly three literals")
            for lit in c:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise GraphError(f"literal {lit} out of range in clause {c}")

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)


@dataclass(frozen=True)
class ReductionOutput:
    """A transformed instance: graph, terminal set, threshold, provenance.

    ``gadget_map`` names each constructed vertex by its role in the
    construction; roles are unique within one output.  ``threshold`` is
    None for value-preserving constructions that carry no decision bound.
    """

    graph: Graph
    terminals: tuple[int, ...] = ()
    threshold: int | None = None
    gadget_map: Mapping[int, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for t in self.terminals:
            if not (0 <= t < self.graph.n):
                raise GraphError(f"terminal {t} outside graph of order {self.graph.n}")
        if self.threshold is not None and self.threshold < 0:
            raise GraphError(f"negative threshold {self.threshold}")
        labels = list(self.gadget_map.values())
        if len(labels) != len(set(labels)):
            raise GraphError("gadget roles are not injective")


def _reachable_mask(g: Graph, start_mask: int, vmask: int, emask: int) -> int:
    """Bitmask of active vertices reachable from start_mask via active edges."""
    inc = g.incident
    edges = g.edges
    reached = start_mask & vmask
    frontier = reached
    while frontier:
        nxt = 0
        f = frontier
        while f:
            b = f & -f
            f ^= b
            e = inc[b.bit_length() - 1] & emask
            while e:
                eb = e & -e
                e ^= eb
                u, v = edges[eb.bit_length() - 1]
                w = (1 << u) | (1 << v)
                new = w & vmask & ~reached
                reached |= new
                nxt |= new
        frontier = nxt
    return reached


def is_connected(g: Graph, within: Iterable[int] | None = None) -> bool:
    """True iff the graph (or the subgraph induced by ``within``) has one
    connected component.  The empty graph and single vertices count as
    connected by convention.
    """
    if within is None:
        vmask = g.all_vertices_mask
        emask = g.all_edges_mask
    else:
        members = vertex_set(within)
        vmask = 0
        for v in members:
            if not (0 <= v < g.n):
                raise GraphError(f"vertex {v} outside graph of order {g.n}")
            vmask |= 1 << v
        emask = 0
        for j, (u, v) in enumerate(g.edges):
            if (vmask >> u) & 1 and (vmask >> v) & 1:
                emask |= 1 << j
    if vmask == 0:
        return True
    start = vmask & -vmask
    return _reachable_mask(g, start, vmask, emask) == vmask


def line_graph(g: Graph) -> Graph:
    """Line graph of g: one vertex per edge of g, indexed by edge-list
    order, adjacent iff the corresponding edges share an endpoint.
    """
    m = g.m
    out = []
    for i in range(m):
        a, b = g.edges[i]
        for j in range(i + 1, m):
            c, d = g.edges[j]
            if a == c or a == d or b == c or b == d:
                out.append((i, j))
    return Graph(m, tuple(out))
