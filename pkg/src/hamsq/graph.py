"""Immutable loopless multigraph with stable vertex and edge identities.

Vertices are dense integer labels 0..n-1.  Edges carry integer ids assigned
in construction order; parallel edges are allowed and keep distinct ids.
All mutating operations return fresh graphs (plus a label map where vertex
labels change), so values can be shared freely between workers.
"""

from __future__ import annotations

from collections import deque

from .errors import LoopRejected, UnknownEdgeId, VertexOutOfRange

INF = float("inf")


class Graph:
    """Finite loopless multigraph, immutable after construction."""

    __slots__ = ("n", "edges", "adjacency", "simple", "_neighbor_sets")

    def __init__(self, n, edges, adjacency, simple):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "adjacency", adjacency)
        object.__setattr__(self, "simple", simple)
        object.__setattr__(self, "_neighbor_sets", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    # -- basic queries -------------------------------------------------

    @property
    def m(self):
        return len(self.edges)

    def check_vertex(self, v):
        if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < self.n:
            raise VertexOutOfRange(f"vertex {v!r} not in 0..{self.n - 1}")

    def check_edge(self, eid):
        if not isinstance(eid, int) or not 0 <= eid < len(self.edges):
            raise UnknownEdgeId(f"edge id {eid!r} not in 0..{len(self.edges) - 1}")

    def endpoints(self, eid):
        self.check_edge(eid)
        _, u, v = self.edges[eid]
        return u, v

    def degree(self, v):
        """Degree counting edge multiplicity."""
        self.check_vertex(v)
        return len(self.adjacency[v])

    def neighbor_sets(self):
        """Per-vertex neighbor sets of the underlying simple graph."""
        cached = self._neighbor_sets
        if cached is None:
            cached = tuple(
                frozenset(self._other(e, v) for e in self.adjacency[v])
                for v in range(self.n)
            )
            object.__setattr__(self, "_neighbor_sets", cached)
        return cached

    def neighbors(self, v):
        self.check_vertex(v)
        return self.neighbor_sets()[v]

    def _other(self, eid, v):
        _, a, b = self.edges[eid]
        return b if a == v else a

    def has_edge(self, u, v):
        self.check_vertex(u)
        self.check_vertex(v)
        return v in self.neighbor_sets()[u]

    def edge_pairs(self):
        """Endpoint pairs in edge-id order."""
        return [(u, v) for _, u, v in self.edges]

    # -- traversal -----------------------------------------------------

    def distances_from(self, s):
        """BFS distances on the underlying simple graph; unreachable -> INF."""
        self.check_vertex(s)
        dist = [INF] * self.n
        dist[s] = 0
        nbrs = self.neighbor_sets()
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in nbrs[u]:
                if dist[w] == INF:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist

    def is_connected(self):
        if self.n <= 1:
            return True
        return all(d != INF for d in self.distances_from(0))

    # -- derived graphs ------------------------------------------------

    def underlying_simple(self):
        """Simple graph obtained by collapsing parallel edges."""
        if self.simple:
            return self
        seen = set()
        pairs = []
        for _, u, v in self.edges:
            key = (u, v) if u < v else (v, u)
            if key not in seen:
                seen.add(key)
                pairs.append(key)
        return build(self.n, pairs)

    def induced_subgraph(self, vertices):
        """Subgraph induced on `vertices`; returns (graph, new->old label map)."""
        members = sorted(set(vertices))
        for v in members:
            self.check_vertex(v)
        old_to_new = {v: i for i, v in enumerate(members)}
        keep = set(members)
        pairs = [
            (old_to_new[u], old_to_new[v])
            for _, u, v in self.edges
            if u in keep and v in keep
        ]
        return build(len(members), pairs), members

    def delete_edges(self, edge_ids):
        doomed = set(edge_ids)
        for eid in doomed:
            self.check_edge(eid)
        pairs = [(u, v) for eid, u, v in self.edges if eid not in doomed]
        return build(self.n, pairs)

    def delete_vertex(self, v):
        """Delete v and its incident edges; returns (graph, new->old map)."""
        self.check_vertex(v)
        keep = [u for u in range(self.n) if u != v]
        return self.induced_subgraph(keep)

    # -- identity ------------------------------------------------------

    def _canonical_pairs(self):
        return sorted((u, v) if u < v else (v, u) for _, u, v in self.edges)

    def __eq__(self, other):
        """Labeled-graph identity: vertex count and edge multiset.

        Edge-id order is a construction artifact and does not count."""
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._canonical_pairs() == other._canonical_pairs()

    def __hash__(self):
        return hash((self.n, tuple(self._canonical_pairs())))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m}, simple={self.simple})"


def build(n, edge_list):
    """Build an immutable graph from endpoint pairs.

    Edge ids are assigned 0..m-1 in input order.  Loops are rejected;
    parallel edges are kept.
    """
    if n < 0:
        raise VertexOutOfRange("vertex count must be nonnegative")
    edges = []
    adjacency = [[] for _ in range(n)]
    seen_pairs = set()
    simple = True
    for eid, (u, v) in enumerate(edge_list):
        for x in (u, v):
            if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < n:
                raise VertexOutOfRange(f"endpoint {x!r} not in 0..{n - 1}")
        if u == v:
            raise LoopRejected(f"edge {eid} is a loop at {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen_pairs:
            simple = False
        seen_pairs.add(key)
        edges.append((eid, u, v))
        adjacency[u].append(eid)
        adjacency[v].append(eid)
    return Graph(n, tuple(edges), tuple(tuple(a) for a in adjacency), simple)


def vertex_set(G, vertices):
    """Sorted duplicate-free vertex tuple, validated against G."""
    members = sorted(set(vertices))
    for v in members:
        G.check_vertex(v)
    return tuple(members)
