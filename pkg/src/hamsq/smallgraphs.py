"""Desk-scale enumeration of nonisomorphic graphs.

Production pipelines are expected to ingest externally enumerated
streams; this module makes the verification harness self-contained at
desk scale.  Up to 7 vertices the graph atlas is used directly; 8-vertex
graphs are produced by vertex augmentation from the 7-vertex catalog
with isomorphism rejection (hash buckets refined by exact VF2 checks).
2-connected DT-graphs are enumerated constructively: such a graph is a
cycle or the subdivision (every edge at least once) of a loopless
2-connected multigraph with minimum degree 3, which pins the base
multigraph down to at most 4 branch vertices at n <= 10.

The 8-vertex catalog is cached on disk (HAMSQ_CACHE, default
~/.cache/hamsq) because it takes a minute to rebuild.
"""

from __future__ import annotations

import itertools
import os
from pathlib import Path

import networkx as nx

from .corpus import graph6_decode, graph6_encode
from .decomposition import is_dt_graph, is_two_connected
from .graph import build

MAX_ENUM_N = 8


def to_nx(G):
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from((u, v) for _, u, v in G.edges)
    return H


def from_nx(H):
    nodes = sorted(H.nodes())
    idx = {v: i for i, v in enumerate(nodes)}
    return build(len(nodes), sorted((idx[u], idx[v]) for u, v in H.edges()))


def _cache_dir():
    root = os.environ.get("HAMSQ_CACHE")
    path = Path(root) if root else Path.home() / ".cache" / "hamsq"
    path.mkdir(parents=True, exist_ok=True)
    return path


class _IsoRejector:
    """Keep one representative per isomorphism class."""

    def __init__(self):
        self.buckets = {}
        self.kept = []

    def add(self, H):
        key = (
            H.number_of_nodes(),
            H.number_of_edges(),
            nx.weisfeiler_lehman_graph_hash(H, iterations=3),
        )
        bucket = self.buckets.setdefault(key, [])
        for rep in bucket:
            if nx.is_isomorphic(H, rep):
                return False
        bucket.append(H)
        self.kept.append(H)
        return True


def nonisomorphic_graphs(n):
    """All simple graphs on exactly n vertices, one per isomorphism class.

    Deterministic order: sorted by graph6 record.
    """
    if n < 0 or n > MAX_ENUM_N:
        raise ValueError(f"enumeration supports 0 <= n <= {MAX_ENUM_N}")
    if n <= 7:
        atlas = [g for g in nx.graph_atlas_g() if g.number_of_nodes() == n]
        graphs = [from_nx(g) for g in atlas]
        return sorted(graphs, key=graph6_encode)

    cache = _cache_dir() / "graphs8.g6"
    if cache.exists():
        return [graph6_decode(line) for line in cache.read_text().splitlines()]
    rejector = _IsoRejector()
    for G in nonisomorphic_graphs(7):
        base = to_nx(G)
        for bits in range(1 << 7):
            H = base.copy()
            H.add_node(7)
            for v in range(7):
                if (bits >> v) & 1:
                    H.add_edge(v, 7)
            rejector.add(H)
    graphs = sorted((from_nx(H) for H in rejector.kept), key=graph6_encode)
    cache.write_text("\n".join(graph6_encode(G) for G in graphs) + "\n")
    return graphs


def connected_graphs(n):
    return [G for G in nonisomorphic_graphs(n) if G.is_connected()]


def two_connected_graphs(n):
    return [G for G in nonisomorphic_graphs(n) if is_two_connected(G)]


def trees(n):
    """Nonisomorphic trees on n vertices."""
    if n <= 1:
        return [build(n, [])]
    if n == 2:
        return [build(2, [(0, 1)])]
    return sorted((from_nx(T) for T in nx.nonisomorphic_trees(n)), key=graph6_encode)


def cycle_graph(n):
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n):
    return build(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n):
    return build(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


# ---------------------------------------------------------------------------
# 2-connected DT-graphs
# ---------------------------------------------------------------------------


def _base_multigraphs(n_base, max_edges):
    """Loopless 2-connected multigraphs with min degree >= 3 on n_base
    vertices and at most max_edges edges, as multiplicity assignments."""
    pairs = list(itertools.combinations(range(n_base), 2))
    found = []
    for mult in itertools.product(range(max_edges + 1), repeat=len(pairs)):
        m = sum(mult)
        if m == 0 or m > max_edges:
            continue
        deg = [0] * n_base
        edge_list = []
        for (u, v), k in zip(pairs, mult):
            deg[u] += k
            deg[v] += k
            edge_list.extend([(u, v)] * k)
        if any(d < 3 for d in deg):
            continue
        G = build(n_base, edge_list)
        if is_two_connected(G):
            found.append(G)
    return found


def _subdivide(G, extra_per_edge):
    """Subdivide edge e of G into a path with 1 + extra_per_edge[e] interior
    vertices (so every edge is subdivided at least once)."""
    pairs = []
    nxt = G.n
    for eid, u, v in G.edges:
        chain = [u]
        for _ in range(1 + extra_per_edge[eid]):
            chain.append(nxt)
            nxt += 1
        chain.append(v)
        pairs.extend(zip(chain, chain[1:]))
    return build(nxt, pairs)


def dt_two_connected_graphs(max_n):
    """All 2-connected DT simple graphs with 3 <= n <= max_n, up to iso.

    Complete by the structure theorem in the module docstring: base
    multigraphs need n_base + ceil(3 n_base / 2) <= max_n, so
    n_base <= 2 max_n / 5.
    """
    rejector = _IsoRejector()
    out = []
    for n in range(3, max_n + 1):
        C = cycle_graph(n)
        if rejector.add(to_nx(C)):
            out.append(C)
    max_base = (2 * max_n) // 5
    for n_base in range(2, max_base + 1):
        for H in _base_multigraphs(n_base, max_n - n_base):
            slack = max_n - n_base - H.m
            for total_extra in range(slack + 1):
                for combo in itertools.combinations_with_replacement(
                    range(H.m), total_extra
                ):
                    extra = [0] * H.m
                    for e in combo:
                        extra[e] += 1
                    G = _subdivide(H, extra)
                    if not (G.simple and is_dt_graph(G) and is_two_connected(G)):
                        continue  # pragma: no cover - construction guarantees
                    if rejector.add(to_nx(G)):
                        out.append(G)
    return sorted(out, key=lambda G: (G.n, graph6_encode(G)))


# ---------------------------------------------------------------------------
# block chains
# ---------------------------------------------------------------------------


def _chain_blocks(max_block):
    blocks = [path_graph(2)]
    for n in range(3, max_block + 1):
        blocks.extend(two_connected_graphs(n))
    return blocks


def block_chains(max_n, max_block=5, min_blocks=2):
    """Nonisomorphic block chains with <= max_n vertices assembled from
    bridge blocks and 2-connected blocks of <= max_block vertices."""
    blocks = _chain_blocks(max_block)
    rejector = _IsoRejector()
    out = []

    def extend(current_pairs, current_n, attach, depth):
        # attach one more block at vertex `attach`
        for B in blocks:
            if current_n + B.n - 1 > max_n:
                continue
            for entry in range(B.n):
                # map block labels into the chain
                mapping = {}
                mapping[entry] = attach
                nxt = current_n
                for v in range(B.n):
                    if v != entry:
                        mapping[v] = nxt
                        nxt += 1
                pairs = current_pairs + [
                    (mapping[u], mapping[v]) for _, u, v in B.edges
                ]
                if depth + 1 >= min_blocks:
                    G = build(nxt, pairs)
                    if rejector.add(to_nx(G)):
                        out.append(G)
                if nxt + 1 <= max_n:
                    for exit_v in range(B.n):
                        if exit_v != entry:
                            extend(pairs, nxt, mapping[exit_v], depth + 1)

    for B in blocks:
        if B.n > max_n:
            continue
        for exit_v in range(B.n):
            extend([(u, v) for _, u, v in B.edges], B.n, exit_v, 1)
    return sorted(out, key=lambda G: (G.n, graph6_encode(G)))
