"""Block structure: blocks, cutvertices, bc(G), block chains, DT-graphs.

Blocks are computed with the Hopcroft-Tarjan edge-stack DFS, adapted to
multigraphs: a parallel edge is a genuine back edge, so a digon forms a
2-connected block of its own.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import Disconnected
from .graph import build

TRIVIAL = "trivial"
NON_TRIVIAL = "non-trivial"
NOT_A_CHAIN = "not-a-chain"


@dataclass(frozen=True)
class BlockForest:
    """Complete block/cutvertex decomposition of a graph.

    `bc_graph` is the bipartite block-cutvertex graph: its first
    len(blocks) vertices are block-nodes, the rest are cutvertex-nodes
    in the order of `cutvertices`.
    """

    host_n: int
    blocks: tuple          # tuple of frozenset of edge ids
    block_vertices: tuple  # tuple of sorted vertex tuples, parallel to blocks
    cutvertices: tuple     # sorted vertex labels
    bc_graph: object       # Graph
    endblock_flags: tuple  # per block: contains at most one cutvertex

    def block_of_edge(self, eid):
        for i, blk in enumerate(self.blocks):
            if eid in blk:
                return i
        return None

    def is_bridge_block(self, i):
        return len(self.blocks[i]) == 1 and len(self.block_vertices[i]) == 2


def block_forest(G):
    """Blocks, cutvertices and the block-cutvertex graph of G."""
    n = G.n
    visited = [False] * n
    depth = [0] * n
    low = [0] * n
    is_cut = [False] * n
    edge_stack = []
    blocks = []

    for root in range(n):
        if visited[root]:
            continue
        # iterative DFS; frames are (v, parent_edge, iterator over incident edges)
        visited[root] = True
        depth[root] = 0
        low[root] = 0
        stack = [(root, -1, iter(G.adjacency[root]))]
        root_children = 0
        while stack:
            v, parent_edge, it = stack[-1]
            advanced = False
            for eid in it:
                if eid == parent_edge:
                    continue
                w = G._other(eid, v)
                if not visited[w]:
                    edge_stack.append(eid)
                    visited[w] = True
                    depth[w] = depth[v] + 1
                    low[w] = depth[w]
                    stack.append((w, eid, iter(G.adjacency[w])))
                    if v == root:
                        root_children += 1
                    advanced = True
                    break
                elif depth[w] < depth[v]:
                    edge_stack.append(eid)
                    low[v] = min(low[v], depth[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                u = stack[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] >= depth[u]:
                    # u separates the subtree at v: pop one block
                    blk = []
                    while True:
                        eid = edge_stack.pop()
                        blk.append(eid)
                        if eid == parent_edge:
                            break
                    blocks.append(frozenset(blk))
                    if u != root:
                        is_cut[u] = True
        # root cut status: root is a cutvertex iff it has >= 2 DFS children
        is_cut[root] = root_children >= 2

    block_vertices = []
    for blk in blocks:
        verts = set()
        for eid in blk:
            _, a, b = G.edges[eid]
            verts.add(a)
            verts.add(b)
        block_vertices.append(tuple(sorted(verts)))

    cutvertices = tuple(v for v in range(n) if is_cut[v])
    cut_index = {v: i for i, v in enumerate(cutvertices)}

    b = len(blocks)
    bc_pairs = []
    for i, verts in enumerate(block_vertices):
        for v in verts:
            if v in cut_index:
                bc_pairs.append((i, b + cut_index[v]))
    bc = build(b + len(cutvertices), sorted(bc_pairs))

    endblock_flags = tuple(
        sum(1 for v in verts if v in cut_index) <= 1 for verts in block_vertices
    )
    return BlockForest(
        host_n=n,
        blocks=tuple(blocks),
        block_vertices=tuple(block_vertices),
        cutvertices=cutvertices,
        bc_graph=bc,
        endblock_flags=endblock_flags,
    )


def is_two_connected(G):
    """2-connected: connected, no cutvertex, >= 3 vertices -- except that a
    digon (two vertices joined by parallel edges) counts as 2-connected."""
    if not G.is_connected():
        return False
    if G.n == 2:
        return G.m >= 2
    if G.n < 3:
        return False
    bf = block_forest(G)
    return len(bf.blocks) == 1 and not bf.cutvertices


def is_block_chain(G):
    """Classify G as a trivial / non-trivial block chain, or not a chain.

    bc(G) of a connected graph is a tree, so it is a path iff no node has
    degree >= 3.
    """
    if not G.is_connected():
        raise Disconnected("block chain classification needs a connected graph")
    bf = block_forest(G)
    if len(bf.blocks) <= 1:
        return TRIVIAL
    bc = bf.bc_graph
    if all(bc.degree(v) <= 2 for v in range(bc.n)):
        return NON_TRIVIAL
    return NOT_A_CHAIN


def v2(G):
    """Vertices of degree exactly 2 (counting multiplicity)."""
    return tuple(v for v in range(G.n) if G.degree(v) == 2)


def is_dt_graph(G):
    """True iff every edge has at least one endpoint of degree 2."""
    return all(G.degree(u) == 2 or G.degree(v) == 2 for _, u, v in G.edges)


@dataclass(frozen=True)
class SuspendedPath:
    """Maximal path whose internal vertices are 2-valent in the host."""

    vertices: tuple  # vertex sequence, endpoints first/last
    edge_ids: tuple

    @property
    def endpoints(self):
        return self.vertices[0], self.vertices[-1]


def suspended_paths(G):
    """All suspended paths of G with at least one internal vertex.

    Anchored at vertices of degree != 2; a cycle of 2-valent vertices
    yields nothing (no anchor), and a closed ear returning to its anchor
    is not a path and is skipped.
    """
    found = {}
    for a in range(G.n):
        if G.degree(a) == 2:
            continue
        for eid in G.adjacency[a]:
            verts = [a]
            eids = [eid]
            prev, cur = a, G._other(eid, a)
            while G.degree(cur) == 2 and cur != a:
                e1, e2 = G.adjacency[cur]
                nxt_eid = e2 if e1 == eids[-1] else e1
                verts.append(cur)
                eids.append(nxt_eid)
                prev, cur = cur, G._other(nxt_eid, cur)
            if cur == a or len(verts) == 1:
                continue  # closed ear, or no internal vertex
            verts.append(cur)
            seq = tuple(verts)
            rev = tuple(reversed(seq))
            key = min(seq, rev)
            if key not in found:
                found[key] = SuspendedPath(seq, tuple(eids))
    return [found[k] for k in sorted(found)]
