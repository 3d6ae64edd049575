"""Simple-cycle enumeration and prescribed-vertex cycle search.

Cycles are enumerated exhaustively by rooted DFS: the root is the
smallest vertex on the cycle, interior vertices are all larger, and each
cycle is emitted once (direction fixed by second < last vertex).  A digon
made of two parallel edges counts as a cycle.  Enumeration order is
deterministic, so "first cycle found" is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import Acyclic, HamsqError
from .graph import vertex_set
from .result import FOUND, NONE, UNKNOWN, Outcome


@dataclass(frozen=True)
class CycleWitness:
    """A cycle as matching vertex and edge sequences.

    edge_ids[i] joins vertices[i] and vertices[(i+1) % len]; vertices are
    pairwise distinct.
    """

    vertices: tuple
    edge_ids: tuple

    def __len__(self):
        return len(self.edge_ids)

    def w_count(self, W):
        return len(set(self.vertices) & set(W))

    def validate(self, G):
        k = len(self.vertices)
        if k != len(self.edge_ids) or k < 2:
            raise HamsqError("malformed cycle witness")
        if len(set(self.vertices)) != k:
            raise HamsqError("cycle revisits a vertex")
        if len(set(self.edge_ids)) != k:
            raise HamsqError("cycle reuses an edge")
        for i in range(k):
            a, b = self.vertices[i], self.vertices[(i + 1) % k]
            u, v = G.endpoints(self.edge_ids[i])
            if {a, b} != {u, v}:
                raise HamsqError(f"edge {self.edge_ids[i]} does not join {a},{b}")


class CycleCapExceeded(HamsqError):
    """Cycle enumeration hit its cap; maximality cannot be certified."""


def iter_cycles(G, max_cycles=1_000_000):
    """Yield every simple cycle of G exactly once, deterministically."""
    count = 0
    for root in range(G.n):
        # digons rooted here: pairs of parallel edges to a larger neighbor
        by_nbr = {}
        for eid in G.adjacency[root]:
            w = G._other(eid, root)
            if w > root:
                by_nbr.setdefault(w, []).append(eid)
        for w in sorted(by_nbr):
            eids = sorted(by_nbr[w])
            for i in range(len(eids)):
                for j in range(i + 1, len(eids)):
                    count += 1
                    if count > max_cycles:
                        raise CycleCapExceeded(str(max_cycles))
                    yield CycleWitness((root, w), (eids[i], eids[j]))

        # longer cycles: DFS over vertices > root
        path = [root]
        path_eids = []
        on_path = {root}

        def steps(v):
            out = []
            for eid in G.adjacency[v]:
                w = G._other(eid, v)
                if w > root or (w == root and len(path) >= 3):
                    out.append((w, eid))
            out.sort()
            return out

        stack = [steps(root)]
        while stack:
            frame = stack[-1]
            if not frame:
                stack.pop()
                if path_eids:
                    on_path.discard(path.pop())
                    path_eids.pop()
                continue
            w, eid = frame.pop(0)
            if w == root:
                # close: emit once per direction class
                if path[1] < path[-1]:
                    count += 1
                    if count > max_cycles:
                        raise CycleCapExceeded(str(max_cycles))
                    yield CycleWitness(tuple(path), tuple(path_eids + [eid]))
                continue
            if w in on_path:
                continue
            path.append(w)
            path_eids.append(eid)
            on_path.add(w)
            stack.append(steps(w))


def has_cycle(G):
    for _ in iter_cycles(G):
        return True
    return False


def find_cycle_through(G, required, budget=1_000_000):
    """First cycle visiting every vertex of `required`, if any.

    The budget caps the number of cycles inspected; exhausting it yields
    an `unknown` outcome.
    """
    need = set(vertex_set(G, required))
    inspected = 0
    try:
        for cyc in iter_cycles(G, max_cycles=budget):
            inspected += 1
            if need <= set(cyc.vertices):
                return Outcome(FOUND, cyc, inspected)
    except CycleCapExceeded:
        return Outcome(UNKNOWN, None, inspected)
    return Outcome(NONE, None, inspected)


def best_w_cycle(G, W, max_cycles=1_000_000):
    """W-maximal cycle: maximizes |V(K) cap W| over all cycles of G.

    Returns (cycle, count, sound) where sound means count >= 4.
    Maximality is certified because enumeration is exhaustive; the cap
    raises CycleCapExceeded instead of silently truncating.
    """
    members = set(vertex_set(G, W))
    best = None
    best_count = -1
    for cyc in iter_cycles(G, max_cycles=max_cycles):
        c = len(members & set(cyc.vertices))
        if c > best_count:
            best, best_count = cyc, c
            if best_count == len(members):
                break
    if best is None:
        raise Acyclic("graph has no cycle")
    return best, best_count, best_count >= 4


def find_vw1w2_maximal_cycle(G, v, w1, w2, max_cycles=1_000_000):
    """A [v; w1, w2]-maximal cycle: contains v and w1, and also w2 unless
    no cycle passes through all three."""
    from .decomposition import is_two_connected
    from .errors import NotTwoConnected

    if not is_two_connected(G):
        raise NotTwoConnected("[v;w1,w2]-maximal cycles need a 2-connected host")
    through_all = find_cycle_through(G, (v, w1, w2), budget=max_cycles)
    if through_all.found:
        return through_all.witness
    out = find_cycle_through(G, (v, w1), budget=max_cycles)
    if not out.found:
        raise Acyclic(f"no cycle through {v} and {w1}")
    return out.witness
