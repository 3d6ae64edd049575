"""Constrained hamiltonian search in squares and F_k certificates.

The walk searches run on the backtracking kernel over bitmask adjacency;
every witness is re-verified here against the BFS-distance square, so
the verifier shares no code with the search.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field

from . import _kernel
from .errors import (
    InvalidInput,
    InvalidQuery,
    NotTwoConnected,
    PreconditionUnmet,
    SameVertex,
    TooSmall,
)
from .graph import build
from .powers import square, square_distance_oracle
from .result import FOUND, Outcome, from_kernel

DEFAULT_BUDGET = 10_000_000
KERNEL_MAX_N = 64


@functools.lru_cache(maxsize=512)
def adjacency_masks(G):
    """(square-mask, host-mask) neighbor bitmasks for the kernel.

    Cached per host graph; Graph is immutable."""
    if G.n > KERNEL_MAX_N:
        raise InvalidInput(f"search kernel handles at most {KERNEL_MAX_N} vertices")
    sq = square(G)
    sq_adj = [0] * G.n
    for u in range(G.n):
        for v in sq.neighbors(u):
            sq_adj[u] |= 1 << v
    g_adj = [0] * G.n
    for u in range(G.n):
        for v in G.neighbors(u):
            g_adj[u] |= 1 << v
    return tuple(sq_adj), tuple(g_adj)


def _distinct_reps(slots):
    """Assign a distinct item to every slot, preferring small items.

    slots: list of sorted candidate lists.  Returns the lexicographically
    least assignment (by slot order) or None.  Small instances only.
    """

    used = set()
    pick = []

    def rec(i):
        if i == len(slots):
            return True
        for item in slots[i]:
            if item in used:
                continue
            used.add(item)
            pick.append(item)
            if rec(i + 1):
                return True
            pick.pop()
            used.discard(item)
        return False

    if rec(0):
        return list(pick)
    return None


# ---------------------------------------------------------------------------
# walk searches
# ---------------------------------------------------------------------------


def ham_path_in_square(G, s, t, required_g_edges_at=None, budget=DEFAULT_BUDGET):
    """Hamiltonian s-t path in G^2 with per-vertex host-edge requirements.

    required_g_edges_at maps vertex -> 1 or 2: that many distinct edges of
    the walk incident to the vertex must be edges of G, all requirement
    edges globally distinct.
    """
    if s == t:
        raise SameVertex("path endpoints must differ")
    G.check_vertex(s)
    G.check_vertex(t)
    req = [0] * G.n
    for v, r in (required_g_edges_at or {}).items():
        G.check_vertex(v)
        req[v] = r
    sq_adj, g_adj = adjacency_masks(G)
    status, order, nodes = _kernel.ham_search(
        G.n, sq_adj, g_adj, False, s, t, req, budget
    )
    if status != _kernel.FOUND:
        return from_kernel(status, None, nodes)
    ok, report = verify_square_walk(G, order, False, required_g_edges_at)
    if not ok:
        raise InvalidInput(f"search returned an invalid walk: {report}")
    return Outcome(FOUND, list(order), nodes)


@dataclass(frozen=True)
class HamCycleConstraint:
    """[v; w1,...,wk]-hamiltonian-cycle requirements.

    Both cycle edges at v must be host edges; at least one cycle edge at
    each w must be a host edge; all requirement edges distinct (this is
    the three-distinct-edges clause when v and a w are adjacent).
    """

    v: int | None = None
    w_list: tuple = ()

    def req_array(self, G):
        req = [0] * G.n
        if self.v is not None:
            G.check_vertex(self.v)
            req[self.v] = 2
        for w in self.w_list:
            G.check_vertex(w)
            if w == self.v:
                raise InvalidInput("v cannot also appear in w_list")
            req[w] = max(req[w], 1)
        return req


def ham_cycle_in_square(G, constraint=None, budget=DEFAULT_BUDGET):
    """Hamiltonian cycle in G^2 under a HamCycleConstraint."""
    if G.n < 3:
        raise TooSmall("a hamiltonian cycle needs at least 3 vertices")
    constraint = constraint or HamCycleConstraint()
    req = constraint.req_array(G)
    sq_adj, g_adj = adjacency_masks(G)
    status, order, nodes = _kernel.ham_search(
        G.n, sq_adj, g_adj, True, 0, -1, req, budget
    )
    if status != _kernel.FOUND:
        return from_kernel(status, None, nodes)
    req_map = {v: r for v, r in enumerate(req) if r}
    ok, report = verify_square_walk(G, order, True, req_map)
    if not ok:
        raise InvalidInput(f"search returned an invalid cycle: {report}")
    return Outcome(FOUND, list(order), nodes)


def verify_square_walk(G, order, closed, required_g_edges_at=None):
    """Independent check of a hamiltonian walk in G^2 with requirements.

    Uses the BFS-distance square, not the production neighbor scan.
    """
    required = dict(required_g_edges_at or {})
    if sorted(order) != list(range(G.n)):
        return False, "walk is not a permutation of the vertices"
    sq = square_distance_oracle(G)
    steps = [(order[i], order[i + 1]) for i in range(len(order) - 1)]
    if closed:
        steps.append((order[-1], order[0]))
    for a, b in steps:
        if not sq.has_edge(a, b):
            return False, f"{a}-{b} is not an edge of the square"
    slots = []
    for v in sorted(required):
        cands = sorted(
            i for i, (a, b) in enumerate(steps) if v in (a, b) and G.has_edge(a, b)
        )
        for _ in range(required[v]):
            slots.append(cands)
    if _distinct_reps(slots) is None and slots:
        return False, "cannot assign distinct host edges to all requirements"
    return True, None


# ---------------------------------------------------------------------------
# F_k certificates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FkQuery:
    """Host graph, k >= 3, and the ordered distinct vertices x1..xk."""

    host: object
    k: int
    a: tuple

    def __post_init__(self):
        if self.k < 3:
            raise InvalidQuery("k must be at least 3")
        if len(self.a) != self.k:
            raise InvalidQuery("vertex tuple length must equal k")
        if len(set(self.a)) != self.k:
            raise InvalidQuery("query vertices must be distinct")
        if self.k > self.host.n:
            raise InvalidQuery("k exceeds the vertex count")
        for v in self.a:
            self.host.check_vertex(v)


@dataclass(frozen=True)
class FkCertificate:
    """x1-x2 hamiltonian path in the square plus witness host edges.

    witnesses maps i (3..k) to an edge id of the host incident to x_i
    whose endpoints appear consecutively on the path; witness ids are
    pairwise distinct.
    """

    path: tuple
    witnesses: tuple  # tuple of (i, edge_id) pairs

    def witness_map(self):
        return dict(self.witnesses)


def check_fk(q, budget=DEFAULT_BUDGET):
    """Exhaustive search for an F_k certificate for the query."""
    G = q.host
    x1, x2 = q.a[0], q.a[1]
    req_map = {q.a[i]: 1 for i in range(2, q.k)}
    out = ham_path_in_square(G, x1, x2, req_map, budget)
    if not out.found:
        return out
    cert = _certificate_from_path(q, out.witness)
    ok, report = verify_certificate(q, cert)
    if not ok:
        raise InvalidInput(f"internal: built an invalid certificate: {report}")
    return Outcome(FOUND, cert, out.nodes)


def _certificate_from_path(q, order):
    G = q.host
    steps = [(order[i], order[i + 1]) for i in range(len(order) - 1)]
    slots = []
    for i in range(2, q.k):
        v = q.a[i]
        slots.append(
            sorted(
                idx
                for idx, (a, b) in enumerate(steps)
                if v in (a, b) and G.has_edge(a, b)
            )
        )
    picks = _distinct_reps(slots)
    if picks is None:
        raise InvalidInput("path admits no distinct witness assignment")
    witnesses = []
    for i, idx in zip(range(3, q.k + 1), picks):
        a, b = steps[idx]
        eid = min(
            e for e in G.adjacency[a] if G._other(e, a) == b
        )
        witnesses.append((i, eid))
    return FkCertificate(tuple(order), tuple(witnesses))


def verify_certificate(q, cert):
    """Re-check an F_k certificate from scratch; returns (ok, report)."""
    G = q.host
    wit = cert.witness_map()
    if sorted(wit) != list(range(3, q.k + 1)):
        return False, "witness indices must be exactly 3..k"
    if cert.path[0] != q.a[0] or cert.path[-1] != q.a[1]:
        return False, "path endpoints are not x1, x2"
    ok, report = verify_square_walk(G, list(cert.path), False)
    if not ok:
        return False, report
    if len(set(wit.values())) != len(wit):
        return False, "witness edges are not pairwise distinct"
    pos = {v: i for i, v in enumerate(cert.path)}
    for i, eid in wit.items():
        xi = q.a[i - 1]
        try:
            u, v = G.endpoints(eid)
        except Exception:
            return False, f"witness {i} uses unknown edge id {eid}"
        if xi not in (u, v):
            return False, f"witness edge for x{i} is not incident to it"
        if abs(pos[u] - pos[v]) != 1:
            return False, f"witness edge for x{i} is not a path step"
    return True, None


def certificate_payload(q, cert):
    """JSON-ready certificate object tied to its query."""
    from .eps import host_hash

    return {
        "query": {
            "n": q.host.n,
            "edges-hash": host_hash(q.host),
            "k": q.k,
            "a": list(q.a),
        },
        "path": list(cert.path),
        "witnesses": {str(i): eid for i, eid in cert.witnesses},
    }


def certificate_flags(q, cert):
    """Advisory notes: witnesses whose other endpoint is x1 or x2."""
    G = q.host
    flags = []
    for i, eid in cert.witness_map().items():
        u, v = G.endpoints(eid)
        other = v if u == q.a[i - 1] else u
        if other in (q.a[0], q.a[1]):
            flags.append(f"witness for x{i} touches endpoint vertex {other}")
    return flags


# ---------------------------------------------------------------------------
# the G+ gadget and the remaining statement checkers
# ---------------------------------------------------------------------------


def g_plus(G, x1, x2):
    """G plus a new vertex y adjacent to exactly x1 and x2; returns (graph, y)."""
    if x1 == x2:
        raise SameVertex("attachment vertices must differ")
    G.check_vertex(x1)
    G.check_vertex(x2)
    y = G.n
    pairs = G.edge_pairs() + [(x1, y), (x2, y)]
    return build(G.n + 1, pairs), y


def check_theorem_g2(G, x, y, q, budget=DEFAULT_BUDGET):
    """xy-hamiltonian path in G^2 with a host edge at the chosen endpoint q."""
    from .decomposition import is_two_connected

    if not is_two_connected(G):
        raise NotTwoConnected("stated for 2-connected graphs")
    if q not in (x, y):
        raise InvalidInput("q must be one of the endpoints")
    return ham_path_in_square(G, x, y, {q: 1}, budget)


def check_corollary1(B, v, w, budget=DEFAULT_BUDGET):
    """Block-chain hamiltonian cycle / path corollary for one (v, w) pair.

    Part (i): hamiltonian cycle of B^2 with a host edge at v and at w
    (two host edges at v when v's endblock is 2-connected).
    Part (ii): vw-hamiltonian path of B^2 with host edges at both ends.
    """
    from .decomposition import NON_TRIVIAL, block_forest, is_block_chain

    if B.n < 3:
        raise PreconditionUnmet("need at least 3 vertices")
    if is_block_chain(B) != NON_TRIVIAL:
        raise PreconditionUnmet("host is not a non-trivial block chain")
    bf = block_forest(B)
    cuts = set(bf.cutvertices)
    if v in cuts or w in cuts:
        raise PreconditionUnmet("v and w must not be cutvertices")
    ends = [i for i, f in enumerate(bf.endblock_flags) if f]
    v_block = next((i for i in ends if v in bf.block_vertices[i]), None)
    w_block = next((i for i in ends if w in bf.block_vertices[i]), None)
    if v_block is None or w_block is None or v_block == w_block:
        raise PreconditionUnmet("v and w must lie in different endblocks")

    v_req = 2 if not bf.is_bridge_block(v_block) else 1
    part_i = ham_cycle_in_square(
        B, HamCycleConstraint(v=v, w_list=(w,)) if v_req == 2
        else HamCycleConstraint(v=None, w_list=(v, w)),
        budget,
    )
    part_ii = ham_path_in_square(B, v, w, {v: 1, w: 1}, budget)
    return {"part_i": part_i, "part_ii": part_ii, "v_edges_required": v_req}


def _verify_cor2_cycle(G, x1, x2, order):
    """Independent check of a hamiltonian cycle of G^2 - x2 with both
    cycle edges at x1 being host edges (original vertex labels)."""
    if sorted(order) != sorted(v for v in range(G.n) if v != x2):
        return False, "cycle does not cover exactly V - {x2}"
    sq = square_distance_oracle(G)
    k = len(order)
    for i in range(k):
        a, b = order[i], order[(i + 1) % k]
        if not sq.has_edge(a, b):
            return False, f"{a}-{b} is not an edge of the square"
        if x1 in (a, b):
            if not G.has_edge(a, b):
                return False, f"cycle edge {a}-{b} at x1 is not a host edge"
    return True, None


def check_corollary2(G, x1, x2, budget=DEFAULT_BUDGET):
    """DT-block dichotomy at a non-adjacent pair with 2-valent neighborhoods.

    Branch (i): hamiltonian cycle of G^2 - x2 whose edges at x1 are host
    edges.  Branch (ii): x1x2-hamiltonian path of G^2 whose first and
    final edges are host edges.
    """
    from .decomposition import is_dt_graph, is_two_connected, v2

    if not (is_two_connected(G) and is_dt_graph(G)):
        raise PreconditionUnmet("host must be a 2-connected DT-graph")
    two_valent = set(v2(G))
    for x in (x1, x2):
        G.check_vertex(x)
        if not G.neighbors(x) <= two_valent:
            raise PreconditionUnmet(f"N({x}) must consist of 2-valent vertices")
    if G.has_edge(x1, x2):
        raise PreconditionUnmet("x1 and x2 must be nonadjacent")

    # branch (i): search in square(G) - x2, host adjacency relabeled
    sq = square(G)
    H, new_to_old = sq.delete_vertex(x2)
    old_to_new = {old: new for new, old in enumerate(new_to_old)}
    out_i = None
    if H.n >= 3:
        g_adj = [0] * H.n
        for new_u, old_u in enumerate(new_to_old):
            for old_v in G.neighbors(old_u):
                if old_v in old_to_new:
                    g_adj[new_u] |= 1 << old_to_new[old_v]
        sq_adj = [0] * H.n
        for u in range(H.n):
            for v in H.neighbors(u):
                sq_adj[u] |= 1 << v
        req = [0] * H.n
        req[old_to_new[x1]] = 2
        status, order, nodes = _kernel.ham_search(
            H.n, sq_adj, g_adj, True, 0, -1, req, budget
        )
        mapped = [new_to_old[v] for v in order] if order else None
        if status == _kernel.FOUND:
            ok, report = _verify_cor2_cycle(G, x1, x2, mapped)
            if not ok:
                raise InvalidInput(f"search returned an invalid cycle: {report}")
        out_i = from_kernel(status, mapped, nodes)
    if out_i is not None and out_i.found:
        return {"branch": "i", "outcome": out_i}
    out_ii = ham_path_in_square(G, x1, x2, {x1: 1, x2: 1}, budget)
    if out_ii.found:
        return {"branch": "ii", "outcome": out_ii}
    # neither branch: report the more informative outcome
    worst = out_i if out_i is not None and out_i.unknown else out_ii
    return {"branch": None, "outcome": worst}
