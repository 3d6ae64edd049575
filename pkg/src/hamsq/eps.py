"""EPS and JEPS spanning-subgraph decompositions.

An EPS-graph of G is a spanning connected subgraph S written as the
edge-disjoint union of an eulerian graph E (every degree even; possibly
disconnected or empty) and a linear forest P.  A JEPS-graph adds an open
trail J, edge-disjoint from both.  The exact search assigns one of the
labels E/P/J/unused to every host edge via the backtracking kernel; every
witness it returns is re-checked by the independent verifier here.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field

from . import _kernel
from .errors import Disconnected, InvalidInput, SameVertex
from .graph import build
from .result import FOUND, NONE, UNKNOWN, Outcome, from_kernel


@dataclass(frozen=True)
class EpsDecomposition:
    """Spanning connected S = E (eulerian) + P (linear forest)."""

    host: object  # Graph
    e_edges: frozenset
    p_edges: frozenset

    def d_e(self, v):
        return sum(1 for eid in self.host.adjacency[v] if eid in self.e_edges)

    def d_p(self, v):
        return sum(1 for eid in self.host.adjacency[v] if eid in self.p_edges)

    @property
    def s_edges(self):
        return self.e_edges | self.p_edges

    def to_json(self):
        payload = {
            "e": sorted(self.e_edges),
            "p": sorted(self.p_edges),
            "host-hash": host_hash(self.host),
        }
        return json.dumps(payload, sort_keys=True)


@dataclass(frozen=True)
class JepsDecomposition(EpsDecomposition):
    """EPS-graph plus an edge-disjoint open trail J."""

    j_edges: frozenset = field(default_factory=frozenset)

    def d_j(self, v):
        return sum(1 for eid in self.host.adjacency[v] if eid in self.j_edges)

    @property
    def s_edges(self):
        return self.e_edges | self.p_edges | self.j_edges

    @property
    def j_ends(self):
        """The two odd-degree vertices of J."""
        return tuple(v for v in range(self.host.n) if self.d_j(v) % 2 == 1)

    def to_json(self):
        payload = {
            "e": sorted(self.e_edges),
            "p": sorted(self.p_edges),
            "j": sorted(self.j_edges),
            "host-hash": host_hash(self.host),
        }
        return json.dumps(payload, sort_keys=True)


def host_hash(G):
    blob = json.dumps([G.n, G.edge_pairs()]).encode()
    return hashlib.sha256(blob).hexdigest()[:16]


@dataclass(frozen=True)
class DegreeConstraint:
    """Per-vertex caps on d_P plus an optional cycle that must lie in E.

    caps maps vertex -> 0 (exactly zero) or 1 (at most one); absent
    vertices are unconstrained.  require_e_nonempty forces E to contain
    at least one edge.
    """

    caps: tuple = ()  # tuple of (vertex, cap) pairs, hashable
    required_cycle: object = None  # CycleWitness or None
    require_e_nonempty: bool = False

    @staticmethod
    def of(caps=None, required_cycle=None, require_e_nonempty=False):
        items = tuple(sorted((caps or {}).items()))
        return DegreeConstraint(items, required_cycle, require_e_nonempty)

    def cap_array(self, n):
        arr = [2] * n
        for v, c in self.caps:
            if not 0 <= c <= 2:
                raise InvalidInput(f"cap {c} for vertex {v} out of range")
            arr[v] = min(arr[v], c)
        return arr

    def validate(self, G):
        for v, _ in self.caps:
            G.check_vertex(v)
        if self.required_cycle is not None:
            self.required_cycle.validate(G)


# ---------------------------------------------------------------------------
# verification (independent of the search kernel)
# ---------------------------------------------------------------------------


def _edge_subgraph(G, eids):
    pairs = [(G.edges[e][1], G.edges[e][2]) for e in sorted(eids)]
    return build(G.n, pairs)


def _is_linear_forest(G, eids):
    deg = {}
    for e in eids:
        _, u, v = G.edges[e]
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    if any(d > 2 for d in deg.values()):
        return False
    # acyclic: union-find
    parent = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            x = parent[x]
        return x

    for e in eids:
        _, u, v = G.edges[e]
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def _spanning_connected(G, eids):
    if G.n <= 1:
        return True
    adj = [[] for _ in range(G.n)]
    for e in eids:
        _, u, v = G.edges[e]
        adj[u].append(v)
        adj[v].append(u)
    seen = [False] * G.n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if not seen[y]:
                seen[y] = True
                count += 1
                stack.append(y)
    return count == G.n


def _edge_set_connected(G, eids):
    verts = set()
    adj = {}
    for e in eids:
        _, u, v = G.edges[e]
        verts.update((u, v))
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    if not verts:
        return True
    start = min(verts)
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen == verts


def verify_eps(d):
    """Check all decomposition invariants; returns (ok, report).

    Never raises; the report names the first violated clause.
    """
    G = d.host
    is_jeps = isinstance(d, JepsDecomposition)
    j_edges = d.j_edges if is_jeps else frozenset()

    for name, eids in (("E", d.e_edges), ("P", d.p_edges), ("J", j_edges)):
        for e in eids:
            if not (isinstance(e, int) and 0 <= e < G.m):
                return False, f"{name} contains unknown edge id {e!r}"
    if d.e_edges & d.p_edges:
        return False, "E and P share an edge"
    if is_jeps and (j_edges & (d.e_edges | d.p_edges)):
        return False, "J overlaps E or P"

    deg_e = {}
    for e in d.e_edges:
        _, u, v = G.edges[e]
        deg_e[u] = deg_e.get(u, 0) + 1
        deg_e[v] = deg_e.get(v, 0) + 1
    if any(x % 2 for x in deg_e.values()):
        return False, "E has a vertex of odd degree"

    if not _is_linear_forest(G, d.p_edges):
        return False, "P is not a linear forest"

    if is_jeps:
        if not j_edges:
            return False, "J is empty"
        deg_j = {}
        for e in j_edges:
            _, u, v = G.edges[e]
            deg_j[u] = deg_j.get(u, 0) + 1
            deg_j[v] = deg_j.get(v, 0) + 1
        odd = sorted(v for v, x in deg_j.items() if x % 2)
        if len(odd) != 2:
            return False, f"J has {len(odd)} odd vertices, expected 2"
        if not _edge_set_connected(G, j_edges):
            return False, "J is not connected"

    if not _spanning_connected(G, d.s_edges):
        return False, "S is not spanning connected"
    return True, None


def normalize_eps(d):
    """Delete P-edges lying on cycles of S until every P-edge is a bridge.

    E is untouched; the result is still a valid spanning connected
    EPS-graph of a subgraph of the original S.  Deterministic: always
    removes the lowest-id offending P-edge first.
    """
    ok, report = verify_eps(d)
    if not ok:
        raise InvalidInput(report)
    G = d.host
    p_edges = set(d.p_edges)
    while True:
        s_edges = sorted(d.e_edges | p_edges)
        bridges = _bridges_of(G, s_edges)
        bad = sorted(e for e in p_edges if e not in bridges)
        if not bad:
            break
        p_edges.discard(bad[0])
    return EpsDecomposition(G, d.e_edges, frozenset(p_edges))


def _bridges_of(G, eids):
    """Bridge edge ids of the subgraph formed by `eids` (multigraph-aware)."""
    adj = {}
    for e in eids:
        _, u, v = G.edges[e]
        adj.setdefault(u, []).append((e, v))
        adj.setdefault(v, []).append((e, u))
    bridges = set()
    depth = {}
    low = {}
    for root in sorted(adj):
        if root in depth:
            continue
        depth[root] = 0
        low[root] = 0
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            v, in_edge, it = stack[-1]
            advanced = False
            for e, w in it:
                if e == in_edge:
                    continue
                if w not in depth:
                    depth[w] = depth[v] + 1
                    low[w] = depth[w]
                    stack.append((w, e, iter(adj[w])))
                    advanced = True
                    break
                low[v] = min(low[v], depth[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                u = stack[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] > depth[u]:
                    bridges.add(in_edge)
    return bridges


# ---------------------------------------------------------------------------
# exact search
# ---------------------------------------------------------------------------

DEFAULT_BUDGET = 10_000_000


def _forced_labels(G, constraint):
    forced = [-1] * G.m
    if constraint.required_cycle is not None:
        for e in constraint.required_cycle.edge_ids:
            forced[e] = _kernel.LABEL_E
    return forced


def _decomposition_from_labels(G, labels, with_j=False):
    e_edges = frozenset(i for i, l in enumerate(labels) if l == _kernel.LABEL_E)
    p_edges = frozenset(i for i, l in enumerate(labels) if l == _kernel.LABEL_P)
    if with_j:
        j_edges = frozenset(i for i, l in enumerate(labels) if l == _kernel.LABEL_J)
        return JepsDecomposition(G, e_edges, p_edges, j_edges)
    return EpsDecomposition(G, e_edges, p_edges)


def find_eps(G, constraint=None, budget=DEFAULT_BUDGET):
    """Exact search for an EPS-graph of G under a DegreeConstraint."""
    if not G.is_connected():
        raise Disconnected("EPS-graphs only exist in connected graphs")
    constraint = constraint or DegreeConstraint.of()
    constraint.validate(G)
    eu = [u for _, u, _ in G.edges]
    ev = [v for _, _, v in G.edges]
    status, labels, nodes = _kernel.eps_search(
        G.n,
        eu,
        ev,
        _forced_labels(G, constraint),
        constraint.cap_array(G.n),
        False,
        -1,
        -1,
        constraint.require_e_nonempty,
        budget,
    )
    if status != _kernel.FOUND:
        return from_kernel(status, None, nodes)
    d = _decomposition_from_labels(G, labels)
    ok, report = verify_eps(d)
    if not ok:
        raise InvalidInput(f"search returned an invalid witness: {report}")
    return Outcome(FOUND, d, nodes)


def find_jeps(G, v, w, constraint=None, budget=DEFAULT_BUDGET):
    """Exact search for a JEPS-graph whose trail J has odd ends {v, w}."""
    if not G.is_connected():
        raise Disconnected("JEPS-graphs only exist in connected graphs")
    if v == w:
        raise SameVertex("the open trail needs two distinct odd ends")
    G.check_vertex(v)
    G.check_vertex(w)
    constraint = constraint or DegreeConstraint.of()
    constraint.validate(G)
    eu = [u for _, u, _ in G.edges]
    ev = [vv for _, _, vv in G.edges]
    status, labels, nodes = _kernel.eps_search(
        G.n,
        eu,
        ev,
        _forced_labels(G, constraint),
        constraint.cap_array(G.n),
        True,
        v,
        w,
        constraint.require_e_nonempty,
        budget,
    )
    if status != _kernel.FOUND:
        return from_kernel(status, None, nodes)
    d = _decomposition_from_labels(G, labels, with_j=True)
    ok, report = verify_eps(d)
    if not ok:
        raise InvalidInput(f"search returned an invalid witness: {report}")
    if set(d.j_ends) != {v, w}:
        raise InvalidInput(f"J ends {d.j_ends} differ from requested {(v, w)}")
    return Outcome(FOUND, d, nodes)


# ---------------------------------------------------------------------------
# statement checkers
# ---------------------------------------------------------------------------


def _endblock_pairs(G):
    """Valid (v, w) choices for a block chain: non-cutvertices in the two
    different endblocks; yields ordered pairs plus the endblock of v."""
    from .decomposition import NON_TRIVIAL, block_forest, is_block_chain

    if is_block_chain(G) != NON_TRIVIAL:
        return None
    bf = block_forest(G)
    ends = [i for i, f in enumerate(bf.endblock_flags) if f]
    if len(ends) != 2:
        return None
    cuts = set(bf.cutvertices)
    pairs = []
    for a, b in ((ends[0], ends[1]), (ends[1], ends[0])):
        va = [x for x in bf.block_vertices[a] if x not in cuts]
        vb = [x for x in bf.block_vertices[b] if x not in cuts]
        for v in va:
            for w in vb:
                pairs.append((v, w, a))
    return bf, pairs


def _block_is_two_connected(bf, i):
    return not bf.is_bridge_block(i)


def check_lemma1(G, budget=DEFAULT_BUDGET):
    """Exhaustive check of the block-chain EPS/JEPS lemma.

    For every valid pair (v, w) of non-cutvertices in different endblocks:
    (i) an EPS-graph with d_P(v), d_P(w) <= 1 exists, with d_P(v) = 0
    whenever v's endblock is 2-connected; (ii) a JEPS-graph with
    d_P(v) = 0 = d_P(w), odd(J) = {v, w} and at most one cutvertex of
    P-degree 2 exists.  Returns a report dict.
    """
    from .errors import PreconditionUnmet

    got = _endblock_pairs(G)
    if got is None:
        raise PreconditionUnmet("host is not a non-trivial block chain")
    bf, pairs = got
    cuts = list(bf.cutvertices)
    failures = []
    unknown = []
    checked = 0
    for v, w, vblock in pairs:
        checked += 1
        v_cap = 0 if _block_is_two_connected(bf, vblock) else 1
        out_i = find_eps(G, DegreeConstraint.of({v: v_cap, w: 1}), budget)
        if out_i.unknown:
            unknown.append((v, w, "i"))
        elif not out_i.found:
            failures.append((v, w, "i"))

        out_ii = _jeps_with_cutvertex_slack(G, v, w, cuts, budget)
        if out_ii.unknown:
            unknown.append((v, w, "ii"))
        elif not out_ii.found:
            failures.append((v, w, "ii"))
    return {
        "pairs_checked": checked,
        "failures": failures,
        "unknown": unknown,
        "ok": not failures and not unknown,
    }


def _jeps_with_cutvertex_slack(G, v, w, cutvertices, budget):
    """JEPS with d_P(v)=0=d_P(w), odd(J)={v,w}, and d_P = 2 for at most one
    cutvertex.  Tries the all-capped form first, then relaxes one
    cutvertex at a time (ascending), so the witness is deterministic."""
    caps = {v: 0, w: 0}
    for c in cutvertices:
        caps.setdefault(c, 1)
    out = find_jeps(G, v, w, DegreeConstraint.of(caps), budget)
    if out.found or out.unknown or not cutvertices:
        return out
    saw_unknown = False
    for slack in cutvertices:
        caps = {v: 0, w: 0}
        for c in cutvertices:
            if c != slack:
                caps.setdefault(c, 1)
        out = find_jeps(G, v, w, DegreeConstraint.of(caps), budget)
        if out.found:
            return out
        if out.unknown:
            saw_unknown = True
    return Outcome(UNKNOWN if saw_unknown else NONE, None, 0)


def check_theorem1(G, v, w, budget=DEFAULT_BUDGET):
    """The 2-connected EPS/JEPS dichotomy for a vertex pair.

    Returns {"branch": "i"|"ii", "witness": decomposition} on success; a
    result with branch None means both exhaustive searches refuted their
    branch (which would contradict the dichotomy) or ran out of budget.
    Branch (i) is preferred when both exist.
    """
    from .decomposition import is_two_connected
    from .errors import NotTwoConnected

    if not is_two_connected(G):
        raise NotTwoConnected("the dichotomy is stated for 2-connected graphs")
    if v == w:
        raise SameVertex("two distinct vertices required")
    out_i = find_eps(G, DegreeConstraint.of({v: 0, w: 0}), budget)
    if out_i.found:
        return {"branch": "i", "witness": out_i.witness, "status": FOUND}
    out_ii = find_jeps(G, v, w, DegreeConstraint.of({v: 0, w: 0}), budget)
    if out_ii.found:
        return {"branch": "ii", "witness": out_ii.witness, "status": FOUND}
    status = UNKNOWN if (out_i.unknown or out_ii.unknown) else NONE
    return {"branch": None, "witness": None, "status": status}
