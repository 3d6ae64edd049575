"""Pure-Python search kernels.

Two exhaustive, budget-bounded backtracking searches live here:

* ``ham_search``   -- hamiltonian path/cycle in a square, with per-vertex
  requirements on how many incident walk edges must be host-graph edges
  (all selected witness edges globally distinct).
* ``eps_search``   -- EPS/JEPS edge labeling: every edge gets one of the
  labels E (eulerian part), P (linear forest), J (open trail) or U
  (unused), subject to parity, degree-cap, acyclicity and connectivity
  constraints.

The compiled kernel in ``_fast.pyx`` mirrors these functions bit for bit:
same candidate order, same pruning, same node accounting, so both
backends return identical witnesses.  Keep the two in sync.

Status codes: FOUND / NONE / UNKNOWN (budget exhausted).
"""

from __future__ import annotations

FOUND = 0
NONE = 1
UNKNOWN = 2

LABEL_E = 0
LABEL_P = 1
LABEL_J = 2
LABEL_U = 3


class _Budget(Exception):
    pass


# ---------------------------------------------------------------------------
# hamiltonian search
# ---------------------------------------------------------------------------


def _iter_bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _connected_mask(adj, mask):
    """True iff the vertices in `mask` induce a connected subgraph of adj."""
    if mask == 0:
        return True
    start = (mask & -mask).bit_length() - 1
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in _iter_bits(frontier):
            nxt |= adj[v] & mask
        nxt &= ~seen
        seen |= nxt
        frontier = nxt
    return seen == mask


def _match_witnesses(order, closed, g_adj, req):
    """Assign globally distinct walk G-edges to every constrained vertex.

    Each vertex x with req[x] = r needs r distinct edges of the walk,
    incident to x and present in the host graph; no edge serves twice.
    Solved by Kuhn's augmenting-path matching (the instance is tiny).
    """
    n = len(order)
    walk = [(order[i], order[i + 1]) for i in range(n - 1)]
    if closed:
        walk.append((order[-1], order[0]))

    slots = []       # slot -> (vertex, candidate edge indices into walk)
    for v, r in enumerate(req):
        if r == 0:
            continue
        cands = []
        for idx, (a, b) in enumerate(walk):
            if v in (a, b):
                other = b if a == v else a
                if (g_adj[v] >> other) & 1:
                    cands.append(idx)
        for _ in range(r):
            slots.append(cands)

    owner = {}  # walk-edge index -> slot index

    def augment(slot, seen):
        for idx in slots[slot]:
            if idx in seen:
                continue
            seen.add(idx)
            if idx not in owner or augment(owner[idx], seen):
                owner[idx] = slot
                return True
        return False

    for slot in range(len(slots)):
        if not augment(slot, set()):
            return False
    return True


def ham_search(n, sq_adj, g_adj, cycle, s, t, req, budget):
    """Exhaustive hamiltonian path/cycle search in the square.

    sq_adj / g_adj: per-vertex neighbor bitmasks of the square and of the
    underlying simple host.  Path mode runs from s to t; cycle mode is
    anchored at s and ignores t.  Candidates are explored in ascending
    vertex label, so the first witness found is deterministic.

    Returns (status, order-or-None, nodes-used).
    """
    if n == 1:
        return (FOUND, [s], 1) if cycle else (NONE, None, 1)
    full = (1 << n) - 1
    order = [s]
    nodes = 0
    constrained = any(req)

    def vertex_ok(v, e_prev_in_g, e_next_in_g):
        return e_prev_in_g + e_next_in_g >= req[v]

    def extend(u, visited):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise _Budget
        depth = len(order)
        if depth == n:
            # close up
            if cycle:
                if not (sq_adj[u] >> s) & 1:
                    return False
            if constrained and not _match_witnesses(order, cycle, g_adj, req):
                return False
            return True
        remaining = full & ~visited
        cands = sq_adj[u] & remaining
        if not cycle:
            if depth < n - 1:
                cands &= ~(1 << t)
            # t must still be reachable and remaining must hang together
            if not _connected_mask(sq_adj, remaining | (1 << u)):
                return False
        else:
            if not _connected_mask(sq_adj, remaining | (1 << u) | (1 << s)):
                return False
        prev = order[-2] if depth >= 2 else -1
        for v in _iter_bits(cands):
            # completing vertex u: its two walk edges are (prev,u),(u,v)
            if req[u]:
                e1 = 1 if prev >= 0 and (g_adj[u] >> prev) & 1 else 0
                e2 = (g_adj[u] >> v) & 1
                if not cycle and u == s:
                    if req[u] > e2:
                        continue
                elif cycle and u == s:
                    pass  # s completes only at closing time
                elif not vertex_ok(u, e1, e2):
                    continue
            order.append(v)
            if extend(v, visited | (1 << v)):
                return True
            order.pop()
        return False

    # path endpoints can satisfy at most one witness requirement
    if not cycle and (req[s] > 1 or req[t] > 1):
        return NONE, None, 0
    try:
        ok = extend(s, 1 << s)
    except _Budget:
        return UNKNOWN, None, nodes
    if ok:
        return FOUND, list(order), nodes
    return NONE, None, nodes


# ---------------------------------------------------------------------------
# EPS / JEPS edge labeling search
# ---------------------------------------------------------------------------


def _subgraph_connected_spanning(n, eu, ev, keep):
    """True iff the edges with keep[i] reach every vertex in one component."""
    if n <= 1:
        return True
    adj = [[] for _ in range(n)]
    for i, k in enumerate(keep):
        if k:
            adj[eu[i]].append(ev[i])
            adj[ev[i]].append(eu[i])
    seen = [False] * n
    stack = [0]
    seen[0] = True
    count = 1
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == n


def _edge_subgraph_connected(eu, ev, member):
    """True iff the edge set {i : member[i]} forms one connected subgraph."""
    verts = set()
    for i, k in enumerate(member):
        if k:
            verts.add(eu[i])
            verts.add(ev[i])
    if not verts:
        return True
    adj = {v: [] for v in verts}
    for i, k in enumerate(member):
        if k:
            adj[eu[i]].append(ev[i])
            adj[ev[i]].append(eu[i])
    start = next(iter(verts))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == verts


def eps_search(n, eu, ev, forced, p_cap, with_j, j_u, j_v, e_nonempty, budget):
    """Exhaustive EPS (or JEPS, when with_j) labeling search.

    eu/ev: edge endpoint arrays.  forced[i] in {-1, E, P, J, U} pre-labels
    edge i (-1 = free).  p_cap[v] caps d_P(v) (0, 1 or 2).  In JEPS mode
    the open trail J must have odd degree exactly at j_u and j_v.

    Edges are labeled in ascending id order, label order E < P < J < U;
    the first complete labeling found is returned as (status, labels, nodes).
    """
    m = len(eu)
    if n >= 2:
        deg = [0] * n
        for i in range(m):
            deg[eu[i]] += 1
            deg[ev[i]] += 1
        if any(d == 0 for d in deg):
            return NONE, None, 0  # an isolated vertex can never be spanned

    labels = list(forced)
    # undecided-incident counts include forced edges: a forced label only
    # takes effect (degree updates, parity checks) when its edge is reached
    # in id order
    undec = [0] * n
    for i in range(m):
        undec[eu[i]] += 1
        undec[ev[i]] += 1
    d_e = [0] * n
    d_p = [0] * n
    d_j = [0] * n
    s_deg = [0] * n
    # union-find over P edges for acyclicity (no path compression: rollback)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    nodes = 0
    cap = [min(p_cap[v], 2) for v in range(n)]
    j_odd = [False] * n
    if with_j:
        j_odd[j_u] = True
        j_odd[j_v] = True

    def apply_label(i, lab):
        """Apply label to edge i; returns (ok, undo-token) -- ok False means
        the label immediately violates a constraint (token still undoable)."""
        u, v = eu[i], ev[i]
        undo = None
        ok = True
        if lab == LABEL_E:
            d_e[u] += 1
            d_e[v] += 1
            s_deg[u] += 1
            s_deg[v] += 1
        elif lab == LABEL_P:
            d_p[u] += 1
            d_p[v] += 1
            s_deg[u] += 1
            s_deg[v] += 1
            if d_p[u] > cap[u] or d_p[v] > cap[v]:
                ok = False
            else:
                ru, rv = find(u), find(v)
                if ru == rv:
                    ok = False  # P edge would close a cycle
                else:
                    parent[ru] = rv
                    undo = ru
        elif lab == LABEL_J:
            d_j[u] += 1
            d_j[v] += 1
            s_deg[u] += 1
            s_deg[v] += 1
        return ok, undo

    def undo_label(i, lab, undo):
        u, v = eu[i], ev[i]
        if lab == LABEL_E:
            d_e[u] -= 1
            d_e[v] -= 1
            s_deg[u] -= 1
            s_deg[v] -= 1
        elif lab == LABEL_P:
            d_p[u] -= 1
            d_p[v] -= 1
            s_deg[u] -= 1
            s_deg[v] -= 1
            if undo is not None:
                parent[undo] = undo
        elif lab == LABEL_J:
            d_j[u] -= 1
            d_j[v] -= 1
            s_deg[u] -= 1
            s_deg[v] -= 1

    def vertex_complete_ok(v):
        if d_e[v] % 2:
            return False
        if with_j and (d_j[v] % 2 != (1 if j_odd[v] else 0)):
            return False
        if not with_j and d_j[v]:
            return False
        if n >= 2 and s_deg[v] == 0:
            return False
        return True

    def finish_ok():
        if e_nonempty and not any(lab == LABEL_E for lab in labels):
            return False
        if not _subgraph_connected_spanning(
            n, eu, ev, [lab != LABEL_U for lab in labels]
        ):
            return False
        if with_j:
            member = [lab == LABEL_J for lab in labels]
            if not any(member):
                return False
            if not _edge_subgraph_connected(eu, ev, member):
                return False
        return True

    label_choices = (
        (LABEL_E, LABEL_P, LABEL_J, LABEL_U) if with_j else (LABEL_E, LABEL_P, LABEL_U)
    )

    def assign(i):
        nonlocal nodes
        if i == m:
            return finish_ok()
        u, v = eu[i], ev[i]
        was_forced = labels[i] != -1
        choices = (labels[i],) if was_forced else label_choices
        for lab in choices:
            nodes += 1
            if nodes > budget:
                raise _Budget
            labels[i] = lab
            ok, undo = apply_label(i, lab)
            if ok:
                undec[u] -= 1
                undec[v] -= 1
                good = (undec[u] > 0 or vertex_complete_ok(u)) and (
                    undec[v] > 0 or vertex_complete_ok(v)
                )
                if good and lab == LABEL_U:
                    # lookahead: unused edges are final, the rest must still
                    # be able to span the graph in one piece
                    good = _subgraph_connected_spanning(
                        n, eu, ev, [labels[k] != LABEL_U for k in range(m)]
                    )
                if good and assign(i + 1):
                    return True
                undec[u] += 1
                undec[v] += 1
            undo_label(i, lab, undo)
        if not was_forced:
            labels[i] = -1
        return False

    try:
        ok = assign(0)
    except _Budget:
        return UNKNOWN, None, nodes
    if ok:
        return FOUND, list(labels), nodes
    return NONE, None, nodes
