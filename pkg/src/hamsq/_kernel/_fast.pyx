# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels.

Mirrors ``hamsq._kernel.pure`` exactly: same candidate order, same
pruning, same node accounting.  Any behavioral change must be made in
both files; the parity test suite compares the two backends witness for
witness.
"""

from libc.string cimport memset

DEF MAXN = 64
DEF MAXM = 256

FOUND = 0
NONE = 1
UNKNOWN = 2

LABEL_E = 0
LABEL_P = 1
LABEL_J = 2
LABEL_U = 3

cdef int C_FOUND = 0
cdef int C_NONE = 1
cdef int C_UNKNOWN = 2

cdef int C_E = 0
cdef int C_P = 1
cdef int C_J = 2
cdef int C_U = 3


# ---------------------------------------------------------------------------
# hamiltonian search
# ---------------------------------------------------------------------------

cdef struct HamState:
    int n
    unsigned long long sq[MAXN]
    unsigned long long g[MAXN]
    int req[MAXN]
    int order[MAXN]
    int cycle
    int s
    int t
    int constrained
    unsigned long long full
    long long nodes
    long long budget
    int over_budget


cdef inline int _lowest_bit(unsigned long long mask):
    cdef int i = 0
    while not (mask & 1):
        mask >>= 1
        i += 1
    return i


cdef int _connected_mask(unsigned long long *adj, unsigned long long mask):
    cdef unsigned long long seen, frontier, nxt, work, low
    cdef int v
    if mask == 0:
        return 1
    seen = mask & (~mask + 1)
    frontier = seen
    while frontier:
        nxt = 0
        work = frontier
        while work:
            low = work & (~work + 1)
            v = _lowest_bit(low)
            nxt |= adj[v] & mask
            work ^= low
        nxt &= ~seen
        seen |= nxt
        frontier = nxt
    return seen == mask


cdef int _augment(int slot, int n_slots, int n_edges,
                  int *cand, int *cand_len, int *owner, int *seen):
    cdef int k, idx
    for k in range(cand_len[slot]):
        idx = cand[slot * 2 * MAXN + k]
        if seen[idx]:
            continue
        seen[idx] = 1
        if owner[idx] < 0 or _augment(owner[idx], n_slots, n_edges,
                                      cand, cand_len, owner, seen):
            owner[idx] = slot
            return 1
    return 0


cdef int _match_witnesses(HamState *st):
    cdef int n = st.n
    cdef int n_walk = n - 1 + (1 if st.cycle else 0)
    cdef int wa[MAXN + 1]
    cdef int wb[MAXN + 1]
    cdef int i, v, r, idx, other, slot
    for i in range(n - 1):
        wa[i] = st.order[i]
        wb[i] = st.order[i + 1]
    if st.cycle:
        wa[n - 1] = st.order[n - 1]
        wb[n - 1] = st.order[0]

    # slot -> candidate walk-edge indices; a vertex has at most 2*MAXN slots
    cdef int cand[2 * MAXN * 2 * MAXN]
    cdef int cand_len[2 * MAXN]
    cdef int n_slots = 0
    cdef int n_cands
    cdef int base
    for v in range(n):
        r = st.req[v]
        if r == 0:
            continue
        base = n_slots
        cand_len[base] = 0
        n_cands = 0
        for idx in range(n_walk):
            if wa[idx] == v or wb[idx] == v:
                other = wb[idx] if wa[idx] == v else wa[idx]
                if (st.g[v] >> other) & 1:
                    cand[base * 2 * MAXN + n_cands] = idx
                    n_cands += 1
        cand_len[base] = n_cands
        for i in range(1, r):
            cand_len[base + i] = n_cands
            for idx in range(n_cands):
                cand[(base + i) * 2 * MAXN + idx] = cand[base * 2 * MAXN + idx]
        n_slots += r

    cdef int owner[MAXN + 1]
    cdef int seen[MAXN + 1]
    for i in range(n_walk):
        owner[i] = -1
    for slot in range(n_slots):
        memset(seen, 0, n_walk * sizeof(int))
        if not _augment(slot, n_slots, n_walk, cand, cand_len, owner, seen):
            return 0
    return 1


cdef int _ham_extend(HamState *st, int u, unsigned long long visited, int depth):
    cdef unsigned long long remaining, cands, work, low
    cdef int v, prev, e1, e2
    st.nodes += 1
    if st.nodes > st.budget:
        st.over_budget = 1
        return 0
    if depth == st.n:
        if st.cycle:
            if not (st.sq[u] >> st.s) & 1:
                return 0
        if st.constrained and not _match_witnesses(st):
            return 0
        return 1
    remaining = st.full & ~visited
    cands = st.sq[u] & remaining
    if not st.cycle:
        if depth < st.n - 1:
            cands &= ~(<unsigned long long>1 << st.t)
        if not _connected_mask(st.sq, remaining | (<unsigned long long>1 << u)):
            return 0
    else:
        if not _connected_mask(
            st.sq,
            remaining | (<unsigned long long>1 << u)
            | (<unsigned long long>1 << st.s),
        ):
            return 0
    prev = st.order[depth - 2] if depth >= 2 else -1
    work = cands
    while work:
        low = work & (~work + 1)
        v = _lowest_bit(low)
        work ^= low
        if st.req[u]:
            e1 = 1 if (prev >= 0 and (st.g[u] >> prev) & 1) else 0
            e2 = <int>((st.g[u] >> v) & 1)
            if (not st.cycle) and u == st.s:
                if st.req[u] > e2:
                    continue
            elif st.cycle and u == st.s:
                pass
            elif e1 + e2 < st.req[u]:
                continue
        st.order[depth] = v
        if _ham_extend(st, v, visited | (<unsigned long long>1 << v), depth + 1):
            return 1
        if st.over_budget:
            return 0
    return 0


def ham_search(int n, sq_adj, g_adj, cycle, int s, int t, req, budget):
    """Compiled twin of pure.ham_search; see that docstring."""
    cdef HamState st
    cdef int i, ok
    if n > MAXN:
        raise ValueError(f"kernel supports at most {MAXN} vertices")
    if n == 1:
        return (FOUND, [s], 1) if cycle else (NONE, None, 1)
    st.n = n
    st.cycle = 1 if cycle else 0
    st.s = s
    st.t = t
    st.full = (<unsigned long long>1 << n) - 1
    st.nodes = 0
    st.budget = <long long>budget
    st.over_budget = 0
    st.constrained = 0
    for i in range(n):
        st.sq[i] = <unsigned long long>sq_adj[i]
        st.g[i] = <unsigned long long>g_adj[i]
        st.req[i] = <int>req[i]
        if st.req[i]:
            st.constrained = 1
    if not st.cycle and (st.req[s] > 1 or st.req[t] > 1):
        return NONE, None, 0
    st.order[0] = s
    ok = _ham_extend(&st, s, <unsigned long long>1 << s, 1)
    if st.over_budget:
        return UNKNOWN, None, st.nodes
    if ok:
        return FOUND, [st.order[i] for i in range(n)], st.nodes
    return NONE, None, st.nodes


# ---------------------------------------------------------------------------
# EPS / JEPS edge labeling search
# ---------------------------------------------------------------------------

cdef struct EpsState:
    int n
    int m
    int eu[MAXM]
    int ev[MAXM]
    int labels[MAXM]
    int forced[MAXM]
    int cap[MAXN]
    int undec[MAXN]
    int d_e[MAXN]
    int d_p[MAXN]
    int d_j[MAXN]
    int s_deg[MAXN]
    int parent[MAXN]
    int j_odd[MAXN]
    int with_j
    int e_nonempty
    long long nodes
    long long budget
    int over_budget


cdef int _find(EpsState *st, int x):
    while st.parent[x] != x:
        x = st.parent[x]
    return x


cdef int _span_connected(EpsState *st):
    """Connectivity over non-U edges (use_labels) spanning all vertices."""
    cdef int seen[MAXN]
    cdef int stack[MAXN]
    cdef int top = 0, count = 1, i, v, w, u
    if st.n <= 1:
        return 1
    memset(seen, 0, st.n * sizeof(int))
    seen[0] = 1
    stack[0] = 0
    top = 1
    while top:
        top -= 1
        v = stack[top]
        for i in range(st.m):
            if st.labels[i] == C_U:
                continue
            u = st.eu[i]
            w = st.ev[i]
            if u == v and not seen[w]:
                seen[w] = 1
                count += 1
                stack[top] = w
                top += 1
            elif w == v and not seen[u]:
                seen[u] = 1
                count += 1
                stack[top] = u
                top += 1
    return count == st.n


cdef int _j_connected(EpsState *st):
    cdef int seen[MAXN]
    cdef int stack[MAXN]
    cdef int top, count = 0, i, v, u, w, start = -1, nverts = 0
    memset(seen, 0, st.n * sizeof(int))
    cdef int inj[MAXN]
    memset(inj, 0, st.n * sizeof(int))
    for i in range(st.m):
        if st.labels[i] == C_J:
            inj[st.eu[i]] = 1
            inj[st.ev[i]] = 1
    for v in range(st.n):
        if inj[v]:
            nverts += 1
            if start < 0:
                start = v
    if start < 0:
        return 1
    seen[start] = 1
    stack[0] = start
    top = 1
    count = 1
    while top:
        top -= 1
        v = stack[top]
        for i in range(st.m):
            if st.labels[i] != C_J:
                continue
            u = st.eu[i]
            w = st.ev[i]
            if u == v and not seen[w]:
                seen[w] = 1
                count += 1
                stack[top] = w
                top += 1
            elif w == v and not seen[u]:
                seen[u] = 1
                count += 1
                stack[top] = u
                top += 1
    return count == nverts


cdef int _vertex_complete_ok(EpsState *st, int v):
    if st.d_e[v] % 2:
        return 0
    if st.with_j:
        if st.d_j[v] % 2 != st.j_odd[v]:
            return 0
    elif st.d_j[v]:
        return 0
    if st.n >= 2 and st.s_deg[v] == 0:
        return 0
    return 1


cdef int _finish_ok(EpsState *st):
    cdef int i, any_e = 0, any_j = 0
    if st.e_nonempty:
        for i in range(st.m):
            if st.labels[i] == C_E:
                any_e = 1
                break
        if not any_e:
            return 0
    if not _span_connected(st):
        return 0
    if st.with_j:
        for i in range(st.m):
            if st.labels[i] == C_J:
                any_j = 1
                break
        if not any_j:
            return 0
        if not _j_connected(st):
            return 0
    return 1


cdef int _eps_assign(EpsState *st, int i):
    cdef int u, v, was_forced, lab, ok, undo, good, k, ci
    cdef int choices[4]
    cdef int n_choices
    if i == st.m:
        return _finish_ok(st)
    u = st.eu[i]
    v = st.ev[i]
    was_forced = st.forced[i] != -1
    if was_forced:
        choices[0] = st.forced[i]
        n_choices = 1
    elif st.with_j:
        choices[0] = C_E
        choices[1] = C_P
        choices[2] = C_J
        choices[3] = C_U
        n_choices = 4
    else:
        choices[0] = C_E
        choices[1] = C_P
        choices[2] = C_U
        n_choices = 3
    for ci in range(n_choices):
        lab = choices[ci]
        st.nodes += 1
        if st.nodes > st.budget:
            st.over_budget = 1
            return 0
        st.labels[i] = lab
        ok = 1
        undo = -1
        if lab == C_E:
            st.d_e[u] += 1
            st.d_e[v] += 1
            st.s_deg[u] += 1
            st.s_deg[v] += 1
        elif lab == C_P:
            st.d_p[u] += 1
            st.d_p[v] += 1
            st.s_deg[u] += 1
            st.s_deg[v] += 1
            if st.d_p[u] > st.cap[u] or st.d_p[v] > st.cap[v]:
                ok = 0
            else:
                k = _find(st, u)
                undo = _find(st, v)
                if k == undo:
                    ok = 0
                    undo = -1
                else:
                    st.parent[k] = undo
                    undo = k
        elif lab == C_J:
            st.d_j[u] += 1
            st.d_j[v] += 1
            st.s_deg[u] += 1
            st.s_deg[v] += 1
        if ok:
            st.undec[u] -= 1
            st.undec[v] -= 1
            good = ((st.undec[u] > 0 or _vertex_complete_ok(st, u))
                    and (st.undec[v] > 0 or _vertex_complete_ok(st, v)))
            if good and lab == C_U:
                good = _span_connected(st)
            if good and _eps_assign(st, i + 1):
                return 1
            st.undec[u] += 1
            st.undec[v] += 1
            if st.over_budget:
                # fall through to undo, then unwind
                pass
        # undo
        if lab == C_E:
            st.d_e[u] -= 1
            st.d_e[v] -= 1
            st.s_deg[u] -= 1
            st.s_deg[v] -= 1
        elif lab == C_P:
            st.d_p[u] -= 1
            st.d_p[v] -= 1
            st.s_deg[u] -= 1
            st.s_deg[v] -= 1
            if undo >= 0:
                st.parent[undo] = undo
        elif lab == C_J:
            st.d_j[u] -= 1
            st.d_j[v] -= 1
            st.s_deg[u] -= 1
            st.s_deg[v] -= 1
        if st.over_budget:
            return 0
    if not was_forced:
        st.labels[i] = -1
    return 0


def eps_search(int n, eu, ev, forced, p_cap, with_j, j_u, j_v, e_nonempty, budget):
    """Compiled twin of pure.eps_search; see that docstring."""
    cdef EpsState st
    cdef int i, m = len(eu), ok
    cdef int deg[MAXN]
    if n > MAXN:
        raise ValueError(f"kernel supports at most {MAXN} vertices")
    if m > MAXM:
        raise ValueError(f"kernel supports at most {MAXM} edges")
    if n >= 2:
        memset(deg, 0, n * sizeof(int))
        for i in range(m):
            deg[<int>eu[i]] += 1
            deg[<int>ev[i]] += 1
        for i in range(n):
            if deg[i] == 0:
                return NONE, None, 0
    st.n = n
    st.m = m
    st.with_j = 1 if with_j else 0
    st.e_nonempty = 1 if e_nonempty else 0
    st.nodes = 0
    st.budget = <long long>budget
    st.over_budget = 0
    for i in range(n):
        st.cap[i] = min(<int>p_cap[i], 2)
        st.undec[i] = 0
        st.d_e[i] = 0
        st.d_p[i] = 0
        st.d_j[i] = 0
        st.s_deg[i] = 0
        st.parent[i] = i
        st.j_odd[i] = 0
    if with_j:
        st.j_odd[<int>j_u] = 1
        st.j_odd[<int>j_v] = 1
    for i in range(m):
        st.eu[i] = <int>eu[i]
        st.ev[i] = <int>ev[i]
        st.forced[i] = <int>forced[i]
        st.labels[i] = st.forced[i]
        st.undec[st.eu[i]] += 1
        st.undec[st.ev[i]] += 1
    ok = _eps_assign(&st, 0)
    if st.over_budget:
        return UNKNOWN, None, st.nodes
    if ok:
        return FOUND, [st.labels[i] for i in range(m)], st.nodes
    return NONE, None, st.nodes
