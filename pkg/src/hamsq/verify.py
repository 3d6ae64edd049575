"""Corpus-wide statement sweeps and the F_k failure hunter.

A sweep maps a per-graph checker over a stream of graphs and
concatenates the per-graph record lists in stream order.  Workers
receive serialized graphs and run the checker independently, so the
merged report is byte-identical regardless of the job count.

Report shape::

    {"schema-version": ..., "check": ..., "params": {...},
     "records": [{"graph": ..., "query": ..., "result": ...,
                  "witness"/"certificate"/...: ...}, ...],
     "summary": {"records": N, "skipped-graphs": S, per-result counts,
                 "ok": bool}}

Result vocabulary: "found"/"none"/"unknown" for witness searches,
"ok"/"violation"/"unknown" for property checks, "vacuous" when a query's
precondition does not apply.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import math
import multiprocessing

from .corpus import edgelist_decode, edgelist_encode, graph6_decode, graph6_encode
from .corpus import is_caterpillar
from .cycles import CycleCapExceeded, best_w_cycle, find_vw1w2_maximal_cycle, iter_cycles
from .decomposition import is_block_chain, is_dt_graph, is_two_connected, v2
from .eps import (
    DEFAULT_BUDGET,
    DegreeConstraint,
    _endblock_pairs,
    check_lemma1,
    check_theorem1,
    find_eps,
)
from .errors import NotATree
from .hamilton import (
    FkQuery,
    HamCycleConstraint,
    certificate_flags,
    certificate_payload,
    check_corollary1,
    check_corollary2,
    check_fk,
    check_theorem_g2,
    ham_cycle_in_square,
)
from . import _kernel
from .powers import power

SCHEMA_VERSION = "1"

# ---------------------------------------------------------------------------
# graph and witness serialization
# ---------------------------------------------------------------------------


def serialize_graph(G):
    """Compact one-string form: graph6 for simple graphs, edge list otherwise."""
    if G.simple:
        return graph6_encode(G)
    return "el:" + edgelist_encode(G).replace("\n", ";")


def deserialize_graph(text):
    if text.startswith("el:"):
        return edgelist_decode(text[3:].replace(";", "\n"))
    return graph6_decode(text)


def witness_digest(payload):
    """Short stable digest of a JSON-serializable witness."""
    blob = json.dumps(payload, sort_keys=True).encode()
    return hashlib.sha256(blob).hexdigest()[:12]


def _rec(g6, query, result, **extra):
    rec = {"graph": g6, "query": query, "result": result}
    for key, val in extra.items():
        if val is not None:
            rec[key] = val
    return rec


# ---------------------------------------------------------------------------
# per-graph checkers; each returns a list of records or None when the
# graph does not meet the sweep's precondition (counted as skipped)
# ---------------------------------------------------------------------------


def _budget(params):
    return params.get("budget", DEFAULT_BUDGET)


def _check_theorem1(G, g6, params):
    if not is_two_connected(G):
        return None
    out = []
    for v, w in itertools.combinations(range(G.n), 2):
        got = check_theorem1(G, v, w, _budget(params))
        witness = (
            json.loads(got["witness"].to_json()) if got["witness"] is not None else None
        )
        out.append(
            _rec(g6, {"v": v, "w": w}, got["status"], branch=got["branch"],
                 witness=witness)
        )
    return out


def _check_theorem_a(G, g6, params):
    if not is_two_connected(G) or G.n < 5:
        return None
    out = []
    for W in itertools.combinations(range(G.n), 5):
        cycle, count, sound = best_w_cycle(G, W)
        query = {"W": list(W)}
        if not sound:
            out.append(_rec(g6, query, "vacuous", w_count=count))
            continue
        caps = {w: 1 for w in W}
        got = find_eps(
            G, DegreeConstraint.of(caps, required_cycle=cycle), _budget(params)
        )
        if got.found:
            out.append(_rec(g6, query, "ok", witness=json.loads(got.witness.to_json())))
        elif got.unknown:
            out.append(_rec(g6, query, "unknown"))
        else:
            out.append(_rec(g6, query, "violation", cycle=list(cycle.edge_ids)))
    return out


def _cycles_through(G, vertices, cap=200_000):
    need = set(vertices)
    for cyc in iter_cycles(G, max_cycles=cap):
        if need <= set(cyc.vertices):
            yield cyc


def _eps_over_cycles(G, g6, query, caps, vertices, params):
    """One record per vertex tuple: every cycle through the tuple must
    extend to a capped EPS-graph containing it."""
    checked = 0
    for cyc in _cycles_through(G, vertices):
        checked += 1
        got = find_eps(
            G, DegreeConstraint.of(caps, required_cycle=cyc), _budget(params)
        )
        if got.unknown:
            return _rec(g6, query, "unknown", cycles_checked=checked)
        if not got.found:
            return _rec(g6, query, "violation", cycle=list(cyc.edge_ids))
    if checked == 0:
        return _rec(g6, query, "vacuous")
    return _rec(g6, query, "ok", cycles_checked=checked)


def _check_theorem_b(G, g6, params):
    if not is_two_connected(G) or G.n < 4:
        return None
    out = []
    for v in range(G.n):
        rest = [x for x in range(G.n) if x != v]
        for ws in itertools.combinations(rest, 3):
            caps = {v: 0}
            for w in ws:
                caps[w] = 1
            query = {"v": v, "w": list(ws)}
            out.append(_eps_over_cycles(G, g6, query, caps, (v,) + ws, params))
    return out


def _check_theorem_c(G, g6, params):
    if not is_two_connected(G) or G.n < 3:
        return None
    out = []
    # w1 and w2 play asymmetric roles in maximality, so tuples stay ordered
    for v, w1, w2 in itertools.permutations(range(G.n), 3):
        cyc = find_vw1w2_maximal_cycle(G, v, w1, w2)
        got = find_eps(
            G,
            DegreeConstraint.of({v: 0, w1: 1, w2: 1}, required_cycle=cyc),
            _budget(params),
        )
        query = {"v": v, "w1": w1, "w2": w2}
        if got.found:
            out.append(_rec(g6, query, "ok"))
        elif got.unknown:
            out.append(_rec(g6, query, "unknown"))
        else:
            out.append(_rec(g6, query, "violation", cycle=list(cyc.edge_ids)))
    return out


def _check_theorem_d(G, g6, params):
    if not is_two_connected(G) or G.n < 3:
        return None
    out = []
    for v, w in itertools.permutations(range(G.n), 2):
        query = {"v": v, "w": w}
        out.append(_eps_over_cycles(G, g6, query, {v: 0, w: 1}, (v, w), params))
    return out


def _check_theorem_f(G, g6, params):
    if not is_two_connected(G) or G.n < 3:
        return None
    out = []
    for v, w in itertools.permutations(range(G.n), 2):
        got = ham_cycle_in_square(
            G, HamCycleConstraint(v=v, w_list=(w,)), _budget(params)
        )
        out.append(
            _rec(
                g6,
                {"v": v, "w": w},
                got.status,
                witness=list(got.witness) if got.found else None,
            )
        )
    return out


def _check_theorem_g(G, g6, params):
    if not is_two_connected(G) or G.n < 3:
        return None
    out = []
    for a in itertools.permutations(range(G.n), 3):
        q = FkQuery(G, 3, a)
        got = check_fk(q, _budget(params))
        extra = {}
        if got.found:
            extra["certificate"] = certificate_payload(q, got.witness)
            flags = certificate_flags(q, got.witness)
            if flags:
                extra["flags"] = flags
        out.append(_rec(g6, {"clause": "i", "a": list(a)}, got.status, **extra))
    for x, y in itertools.combinations(range(G.n), 2):
        for q_end in (x, y):
            got = check_theorem_g2(G, x, y, q_end, _budget(params))
            out.append(
                _rec(
                    g6,
                    {"clause": "ii", "x": x, "y": y, "q": q_end},
                    got.status,
                    witness=list(got.witness) if got.found else None,
                )
            )
    return out


def _canonical_fk_tuples(n, k):
    """One representative per symmetry orbit of ordered k-tuples.

    F_k existence is invariant under swapping x1 and x2 (reverse the
    path) and permuting x3..xk (witnesses are per-vertex), so it is
    enough to test x1 < x2 and x3 < ... < xk.
    """
    for pair in itertools.combinations(range(n), 2):
        rest = [x for x in range(n) if x not in pair]
        for tail in itertools.combinations(rest, k - 2):
            yield pair + tail


def _check_theorem2(G, g6, params):
    if not (is_two_connected(G) and is_dt_graph(G)):
        return None
    out = []
    for a in _canonical_fk_tuples(G.n, 4):
        q = FkQuery(G, 4, a)
        got = check_fk(q, _budget(params))
        extra = {}
        if got.found:
            extra["certificate"] = certificate_payload(q, got.witness)
            flags = certificate_flags(q, got.witness)
            if flags:
                extra["flags"] = flags
        out.append(_rec(g6, {"a": list(a), "orbit": 4}, got.status, **extra))
    return out


def _check_lemma1(G, g6, params):
    if G.n < 3 or not G.is_connected():
        return None
    if _endblock_pairs(G) is None:
        return None
    report = check_lemma1(G, _budget(params))
    if report["unknown"]:
        result = "unknown"
    elif report["failures"]:
        result = "violation"
    else:
        result = "ok"
    return [
        _rec(
            g6,
            {"pairs": report["pairs_checked"]},
            result,
            failures=[list(f) for f in report["failures"]] or None,
        )
    ]


def _check_cor1(G, g6, params):
    got = _endblock_pairs(G) if G.n >= 3 and G.is_connected() else None
    if got is None:
        return None
    _, pairs = got
    out = []
    for v, w, _vb in pairs:
        report = check_corollary1(G, v, w, _budget(params))
        part_i, part_ii = report["part_i"], report["part_ii"]
        if part_i.found and part_ii.found:
            result = "ok"
        elif part_i.unknown or part_ii.unknown:
            result = "unknown"
        else:
            result = "violation"
        out.append(
            _rec(
                g6,
                {"v": v, "w": w},
                result,
                v_edges_required=report["v_edges_required"],
                cycle=list(part_i.witness) if part_i.found else None,
                path=list(part_ii.witness) if part_ii.found else None,
            )
        )
    return out


def _cor2_pairs(G):
    two_valent = set(v2(G))
    good = [x for x in range(G.n) if G.neighbors(x) <= two_valent]
    for x1, x2 in itertools.permutations(good, 2):
        if not G.has_edge(x1, x2):
            yield x1, x2


def _check_cor2(G, g6, params):
    if not (is_two_connected(G) and is_dt_graph(G)):
        return None
    out = []
    for x1, x2 in _cor2_pairs(G):
        got = check_corollary2(G, x1, x2, _budget(params))
        outcome = got["outcome"]
        if got["branch"] is not None:
            result = "found"
        elif outcome is not None and outcome.unknown:
            result = "unknown"
        else:
            result = "none"
        out.append(
            _rec(
                g6,
                {"x1": x1, "x2": x2},
                result,
                branch=got["branch"],
                witness=list(outcome.witness) if result == "found" else None,
            )
        )
    return out


def _check_caterpillar(G, g6, params):
    try:
        cat = is_caterpillar(G)
    except NotATree:
        return None
    if G.n < 3:
        return [_rec(g6, {}, "vacuous")]
    got = ham_cycle_in_square(G, None, _budget(params))
    if got.unknown:
        return [_rec(g6, {}, "unknown")]
    agree = got.found == cat
    return [
        _rec(
            g6,
            {},
            "ok" if agree else "violation",
            caterpillar=cat,
            square_hamiltonian=got.found,
        )
    ]


def _ham_path_in_power(G, k, s, t, budget):
    P = power(G, k)
    adj = [0] * G.n
    for u in range(G.n):
        for v in P.neighbors(u):
            adj[u] |= 1 << v
    status, order, nodes = _kernel.ham_search(
        G.n, adj, [0] * G.n, False, s, t, [0] * G.n, budget
    )
    return status, order, nodes


def _check_sekanina(G, g6, params):
    if not G.is_connected():
        return None
    if G.n < 2:
        return [_rec(g6, {}, "vacuous")]
    for s, t in itertools.combinations(range(G.n), 2):
        status, _order, _nodes = _ham_path_in_power(G, 3, s, t, _budget(params))
        if status == _kernel.UNKNOWN:
            return [_rec(g6, {"pairs": "all"}, "unknown", failing=[s, t])]
        if status != _kernel.FOUND:
            return [_rec(g6, {"pairs": "all"}, "violation", failing=[s, t])]
    return [_rec(g6, {"pairs": "all"}, "ok")]


CHECKS = {
    "theorem1": _check_theorem1,
    "theoremA": _check_theorem_a,
    "theoremB": _check_theorem_b,
    "theoremC": _check_theorem_c,
    "theoremD": _check_theorem_d,
    "theoremF": _check_theorem_f,
    "theoremG": _check_theorem_g,
    "theorem2": _check_theorem2,
    "lemma1": _check_lemma1,
    "cor1": _check_cor1,
    "cor2": _check_cor2,
    "caterpillar": _check_caterpillar,
    "sekanina": _check_sekanina,
}

BAD_RESULTS = ("none", "violation")


# ---------------------------------------------------------------------------
# sweep driver
# ---------------------------------------------------------------------------


def _run_task(task):
    check, g6, params = task
    G = deserialize_graph(g6)
    try:
        return CHECKS[check](G, g6, dict(params))
    except CycleCapExceeded:
        return [_rec(g6, {}, "unknown", note="cycle enumeration cap hit")]


def _summarize(records, skipped):
    counts = {}
    for rec in records:
        counts[rec["result"]] = counts.get(rec["result"], 0) + 1
    summary = {
        "records": len(records),
        "skipped-graphs": skipped,
        "ok": not any(counts.get(r) for r in BAD_RESULTS + ("unknown",)),
    }
    summary.update({f"result-{k}": v for k, v in sorted(counts.items())})
    return summary


def sweep(check, graphs, budget=DEFAULT_BUDGET, jobs=1, params=None):
    """Run one named check over a graph stream; returns the report dict."""
    if check not in CHECKS:
        raise KeyError(f"unknown check {check!r}")
    merged = dict(params or {})
    merged["budget"] = budget
    frozen = tuple(sorted(merged.items()))
    tasks = [(check, serialize_graph(G), frozen) for G in graphs]
    if jobs > 1 and len(tasks) > 1:
        with multiprocessing.Pool(jobs) as pool:
            chunks = pool.map(_run_task, tasks, chunksize=1)
    else:
        chunks = [_run_task(t) for t in tasks]
    records = []
    skipped = 0
    for chunk in chunks:
        if chunk is None:
            skipped += 1
        else:
            records.extend(chunk)
    return {
        "schema-version": SCHEMA_VERSION,
        "check": check,
        "params": dict(merged),
        "records": records,
        "summary": _summarize(records, skipped),
    }


def report_to_json(report):
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def report_to_text(report):
    """One line per (graph, query) with the result and a witness digest."""
    lines = []
    for rec in report["records"]:
        query = json.dumps(rec["query"], sort_keys=True)
        parts = [rec["graph"], query, rec["result"]]
        payload = rec.get("witness") or rec.get("certificate")
        if payload is not None:
            parts.append(witness_digest(payload))
        lines.append(" ".join(parts))
    s = report["summary"]
    lines.append(
        "summary: {} records, {} skipped, ok={}".format(
            s["records"], s["skipped-graphs"], s["ok"]
        )
    )
    return "\n".join(lines) + "\n"


def report_exit_code(report):
    s = report["summary"]
    if any(s.get(f"result-{r}", 0) for r in BAD_RESULTS):
        return 1
    if s.get("result-unknown", 0):
        return 2
    return 0


# ---------------------------------------------------------------------------
# F_k failure hunter
# ---------------------------------------------------------------------------


def _hunt_task(task):
    g6, k, budget = task
    G = deserialize_graph(g6)
    if not is_two_connected(G) or G.n < k:
        return None
    none_entries = []
    unknown_entries = []
    tuples = 0
    for a in _canonical_fk_tuples(G.n, k):
        tuples += 1
        got = check_fk(FkQuery(G, k, a), budget)
        if got.none:
            none_entries.append({"graph": g6, "a": list(a)})
        elif got.unknown:
            unknown_entries.append({"graph": g6, "a": list(a)})
    return tuples, none_entries, unknown_entries


def hunt_fk_failures(graphs, k, budget=DEFAULT_BUDGET, jobs=1):
    """Scan 2-connected graphs for ordered k-tuples without the stated
    hamiltonian-path certificate.

    Tuples are reduced to one representative per symmetry orbit (swap of
    the path endpoints, permutation of the witness vertices); a None on a
    representative refutes its whole orbit.  Records are ordered by
    (stream position, tuple); None entries carry the refuting graph.
    """
    if k < 3:
        raise ValueError("k must be at least 3")
    tasks = [(serialize_graph(G), k, budget) for G in graphs]
    if jobs > 1 and len(tasks) > 1:
        with multiprocessing.Pool(jobs) as pool:
            chunks = pool.map(_hunt_task, tasks, chunksize=1)
    else:
        chunks = [_hunt_task(t) for t in tasks]
    none_entries = []
    unknown_entries = []
    graphs_scanned = 0
    tuples_scanned = 0
    skipped = 0
    for chunk in chunks:
        if chunk is None:
            skipped += 1
            continue
        graphs_scanned += 1
        tuples_scanned += chunk[0]
        none_entries.extend(chunk[1])
        unknown_entries.extend(chunk[2])
    return {
        "schema-version": SCHEMA_VERSION,
        "check": "hunt-fk",
        "params": {"k": k, "budget": budget, "orbit-size": 2 * math.factorial(k - 2)},
        "none": none_entries,
        "unknown": unknown_entries,
        "summary": {
            "graphs-scanned": graphs_scanned,
            "graphs-skipped": skipped,
            "tuples-scanned": tuples_scanned,
            "none": len(none_entries),
            "unknown": len(unknown_entries),
        },
    }
