"""Corpus ingestion and constructive generators.

graph6 is the interchange format for simple graphs (bit-exact per the
standard layout); multigraphs travel in a plain edge-list text format::

    n m
    u v
    ...

Streams are line-oriented: one graph6 record per line, or edge-list
records separated by blank lines.
"""

from __future__ import annotations

import io
import os
from dataclasses import dataclass

from .decomposition import is_block_chain, is_dt_graph, is_two_connected
from .errors import MalformedRecord, NotATree
from .graph import build

# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------


def graph6_encode(G):
    """graph6 record (without trailing newline) for a simple graph."""
    if not G.simple:
        raise MalformedRecord(0, "graph6 encodes simple graphs only")
    n = G.n
    if n <= 62:
        head = [n + 63]
    elif n <= 258047:
        head = [126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
    else:
        raise MalformedRecord(0, "graph too large for this encoder")
    adj = G.neighbor_sets()
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if j in adj[i] else 0)
    body = []
    for k in range(0, len(bits), 6):
        chunk = bits[k : k + 6]
        chunk += [0] * (6 - len(chunk))
        val = 0
        for b in chunk:
            val = (val << 1) | b
        body.append(val + 63)
    return "".join(chr(c) for c in head + body)


def graph6_decode(text, line_no=0):
    """Parse one graph6 record into a Graph."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise MalformedRecord(line_no, "empty record")
    data = [ord(c) - 63 for c in s]
    if any(b < 0 or b > 63 for b in data):
        raise MalformedRecord(line_no, "character out of graph6 range")
    if data[0] == 63:
        if len(data) < 4:
            raise MalformedRecord(line_no, "truncated extended size")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        data = data[4:]
    else:
        n = data[0]
        data = data[1:]
    need = n * (n - 1) // 2
    if len(data) * 6 < need:
        raise MalformedRecord(line_no, "record too short for its size")
    bits = []
    for val in data:
        for shift in (5, 4, 3, 2, 1, 0):
            bits.append((val >> shift) & 1)
    pairs = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                pairs.append((i, j))
            idx += 1
    if any(bits[need : len(data) * 6]):
        raise MalformedRecord(line_no, "nonzero padding bits")
    return build(n, pairs)


def read_graph6_stream(source):
    """Yield graphs from a path, file object, or iterable of lines."""
    for line_no, line in enumerate(_lines(source), start=1):
        if not line.strip():
            continue
        yield graph6_decode(line, line_no)


def _lines(source):
    if isinstance(source, (str, os.PathLike)):
        with open(source) as fh:
            yield from fh
    elif isinstance(source, io.IOBase) or hasattr(source, "read"):
        yield from source
    else:
        yield from source


# ---------------------------------------------------------------------------
# edge-list text format (multigraph-capable)
# ---------------------------------------------------------------------------


def edgelist_encode(G):
    out = [f"{G.n} {G.m}"]
    out.extend(f"{u} {v}" for _, u, v in G.edges)
    return "\n".join(out)


def edgelist_decode(text, line_no=0):
    lines = [ln for ln in text.strip().splitlines()]
    if not lines:
        raise MalformedRecord(line_no, "empty edge-list record")
    try:
        n, m = map(int, lines[0].split())
    except ValueError:
        raise MalformedRecord(line_no, f"bad header {lines[0]!r}") from None
    if len(lines) - 1 != m:
        raise MalformedRecord(line_no, f"expected {m} edges, got {len(lines) - 1}")
    pairs = []
    for off, ln in enumerate(lines[1:], start=1):
        try:
            u, v = map(int, ln.split())
        except ValueError:
            raise MalformedRecord(line_no + off, f"bad edge line {ln!r}") from None
        pairs.append((u, v))
    return build(n, pairs)


def read_edgelist_stream(source):
    """Yield graphs from blank-line-separated edge-list records."""
    record = []
    start_line = 1
    for line_no, line in enumerate(_lines(source), start=1):
        if line.strip():
            if not record:
                start_line = line_no
            record.append(line)
        elif record:
            yield edgelist_decode("".join(record), start_line)
            record = []
    if record:
        yield edgelist_decode("".join(record), start_line)


def read_stream(source, fmt=None):
    """Auto-dispatch on extension: .g6 -> graph6, .el -> edge list."""
    if fmt is None and isinstance(source, (str, os.PathLike)):
        fmt = "el" if str(source).endswith(".el") else "g6"
    if fmt == "el":
        return read_edgelist_stream(source)
    return read_graph6_stream(source)


# ---------------------------------------------------------------------------
# constructive generators
# ---------------------------------------------------------------------------


def full_subdivision(G):
    """Replace every edge by a length-2 path through a fresh vertex.

    The new vertex for edge id e is G.n + e; the result has n+m vertices
    and 2m edges and is a DT-graph whenever G has an edge.
    """
    pairs = []
    for eid, u, v in G.edges:
        mid = G.n + eid
        pairs.append((u, mid))
        pairs.append((mid, v))
    return build(G.n + G.m, pairs)


def is_caterpillar(T):
    """True iff removing all leaves of the tree leaves a (possibly empty) path."""
    if not T.is_connected() or T.m != T.n - 1:
        raise NotATree("caterpillar test needs a tree")
    if T.n <= 2:
        return True
    leaves = {v for v in range(T.n) if T.degree(v) == 1}
    spine = [v for v in range(T.n) if v not in leaves]
    if not spine:
        return True  # n == 2 handled above; unreachable for larger trees
    H, _ = T.induced_subgraph(spine)
    if not H.is_connected():
        return False
    return all(H.degree(v) <= 2 for v in range(H.n))


# ---------------------------------------------------------------------------
# filtering
# ---------------------------------------------------------------------------

_PREDICATES = {
    "connected": lambda G: G.is_connected(),
    "two-connected": is_two_connected,
    "dt": is_dt_graph,
    "block-chain": lambda G: G.is_connected()
    and is_block_chain(G) in ("trivial", "non-trivial"),
    "tree": lambda G: G.is_connected() and G.m == G.n - 1,
}


@dataclass(frozen=True)
class CorpusFilter:
    predicates: tuple = ()
    n_min: int = 0
    n_max: int = 10**9

    def __post_init__(self):
        for p in self.predicates:
            if p not in _PREDICATES:
                raise ValueError(f"unknown predicate {p!r}")
        if self.n_min > self.n_max:
            raise ValueError("empty vertex-count range")

    def accepts(self, G):
        if not self.n_min <= G.n <= self.n_max:
            return False
        return all(_PREDICATES[p](G) for p in self.predicates)


def filter_stream(stream, corpus_filter):
    """Graphs from the stream passing every predicate, in stream order."""
    for G in stream:
        if corpus_filter.accepts(G):
            yield G
