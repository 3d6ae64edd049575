"""Graph squares and k-th powers.

Two independent implementations of the square are kept on purpose: the
production path scans common neighbors, the oracle goes through BFS
distances.  The test suite asserts they agree on every corpus graph.
"""

from __future__ import annotations

import functools

from .errors import InvalidK
from .graph import INF, build


def square(G):
    """Square of G: join any two vertices at distance <= 2.

    Computed by the common-neighbor scan on the underlying simple graph.
    Always returns a simple graph on the same vertex set.
    """
    nbrs = G.neighbor_sets()
    pairs = []
    for u in range(G.n):
        reach = set(nbrs[u])
        for w in nbrs[u]:
            reach.update(nbrs[w])
        reach.discard(u)
        for v in reach:
            if u < v:
                pairs.append((u, v))
    pairs.sort()
    return build(G.n, pairs)


@functools.lru_cache(maxsize=512)
def square_distance_oracle(G):
    """Square of G via BFS distances; independent oracle for `square`.

    Cached: sweeps issue thousands of queries against the same host and
    Graph is immutable.
    """
    return power(G, 2)


def power(G, k):
    """k-th power of G: join vertices at BFS distance <= k."""
    if not isinstance(k, int) or k < 1:
        raise InvalidK(f"power exponent must be an integer >= 1, got {k!r}")
    pairs = []
    for u in range(G.n):
        dist = G.distances_from(u)
        for v in range(u + 1, G.n):
            if dist[v] != INF and dist[v] <= k:
                pairs.append((u, v))
    return build(G.n, pairs)


def diameter(G):
    """Largest finite BFS distance (0 for n <= 1); INF if disconnected."""
    worst = 0
    for u in range(G.n):
        dist = G.distances_from(u)
        for d in dist:
            if d == INF:
                return INF
            worst = max(worst, d)
    return worst
