import networkx as nx
import pytest

from hamsq import smallgraphs as sg
from hamsq.decomposition import is_block_chain, is_dt_graph, is_two_connected


KNOWN_COUNTS = {0: 1, 1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}


def test_catalog_counts_match_the_literature():
    for n, expected in KNOWN_COUNTS.items():
        assert len(sg.nonisomorphic_graphs(n)) == expected


def test_catalog_is_pairwise_nonisomorphic_n6():
    graphs = [sg.to_nx(G) for G in sg.nonisomorphic_graphs(6)]
    buckets = {}
    for H in graphs:
        key = nx.weisfeiler_lehman_graph_hash(H)
        for other in buckets.setdefault(key, []):
            assert not nx.is_isomorphic(H, other)
        buckets[key].append(H)


def test_catalog_bounds():
    with pytest.raises(ValueError):
        sg.nonisomorphic_graphs(9)


def test_eight_vertex_catalog_cached(tmp_path, monkeypatch):
    # the full n=8 catalog is exercised by the acceptance suite; here we
    # just check the cache file round-trips through a fresh directory
    monkeypatch.setenv("HAMSQ_CACHE", str(tmp_path))
    cache = tmp_path / "graphs8.g6"
    from hamsq.corpus import graph6_encode

    cache.write_text(
        "\n".join(graph6_encode(G) for G in sg.nonisomorphic_graphs(7)[:5]) + "\n"
    )
    got = sg.nonisomorphic_graphs(8)
    assert len(got) == 5  # served from the (stub) cache, not rebuilt


def test_connected_and_two_connected_filters():
    assert len(sg.connected_graphs(5)) == 21
    assert len(sg.two_connected_graphs(5)) == 10


def test_trees_counts():
    # numbers of nonisomorphic trees: 1, 1, 1, 1, 2, 3, 6, 11, 23, 47
    for n, expected in [(1, 1), (4, 2), (6, 6), (8, 23), (9, 47)]:
        trees = sg.trees(n)
        assert len(trees) == expected
        for T in trees:
            assert T.is_connected() and T.m == T.n - 1


def test_dt_two_connected_all_dt_and_two_connected():
    for G in sg.dt_two_connected_graphs(9):
        assert is_two_connected(G) and is_dt_graph(G) and G.simple


def test_dt_two_connected_matches_brute_force():
    by_n = {}
    for G in sg.dt_two_connected_graphs(8):
        by_n.setdefault(G.n, []).append(sg.to_nx(G))
    for n in range(3, 9):
        brute = [
            sg.to_nx(G)
            for G in sg.nonisomorphic_graphs(n)
            if is_two_connected(G) and is_dt_graph(G)
        ]
        cons = by_n.get(n, [])
        assert len(brute) == len(cons)
        for H in brute:
            assert any(nx.is_isomorphic(H, K) for K in cons)


def test_block_chains_are_block_chains():
    chains = sg.block_chains(7)
    assert chains
    for G in chains:
        assert is_block_chain(G) == "non-trivial"
        assert G.n <= 7


def test_block_chains_cover_brute_force_n6():
    chains = [sg.to_nx(G) for G in sg.block_chains(6) if G.n <= 6]
    for n in range(3, 7):
        brute = [
            sg.to_nx(G)
            for G in sg.nonisomorphic_graphs(n)
            if G.is_connected() and is_block_chain(G) == "non-trivial"
        ]
        for H in brute:
            assert any(nx.is_isomorphic(H, K) for K in chains)
