import io

import networkx as nx
import pytest

from hamsq import smallgraphs as sg
from hamsq.corpus import (
    CorpusFilter,
    edgelist_decode,
    edgelist_encode,
    filter_stream,
    full_subdivision,
    graph6_decode,
    graph6_encode,
    is_caterpillar,
    read_edgelist_stream,
    read_graph6_stream,
    read_stream,
)
from hamsq.decomposition import is_dt_graph
from hamsq.errors import MalformedRecord, NotATree
from hamsq.graph import build


def test_graph6_roundtrip_all_n5():
    for G in sg.nonisomorphic_graphs(5):
        assert graph6_decode(graph6_encode(G)) == G


def test_graph6_matches_networkx_bytes():
    for G in sg.nonisomorphic_graphs(6):
        ref = nx.to_graph6_bytes(sg.to_nx(G), header=False).decode().strip()
        assert graph6_encode(G) == ref


def test_graph6_header_stripped():
    G = sg.cycle_graph(4)
    rec = ">>graph6<<" + graph6_encode(G)
    assert graph6_decode(rec) == G


def test_graph6_rejects_garbage():
    with pytest.raises(MalformedRecord):
        graph6_decode("")
    with pytest.raises(MalformedRecord):
        graph6_decode("\x1f")  # below the printable range
    with pytest.raises(MalformedRecord):
        graph6_decode("D")  # size says 5 vertices, no body


def test_graph6_rejects_multigraph():
    with pytest.raises(MalformedRecord):
        graph6_encode(build(2, [(0, 1), (0, 1)]))


def test_graph6_stream_reports_line_numbers():
    lines = [graph6_encode(sg.cycle_graph(4)), "", "???bad???"]
    with pytest.raises(MalformedRecord) as err:
        list(read_graph6_stream(lines))
    assert err.value.line_no == 3


def test_edgelist_roundtrip_multigraph():
    G = build(3, [(0, 1), (0, 1), (1, 2)])
    assert edgelist_decode(edgelist_encode(G)) == G


def test_edgelist_stream_blank_line_separated():
    a = build(2, [(0, 1)])
    b = build(3, [(0, 2), (2, 1)])
    text = edgelist_encode(a) + "\n\n" + edgelist_encode(b) + "\n"
    got = list(read_edgelist_stream(io.StringIO(text)))
    assert got == [a, b]


def test_edgelist_bad_header():
    with pytest.raises(MalformedRecord):
        edgelist_decode("one two\n")
    with pytest.raises(MalformedRecord):
        edgelist_decode("2 2\n0 1\n")  # promised 2 edges, gave 1


def test_read_stream_autodetects(tmp_path):
    g6 = tmp_path / "x.g6"
    g6.write_text(graph6_encode(sg.cycle_graph(5)) + "\n")
    el = tmp_path / "x.el"
    el.write_text(edgelist_encode(build(2, [(0, 1), (0, 1)])) + "\n")
    assert [G.n for G in read_stream(g6)] == [5]
    assert [G.m for G in read_stream(el)] == [2]


def test_full_subdivision_claw(spider):
    assert spider.n == 7 and spider.m == 6
    assert is_dt_graph(spider)


def test_full_subdivision_c3_is_c6():
    S = full_subdivision(sg.cycle_graph(3))
    assert S.n == 6 and S.m == 6
    assert all(S.degree(v) == 2 for v in range(6))


def test_full_subdivision_k4_counts(k4):
    S = full_subdivision(k4)
    assert S.n == 10 and S.m == 12 and is_dt_graph(S)


def test_caterpillar_paths_and_claw():
    assert is_caterpillar(sg.path_graph(6))
    claw = build(4, [(0, 1), (0, 2), (0, 3)])
    assert is_caterpillar(claw)


def test_spider_is_not_caterpillar(spider):
    assert not is_caterpillar(spider)


def test_caterpillar_requires_tree(c5):
    with pytest.raises(NotATree):
        is_caterpillar(c5)


def test_filter_stream():
    graphs = sg.nonisomorphic_graphs(6)
    f = CorpusFilter(predicates=("two-connected", "dt"))
    kept = list(filter_stream(iter(graphs), f))
    assert sg.cycle_graph(6) in kept
    assert all(is_dt_graph(G) for G in kept)
    with pytest.raises(ValueError):
        CorpusFilter(predicates=("nonsense",))
    with pytest.raises(ValueError):
        CorpusFilter(n_min=5, n_max=4)
