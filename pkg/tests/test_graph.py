import pytest

from hamsq.errors import LoopRejected, UnknownEdgeId, VertexOutOfRange
from hamsq.graph import INF, Graph, build, vertex_set


def test_build_assigns_edge_ids_in_order():
    G = build(4, [(0, 1), (1, 2), (2, 3)])
    assert G.edges == ((0, 0, 1), (1, 1, 2), (2, 2, 3))
    assert G.m == 3


def test_build_rejects_loops():
    with pytest.raises(LoopRejected):
        build(3, [(1, 1)])


def test_build_rejects_out_of_range():
    with pytest.raises(VertexOutOfRange):
        build(3, [(0, 3)])


def test_multigraph_degree_counts_multiplicity():
    G = build(2, [(0, 1), (0, 1), (1, 0)])
    assert G.degree(0) == 3
    assert not G.simple
    assert G.underlying_simple().m == 1


def test_immutable():
    G = build(2, [(0, 1)])
    with pytest.raises(AttributeError):
        G.n = 7


def test_distances_and_connectivity():
    G = build(5, [(0, 1), (1, 2), (3, 4)])
    d = G.distances_from(0)
    assert d[2] == 2
    assert d[3] is INF or d[3] == INF
    assert not G.is_connected()
    assert build(1, []).is_connected()


def test_neighbors_and_has_edge():
    G = build(4, [(0, 1), (0, 2), (0, 1)])
    assert G.neighbors(0) == {1, 2}
    assert G.has_edge(1, 0)
    assert not G.has_edge(1, 2)


def test_endpoints_unknown_eid():
    G = build(2, [(0, 1)])
    with pytest.raises(UnknownEdgeId):
        G.endpoints(5)


def test_induced_subgraph_relabels_densely():
    G = build(5, [(0, 2), (2, 4), (4, 0), (1, 3)])
    H, new_to_old = G.induced_subgraph([0, 2, 4])
    assert H.n == 3 and H.m == 3
    assert sorted(new_to_old) == [0, 2, 4]


def test_delete_vertex_and_edges():
    G = build(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    H, new_to_old = G.delete_vertex(2)
    assert H.n == 3 and H.m == 2
    assert 2 not in new_to_old
    K = G.delete_edges([0, 2])
    assert K.m == 2 and K.n == 4


def test_equality_and_hash():
    a = build(3, [(0, 1), (1, 2)])
    b = build(3, [(0, 1), (1, 2)])
    assert a == b and hash(a) == hash(b)
    assert a != build(3, [(0, 1)])


def test_vertex_set_validates():
    G = build(3, [(0, 1)])
    assert vertex_set(G, [2, 0, 0]) == (0, 2)
    with pytest.raises(VertexOutOfRange):
        vertex_set(G, [3])
