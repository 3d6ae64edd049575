import itertools

import pytest

from hamsq import smallgraphs as sg
from hamsq.cycles import iter_cycles
from hamsq.eps import (
    DegreeConstraint,
    EpsDecomposition,
    JepsDecomposition,
    check_lemma1,
    check_theorem1,
    find_eps,
    find_jeps,
    normalize_eps,
    verify_eps,
)
from hamsq.errors import (
    Disconnected,
    NotTwoConnected,
    PreconditionUnmet,
    SameVertex,
)
from hamsq.graph import build


def brute_force_eps_exists(G, caps=None):
    """Oracle: try all 3^m edge labelings (E/P/unused) directly."""
    caps = caps or {}
    for labels in itertools.product("epu", repeat=G.m):
        e = frozenset(i for i, l in enumerate(labels) if l == "e")
        p = frozenset(i for i, l in enumerate(labels) if l == "p")
        d = EpsDecomposition(G, e, p)
        ok, _ = verify_eps(d)
        if ok and all(d.d_p(v) <= c for v, c in caps.items()):
            return True
    return False


def test_cycle_is_its_own_eps(c5):
    out = find_eps(c5)
    assert out.found
    assert out.witness.p_edges == frozenset()
    assert out.witness.e_edges == frozenset(range(5))


def test_tree_eps_is_all_p():
    T = sg.path_graph(4)
    out = find_eps(T)
    assert out.found and out.witness.e_edges == frozenset()


def test_stars_have_no_eps_at_all():
    # the only spanning S of a star is the star itself, and a 3-valent
    # center is neither even-degree nor a linear forest
    star = build(4, [(0, 1), (0, 2), (0, 3)])
    assert find_eps(star).none


def test_tight_caps_can_kill_the_only_eps():
    # triangle plus a pendant edge at 2: the pendant must be the P-edge
    G = build(4, [(0, 1), (1, 2), (2, 0), (2, 3)])
    assert find_eps(G).found
    assert find_eps(G, DegreeConstraint.of({2: 0})).none


def test_find_eps_matches_brute_force_oracle():
    for n in range(2, 6):
        for G in sg.connected_graphs(n):
            if G.m > 8:
                continue
            expected = brute_force_eps_exists(G, {0: 0})
            got = find_eps(G, DegreeConstraint.of({0: 0}))
            assert got.found == expected, G


def test_find_eps_requires_connected():
    with pytest.raises(Disconnected):
        find_eps(build(3, [(0, 1)]))


def test_find_eps_required_cycle_lands_in_e(k4):
    cyc = next(iter_cycles(k4))
    out = find_eps(k4, DegreeConstraint.of(required_cycle=cyc))
    assert out.found
    assert set(cyc.edge_ids) <= out.witness.e_edges


def test_verify_eps_rejects_bad_decompositions(c5):
    # P with a 3-valent vertex is not a linear forest
    star_in_c5 = EpsDecomposition(sg.complete_graph(4), frozenset(), frozenset({0, 1, 2}))
    ok, report = verify_eps(star_in_c5)
    # edges 0,1,2 of K4 are 01,02,03: a claw at vertex 0
    assert not ok and "linear" in report.lower() or "degree" in report.lower()
    # overlap between E and P
    d = EpsDecomposition(c5, frozenset({0}), frozenset({0}))
    ok, _ = verify_eps(d)
    assert not ok
    # odd E degree
    d = EpsDecomposition(c5, frozenset({0}), frozenset({1, 2, 3, 4}))
    ok, report = verify_eps(d)
    assert not ok


def test_normalize_eps_moves_p_off_cycles(k4):
    # build an EPS of K4 where a P-edge closes a cycle of S, then normalize
    out = find_eps(k4)
    d = out.witness
    norm = normalize_eps(d)
    ok, _ = verify_eps(norm)
    assert ok
    from hamsq.eps import _bridges_of

    bridges = _bridges_of(norm.host, norm.s_edges)
    assert norm.p_edges <= bridges


def test_jeps_on_path():
    P = sg.path_graph(4)
    out = find_jeps(P, 0, 3)
    assert out.found
    assert isinstance(out.witness, JepsDecomposition)
    assert set(out.witness.j_ends) == {0, 3}


def test_jeps_same_vertex_rejected(c5):
    with pytest.raises(SameVertex):
        find_jeps(c5, 1, 1)


def test_jeps_respects_caps():
    P = sg.path_graph(5)
    out = find_jeps(P, 0, 4, DegreeConstraint.of({0: 0, 4: 0}))
    assert out.found
    assert out.witness.d_p(0) == 0 and out.witness.d_p(4) == 0


def test_jeps_none_when_e_would_eat_the_trail(c5):
    # on a cycle, E spanning leaves no edges for a nonempty open trail
    out = find_jeps(c5, 0, 2, DegreeConstraint.of({0: 0, 2: 0}))
    assert out.none


def test_budget_exhaustion_reports_unknown():
    G = sg.complete_graph(6)
    out = find_eps(G, DegreeConstraint.of({0: 0}), budget=3)
    assert out.unknown
    assert out.nodes <= 4  # the counter includes the node that tripped the cap


def test_check_theorem1_on_small_two_connected():
    for n in range(3, 6):
        for G in sg.two_connected_graphs(n):
            for v, w in itertools.combinations(range(G.n), 2):
                got = check_theorem1(G, v, w)
                assert got["branch"] in ("i", "ii")
                ok, _ = verify_eps(got["witness"])
                assert ok


def test_check_theorem1_rejects_non_two_connected():
    with pytest.raises(NotTwoConnected):
        check_theorem1(sg.path_graph(4), 0, 3)


def test_check_lemma1_two_triangles():
    bowtie = build(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])
    report = check_lemma1(bowtie)
    assert report["ok"] and report["pairs_checked"] == 8


def test_check_lemma1_path_trivial_case():
    report = check_lemma1(sg.path_graph(4))
    assert report["ok"]


def test_check_lemma1_needs_block_chain(k4):
    with pytest.raises(PreconditionUnmet):
        check_lemma1(k4)
