from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import connected_graphs, graphs
from leafcon.closure import is_closed, l_closure, nk_closure
from leafcon.decider import is_k_leaf_connected
from leafcon.errors import ParameterError
from leafcon.families import Family, build_family, family_id
from leafcon.graph import complete_graph, path_graph


def test_complete_graph_is_fixed():
    for n in range(1, 8):
        for l in (0, n, 2 * n):
            r = l_closure(complete_graph(n), l)
            assert r.closed_graph == complete_graph(n) and r.added_edges == ()


def test_path_cascades_to_complete():
    r = l_closure(path_graph(4), 3)
    assert r.closed_graph == complete_graph(4)
    assert r.added_edges[0] == (0, 2)  # degree sum 1 + 2 = 3


def test_tightness_graph_is_fixed_at_n_plus_1():
    g = build_family(family_id(Family.TIGHTNESS, 9))
    assert l_closure(g, 10).added_edges == ()
    assert is_closed(g, 10)


def test_nk_closure_examples():
    assert nk_closure(complete_graph(5), 2).closed_graph == complete_graph(5)
    g = build_family(family_id(Family.KK_JOIN, 8, k=2))
    assert nk_closure(g, 2).closed_graph == g
    assert all(g.degree(u) + g.degree(v) <= 8 for u, v in g.non_edges())


def test_nk_closure_restores_removed_join_edge():
    h = build_family(family_id(Family.K4_JOIN, 12))
    g = h.without_edges([(0, 1)])
    assert g.degree(0) + g.degree(1) == 20 >= 13
    r = nk_closure(g, 2)
    assert r.closed_graph == h and r.added_edges == ((0, 1),)


@pytest.mark.parametrize("k", [1, 5, -2])
def test_nk_closure_rejects_k(k):
    with pytest.raises(ParameterError):
        nk_closure(path_graph(5), k)


def test_negative_threshold_rejected():
    with pytest.raises(ParameterError):
        l_closure(path_graph(3), -1)


@given(graphs(max_n=10), st.integers(0, 20))
def test_monotone_and_idempotent(g, l):
    r = l_closure(g, l)
    c = r.closed_graph
    assert all(c.has_edge(u, v) for u, v in g.edges())
    assert c.edge_count == g.edge_count + len(r.added_edges)
    assert l_closure(c, l).added_edges == ()
    assert is_closed(c, l)


def test_order_independence():
    rng = random.Random(11)
    for _ in range(50):
        n = rng.randint(3, 10)
        p = rng.random()
        g = complete_graph(n).without_edges([e for e in complete_graph(n).edges() if rng.random() > p])
        l = rng.randint(n - 2, 2 * n - 3)
        expected = l_closure(g, l).closed_graph
        pairs = g.non_edges()
        for _ in range(10):
            rng.shuffle(pairs)
            assert l_closure(g, l, order=list(pairs)).closed_graph == expected


@given(connected_graphs(min_n=4, max_n=8), st.sampled_from([2, 3]))
def test_closure_preserves_leaf_connectivity(g, k):
    if k > g.n - 1:
        k = g.n - 1
    closed = nk_closure(g, k).closed_graph
    assert is_k_leaf_connected(g, k).decision is is_k_leaf_connected(closed, k).decision
