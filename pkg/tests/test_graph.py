from __future__ import annotations

from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given

from conftest import connected_graphs, graphs, to_nx
from leafcon.errors import CapabilityError, GraphConstructionError, PreconditionError
from leafcon.families import Family, build_family, family_id
from leafcon.graph import (
    MAX_CLIQUE_ORDER,
    Graph,
    build,
    clique_number,
    complement,
    complete_bipartite,
    complete_graph,
    components,
    cycle_graph,
    degree_profile,
    disjoint_union,
    empty_graph,
    independence_number,
    is_connected,
    join,
    minimum_vertex_cut,
    path_graph,
    vertex_connectivity,
)


def test_build_examples():
    assert build(1, []).edge_count == 0
    k5 = build(5, combinations(range(5), 2))
    assert k5 == complete_graph(5) and k5.edge_count == 10
    assert path_graph(4).degrees() == [1, 2, 2, 1]


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 4)], [(-1, 2)]])
def test_build_rejects_bad_pairs(edges):
    with pytest.raises(GraphConstructionError, match=r"\("):
        build(4, edges)


def test_graph_rejects_asymmetric_rows():
    with pytest.raises(GraphConstructionError):
        Graph(2, (0b10, 0b00))


def test_complement_examples():
    assert complement(complete_graph(5)) == empty_graph(5)
    p4 = complement(path_graph(4))
    assert sorted(p4.degrees()) == [1, 1, 2, 2] and is_connected(p4) and p4.edge_count == 3


def test_complement_of_k4_join_family():
    n = 12
    h = complement(build_family(family_id(Family.K4_JOIN, n)))
    # join block isolated; K3 on the independent block, joined to the (n-7) former clique vertices
    assert [h.degree(v) for v in range(4)] == [0] * 4
    assert all(h.degree(v) == 3 for v in range(4, n - 3))
    assert all(h.degree(v) == 2 + (n - 7) for v in range(n - 3, n))
    assert h.edge_count == 3 + 3 * (n - 7)


def test_join_and_union_examples():
    assert join(complete_graph(1), complete_graph(1)) == complete_graph(2)
    g = join(complete_graph(2), disjoint_union(complete_graph(4), complete_graph(2)))
    assert g.edge_count == 20
    assert degree_profile(g).degrees == (3, 3, 5, 5, 5, 5, 7, 7)
    u = disjoint_union(complete_graph(4), complete_graph(2))
    assert u.n == 6 and u.edge_count == 7 and len(components(u)) == 2
    u3 = disjoint_union(complete_graph(3), complete_graph(2), complete_graph(1))
    assert u3.edge_count == 4 and len(components(u3)) == 3


def test_degree_profile_examples():
    p = degree_profile(complete_graph(5))
    assert p.degrees == (4,) * 5 and p.min_degree == 4 and p.edge_count == 10
    p = degree_profile(build_family(family_id(Family.EXC_K4_K2_3K1, 9)))
    assert p.degrees == (4, 4, 4, 5, 5, 8, 8, 8, 8) and p.min_degree == 4 and p.edge_count == 27


def test_connectivity_examples():
    assert not is_connected(disjoint_union(complete_graph(4), complete_graph(2)))
    assert is_connected(complete_graph(5))
    g = build_family(family_id(Family.KK_JOIN, 8, k=2))
    assert not is_connected(g, within=g.vertex_mask & ~0b11)
    assert vertex_connectivity(complete_graph(5)) == 4
    assert vertex_connectivity(path_graph(4)) == 1
    assert vertex_connectivity(g) == 2
    assert minimum_vertex_cut(g) == {0, 1}
    with pytest.raises(PreconditionError):
        is_connected(empty_graph(0))


def test_clique_examples():
    assert clique_number(complete_graph(5)) == 5
    assert clique_number(build_family(family_id(Family.TIGHTNESS, 9))) == 6
    assert clique_number(cycle_graph(5)) == 2
    assert clique_number(complete_bipartite(3, 4)) == 2


def test_clique_capability_limit():
    with pytest.raises(CapabilityError):
        clique_number(empty_graph(MAX_CLIQUE_ORDER + 1))


@given(graphs(max_n=7), graphs(max_n=5))
def test_join_edge_and_degree_law(g1, g2):
    j = join(g1, g2)
    assert j.edge_count == g1.edge_count + g2.edge_count + g1.n * g2.n
    assert j.degrees()[: g1.n] == [d + g2.n for d in g1.degrees()]
    assert j.degrees()[g1.n:] == [d + g1.n for d in g2.degrees()]


@given(graphs(max_n=9))
def test_complement_involution(g):
    c = complement(g)
    assert complement(c) == g
    assert c.degrees() == [g.n - 1 - d for d in g.degrees()]


@given(connected_graphs(max_n=9))
def test_connectivity_against_networkx(g):
    kappa = vertex_connectivity(g)
    assert kappa <= min(g.degrees())
    assert kappa == nx.node_connectivity(to_nx(g))
    cut = minimum_vertex_cut(g)
    if cut is None:
        assert g == complete_graph(g.n)
    else:
        assert len(cut) == kappa
        assert not is_connected(g, within=g.vertex_mask & ~sum(1 << v for v in cut))


@given(graphs(max_n=9))
def test_components_against_networkx(g):
    ours = sorted(sorted(v for v in range(g.n) if c >> v & 1) for c in components(g))
    theirs = sorted(sorted(c) for c in nx.connected_components(to_nx(g)))
    assert ours == theirs


def _brute_independence(g):
    for size in range(g.n, 0, -1):
        for s in combinations(range(g.n), size):
            if all(not g.has_edge(u, v) for u, v in combinations(s, 2)):
                return size
    return 0


@given(graphs(max_n=7))
def test_clique_of_complement_is_independence_number(g):
    alpha = _brute_independence(g)
    assert clique_number(complement(g)) == alpha == independence_number(g)


@given(graphs(min_n=1, max_n=14))
def test_clique_number_against_networkx(g):
    cliques = nx.find_cliques(to_nx(g))
    assert clique_number(g) == max(len(c) for c in cliques)


def test_induced_subgraph():
    g = cycle_graph(5).induced([0, 1, 2])
    assert g == path_graph(3)
