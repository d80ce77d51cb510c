from __future__ import annotations

from itertools import combinations

import networkx as nx
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from leafcon.graph import Graph, build, is_connected

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build(n, [p for p, keep in zip(pairs, mask) if keep])


@st.composite
def connected_graphs(draw, min_n: int = 2, max_n: int = 7) -> Graph:
    g = draw(graphs(min_n, max_n))
    # chain in a random spanning path so every draw is usable
    order = draw(st.permutations(range(g.n)))
    return g.with_edges(zip(order, order[1:]))


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(h.nodes())}
    return build(len(index), ((index[u], index[v]) for u, v in h.edges()))


def connected_atlas(n: int) -> list[Graph]:
    """All connected graphs on n vertices up to isomorphism (n <= 7)."""
    out = []
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() == n:
            g = from_nx(h)
            if is_connected(g):
                out.append(g)
    return out


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
