"""Immutable simple graphs with bit-set adjacency rows.

Vertices are the integers ``0..n-1``; row ``adj[v]`` is a Python int whose
bit ``u`` is set iff ``uv`` is an edge.  Python ints are unbounded, so the
same code serves n = 5 and n = 256 without a word-count parameter.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import CapabilityError, GraphConstructionError, PreconditionError

# Largest order accepted by clique_number; the branch and bound is exact
# but exponential, so this is a capability statement rather than a promise
# of speed.
MAX_CLIQUE_ORDER = 256


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices ``0..n-1``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.adj) != self.n:
            raise GraphConstructionError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full or row < 0:
                raise GraphConstructionError(f"row {v} names a vertex outside 0..{self.n - 1}")
            if row >> v & 1:
                raise GraphConstructionError(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphConstructionError(f"asymmetric adjacency between {v} and {u}")

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def non_edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, v in combinations(range(self.n), 2) if not self.adj[u] >> v & 1]

    def with_edges(self, pairs: Iterable[tuple[int, int]]) -> Graph:
        return build(self.n, [*self.edges(), *pairs])

    def without_edges(self, pairs: Iterable[tuple[int, int]]) -> Graph:
        rows = list(self.adj)
        for u, v in pairs:
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Subgraph induced on ``vertices``, relabelled 0.. in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            rows.append(mask_of(index[u] for u in iter_bits(self.adj[v]) if u in index))
        return Graph(len(vertices), tuple(rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, e={self.edge_count})"


@dataclass(frozen=True)
class DegreeProfile:
    """Nondecreasing degree sequence together with the minimum degree and size."""

    degrees: tuple[int, ...]
    min_degree: int
    edge_count: int

    @property
    def n(self) -> int:
        return len(self.degrees)

    def d(self, i: int) -> int:
        """The 1-indexed ``d_i`` of the sorted sequence."""
        return self.degrees[i - 1]


def build(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on ``n`` vertices; duplicate edges collapse."""
    if n < 0:
        raise GraphConstructionError(f"vertex count must be nonnegative, got {n}")
    rows = [0] * n
    for pair in edges:
        i, j = pair
        if not (0 <= i < n and 0 <= j < n):
            raise GraphConstructionError(f"edge {pair!r} has an endpoint outside 0..{n - 1}")
        if i == j:
            raise GraphConstructionError(f"edge {pair!r} is a loop")
        rows[i] |= 1 << j
        rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def path_graph(n: int) -> Graph:
    return build(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphConstructionError(f"a cycle needs at least 3 vertices, got {n}")
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with the a-side labelled first."""
    return join(empty_graph(a), empty_graph(b))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves}; the centre is vertex 0."""
    return complete_bipartite(1, leaves)


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def disjoint_union(*graphs: Graph) -> Graph:
    """G1 + G2 + ...; later graphs are shifted past the earlier ones."""
    rows: list[int] = []
    offset = 0
    for g in graphs:
        rows.extend(row << offset for row in g.adj)
        offset += g.n
    return Graph(offset, tuple(rows))


def join(g1: Graph, g2: Graph) -> Graph:
    """G1 ∨ G2: the disjoint union plus every edge between the two parts."""
    low = g1.vertex_mask
    high = g2.vertex_mask << g1.n
    rows = [row | high for row in g1.adj] + [(row << g1.n) | low for row in g2.adj]
    return Graph(g1.n + g2.n, tuple(rows))


def degree_profile(g: Graph) -> DegreeProfile:
    degrees = tuple(sorted(g.degrees()))
    return DegreeProfile(degrees, degrees[0] if degrees else 0, sum(degrees) // 2)


def components(g: Graph, within: int | None = None) -> list[int]:
    """Connected components (as vertex masks) of the subgraph induced on ``within``."""
    remaining = g.vertex_mask if within is None else within
    found = []
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.adj[v]
            nxt &= remaining & ~comp
            comp |= nxt
            frontier = nxt
        found.append(comp)
        remaining &= ~comp
    return found


def is_connected(g: Graph, within: int | None = None) -> bool:
    if g.n < 1:
        raise PreconditionError("connectivity is undefined for the null graph")
    return len(components(g, within)) <= 1


# ---------------------------------------------------------------------------
# vertex connectivity (unit-capacity max flow on the vertex-split digraph)


class _SplitFlow:
    """Vertex-disjoint s-t paths via BFS augmentation on the split digraph.

    Node ``2v`` is v_in and ``2v + 1`` is v_out; the arc v_in -> v_out has
    capacity 1, graph edges become uncapacitated arcs u_out -> v_in.
    """

    def __init__(self, g: Graph, s: int, t: int):
        self.g = g
        self.s, self.t = s, t
        size = 2 * g.n
        self.succ: list[list[int]] = [[] for _ in range(size)]
        self.cap: dict[tuple[int, int], int] = {}
        big = g.n
        for v in range(g.n):
            self._arc(2 * v, 2 * v + 1, big if v in (s, t) else 1)
        for u, v in g.edges():
            self._arc(2 * u + 1, 2 * v, big)
            self._arc(2 * v + 1, 2 * u, big)

    def _arc(self, a: int, b: int, c: int) -> None:
        if (a, b) not in self.cap:
            self.succ[a].append(b)
            self.succ[b].append(a)
            self.cap.setdefault((b, a), 0)
        self.cap[(a, b)] = self.cap.get((a, b), 0) + c

    def _augment(self) -> bool:
        src, sink = 2 * self.s + 1, 2 * self.t
        prev = {src: src}
        queue = deque([src])
        while queue:
            a = queue.popleft()
            for b in self.succ[a]:
                if b not in prev and self.cap[(a, b)] > 0:
                    prev[b] = a
                    if b == sink:
                        while b != src:
                            a = prev[b]
                            self.cap[(a, b)] -= 1
                            self.cap[(b, a)] += 1
                            b = a
                        return True
                    queue.append(b)
        return False

    def run(self, limit: int) -> int:
        flow = 0
        while flow < limit and self._augment():
            flow += 1
        return flow

    def source_side_cut(self) -> set[int]:
        """Vertices whose split arc crosses the residual source side (call after run)."""
        src = 2 * self.s + 1
        seen = {src}
        queue = deque([src])
        while queue:
            a = queue.popleft()
            for b in self.succ[a]:
                if b not in seen and self.cap[(a, b)] > 0:
                    seen.add(b)
                    queue.append(b)
        return {v for v in range(self.g.n) if 2 * v in seen and 2 * v + 1 not in seen}


def local_vertex_connectivity(g: Graph, s: int, t: int, limit: int | None = None) -> int:
    """Maximum number of internally vertex-disjoint s-t paths (s, t non-adjacent)."""
    if g.has_edge(s, t):
        raise PreconditionError(f"vertices {s} and {t} are adjacent")
    return _SplitFlow(g, s, t).run(g.n if limit is None else limit)


def _min_cut_search(g: Graph) -> tuple[int, set[int] | None]:
    if g.n < 2:
        raise PreconditionError("vertex connectivity needs at least 2 vertices")
    best = g.n - 1
    best_cut: set[int] | None = None
    if not is_connected(g):
        return 0, set()
    i = 0
    # Even's reduction: one of v_0..v_best lies outside a minimum cut.
    while i <= best and i < g.n:
        for j in range(i + 1, g.n):
            if g.has_edge(i, j):
                continue
            flow = _SplitFlow(g, i, j)
            value = flow.run(best)
            if value < best:
                best = value
                best_cut = flow.source_side_cut()
        i += 1
    return best, best_cut


def vertex_connectivity(g: Graph) -> int:
    """κ(G); complete graphs get the conventional n - 1."""
    return _min_cut_search(g)[0]


def minimum_vertex_cut(g: Graph) -> set[int] | None:
    """A minimum separating vertex set, or ``None`` for a complete graph."""
    value, cut = _min_cut_search(g)
    return cut


# ---------------------------------------------------------------------------
# clique number


def _greedy_color_order(adj: Sequence[int], cand: int) -> tuple[list[int], list[int]]:
    order: list[int] = []
    colors: list[int] = []
    uncolored = cand
    color = 0
    while uncolored:
        color += 1
        q = uncolored
        while q:
            v = (q & -q).bit_length() - 1
            q &= ~adj[v] & ~(1 << v)
            uncolored &= ~(1 << v)
            order.append(v)
            colors.append(color)
    return order, colors


def clique_number(g: Graph) -> int:
    """Exact ω(G) by branch and bound with greedy-colouring upper bounds."""
    if g.n > MAX_CLIQUE_ORDER:
        raise CapabilityError(f"clique_number supports n <= {MAX_CLIQUE_ORDER}, got {g.n}")
    adj = g.adj
    best = 0

    def expand(size: int, cand: int) -> None:
        nonlocal best
        order, colors = _greedy_color_order(adj, cand)
        for idx in range(len(order) - 1, -1, -1):
            if size + colors[idx] <= best:
                return
            v = order[idx]
            sub = cand & adj[v]
            if sub:
                expand(size + 1, sub)
            elif size + 1 > best:
                best = size + 1
            cand &= ~(1 << v)

    if g.n:
        expand(0, g.vertex_mask)
    return best


def independence_number(g: Graph) -> int:
    return clique_number(complement(g))
