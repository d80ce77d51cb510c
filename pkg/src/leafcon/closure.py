"""Degree-sum closure C_l(G) and its (n+k-1) specialisation."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .errors import ParameterError
from .graph import Graph, iter_bits


@dataclass(frozen=True)
class ClosureResult:
    closed_graph: Graph
    added_edges: tuple[tuple[int, int], ...]
    l: int


def l_closure(g: Graph, l: int, order: Iterable[tuple[int, int]] | None = None) -> ClosureResult:
    """Repeatedly join non-adjacent pairs whose degree sum is at least ``l``.

    ``order`` seeds the worklist with candidate pairs in a caller-chosen
    order, followed by every non-adjacent pair in lexicographic order so a
    partial ``order`` still reaches the fixed point.  The closed graph does
    not depend on the order, which the test suite checks rather than assumes.  ``added_edges`` lists
    insertions in the order they were applied.
    """
    if l < 0:
        raise ParameterError(f"closure threshold must be >= 0, got {l}")
    n = g.n
    rows = list(g.adj)
    deg = [row.bit_count() for row in rows]
    full = (1 << n) - 1
    queue = deque(order or ())
    queue.extend((u, v) for u in range(n) for v in range(u + 1, n) if not rows[u] >> v & 1)
    added: list[tuple[int, int]] = []
    while queue:
        u, v = queue.popleft()
        if rows[u] >> v & 1 or deg[u] + deg[v] < l:
            continue
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        deg[u] += 1
        deg[v] += 1
        added.append((min(u, v), max(u, v)))
        # only pairs touching u or v can have become eligible
        for x in (u, v):
            for w in iter_bits(full & ~rows[x] & ~(1 << x)):
                queue.append((x, w))
    return ClosureResult(Graph(n, tuple(rows)), tuple(added), l)


def nk_closure(g: Graph, k: int) -> ClosureResult:
    """C_{n+k-1}(G), the closure that preserves k-leaf-connectivity."""
    if not 2 <= k <= g.n - 1:
        raise ParameterError(f"k must satisfy 2 <= k <= n-1 = {g.n - 1}, got {k}")
    return l_closure(g, g.n + k - 1)


def is_closed(g: Graph, l: int) -> bool:
    deg = g.degrees()
    return all(deg[u] + deg[v] <= l - 1 for u, v in g.non_edges())
