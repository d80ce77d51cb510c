"""Exact decision of prescribed-leaf spanning trees and k-leaf-connectivity.

A spanning tree T of G has leaf set exactly S iff T - S is a spanning tree
T' of G[I] (I = V \\ S) such that every leaf of T' can be given its own
S-neighbour.  The search therefore enumerates spanning trees of G[I] by
Gabow-Myers style growth (every tree produced once: each frontier edge is
either taken or deleted for the rest of the branch) and tests a bipartite
matching from leaves(T') into S.  Pruning:

* a partial tree with more than |S| leaves is abandoned (leaf count never
  decreases as a tree grows by pendant edges);
* vertices that can no longer reach degree 2 are forced leaves; more than
  |S| of them, or no matching saturating them, ends the branch;
* after deleting a frontier edge, the remaining graph must stay connected.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import CapabilityError, ParameterError, PreconditionError
from .graph import Graph, components, is_connected, iter_bits, mask_of, minimum_vertex_cut, vertex_connectivity
from .matching import saturating_matching

DEFAULT_BUDGET = 10**7
ORACLE_MAX_ORDER = 9


class Decision(str, Enum):
    YES = "yes"
    NO = "no"
    BUDGET_EXHAUSTED = "budget-exhausted"


class Refutation(str, Enum):
    NO_INTERNAL_SPANNING_TREE = "no-internal-spanning-tree"
    S_VERTEX_ISOLATED = "s-vertex-isolated-from-internals"
    MATCHING_INFEASIBLE = "matching-infeasible-exhausted"
    STAR_CENTER_MISSING = "star-center-missing"


@dataclass(frozen=True)
class LeafVerdict:
    """Outcome for one prescribed leaf set.

    ``witness`` is a parent array over all vertices (the root holds -1);
    it is present exactly when ``decision`` is YES.  ``nodes`` counts
    search-node expansions; zero means an early check settled the query.
    """

    decision: Decision
    leaf_set: frozenset[int]
    witness: tuple[int, ...] | None = None
    refutation: Refutation | None = None
    nodes: int = 0

    @property
    def searched(self) -> bool:
        return self.nodes > 0


@dataclass(frozen=True)
class ConnectivityVerdict:
    decision: Decision
    k: int
    failing_set: frozenset[int] | None = None
    failing_verdict: LeafVerdict | None = None
    quick_reject: bool = False
    connectivity: int | None = None
    fast_sets: int = 0
    searched_sets: int = 0
    exhausted_sets: int = 0
    nodes: int = 0

    @property
    def holds(self) -> bool | None:
        if self.decision is Decision.BUDGET_EXHAUSTED:
            return None
        return self.decision is Decision.YES


class _BudgetExhausted(Exception):
    pass


# ---------------------------------------------------------------------------
# witness checking


def tree_edges(parent: Sequence[int]) -> list[tuple[int, int]]:
    return [(min(v, p), max(v, p)) for v, p in enumerate(parent) if p >= 0]


def check_witness(g: Graph, leaves: Iterable[int], parent: Sequence[int]) -> bool:
    """True iff ``parent`` encodes a spanning tree of ``g`` with leaf set ``leaves``."""
    if len(parent) != g.n or sum(1 for p in parent if p < 0) != 1:
        return False
    deg = [0] * g.n
    for v, p in enumerate(parent):
        if p < 0:
            continue
        if not (0 <= p < g.n) or not g.has_edge(v, p):
            return False
        deg[v] += 1
        deg[p] += 1
    # every vertex must reach the root without revisiting
    state = [0] * g.n  # 0 unknown, 1 on current walk, 2 reaches root
    for start in range(g.n):
        walk = []
        v = start
        while v >= 0 and state[v] == 0:
            state[v] = 1
            walk.append(v)
            v = parent[v]
        if v >= 0 and state[v] == 1:
            return False
        for w in walk:
            state[w] = 2
    if g.n == 1:
        return set(leaves) == set()
    return {v for v in range(g.n) if deg[v] == 1} == set(leaves)


# ---------------------------------------------------------------------------
# internal-tree search


class _InternalTreeSearch:
    """Enumerate spanning trees of G[I] whose leaves match into S.

    ``adj`` is G[I] in local indices; ``options[i]`` is the mask of
    S-indices adjacent to internal vertex i.
    """

    def __init__(self, adj: Sequence[int], options: Sequence[int], k: int, budget: int):
        self.m = len(adj)
        self.full = (1 << self.m) - 1
        self.avail = list(adj)
        self.options = options
        self.k = k
        self.budget = budget
        self.nodes = 0
        self.in_tree = 0
        self.size = 0
        self.leaves = 0
        self.tdeg = [0] * self.m
        self.parent = [-1] * self.m
        self.found: tuple[list[int], dict[int, int]] | None = None

    def run(self) -> bool:
        root = min(range(self.m), key=lambda v: (self.avail[v].bit_count(), v))
        self.in_tree = 1 << root
        self.size = 1
        return self._grow(self._edges_from(root))

    def _edges_from(self, v: int) -> list[tuple[int, int]]:
        # list.pop() takes the last entry: put the most constrained target there
        targets = sorted(iter_bits(self.avail[v] & ~self.in_tree),
                         key=lambda w: (-self.avail[w].bit_count(), -w))
        return [(v, w) for w in targets]

    def _connected(self) -> bool:
        comp = frontier = 1
        avail = self.avail
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= avail[v]
            nxt &= ~comp
            comp |= nxt
            frontier = nxt
        return comp == self.full

    def _viable(self) -> bool:
        outside = self.full & ~self.in_tree
        forced = []
        for v in range(self.m):
            if self.in_tree >> v & 1:
                reach = self.tdeg[v] + (self.avail[v] & outside).bit_count()
            else:
                reach = self.avail[v].bit_count()
            if reach <= 1:
                forced.append(v)
                if len(forced) > self.k:
                    return False
        if not forced:
            return True
        return saturating_matching(forced, [self.options[v] for v in forced]) is not None

    def _finish(self) -> bool:
        leaves = [v for v in range(self.m) if self.tdeg[v] <= 1]
        match = saturating_matching(leaves, [self.options[v] for v in leaves])
        if match is None:
            return False
        self.found = (list(self.parent), match)
        return True

    def _grow(self, frontier: list[tuple[int, int]]) -> bool:
        self.nodes += 1
        if self.nodes > self.budget:
            raise _BudgetExhausted
        if self.size == self.m:
            return self._finish()
        if not self._viable():
            return False
        frontier = list(frontier)
        removed: list[tuple[int, int]] = []
        tdeg = self.tdeg
        try:
            while frontier:
                u, v = frontier.pop()
                if self.size == 1:
                    leaves = 2
                elif tdeg[u] == 1:
                    leaves = self.leaves
                else:
                    leaves = self.leaves + 1
                if leaves <= self.k:
                    saved = self.leaves
                    self.in_tree |= 1 << v
                    self.size += 1
                    self.leaves = leaves
                    tdeg[u] += 1
                    tdeg[v] = 1
                    self.parent[v] = u
                    child = [e for e in frontier if e[1] != v]
                    child.extend(self._edges_from(v))
                    found = self._grow(child)
                    self.parent[v] = -1
                    tdeg[v] = 0
                    tdeg[u] -= 1
                    self.leaves = saved
                    self.size -= 1
                    self.in_tree &= ~(1 << v)
                    if found:
                        return True
                # every remaining tree of this branch avoids uv
                self.avail[u] &= ~(1 << v)
                self.avail[v] &= ~(1 << u)
                removed.append((u, v))
                if not self._connected() or not self._viable():
                    break
        finally:
            for u, v in removed:
                self.avail[u] |= 1 << v
                self.avail[v] |= 1 << u
        return False


def _decide(g: Graph, s_mask: int, budget: int) -> LeafVerdict:
    leaves = frozenset(iter_bits(s_mask))
    s_list = sorted(leaves)
    internal = [v for v in range(g.n) if not s_mask >> v & 1]
    i_mask = g.vertex_mask & ~s_mask

    if len(internal) == 1:
        c = internal[0]
        if g.adj[c] & s_mask != s_mask:
            return LeafVerdict(Decision.NO, leaves, refutation=Refutation.STAR_CENTER_MISSING)
        parent = [c] * g.n
        parent[c] = -1
        return LeafVerdict(Decision.YES, leaves, witness=tuple(parent))

    for s in s_list:
        if not g.adj[s] & i_mask:
            return LeafVerdict(Decision.NO, leaves, refutation=Refutation.S_VERTEX_ISOLATED)
    if len(components(g, i_mask)) > 1:
        return LeafVerdict(Decision.NO, leaves, refutation=Refutation.NO_INTERNAL_SPANNING_TREE)

    local = {v: i for i, v in enumerate(internal)}
    s_index = {s: j for j, s in enumerate(s_list)}
    adj = [mask_of(local[u] for u in iter_bits(g.adj[v] & i_mask)) for v in internal]
    options = [mask_of(s_index[s] for s in iter_bits(g.adj[v] & s_mask)) for v in internal]

    search = _InternalTreeSearch(adj, options, len(s_list), budget)
    try:
        ok = search.run()
    except _BudgetExhausted:
        return LeafVerdict(Decision.BUDGET_EXHAUSTED, leaves, nodes=search.nodes)
    if not ok:
        return LeafVerdict(Decision.NO, leaves, refutation=Refutation.MATCHING_INFEASIBLE,
                           nodes=search.nodes)

    local_parent, match = search.found
    parent = [-1] * g.n
    for i, p in enumerate(local_parent):
        parent[internal[i]] = internal[p] if p >= 0 else -1
    for leaf, j in match.items():
        parent[s_list[j]] = internal[leaf]
    for s in s_list:
        if s_index[s] not in match.values():
            parent[s] = next(iter_bits(g.adj[s] & i_mask))
    if not check_witness(g, leaves, parent):
        raise AssertionError(f"decider produced an invalid witness for S={s_list}")
    return LeafVerdict(Decision.YES, leaves, witness=tuple(parent), nodes=search.nodes)


def spanning_tree_with_leaf_set(g: Graph, leaves: Iterable[int], budget: int = DEFAULT_BUDGET) -> LeafVerdict:
    """Decide whether ``g`` has a spanning tree whose leaf set is exactly ``leaves``."""
    s = set(leaves)
    if any(not 0 <= v < g.n for v in s):
        raise ParameterError(f"leaf set {sorted(s)} names vertices outside 0..{g.n - 1}")
    if not 2 <= len(s) <= g.n - 1:
        raise ParameterError(f"leaf set size must lie in [2, n-1] = [2, {g.n - 1}], got {len(s)}")
    if not is_connected(g):
        raise PreconditionError("graph is disconnected")
    return _decide(g, mask_of(s), budget)


def colex_subsets(n: int, k: int) -> Iterator[int]:
    """k-subsets of 0..n-1 as bit masks in colexicographic order (Gosper's hack)."""
    if k == 0:
        yield 0
        return
    mask = (1 << k) - 1
    limit = 1 << n
    while mask < limit:
        yield mask
        low = mask & -mask
        ripple = mask + low
        mask = ripple | (((mask ^ ripple) >> 2) // low)


def _cut_leaf_set(g: Graph, k: int, cut: set[int]) -> int:
    """A k-set containing ``cut`` that leaves two components of G - cut inside V \\ S."""
    cut_mask = mask_of(cut)
    comps = components(g, g.vertex_mask & ~cut_mask)
    keep = {(comps[0] & -comps[0]).bit_length() - 1, (comps[1] & -comps[1]).bit_length() - 1}
    s_mask = cut_mask
    for v in range(g.n):
        if s_mask.bit_count() == k:
            break
        if v not in keep and not s_mask >> v & 1:
            s_mask |= 1 << v
    return s_mask


def is_k_leaf_connected(g: Graph, k: int, budget: int = DEFAULT_BUDGET,
                        quick_reject: bool = True) -> ConnectivityVerdict:
    """Decide k-leaf-connectivity; ``budget`` bounds node expansions per leaf set.

    For k <= n-2 a graph that is not (k+1)-connected is rejected from a
    minimum vertex cut before any subset is searched.  Otherwise subsets
    are checked in colex order and the first refuted one is reported.
    """
    if k < 2:
        raise ParameterError(f"k must be >= 2, got {k}")
    if g.n < k + 1:
        raise ParameterError(f"k-leaf-connectivity needs n >= k+1; n={g.n}, k={k}")
    if not is_connected(g):
        raise PreconditionError("graph is disconnected")

    kappa = None
    if quick_reject and k <= g.n - 2:
        kappa = vertex_connectivity(g)
        if kappa < k + 1:
            s_mask = _cut_leaf_set(g, k, minimum_vertex_cut(g) or set())
            verdict = _decide(g, s_mask, budget)
            assert verdict.decision is Decision.NO
            return ConnectivityVerdict(Decision.NO, k, verdict.leaf_set, verdict, quick_reject=True,
                                       connectivity=kappa, fast_sets=1)

    fast = searched = exhausted = nodes = 0
    for s_mask in colex_subsets(g.n, k):
        verdict = _decide(g, s_mask, budget)
        nodes += verdict.nodes
        if verdict.searched:
            searched += 1
        else:
            fast += 1
        if verdict.decision is Decision.NO:
            return ConnectivityVerdict(Decision.NO, k, verdict.leaf_set, verdict, connectivity=kappa,
                                       fast_sets=fast, searched_sets=searched,
                                       exhausted_sets=exhausted, nodes=nodes)
        if verdict.decision is Decision.BUDGET_EXHAUSTED:
            exhausted += 1
    decision = Decision.BUDGET_EXHAUSTED if exhausted else Decision.YES
    return ConnectivityVerdict(decision, k, connectivity=kappa, fast_sets=fast, searched_sets=searched,
                               exhausted_sets=exhausted, nodes=nodes)


# ---------------------------------------------------------------------------
# brute-force oracle


def spanning_trees(g: Graph) -> Iterator[tuple[tuple[int, int], ...]]:
    """Every spanning tree of ``g`` as an edge tuple (include/exclude over edges)."""
    edges = g.edges()
    need = g.n - 1
    label = list(range(g.n))

    def find(x: int) -> int:
        while label[x] != x:
            x = label[x]
        return x

    chosen: list[tuple[int, int]] = []

    def rec(i: int) -> Iterator[tuple[tuple[int, int], ...]]:
        if len(chosen) == need:
            yield tuple(chosen)
            return
        if len(edges) - i < need - len(chosen):
            return
        u, v = edges[i]
        ru, rv = find(u), find(v)
        if ru != rv:
            label[rv] = ru
            chosen.append((u, v))
            yield from rec(i + 1)
            chosen.pop()
            label[rv] = rv
        yield from rec(i + 1)

    if g.n == 1:
        yield ()
        return
    yield from rec(0)


def oracle_leaf_sets(g: Graph) -> set[frozenset[int]]:
    """Leaf sets of all spanning trees, by exhaustive enumeration (n <= 9)."""
    if g.n > ORACLE_MAX_ORDER:
        raise CapabilityError(f"oracle_leaf_sets supports n <= {ORACLE_MAX_ORDER}, got {g.n}")
    if not is_connected(g):
        raise PreconditionError("graph is disconnected")
    found: set[frozenset[int]] = set()
    for tree in spanning_trees(g):
        deg = [0] * g.n
        for u, v in tree:
            deg[u] += 1
            deg[v] += 1
        found.add(frozenset(v for v in range(g.n) if deg[v] == 1))
    return found


def oracle_is_k_leaf_connected(g: Graph, k: int) -> bool:
    realised = oracle_leaf_sets(g)
    return all(frozenset(s) in realised for s in combinations(range(g.n), k))
