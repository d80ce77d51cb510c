"""Named extremal graph families, their constructors and structural recognizers.

Every family here has the shape K_j ∨ R where R is a disjoint union of
cliques, independent vertices, stars and complete bipartite graphs.
Labelling: the join block K_j is 0..j-1, then the blocks of R in the order
listed by ``family_blocks`` (the clique block first).

Recognition avoids general isomorphism.  The dominating vertices (degree
n-1) of any graph form a clique joined to everything, so G ≅ K_|D| ∨ G[V-D].
Components of G[V-D] are classified exactly as complete, star or complete
bipartite; two graphs with equal classifications (and no unclassified
component) are isomorphic.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import comb

from .errors import ParameterError
from .graph import (
    Graph,
    complete_bipartite,
    complete_graph,
    components,
    disjoint_union,
    empty_graph,
    iter_bits,
    join,
    star_graph,
)


class Family(str, Enum):
    KK_JOIN = "KkJoin_Kn_k_2_plus_K2"            # K_k ∨ (K_{n-k-2} + K_2)
    K3_JOIN = "K3Join_Kn5_plus_2K1"              # K_3 ∨ (K_{n-5} + 2K_1)
    K4_JOIN = "K4Join_Kn7_plus_3K1"              # K_4 ∨ (K_{n-7} + 3K_1)
    KK1_JOIN = "Kk1Join_2K1"                     # K_{k+1} ∨ (K_{n-k-3} + 2K_1)
    KK2_JOIN = "Kk2Join_3K1"                     # K_{k+2} ∨ (K_{n-k-5} + 3K_1)
    TIGHTNESS = "RemarkGraph"                    # K_3 ∨ (K_{n-6} + K_2 + K_1)
    L = "L_t_n"                                  # K_2 ∨ (K_{n-t-1} + K_{t-1})
    N = "N_t_n"                                  # K_t ∨ (K_{n-2t+1} + (t-1)K_1)
    M = "M_t_n"                                  # K_{t+1} ∨ (K_{n-2t-1} + tK_1)
    EXC_K3_KN5_2K1 = "Exception12_K3_Kn5_2K1"   # K_3 ∨ (K_{n-5} + 2K_1)
    EXC_K4_K2_3K1 = "Exception12_K4_K2_3K1"     # K_4 ∨ (K_2 + 3K_1), n = 9
    EXC_K6_6K1 = "Exception12_K6_6K1"           # K_6 ∨ 6K_1, n = 12
    EXC_K5_5K1 = "Exception12_K5_5K1"           # K_5 ∨ 5K_1, n = 10
    EXC_K4_K14_K1 = "Exception12_K4_K14_K1"     # K_4 ∨ (K_{1,4} + K_1), n = 10
    EXC_K3_K25 = "Exception12_K3_K25"           # K_3 ∨ K_{2,5}, n = 10
    EXC_K4_4K1 = "Exception12_K4_4K1"           # K_4 ∨ 4K_1, n = 8
    EXC_K3_K13_K1 = "Exception12_K3_K13_K1"     # K_3 ∨ (K_{1,3} + K_1), n = 8
    EXC_K2_K24 = "Exception12_K2_K24"           # K_2 ∨ K_{2,4}, n = 8


# fixed-order members of the nine-graph exception list (all at k = 2)
_FIXED_ORDER = {
    Family.EXC_K4_K2_3K1: 9,
    Family.EXC_K6_6K1: 12,
    Family.EXC_K5_5K1: 10,
    Family.EXC_K4_K14_K1: 10,
    Family.EXC_K3_K25: 10,
    Family.EXC_K4_4K1: 8,
    Family.EXC_K3_K13_K1: 8,
    Family.EXC_K2_K24: 8,
}

EDGE_EXCEPTIONS = (Family.EXC_K3_KN5_2K1, *_FIXED_ORDER)
CLOSURE_EXCEPTIONS = (Family.KK_JOIN, Family.K3_JOIN, Family.K4_JOIN)

_NEEDS_K = {Family.KK_JOIN, Family.KK1_JOIN, Family.KK2_JOIN}
_NEEDS_T = {Family.L, Family.N, Family.M}


@dataclass(frozen=True)
class FamilyId:
    family: Family
    n: int
    k: int | None = None
    t: int | None = None

    def __str__(self) -> str:
        params = [f"n={self.n}"]
        if self.k is not None:
            params.append(f"k={self.k}")
        if self.t is not None:
            params.append(f"t={self.t}")
        return f"{self.family.value}({', '.join(params)})"

    def to_dict(self) -> dict:
        return {"tag": self.family.value, "n": self.n, "k": self.k, "t": self.t}


def fixed_order(family: Family) -> int | None:
    return _FIXED_ORDER.get(family)


def family_id(tag: str | Family, n: int, k: int | None = None, t: int | None = None) -> FamilyId:
    """Validate parameters and return the family identifier."""
    try:
        family = Family(tag)
    except ValueError:
        raise ParameterError(f"unknown family tag {tag!r}") from None
    if family in _NEEDS_K:
        if k is None or k < 2:
            raise ParameterError(f"{family.value} needs k >= 2, got {k}")
    else:
        k = None
    if family in _NEEDS_T:
        if t is None or t < 2:
            raise ParameterError(f"{family.value} needs t >= 2, got {t}")
    else:
        t = None
    fid = FamilyId(family, n, k, t)
    family_blocks(fid)  # raises on invalid ranges
    return fid


def family_blocks(fid: FamilyId) -> tuple[int, list[tuple]]:
    """(join size, residue parts); parts are ('K', m), ('E', m), ('S', leaves) or ('B', a, b)."""
    f, n, k, t = fid.family, fid.n, fid.k, fid.t

    def need(cond: bool, what: str) -> None:
        if not cond:
            raise ParameterError(f"{f.value}: requires {what} (n={n}, k={k}, t={t})")

    if f in _FIXED_ORDER:
        need(n == _FIXED_ORDER[f], f"n = {_FIXED_ORDER[f]}")
    if f is Family.KK_JOIN:
        need(n >= k + 3, "n >= k+3")
        return k, [("K", n - k - 2), ("K", 2)]
    if f in (Family.K3_JOIN, Family.EXC_K3_KN5_2K1):
        need(n >= 6, "n >= 6")
        return 3, [("K", n - 5), ("E", 2)]
    if f is Family.K4_JOIN:
        need(n >= 7, "n >= 7")
        return 4, [("K", n - 7), ("E", 3)]
    if f is Family.KK1_JOIN:
        need(n >= k + 4, "n >= k+4")
        return k + 1, [("K", n - k - 3), ("E", 2)]
    if f is Family.KK2_JOIN:
        need(n >= k + 6, "n >= k+6")
        return k + 2, [("K", n - k - 5), ("E", 3)]
    if f is Family.TIGHTNESS:
        need(n >= 7, "n >= 7")
        return 3, [("K", n - 6), ("K", 2), ("K", 1)]
    if f is Family.L:
        need(2 * t <= n, "2 <= t <= n/2")
        return 2, [("K", n - t - 1), ("K", t - 1)]
    if f is Family.N:
        need(2 * t <= n, "2 <= t <= n/2")
        return t, [("K", n - 2 * t + 1), ("E", t - 1)]
    if f is Family.M:
        need(2 * t <= n - 1, "2 <= t <= (n-1)/2")
        return t + 1, [("K", n - 2 * t - 1), ("E", t)]
    table = {
        Family.EXC_K4_K2_3K1: (4, [("K", 2), ("E", 3)]),
        Family.EXC_K6_6K1: (6, [("E", 6)]),
        Family.EXC_K5_5K1: (5, [("E", 5)]),
        Family.EXC_K4_K14_K1: (4, [("S", 4), ("K", 1)]),
        Family.EXC_K3_K25: (3, [("B", 2, 5)]),
        Family.EXC_K4_4K1: (4, [("E", 4)]),
        Family.EXC_K3_K13_K1: (3, [("S", 3), ("K", 1)]),
        Family.EXC_K2_K24: (2, [("B", 2, 4)]),
    }
    return table[f]


def _part_graph(part: tuple) -> Graph:
    kind = part[0]
    if kind == "K":
        return complete_graph(part[1])
    if kind == "E":
        return empty_graph(part[1])
    if kind == "S":
        return star_graph(part[1])
    return complete_bipartite(part[1], part[2])


def build_family(fid: FamilyId) -> Graph:
    j, parts = family_blocks(fid)
    return join(complete_graph(j), disjoint_union(*(_part_graph(p) for p in parts)))


def family_partition(fid: FamilyId) -> list[list[int]]:
    """Vertex blocks (join, then each residue part) with empty blocks dropped."""
    j, parts = family_blocks(fid)
    blocks = [list(range(j))]
    start = j
    for p in parts:
        size = _part_graph(p).n
        blocks.append(list(range(start, start + size)))
        start += size
    return [b for b in blocks if b]


def closed_form_edge_count(fid: FamilyId) -> int | None:
    """Size of the family where a closed form is known, else None."""
    n, k = fid.n, fid.k
    if fid.family is Family.KK_JOIN:
        return comb(n - 2, 2) + 2 * k + 1
    if fid.family in (Family.K3_JOIN, Family.EXC_K3_KN5_2K1):
        return comb(n - 2, 2) + 6
    if fid.family is Family.TIGHTNESS:
        return comb(n - 3, 2) + 10
    return None


# ---------------------------------------------------------------------------
# recognition


def _component_shape(g: Graph, comp: int) -> tuple:
    verts = list(iter_bits(comp))
    m = len(verts)
    degs = [(g.adj[v] & comp).bit_count() for v in verts]
    e = sum(degs) // 2
    if e == m * (m - 1) // 2:
        return ("K", m)
    if e == m - 1 and max(degs) == m - 1:
        return ("S", m - 1)
    side = {verts[0]: 0}
    stack = [verts[0]]
    while stack:
        v = stack.pop()
        for u in iter_bits(g.adj[v] & comp):
            if u not in side:
                side[u] = 1 - side[v]
                stack.append(u)
            elif side[u] == side[v]:
                return ("?", m, e)
    a = sum(1 for v in verts if side[v] == 0)
    if e == a * (m - a):
        return ("B", min(a, m - a), max(a, m - a))
    return ("?", m, e)


def join_signature(g: Graph) -> tuple[int, tuple]:
    """(number of dominating vertices, sorted shapes of the residue's components)."""
    dominating = 0
    for v in range(g.n):
        if g.adj[v].bit_count() == g.n - 1:
            dominating |= 1 << v
    residue = g.vertex_mask & ~dominating
    shapes = sorted(_component_shape(g, c) for c in components(g, residue)) if residue else []
    return dominating.bit_count(), tuple(shapes)


def matches_family(g: Graph, fid: FamilyId) -> bool:
    try:
        model = build_family(fid)
    except ParameterError:
        return False
    if model.n != g.n or model.edge_count != g.edge_count:
        return False
    if sorted(model.degrees()) != sorted(g.degrees()):
        return False
    sig = join_signature(g)
    if any(shape[0] == "?" for shape in sig[1]):
        return False
    return sig == join_signature(model)


def _first_match(g: Graph, candidates: list[FamilyId]) -> FamilyId | None:
    for fid in candidates:
        if matches_family(g, fid):
            return fid
    return None


def recognize_exception(g: Graph, k: int) -> FamilyId | None:
    """Match G against the three closure exceptions K_k∨(K_{n-k-2}+K_2), K_3∨(K_{n-5}+2K_1), K_4∨(K_{n-7}+3K_1)."""
    n = g.n
    candidates = [FamilyId(Family.KK_JOIN, n, k=k), FamilyId(Family.K3_JOIN, n), FamilyId(Family.K4_JOIN, n)]
    return _first_match(g, candidates)


def recognize_edge_exception(g: Graph) -> FamilyId | None:
    """Match G against the nine-graph exception list of the edge condition C(n-2,2)+2k+2."""
    candidates = [FamilyId(f, g.n) for f in EDGE_EXCEPTIONS]
    return _first_match(g, candidates)
