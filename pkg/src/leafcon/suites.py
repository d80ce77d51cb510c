"""Named certification suites run by ``leafcon verify`` and the acceptance tests.

Each suite returns a SuiteResult; tolerances and sizes are fixed here and
are not tunable from the command line.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Callable

from . import graph6
from .closure import l_closure, nk_closure
from .conditions import degree_condition
from .decider import (
    Decision,
    is_k_leaf_connected,
    oracle_leaf_sets,
    spanning_tree_with_leaf_set,
)
from .families import (
    EDGE_EXCEPTIONS,
    Family,
    FamilyId,
    build_family,
    closed_form_edge_count,
    family_id,
    family_partition,
    fixed_order,
)
from .graph import Graph, build, clique_number, complement, complete_graph, complete_bipartite, degree_profile, is_connected
from .scan import ScanConfig, run_scan
from .spectral import (
    ADJACENCY,
    COMPLEMENT_ADJACENCY,
    SIGNLESS_LAPLACIAN,
    DomainError,
    adjacency_radius,
    feng_yu_bound,
    hong_bound,
    hong_f,
    family_charpoly,
    largest_real_root_cubic,
    quotient_matrix,
    signless_laplacian_radius,
)

EIGEN_TOL = 1e-9
QUOTIENT_TOL = 1e-8
BOUND_SLACK = 1e-9
INEQUALITY_MARGIN = 1e-9
SCAN_SEED = 7
SUITE_SEED = 20240601


@dataclass
class SuiteResult:
    name: str
    passed: bool
    details: list[str] = field(default_factory=list)
    elapsed: float = 0.0
    limit: float | None = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        limit = f" (limit {self.limit:.0f}s)" if self.limit else ""
        return f"[{status}] {self.name}: {self.elapsed:.1f}s{limit}"


def _random_connected(rng: random.Random, n: int, p_low: float = 0.3) -> Graph:
    while True:
        p = rng.uniform(p_low, 1.0)
        g = build(n, [e for e in combinations(range(n), 2) if rng.random() < p])
        if is_connected(g):
            return g


# ---------------------------------------------------------------------------


def edge_exception_graphs() -> list[FamilyId]:
    ids = [family_id(Family.EXC_K3_KN5_2K1, 9), family_id(Family.EXC_K3_KN5_2K1, 10)]
    ids.extend(family_id(f, fixed_order(f)) for f in EDGE_EXCEPTIONS[1:])
    return ids


def suite_exceptions() -> SuiteResult:
    res = SuiteResult("exceptions", True, limit=300)
    for fid in edge_exception_graphs():
        g = build_family(fid)
        delta = min(g.degrees())
        floor = comb(g.n - 2, 2) + 6
        verdict = is_k_leaf_connected(g, 2)
        ok = delta >= 3 and g.edge_count >= floor and verdict.decision is Decision.NO
        res.passed &= ok
        res.details.append(f"{fid}: delta={delta} e={g.edge_count}>={floor} decider={verdict.decision.value} "
                           f"failing={sorted(verdict.failing_set or [])} {'ok' if ok else 'FAIL'}")
    return res


def suite_join_families() -> SuiteResult:
    res = SuiteResult("join-families", True, limit=600)
    cases = [
        (family_id(Family.KK_JOIN, 12, k=2), 2, Decision.NO),
        (family_id(Family.K3_JOIN, 12), 2, Decision.NO),
        (family_id(Family.K4_JOIN, 12), 2, Decision.NO),
        (family_id(Family.KK1_JOIN, 12, k=3), 3, Decision.YES),
        (family_id(Family.KK2_JOIN, 12, k=3), 3, Decision.YES),
    ]
    for fid, k, expected in cases:
        verdict = is_k_leaf_connected(build_family(fid), k)
        ok = verdict.decision is expected
        res.passed &= ok
        res.details.append(f"{fid} k={k}: {verdict.decision.value} (expected {expected.value})")
    return res


def suite_closure_invariance(count: int = 200, seed: int = SUITE_SEED) -> SuiteResult:
    res = SuiteResult("closure-invariance", True)
    rng = random.Random(seed)
    agree = changed = 0
    for _ in range(count):
        n = rng.randint(5, 9)
        k = rng.choice((2, 3))
        g = _random_connected(rng, n, p_low=0.5)
        closed = nk_closure(g, k).closed_graph
        a = is_k_leaf_connected(g, k).decision
        b = is_k_leaf_connected(closed, k).decision
        changed += closed != g
        if a is b and a is not Decision.BUDGET_EXHAUSTED:
            agree += 1
        else:
            res.details.append(f"disagreement: {graph6.encode(g)} k={k}: {a.value} vs {b.value}")
    res.passed = agree == count
    res.details.append(f"{agree}/{count} agree; closure added edges in {changed} cases")
    return res


def suite_degree_condition(n: int = 6) -> SuiteResult:
    res = SuiteResult("degree-condition", True)
    pairs = list(combinations(range(n), 2))
    connected = held = violations = 0
    cache: dict[tuple, bool] = {}
    for bits in range(1 << len(pairs)):
        g = build(n, [pairs[i] for i in range(len(pairs)) if bits >> i & 1])
        if not is_connected(g):
            continue
        connected += 1
        profile = degree_profile(g)
        for k in range(2, n - 2):
            if not degree_condition(profile, k).holds:
                continue
            held += 1
            key = (g.adj, k)
            if key not in cache:
                cache[key] = is_k_leaf_connected(g, k).decision is Decision.YES
            if not cache[key]:
                violations += 1
                res.details.append(f"violation: {graph6.encode(g)} k={k}")
    res.passed = violations == 0
    res.details.append(f"n={n}: {connected} connected labelled graphs, condition held {held} times, "
                       f"{violations} violations")
    return res


def suite_oracle_equivalence(count: int = 200, seed: int = SUITE_SEED + 1) -> SuiteResult:
    res = SuiteResult("oracle-equivalence", True)
    rng = random.Random(seed)
    checked = mismatches = 0
    for _ in range(count):
        n = rng.randint(3, 7)
        g = _random_connected(rng, n)
        realised = oracle_leaf_sets(g)
        for size in range(2, n):
            for s in combinations(range(n), size):
                verdict = spanning_tree_with_leaf_set(g, s)
                checked += 1
                if (verdict.decision is Decision.YES) != (frozenset(s) in realised):
                    mismatches += 1
                    res.details.append(f"mismatch: {graph6.encode(g)} S={s} decider={verdict.decision.value}")
    res.passed = mismatches == 0
    res.details.append(f"{checked} leaf-set queries on {count} graphs, {mismatches} mismatches")
    return res


def _family_quotient_radius(fid: FamilyId, which: str) -> float:
    g = build_family(fid)
    kind = ADJACENCY if which == COMPLEMENT_ADJACENCY else which
    target = complement(g) if which == COMPLEMENT_ADJACENCY else g
    qm = quotient_matrix(target, kind, family_partition(fid))
    if not qm.equitable:
        raise AssertionError(f"partition of {fid} is not equitable for {which}")
    return qm.largest_eigenvalue()


def exceptional_families(n: int, k: int = 2) -> list[FamilyId]:
    return [family_id(Family.KK_JOIN, n, k=k), family_id(Family.K3_JOIN, n), family_id(Family.K4_JOIN, n)]


def suite_spectral_closed_forms() -> SuiteResult:
    res = SuiteResult("spectral-closed-forms", True)
    h = build_family(family_id(Family.K4_JOIN, 12))
    rho_c = adjacency_radius(complement(h))
    ok = abs(rho_c - 5.0) <= EIGEN_TOL
    res.passed &= ok
    res.details.append(f"rho(complement K4v(K5+3K1)) = {rho_c!r} vs 5 ({'ok' if ok else 'FAIL'})")
    rho_b = adjacency_radius(complete_bipartite(2, 6))
    ok = abs(rho_b - math.sqrt(12)) <= EIGEN_TOL
    res.passed &= ok
    res.details.append(f"rho(K_2,6) = {rho_b!r} vs sqrt(12) ({'ok' if ok else 'FAIL'})")
    worst = 0.0
    for n in range(9, 17):
        for fid in exceptional_families(n):
            g = build_family(fid)
            for which, dense in ((ADJACENCY, adjacency_radius(g)), (SIGNLESS_LAPLACIAN, signless_laplacian_radius(g))):
                worst = max(worst, abs(_family_quotient_radius(fid, which) - dense))
    ok = worst < QUOTIENT_TOL
    res.passed &= ok
    res.details.append(f"quotient vs dense, n in [9,16], A and Q: max deviation {worst:.3e} ({'ok' if ok else 'FAIL'})")
    return res


def suite_bounds(count: int = 500, seed: int = SUITE_SEED + 2) -> SuiteResult:
    res = SuiteResult("bounds", True)
    rng = random.Random(seed)
    worst_hong = worst_feng = -math.inf
    grid_failures = 0
    for _ in range(count):
        g = _random_connected(rng, rng.randint(4, 12), p_low=0.1)
        worst_hong = max(worst_hong, adjacency_radius(g) - hong_bound(g))
        worst_feng = max(worst_feng, signless_laplacian_radius(g) - feng_yu_bound(g))
        n, e = g.n, g.edge_count
        previous = math.inf
        for step in range(4 * (n - 1) + 1):
            try:
                value = hong_f(step / 4, n, e)
            except DomainError:
                break  # radicand only shrinks as x grows
            if value > previous + 1e-12:
                grid_failures += 1
            previous = value
    equality = max(
        max(abs(hong_bound(complete_graph(n)) - adjacency_radius(complete_graph(n))),
            abs(feng_yu_bound(complete_graph(n)) - signless_laplacian_radius(complete_graph(n))))
        for n in range(3, 13)
    )
    checks = [
        (worst_hong <= BOUND_SLACK, f"Hong-Shu-Fang: max(rho - bound) = {worst_hong:.3e}"),
        (worst_feng <= BOUND_SLACK, f"Feng-Yu: max(q - bound) = {worst_feng:.3e}"),
        (equality <= EIGEN_TOL, f"equality on K_n, n in [3,12]: max deviation {equality:.3e}"),
        (grid_failures == 0, f"f(x) monotone on quarter-step grids: {grid_failures} increases"),
    ]
    for ok, text in checks:
        res.passed &= ok
        res.details.append(f"{text} ({'ok' if ok else 'FAIL'})")
    return res


def inequality_table(k: int = 2, n_max: int = 60) -> list[tuple[str, int, Callable[[int], float]]]:
    """(label, lower bound on n, margin(n)); each margin must be positive."""

    def radius(family: Family, which: str) -> Callable[[int], float]:
        def at(n: int) -> float:
            fid = family_id(family, n, k=k) if family is Family.KK_JOIN else family_id(family, n)
            return _family_quotient_radius(fid, which)
        return at

    def hong_target(n: int) -> float:
        return 1 + math.sqrt(n * n - 10 * n + 38)

    def q_target(n: int) -> float:
        return 2 * n - 8 + 28 / (n - 1)

    def comp_target(n: int) -> float:
        return math.sqrt((n - 2) * (3 * n - 17) / n)

    kk = Family.KK_JOIN
    return [
        ("KkJoin: rho above rho_min", 2 * k + 8, lambda n: radius(kk, ADJACENCY)(n)
         - (k / 2 + math.sqrt(n * n - (k + 8) * n + k * k / 4 + 7 * k + 23))),
        ("KkJoin: q above q_min", 3 * k + 10, lambda n: radius(kk, SIGNLESS_LAPLACIAN)(n) - (2 * n - 8 + (6 * k + 16) / (n - 1))),
        ("KkJoin: complement rho below max", 3 * k + 9, lambda n: math.sqrt((n - k) * (3 * n - 3 * k - 11) / n)
         - radius(kk, COMPLEMENT_ADJACENCY)(n)),
        ("K3Join: rho above 1+sqrt(n^2-10n+38)", 9, lambda n: radius(Family.K3_JOIN, ADJACENCY)(n) - hong_target(n)),
        ("K3Join: q above 2n-8+28/(n-1)", 10, lambda n: radius(Family.K3_JOIN, SIGNLESS_LAPLACIAN)(n) - q_target(n)),
        ("K3Join: complement rho below max", 17, lambda n: comp_target(n) - radius(Family.K3_JOIN, COMPLEMENT_ADJACENCY)(n)),
        ("K4Join: rho below 1+sqrt(n^2-10n+38)", 9, lambda n: hong_target(n) - radius(Family.K4_JOIN, ADJACENCY)(n)),
        ("K4Join: q below 2n-8+28/(n-1)", 9, lambda n: q_target(n) - radius(Family.K4_JOIN, SIGNLESS_LAPLACIAN)(n)),
        ("K4Join: complement rho above max", 7, lambda n: radius(Family.K4_JOIN, COMPLEMENT_ADJACENCY)(n) - comp_target(n)),
    ]


def suite_inequality_scan(k: int = 2, n_max: int = 60) -> SuiteResult:
    res = SuiteResult("inequality-scan", True, limit=120)
    for label, lower, margin in inequality_table(k, n_max):
        worst = min((margin(n), n) for n in range(lower, n_max + 1))
        ok = worst[0] > INEQUALITY_MARGIN
        res.passed &= ok
        res.details.append(f"{label}: n in [{lower},{n_max}], min margin {worst[0]:.6g} at n={worst[1]} "
                           f"({'ok' if ok else 'FAIL'})")
    # the quotient radii above must agree with the largest roots of the closed-form cubics
    deviation = 0.0
    for family, lower in ((Family.K3_JOIN, 9), (Family.K4_JOIN, 9)):
        for n in range(lower, n_max + 1):
            for which in (ADJACENCY, SIGNLESS_LAPLACIAN, COMPLEMENT_ADJACENCY):
                root = largest_real_root_cubic(family_charpoly(family.value, which, n))
                deviation = max(deviation, abs(root - _family_quotient_radius(family_id(family, n), which)))
    ok = deviation < QUOTIENT_TOL
    res.passed &= ok
    res.details.append(f"quotient radius vs closed-form cubic root: max deviation {deviation:.3e} "
                       f"({'ok' if ok else 'FAIL'})")
    return res


def suite_certification_scan(count: int = 100, seed: int = SCAN_SEED, parallelism: int = 1) -> SuiteResult:
    res = SuiteResult("certification-scan", True, limit=900)
    report = run_scan(ScanConfig(n=19, k=2, sample_count=count, seed=seed, parallelism=parallelism))
    s = report.summary
    min_e = min(r["e"] for r in report.records)
    min_delta = min(r["delta"] for r in report.records)
    res.passed = (s["anomalies"] == 0 and s["budget_exhausted"] == 0 and min_e >= 131 and min_delta >= 3
                  and s["confirmed"] + s["exceptions"] == count)
    res.details.append(f"summary {s}; min e={min_e}, min delta={min_delta}")
    return res


def suite_tightness() -> SuiteResult:
    res = SuiteResult("tightness", True)
    fid = family_id(Family.TIGHTNESS, 12)
    g = build_family(fid)
    n = g.n
    fixed = not l_closure(g, n + 1).added_edges
    omega = clique_number(g)
    verdict = is_k_leaf_connected(g, 2)
    checks = [
        (g.edge_count == comb(n - 3, 2) + 10 == 46 == closed_form_edge_count(fid), f"e = {g.edge_count}"),
        (fixed, "fixed point of C_{n+1}"),
        (omega == n - 3 == 9, f"omega = {omega}"),
        (verdict.decision is Decision.NO, f"decider: {verdict.decision.value}"),
    ]
    for ok, text in checks:
        res.passed &= ok
        res.details.append(f"{text} ({'ok' if ok else 'FAIL'})")
    return res


def suite_cli(count: int = 200, seed: int = SUITE_SEED + 3) -> SuiteResult:
    res = SuiteResult("cli", True)
    rng = random.Random(seed)
    failures = 0
    for _ in range(count):
        n = rng.randint(1, 30)
        p = rng.random()
        g = build(n, [e for e in combinations(range(n), 2) if rng.random() < p])
        if graph6.decode(graph6.encode(g)) != g:
            failures += 1
    res.details.append(f"graph6 round trip: {count - failures}/{count} identical")
    config = ScanConfig(n=19, k=2, sample_count=5, seed=SCAN_SEED)
    first, second = run_scan(config).to_json(), run_scan(config).to_json()
    same = first.encode() == second.encode()
    res.details.append(f"scan report byte-identical across runs: {same}")
    res.passed = failures == 0 and same
    return res


SUITES: dict[str, Callable[[], SuiteResult]] = {
    "exceptions": suite_exceptions,
    "join-families": suite_join_families,
    "closure-invariance": suite_closure_invariance,
    "degree-condition": suite_degree_condition,
    "oracle-equivalence": suite_oracle_equivalence,
    "spectral-closed-forms": suite_spectral_closed_forms,
    "bounds": suite_bounds,
    "inequality-scan": suite_inequality_scan,
    "certification-scan": suite_certification_scan,
    "tightness": suite_tightness,
    "cli": suite_cli,
}


def run_suite(name: str) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(name)
    start = time.perf_counter()
    result = SUITES[name]()
    result.elapsed = time.perf_counter() - start
    if result.limit is not None and result.elapsed > result.limit:
        result.passed = False
        result.details.append(f"runtime {result.elapsed:.1f}s exceeds {result.limit:.0f}s")
    return result
