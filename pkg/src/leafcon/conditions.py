"""Edge, degree-sequence and spectral sufficient conditions, aggregated per graph."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from math import comb

from .closure import nk_closure
from .decider import DEFAULT_BUDGET, Decision, is_k_leaf_connected
from .errors import ParameterError, PreconditionError
from .families import Family, FamilyId, recognize_edge_exception, recognize_exception
from .graph import DegreeProfile, Graph, degree_profile, is_connected, vertex_connectivity
from .spectral import DEFAULT_TOL, SpectralReport, spectral_report

# Report keys are part of the published JSON schema; the names say what each test measures.
EDGES_N1 = "thm11"          # e >= C(n-1,2) + k + 1
EDGES_N2 = "thm12"          # e >= C(n-2,2) + 2k + 2
EDGES_T = "thm13"           # e >= C(n-t,2) + t^2 + 2
EDGES_N3 = "thm14"          # e >= C(n-3,2) + 3k + 5
DEGREE_SEQUENCE = "lemma21"
SPECTRAL_RHO = "thm45_i"
SPECTRAL_Q = "thm45_ii"
SPECTRAL_COMPLEMENT = "thm45_iii"
SPECTRAL_KEYS = (SPECTRAL_RHO, SPECTRAL_Q, SPECTRAL_COMPLEMENT)


def _edge_formula(which: str, n: int, p: int) -> int:
    if which == EDGES_N1:
        return comb(n - 1, 2) + p + 1
    if which == EDGES_N2:
        return comb(n - 2, 2) + 2 * p + 2
    if which == EDGES_N3:
        return comb(n - 3, 2) + 3 * p + 5
    if which == EDGES_T:
        return comb(n - p, 2) + p * p + 2
    raise ParameterError(f"unknown edge threshold {which!r}")


def edge_threshold_in_range(which: str, n: int, p: int) -> bool:
    if which in (EDGES_N1, EDGES_N2):
        return 2 <= p <= n - 4
    if which == EDGES_N3:
        return p >= 2 and n >= p + 17
    if which == EDGES_T:
        return p >= 2 and n >= 6 * p + 3
    raise ParameterError(f"unknown edge threshold {which!r}")


def threshold_edges(which: str, n: int, k_or_t: int) -> int:
    """Minimum size demanded by one of the four edge conditions (k, or t for EDGES_T)."""
    if not edge_threshold_in_range(which, n, k_or_t):
        hypothesis = {
            EDGES_N1: "2 <= k <= n-4",
            EDGES_N2: "2 <= k <= n-4",
            EDGES_N3: "k >= 2 and n >= k+17",
            EDGES_T: "t >= 2 and n >= 6t+3",
        }[which]
        raise ParameterError(f"{which} requires {hypothesis}; got n={n}, parameter={k_or_t}")
    return _edge_formula(which, n, k_or_t)


@dataclass(frozen=True)
class DegreeConditionResult:
    holds: bool
    violating_i: int | None = None


def degree_condition(profile: DegreeProfile, k: int) -> DegreeConditionResult:
    """Degree-sequence sufficiency test; on failure reports the smallest violating i."""
    n = profile.n
    if not 2 <= k <= n - 3:
        raise ParameterError(f"degree condition needs 2 <= k <= n-3 = {n - 3}, got k={k}")
    d = profile.d
    for i in range(k, (n + k - 2) // 2 + 1):
        if d(i - k + 1) <= i and d(n - i) <= n - i + k - 2:
            return DegreeConditionResult(False, i)
    return DegreeConditionResult(True)


@dataclass(frozen=True)
class SpectralThresholds:
    rho_min: float
    q_min: float
    rho_complement_max: float


def _spectral_formulas(n: int, k: int) -> SpectralThresholds:
    rho_min = k / 2 + math.sqrt(n * n - (k + 8) * n + k * k / 4 + 7 * k + 23)
    q_min = 2 * n - 8 + (6 * k + 16) / (n - 1)
    rho_complement_max = math.sqrt((n - k) * (3 * n - 3 * k - 11) / n)
    return SpectralThresholds(rho_min, q_min, rho_complement_max)


def spectral_thresholds(n: int, k: int) -> SpectralThresholds:
    if k < 2 or n < k + 17:
        raise ParameterError(f"spectral thresholds need k >= 2 and n >= k+17; got n={n}, k={k}")
    return _spectral_formulas(n, k)


# ---------------------------------------------------------------------------
# the per-graph report


@dataclass(frozen=True)
class Criterion:
    """One sufficient condition: the graph's value against the threshold.

    ``satisfied`` compares value and threshold only; ``applicable`` records
    whether the condition's remaining hypotheses (order, k range, minimum
    degree) hold; ``holds`` is their conjunction.
    """

    value: float | int | None
    threshold: float | int | None
    satisfied: bool
    applicable: bool

    @property
    def holds(self) -> bool:
        return self.satisfied and self.applicable

    def to_dict(self) -> dict:
        return {**asdict(self), "holds": self.holds}


POSITIVE = "k-leaf-connected"
NEGATIVE = "not-k-leaf-connected"
INCONCLUSIVE = "inconclusive"


@dataclass
class ConditionReport:
    n: int
    k: int
    edge_count: int
    min_degree: int
    connectivity: int
    necessary: dict[str, bool]
    sufficient: dict[str, Criterion]
    spectral: SpectralReport | None
    closure_added_edges: int
    exception_match: FamilyId | None
    edge_exception: FamilyId | None
    verdict_if_decided: Decision | None = None
    failing_set: tuple[int, ...] | None = None
    conclusion: str = INCONCLUSIVE
    basis: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "edge_count": self.edge_count,
            "min_degree": self.min_degree,
            "connectivity": self.connectivity,
            "necessary": dict(self.necessary),
            "sufficient": {name: c.to_dict() for name, c in self.sufficient.items()},
            "spectral": asdict(self.spectral) if self.spectral else None,
            "closure_added_edges": self.closure_added_edges,
            "exception_match": self.exception_match.to_dict() if self.exception_match else None,
            "edge_exception": self.edge_exception.to_dict() if self.edge_exception else None,
            "verdict_if_decided": self.verdict_if_decided.value if self.verdict_if_decided else None,
            "failing_set": list(self.failing_set) if self.failing_set is not None else None,
            "conclusion": self.conclusion,
            "basis": list(self.basis),
        }


def _exception_is_negative(fid: FamilyId, k: int) -> bool:
    # K_k ∨ (K_{n-k-2}+K_2): deleting the k join vertices disconnects the rest.
    # K_3 ∨ (K_{n-5}+2K_1): not 2-leaf-connected, and min degree 3 < k+1 for k >= 3.
    # K_4 ∨ (K_{n-7}+3K_1): negative for k = 2 once the clique block is
    # nonempty (n = 7 gives K_4 ∨ 3K_1, which is Hamilton-connected).
    if fid.family in (Family.KK_JOIN, Family.K3_JOIN):
        return True
    return fid.family is Family.K4_JOIN and k == 2 and fid.n >= 8


def evaluate(g: Graph, k: int, decide: bool = False, budget: int = DEFAULT_BUDGET,
             spectral: bool = True, tol: float = DEFAULT_TOL) -> ConditionReport:
    """Evaluate every necessary and sufficient condition for k-leaf-connectivity.

    Spectral comparisons are conservative by ``tol`` so that a flag never
    reports a borderline value as satisfied.  A negative conclusion is drawn
    only from the exact decider, a failed necessary condition, or a
    recognised exception family.
    """
    if not is_connected(g):
        raise PreconditionError("graph is disconnected")
    n = g.n
    if k < 2 or n < k + 1:
        raise ParameterError(f"need k >= 2 and n >= k+1; got n={n}, k={k}")
    profile = degree_profile(g)
    e, delta = profile.edge_count, profile.min_degree
    kappa = vertex_connectivity(g) if n >= 2 else 0
    min_degree_ok = delta >= k + 1
    necessary = {"min_degree_ok": min_degree_ok, "connectivity_ok": kappa >= k + 1}

    sufficient: dict[str, Criterion] = {}
    for which in (EDGES_N1, EDGES_N2, EDGES_N3):
        threshold = _edge_formula(which, n, k)
        in_range = edge_threshold_in_range(which, n, k) and min_degree_ok
        sufficient[which] = Criterion(e, threshold, e >= threshold, in_range)

    if 2 <= k <= n - 3:
        deg = degree_condition(profile, k)
        sufficient[DEGREE_SEQUENCE] = Criterion(deg.violating_i, None, deg.holds, True)
    else:
        sufficient[DEGREE_SEQUENCE] = Criterion(None, None, False, False)

    report_spec = spectral_report(g, tol) if spectral else None
    spectral_range = k >= 2 and n >= k + 17
    if report_spec is not None and spectral_range:
        th = _spectral_formulas(n, k)
        sufficient[SPECTRAL_RHO] = Criterion(report_spec.rho, th.rho_min,
                                          report_spec.rho >= th.rho_min + tol, min_degree_ok)
        sufficient[SPECTRAL_Q] = Criterion(report_spec.q, th.q_min,
                                           report_spec.q >= th.q_min + tol, min_degree_ok)
        sufficient[SPECTRAL_COMPLEMENT] = Criterion(report_spec.rho_complement, th.rho_complement_max,
                                            report_spec.rho_complement <= th.rho_complement_max - tol,
                                            min_degree_ok)
    else:
        for name in SPECTRAL_KEYS:
            value = None
            if report_spec is not None:
                value = {SPECTRAL_RHO: report_spec.rho, SPECTRAL_Q: report_spec.q,
                         SPECTRAL_COMPLEMENT: report_spec.rho_complement}[name]
            sufficient[name] = Criterion(value, None, False, False)

    closure = nk_closure(g, k)
    match = recognize_exception(closure.closed_graph, k)
    ex12 = recognize_edge_exception(g) if k == 2 else None

    report = ConditionReport(n, k, e, delta, kappa, necessary, sufficient, report_spec,
                             len(closure.added_edges), match, ex12)

    if decide:
        verdict = is_k_leaf_connected(g, k, budget)
        report.verdict_if_decided = verdict.decision
        if verdict.failing_set is not None:
            report.failing_set = tuple(sorted(verdict.failing_set))
        if verdict.decision is Decision.YES:
            report.conclusion = POSITIVE
            report.basis.append("exact decider")
            return report
        if verdict.decision is Decision.NO:
            report.conclusion = NEGATIVE
            report.basis.append("exact decider")
            return report

    negative = []
    if k <= n - 2 and not necessary["connectivity_ok"]:
        negative.append("not (k+1)-connected")
    if match is not None and _exception_is_negative(match, k):
        negative.append(f"closure is {match}")
    if ex12 is not None:
        negative.append(f"graph is {ex12}")
    positive = []
    if sufficient[DEGREE_SEQUENCE].holds:
        positive.append("degree-sequence condition")
    if sufficient[EDGES_N1].holds:
        positive.append(EDGES_N1)
    if sufficient[EDGES_N2].holds and ex12 is None:
        positive.append(EDGES_N2)
    if match is None:
        positive.extend(name for name in (EDGES_N3, *SPECTRAL_KEYS) if sufficient[name].holds)

    if negative and positive:
        raise AssertionError(f"contradictory conclusions: {negative} vs {positive}")
    if negative:
        report.conclusion, report.basis = NEGATIVE, negative
    elif positive:
        report.conclusion, report.basis = POSITIVE, positive
    return report
