from __future__ import annotations

import math
from math import comb

import pytest

from conftest import connected_atlas
from leafcon.conditions import (
    DEGREE_SEQUENCE,
    INCONCLUSIVE,
    NEGATIVE,
    POSITIVE,
    SPECTRAL_KEYS,
    EDGES_N1,
    EDGES_N2,
    EDGES_T,
    EDGES_N3,
    degree_condition,
    evaluate,
    spectral_thresholds,
    threshold_edges,
)
from leafcon.decider import is_k_leaf_connected
from leafcon.errors import ParameterError, PreconditionError
from leafcon.families import Family, build_family, family_id
from leafcon.graph import complete_bipartite, complete_graph, degree_profile, disjoint_union, path_graph


def test_threshold_examples():
    assert threshold_edges(EDGES_N3, 19, 2) == comb(16, 2) + 11 == 131
    assert threshold_edges(EDGES_N2, 9, 2) == 27 == build_family(family_id(Family.EXC_K4_K2_3K1, 9)).edge_count
    assert threshold_edges(EDGES_N1, 10, 3) == comb(9, 2) + 4 == 40
    assert threshold_edges(EDGES_T, 15, 2) == comb(13, 2) + 6


@pytest.mark.parametrize("which,n,p,hint", [
    (EDGES_N1, 5, 2, "2 <= k <= n-4"),
    (EDGES_N2, 10, 7, "2 <= k <= n-4"),
    (EDGES_N3, 18, 2, "n >= k+17"),
    (EDGES_T, 14, 2, "n >= 6t+3"),
])
def test_threshold_range_errors_name_the_hypothesis(which, n, p, hint):
    with pytest.raises(ParameterError, match=hint.replace("+", r"\+")):
        threshold_edges(which, n, p)


def test_threshold_ordering_over_scan_range():
    for k in range(2, 12):
        for n in range(k + 17, 120):
            assert threshold_edges(EDGES_N3, n, k) < threshold_edges(EDGES_N2, n, k) < threshold_edges(EDGES_N1, n, k)


def test_degree_condition_examples():
    assert degree_condition(degree_profile(complete_graph(5)), 2).holds
    g = build_family(family_id(Family.KK_JOIN, 8, k=2))
    r = degree_condition(degree_profile(g), 2)
    assert not r.holds and r.violating_i == 3
    assert degree_condition(degree_profile(complete_graph(6)), 2).holds
    with pytest.raises(ParameterError):
        degree_condition(degree_profile(complete_graph(5)), 3)


@pytest.mark.parametrize("n", [5, 6, 7])
def test_degree_condition_sound_on_atlas(n):
    held = 0
    for g in connected_atlas(n):
        profile = degree_profile(g)
        for k in range(2, n - 2):
            if degree_condition(profile, k).holds:
                held += 1
                assert is_k_leaf_connected(g, k).holds is True
    assert held > 0


def test_spectral_threshold_examples():
    th = spectral_thresholds(19, 2)
    assert th.rho_min == pytest.approx(1 + math.sqrt(209), abs=1e-12)
    assert th.rho_min == pytest.approx(15.45683, abs=1e-5)
    assert th.q_min == pytest.approx(30 + 28 / 18, abs=1e-12)
    assert th.rho_complement_max == pytest.approx(math.sqrt(17 * 40 / 19), abs=1e-12)
    # the quoted decimal 5.98245 is a rounding of 5.982430...
    assert th.rho_complement_max == pytest.approx(5.98245, abs=5e-5)
    with pytest.raises(ParameterError):
        spectral_thresholds(18, 2)


def test_evaluate_complete_graph():
    r = evaluate(complete_graph(5), 2)
    assert all(r.necessary.values())
    assert r.sufficient[DEGREE_SEQUENCE].holds
    c = r.sufficient[EDGES_N1]
    assert c.threshold == 9 and c.value == 10 and c.satisfied
    assert not c.applicable  # n = 5 is outside 2 <= k <= n-4
    assert r.conclusion == POSITIVE


def test_evaluate_k3_join_family():
    g = build_family(family_id(Family.K3_JOIN, 12))
    r = evaluate(g, 2)
    assert r.exception_match == family_id(Family.K3_JOIN, 12)
    assert r.sufficient[EDGES_N2].value == 51 and r.sufficient[EDGES_N2].threshold == 51
    assert r.edge_exception is not None
    assert r.conclusion == NEGATIVE


def test_evaluate_path():
    r = evaluate(path_graph(4), 2)
    assert not r.necessary["min_degree_ok"]
    assert not any(c.holds for c in r.sufficient.values())
    assert r.conclusion == NEGATIVE and r.basis == ["not (k+1)-connected"]


def test_evaluate_with_decider():
    r = evaluate(build_family(family_id(Family.KK1_JOIN, 12, k=3)), 3, decide=True)
    assert r.verdict_if_decided is not None and r.verdict_if_decided.value == "yes"
    assert r.conclusion == POSITIVE and r.basis == ["exact decider"]


def test_evaluate_is_inconclusive_without_evidence():
    # K_{3,3} meets both necessary conditions, but no sufficient one, and is not Hamilton-connected
    g = complete_bipartite(3, 3)
    r = evaluate(g, 2)
    assert all(r.necessary.values())
    assert r.conclusion == INCONCLUSIVE and r.basis == []
    assert is_k_leaf_connected(g, 2).holds is False


def test_evaluate_rejects_bad_input():
    with pytest.raises(PreconditionError):
        evaluate(disjoint_union(complete_graph(3), complete_graph(3)), 2)
    with pytest.raises(ParameterError):
        evaluate(complete_graph(3), 3)


def test_spectral_flags_on_large_graph():
    n, k = 19, 2
    r = evaluate(complete_graph(n), k)
    for name in SPECTRAL_KEYS:
        assert r.sufficient[name].applicable and r.sufficient[name].holds
    assert r.spectral.rho == pytest.approx(n - 1)


def test_report_serialises():
    d = evaluate(complete_graph(5), 2).to_dict()
    assert d["sufficient"][EDGES_N3]["holds"] is False
    assert d["conclusion"] == POSITIVE
