from __future__ import annotations

from math import comb

import pytest

from leafcon.errors import ParameterError
from leafcon.families import (
    EDGE_EXCEPTIONS,
    Family,
    FamilyId,
    build_family,
    closed_form_edge_count,
    family_id,
    fixed_order,
    recognize_exception,
    recognize_edge_exception,
)
from leafcon.graph import complement, complete_graph, is_connected


def _relabel(g, perm):
    from leafcon.graph import build
    return build(g.n, ((perm[u], perm[v]) for u, v in g.edges()))


def test_edge_count_examples():
    assert build_family(family_id(Family.KK_JOIN, 8, k=2)).edge_count == 20 == comb(6, 2) + 5
    assert build_family(family_id(Family.TIGHTNESS, 9)).edge_count == 25 == comb(6, 2) + 10
    assert build_family(family_id(Family.K3_JOIN, 9)).edge_count == 27 == comb(7, 2) + 6
    g = build_family(family_id(Family.N, 10, t=2))
    assert g.n == 10 and g.edge_count == 1 + 21 + 2 * 8


@pytest.mark.parametrize("n", range(8, 20))
def test_closed_form_edge_counts(n):
    for fid in (family_id(Family.KK_JOIN, n, k=2), family_id(Family.KK_JOIN, n, k=3),
                family_id(Family.K3_JOIN, n), family_id(Family.TIGHTNESS, n)):
        assert build_family(fid).edge_count == closed_form_edge_count(fid)


def test_parameter_validation():
    with pytest.raises(ParameterError):
        family_id("not-a-family", 10)
    with pytest.raises(ParameterError):
        family_id(Family.KK_JOIN, 10)
    with pytest.raises(ParameterError):
        family_id(Family.KK_JOIN, 5, k=3)
    with pytest.raises(ParameterError):
        family_id(Family.L, 10, t=6)
    with pytest.raises(ParameterError):
        family_id(Family.EXC_K6_6K1, 11)


def test_fixed_order_exceptions_build():
    for f in EDGE_EXCEPTIONS[1:]:
        g = build_family(family_id(f, fixed_order(f)))
        assert is_connected(g) and min(g.degrees()) >= 3
        assert recognize_edge_exception(g) == FamilyId(f, g.n)


@pytest.mark.parametrize("n", range(9, 26))
def test_recognition_round_trip(n):
    for k in range(2, n - 2):
        fid = family_id(Family.KK_JOIN, n, k=k)
        assert recognize_exception(build_family(fid), k) == fid
    for k in (2, 3):
        for fam in (Family.K3_JOIN, Family.K4_JOIN):
            fid = family_id(fam, n)
            assert recognize_exception(build_family(fid), k) == fid


def test_recognition_is_label_invariant():
    fid = family_id(Family.K4_JOIN, 12)
    g = build_family(fid)
    perm = [5, 11, 0, 3, 9, 1, 7, 2, 10, 4, 8, 6]
    assert recognize_exception(_relabel(g, perm), 2) == fid


def test_recognition_rejects_perturbed_graph():
    g = build_family(family_id(Family.KK_JOIN, 12, k=2))
    assert recognize_exception(g, 2) is not None
    # vertices 2..9 form K8, 10..11 the K2 block
    assert recognize_exception(g.with_edges([(2, 10)]), 2) is None
    assert recognize_exception(complete_graph(12), 2) is None
    assert recognize_exception(complement(g), 2) is None


def test_family_id_serialises():
    fid = family_id(Family.M, 11, t=3)
    assert str(fid) == "M_t_n(n=11, t=3)"
    assert fid.to_dict() == {"tag": "M_t_n", "n": 11, "k": None, "t": 3}
