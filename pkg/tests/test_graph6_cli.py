from __future__ import annotations

import json

import networkx as nx
import pytest
from hypothesis import given

from conftest import from_nx, graphs, to_nx
from leafcon import graph6
from leafcon.cli import EXIT_INCONCLUSIVE, EXIT_OK, EXIT_REFUTED, EXIT_USAGE, main
from leafcon.errors import CapabilityError, Graph6ParseError
from leafcon.families import Family, build_family, family_id
from leafcon.graph import build, complete_graph, empty_graph


def test_known_vectors():
    assert graph6.decode("@") == complete_graph(1)
    assert graph6.decode("A_") == complete_graph(2)
    assert graph6.decode("D~{") == complete_graph(5)
    assert graph6.encode(complete_graph(5)) == "D~{"
    assert graph6.decode(">>graph6<<D~{\n") == complete_graph(5)
    assert graph6.encode(empty_graph(0)) == "?"


@given(graphs(min_n=0, max_n=30))
def test_matches_networkx_writer(g):
    ref = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert graph6.encode(g) == ref
    assert from_nx(nx.from_graph6_bytes(ref.encode())) == g if g.n else True


@given(graphs(min_n=1, max_n=30))
def test_round_trip(g):
    assert graph6.decode(graph6.encode(g)) == g


def test_long_order_form():
    g = build(70, [(0, 69), (3, 40)])
    text = graph6.encode(g)
    assert text[0] == "~" and graph6.decode(text) == g
    assert text == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()


@pytest.mark.parametrize("text,offset", [
    ("D~ {", 2),
    ("D~", 2),
    ("D~{{", 3),  # first surplus byte
    ("", 0),
    ("~?", 2),
    (">>graph6<<D!", 11),
])
def test_parse_errors_carry_offsets(text, offset):
    with pytest.raises(Graph6ParseError) as info:
        graph6.decode(text)
    assert info.value.offset == offset
    assert f"byte {offset}" in str(info.value)


def test_nonzero_padding_rejected():
    with pytest.raises(Graph6ParseError, match="padding"):
        graph6.decode("A`")


def test_order_cap():
    with pytest.raises(CapabilityError):
        graph6.decode(graph6.encode(build(70, [])), max_order=64)


def test_read_lines():
    assert list(graph6.read_lines(["@\n", "\n", "A_\n"])) == [complete_graph(1), complete_graph(2)]


# --------------------------------------------------------------------- CLI


def _run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_cli_decide_exit_codes(capsys):
    code, out, _ = _run(capsys, "decide", "--g6", "D~{", "--k", "2")
    assert code == EXIT_OK and json.loads(out)["decision"] == "yes"
    g6 = graph6.encode(build_family(family_id(Family.K4_JOIN, 12)))
    code, out, _ = _run(capsys, "decide", "--g6", g6, "--k", "2")
    assert code == EXIT_REFUTED and json.loads(out)["failing_set"] == [0, 1]
    code, out, _ = _run(capsys, "decide", "--g6", graph6.encode(complete_graph(9)), "--k", "2", "--budget", "1")
    assert code == EXIT_INCONCLUSIVE and json.loads(out)["decision"] == "budget-exhausted"
    code, out, _ = _run(capsys, "decide", "--g6", "D~{", "--k", "3", "--oracle")
    assert code == EXIT_OK and json.loads(out)["method"] == "oracle"


def test_cli_usage_and_input_errors(capsys):
    assert _run(capsys, "decide", "--g6", "D~{")[0] == EXIT_USAGE
    assert _run(capsys)[0] == EXIT_USAGE
    assert _run(capsys, "decide", "--g6", "D~{", "--k", "two")[0] == EXIT_USAGE
    code, _, err = _run(capsys, "decide", "--g6", "D~ {", "--k", "2")
    assert code == EXIT_USAGE and "byte 2" in err
    assert _run(capsys, "closure", "--g6", "D~{", "--l", "3", "--k", "2")[0] == EXIT_USAGE
    assert _run(capsys, "family", "--id", "nope", "--n", "9")[0] == EXIT_USAGE
    assert _run(capsys, "verify", "--suite", "nope")[0] == EXIT_USAGE


def test_cli_family_and_closure(capsys):
    code, out, _ = _run(capsys, "family", "--id", "KkJoin_Kn_k_2_plus_K2", "--n", "8", "--k", "2")
    assert code == EXIT_OK
    assert graph6.decode(out) == build_family(family_id(Family.KK_JOIN, 8, k=2))
    code, out, _ = _run(capsys, "closure", "--g6", graph6.encode(build(4, [(0, 1), (1, 2), (2, 3)])), "--l", "3")
    assert code == EXIT_OK and json.loads(out)["closure"] == graph6.encode(complete_graph(4))


def test_cli_conditions_and_spectrum(capsys):
    code, out, _ = _run(capsys, "conditions", "--g6", "D~{", "--k", "2")
    assert code == EXIT_OK and json.loads(out)["conclusion"] == "k-leaf-connected"
    code, out, _ = _run(capsys, "conditions", "--g6", "Ch", "--k", "2")  # P4
    assert code == EXIT_REFUTED
    code, out, _ = _run(capsys, "spectrum", "--g6", "D~{")
    assert code == EXIT_OK and abs(json.loads(out)["rho"] - 4) < 1e-9


def test_cli_scan_writes_json(tmp_path, capsys):
    path = tmp_path / "scan.json"
    code, out, _ = _run(capsys, "scan", "--n", "19", "--k", "2", "--count", "2", "--seed", "7", "--json", str(path))
    assert code == EXIT_OK
    report = json.loads(path.read_text())
    assert report["schema"] == "leafcon/1" and report["summary"] == json.loads(out)


def test_cli_verify(capsys):
    code, out, _ = _run(capsys, "verify", "--suite", "tightness")
    assert code == EXIT_OK and out.startswith("[PASS] tightness")
