import json

import pytest

from murlab.cli import EXIT_OK, EXIT_USAGE, EXIT_VERIFY, main
from murlab.engine import Budget, compute_mur, mur_spread
from murlab.graphs import Graph, cycle, disjoint_union, encode_graph6, path, complete
from murlab.report import (
    FORMAT,
    ReportError,
    build_report,
    parse_report,
    replay_report,
    report_to_json,
)

FAST = Budget(grid_den=2, grid_num=2, random_points=20, algebraic=False)


def make_report(g, spread_vertex=None):
    res = compute_mur(g, FAST)
    spread = mur_spread(g, spread_vertex, FAST) if spread_vertex is not None else None
    return build_report(g, res, FAST, 0.1, spread)


def test_report_roundtrip():
    doc = make_report(cycle(6))
    parsed = parse_report(report_to_json(doc))
    assert parsed == json.loads(json.dumps(doc))
    assert parsed["format"] == FORMAT
    assert parsed["result"]["value"] == 3


def test_parse_rejects_other_documents():
    with pytest.raises(ReportError):
        parse_report("{}")
    with pytest.raises(ValueError):
        parse_report("not json")


def test_replay_passes_on_fresh_reports():
    for g in (path(6), cycle(7), disjoint_union([complete(3), complete(4)])):
        checks = replay_report(make_report(g))
        assert all(c.ok for c in checks), [(c.name, c.message) for c in checks]


def test_replay_with_spread():
    checks = replay_report(make_report(path(5), spread_vertex=0))
    assert any(c.name == "spread arithmetic" for c in checks)
    assert all(c.ok for c in checks), [(c.name, c.message) for c in checks]


def test_replay_catches_tampering():
    doc = make_report(path(6))
    doc["result"]["lower"] = doc["result"]["upper"] = 1
    doc["result"]["value"] = 1
    checks = replay_report(doc)
    assert any(not c.ok for c in checks)

    doc = make_report(cycle(6))
    doc["upper_certificate"]["data"]["value"] = 2
    checks = replay_report(doc)
    assert any(not c.ok for c in checks)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_cli_mur_graph6(capsys):
    code, out, _ = run_cli(capsys, "mur", encode_graph6(path(6)), "--no-algebraic")
    assert code == EXIT_OK
    assert "mur = 4 (exact)" in out


def test_cli_mur_complement(capsys):
    code, out, _ = run_cli(
        capsys, "mur", encode_graph6(complete(5)), "--complement", "--no-algebraic"
    )
    assert code == EXIT_OK
    assert "mur = 0 (exact)" in out


def test_cli_mur_edge_list_file(tmp_path, capsys):
    f = tmp_path / "g.txt"
    f.write_text("0 1\n1 2\n2 3\n")
    code, out, _ = run_cli(capsys, "mur", str(f), "--no-algebraic")
    assert code == EXIT_OK
    assert "mur = 2 (exact)" in out


def test_cli_mur_json_and_spread(capsys):
    code, out, _ = run_cli(
        capsys, "mur", encode_graph6(path(5)), "--json", "--spread", "0",
        "--no-algebraic",
    )
    assert code == EXIT_OK
    doc = parse_report(out)
    assert doc["result"]["value"] == 3
    assert doc["spread"]["vertex"] == 0 and doc["spread"]["lower"] == 1
    assert all(c.ok for c in replay_report(doc))


def test_cli_mur_bad_input(capsys):
    code, _, err = run_cli(capsys, "mur", "B\x07")
    assert code == EXIT_USAGE and "error" in err


def test_cli_batch(tmp_path, capsys):
    import networkx as nx

    graphs = [g for g in nx.graph_atlas_g() if g.number_of_nodes() == 4]
    assert len(graphs) == 11
    tokens = [
        encode_graph6(Graph.from_edges(4, list(g.edges()))) for g in graphs
    ]
    f = tmp_path / "batch.g6"
    f.write_text("\n".join(tokens) + "\n")
    code, out, err = run_cli(capsys, "batch", str(f), "--no-algebraic")
    assert code == EXIT_OK
    assert out.count("(exact)") == 11
    assert "11 graphs, 11 exact, 0 interval, 0 errors" in err


def test_cli_batch_bad_line_continues(tmp_path, capsys):
    f = tmp_path / "batch.g6"
    f.write_text("A_\n!!bad!!\nBw\n")
    code, out, err = run_cli(capsys, "batch", str(f), "--no-algebraic")
    assert code == EXIT_USAGE
    assert out.count("(exact)") == 2
    assert "line 2: error" in err
    assert "1 errors" in err


def test_cli_verify(capsys):
    code, out, _ = run_cli(capsys, "verify", "complements")
    assert code == EXIT_OK
    assert "checks passed" in out
    code, _, err = run_cli(capsys, "verify", "no-such-suite")
    assert code == EXIT_USAGE and "error" in err


def test_cli_replay(tmp_path, capsys):
    doc = make_report(cycle(5))
    f = tmp_path / "report.json"
    f.write_text(report_to_json(doc))
    code, out, _ = run_cli(capsys, "replay", str(f))
    assert code == EXIT_OK and "replay: ok" in out

    doc["result"]["upper"] = 0
    doc["result"]["exact"] = False
    f.write_text(report_to_json(doc))
    code, out, _ = run_cli(capsys, "replay", str(f))
    assert code == EXIT_VERIFY

    f.write_text("{}")
    code, _, err = run_cli(capsys, "replay", str(f))
    assert code == EXIT_USAGE
