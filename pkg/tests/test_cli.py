"""Command-line interface: subcommands, exit codes, determinism."""

import json

import pytest

from grabgame.cli import main
from grabgame.graphs import instance_document, parse_instance
from grabgame.harness import bundled_instance, load_report
from grabgame.patterns import build_corona


@pytest.fixture()
def k2_file(tmp_path):
    path = tmp_path / "k2.json"
    path.write_text(json.dumps({"n": 2, "edges": [[0, 1]], "weights": ["3", "1"]}))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_solve_k2(capsys, k2_file):
    code, out, _ = run(capsys, "solve", k2_file)
    assert code == 0
    assert "Alice total: 3" in out
    assert "Bob total:   1" in out
    assert "Alice wins" in out
    assert "principal variation: 0 1" in out
    assert "grab 0: 2 *" in out


def test_solve_missing_file_is_usage_error(capsys):
    code, _, err = run(capsys, "solve", "/nonexistent.json")
    assert code == 2 and "error" in err


def test_detect_flagship(capsys, tmp_path):
    path = tmp_path / "flagship.json"
    path.write_text(json.dumps(instance_document(bundled_instance())))
    code, out, _ = run(capsys, "detect", str(path))
    assert code == 0
    assert "bipartite: False" in out
    assert "corona-free: True" in out
    assert "hub-free: False" in out
    assert "r=3" in out


def test_gen_corona_and_hub_roundtrip(capsys):
    code, out, _ = run(capsys, "gen", "corona", "5")
    assert code == 0
    g = parse_instance(out)
    assert g.n == 10 and sorted(g.edges()) == sorted(build_corona(5).edges())

    code, out, _ = run(capsys, "gen", "hub-member", "3", "3")
    assert code == 0
    g = parse_instance(out)
    assert g.n == 8 and g.name == "hub/r=3/edges=3"
    assert sum(1 for w in g.weights if w) == 4

    code, _, err = run(capsys, "gen", "hub-member", "3", "9")
    assert code == 2

    code, _, err = run(capsys, "gen", "corona", "4")
    assert code == 2


def test_search_campaign_and_report(capsys, tmp_path):
    out_path = tmp_path / "report.jsonl"
    code, out, _ = run(capsys, "search", "--n", "5", "--weights", "0,1",
                       "--out", str(out_path))
    assert code == 0
    assert "Bob wins: 81" in out
    report = load_report(out_path)
    assert report.counts["bobWins"] == 81

    # identical argv -> byte-identical report files
    out2 = tmp_path / "report2.jsonl"
    run(capsys, "search", "--n", "5", "--weights", "0,1", "--out", str(out2))
    assert out_path.read_bytes() == out2.read_bytes()


def test_search_even_bipartite_filter(capsys):
    code, out, _ = run(capsys, "search", "--n", "6", "--weights", "0,1",
                       "--filter", "even,bipartite")
    assert code == 0
    assert "Bob wins: 0" in out


def test_search_stream_file_with_bad_lines(capsys, tmp_path):
    stream = tmp_path / "graphs.g6"
    stream.write_text("C~\nnot-a-graph\nBw\n")
    code, out, _ = run(capsys, "search", "--graphs", str(stream), "--weights", "0,1")
    assert code == 0
    assert "bad lines: 1" in out


def test_search_rejects_unknown_filter(capsys):
    code, _, err = run(capsys, "search", "--filter", "sparkly")
    assert code == 2 and "unknown filters" in err


def test_verify_bobwin8_quick(capsys):
    code, out, _ = run(capsys, "verify", "bobwin8", "--sweep-max", "5")
    assert code == 0
    assert "[PASS] bobWin" in out
    assert "[PASS] noSmallerEvenBobWin" in out
    assert "sweep hits: 0" in out


def test_verify_bobwin8_tampered_fails(capsys, tmp_path):
    g = bundled_instance()
    doc = instance_document(g)
    doc["edges"] = [e for e in doc["edges"] if e != [1, 2]]
    path = tmp_path / "tampered.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "verify", "bobwin8", "--sweep-max", "3",
                       "--instance", str(path))
    assert code == 1
    assert "[FAIL] bobWin" in out


def test_verify_hub_family(capsys):
    code, out, _ = run(capsys, "verify", "hub-family", "--r-max", "3")
    assert code == 0
    assert out.count("[PASS]") == 4

    code, _, err = run(capsys, "verify", "hub-family", "--r-max", "4")
    assert code == 2


def test_verify_theorem_chain_small(capsys):
    code, out, _ = run(capsys, "verify", "theorem-chain", "--n", "6")
    assert code == 0
    assert "binary Bob wins at n<=6: 82" in out
    assert "falsified on 0" in out
    assert "chains verified: 1/1" in out
    assert "FALSIFICATION" not in out


def test_usage_errors(capsys):
    assert run(capsys, "bogus-command")[0] == 2
    assert run(capsys, "verify", "everything")[0] == 2
