"""Campaigns, shrinking, lemma/chain verification, certifications, reports."""

import json

import pytest

from grabgame.enumeration import are_isomorphic
from grabgame.graphs import WeightedGraph, parse_graph6, path_graph
from grabgame.harness import (
    Filters,
    Instance,
    WeightingBudgetExceeded,
    bundled_instance,
    certify_counterexample,
    certify_hub_family,
    count_weightings,
    enumerate_weightings,
    find_bob_wins,
    generated_supply,
    load_report,
    reduction_lemma_campaign,
    shrink_instance,
    stream_from_lines,
    theorem_chain_campaign,
    verify_reduction_lemma,
    verify_theorem_chain,
)
from grabgame.patterns import build_corona, build_hub_member
from grabgame.solver import GameState, solve_diff


NET111 = build_corona(3).with_weights((1, 1, 1, 0, 0, 0))


# ---------------------------------------------------------------------------
# weighting enumeration


def test_enumerate_weightings_examples():
    k2 = WeightedGraph.from_edges(2, [(0, 1)])
    ws = list(enumerate_weightings(k2, (0, 1)))
    assert ws == [(0, 0), (0, 1), (1, 0), (1, 1)]
    p3 = path_graph(3)
    assert len(list(enumerate_weightings(p3, (0, 1)))) == 8
    n10 = path_graph(10)
    with pytest.raises(WeightingBudgetExceeded):
        list(enumerate_weightings(n10, (0, 1, 2), budget=10_000))


def test_enumerate_weightings_support_cap():
    g = path_graph(8)
    assert count_weightings(8, range(5), max_nonzero=4) == 21985
    ws = list(enumerate_weightings(g, range(5), budget=None, max_nonzero=4))
    assert len(ws) == 21985
    assert all(sum(1 for x in w if x) <= 4 for w in ws)
    assert count_weightings(3, (1, 2), max_nonzero=2) == 0  # no zero available


# ---------------------------------------------------------------------------
# campaigns


def test_find_bob_wins_skips_bad_lines():
    lines = ["C~", "this is not graph6", "Bw", "", "A?", "Ch"]
    report = find_bob_wins(stream_from_lines(lines), (0, 1))
    assert report.counts["badLines"] == 1
    assert report.counts["skippedDisconnected"] == 1  # A? is the empty 2-graph
    assert report.counts["graphs"] == 4
    assert report.counts["admitted"] == 3
    assert len(report.errors) == 2
    assert report.errors[0]["line"] == 2


def test_find_bob_wins_finds_bundled_counterexample():
    g = bundled_instance()
    from grabgame.graphs import encode_graph6

    report = find_bob_wins([(1, parse_graph6(encode_graph6(g)))], (0, 1, 2),
                           campaign="bundled")
    assert report.counts["bobWins"] >= 1
    weightings = {tuple(r["weights"]) for r in report.rows}
    assert tuple(g.weights) in weightings
    row = next(r for r in report.rows if tuple(r["weights"]) == tuple(g.weights))
    assert row["diffValue"] == -1
    assert row["verdicts"]["coronaFree"] is True
    assert row["verdicts"]["hubFree"] is False
    assert row["witnesses"]["hubMember"]["r"] == 3


def test_find_bob_wins_corona_free_hits_are_odd_order_only():
    # even-order corona-free graphs admit no binary Bob win below order 8;
    # odd orders do (a path weighted 0,1,0 already loses for the mover)
    report = find_bob_wins(generated_supply(2, 6), (0, 1),
                           Filters(corona_free_only=True), collect_witnesses=False)
    assert report.counts["bobWins"] == 81
    assert all(row["n"] % 2 == 1 for row in report.rows)
    even = find_bob_wins(generated_supply(2, 6), (0, 1),
                         Filters(even_only=True, corona_free_only=True),
                         collect_witnesses=False)
    assert even.counts["bobWins"] == 0


def test_conjecture1_campaign_bipartite_even_n6():
    report = find_bob_wins(generated_supply(2, 6), (0, 1),
                           Filters(even_only=True, bipartite_only=True),
                           collect_witnesses=False)
    assert report.counts["bobWins"] == 0


def test_reports_are_deterministic_and_reverify(tmp_path):
    def run():
        return find_bob_wins(generated_supply(2, 5), (0, 1), campaign="det",
                             collect_witnesses=True)

    a, b = run(), run()
    a.wall_clock = b.wall_clock = 0.0
    assert a.to_jsonl() == b.to_jsonl()
    path = tmp_path / "report.jsonl"
    a.save(path)
    loaded = load_report(path)
    assert loaded.counts == a.counts
    assert len(loaded.rows) == len(a.rows)

    # corrupt one row: re-verification must fail on load
    lines = path.read_text().splitlines()
    row = json.loads(lines[1])
    row["weights"] = [1 - w for w in row["weights"]]
    lines[1] = json.dumps(row, sort_keys=True)
    path.write_text("\n".join(lines) + "\n")
    with pytest.raises(ValueError, match="re-verification"):
        load_report(path)


def test_instance_verdicts_match_recomputation():
    inst = Instance(bundled_instance(), provenance="bundled")
    v = inst.computed_verdicts()
    assert v == {"aliceWins": False, "diffValue": -1, "bipartite": False,
                 "coronaFree": True, "hubFree": False}


# ---------------------------------------------------------------------------
# shrinking


def test_shrink_padded_instance():
    # net plus two weight-0 pendant leaves: constructed to shrink
    padded = WeightedGraph.from_edges(
        8, list(NET111.edges()) + [(6, 0), (7, 0)], NET111.weights + (0, 0))
    assert solve_diff(GameState.initial(padded)) < 0
    res = shrink_instance(padded)
    assert res.steps  # at least one reduction applied
    assert res.minimal.n < padded.n
    assert are_isomorphic(res.minimal, build_corona(3))
    assert sorted(res.minimal.weights) == [0, 0, 0, 1, 1, 1]
    assert shrink_instance(res.minimal).steps == ()


def test_shrink_fixpoint_on_minimal_instances():
    assert shrink_instance(NET111).steps == ()
    g = bundled_instance()
    res = shrink_instance(g)
    assert res.steps == () and res.minimal.n == 8


def test_shrink_rejects_alice_wins():
    with pytest.raises(ValueError):
        shrink_instance(path_graph(2, (1, 1)))


# ---------------------------------------------------------------------------
# reduction lemma


def test_reduction_lemma_outcomes():
    # both flagship instances have strictly heavier optimal replies, so the
    # pair condition w(u) >= w(v) never fires: the distinct inapplicable case
    assert verify_reduction_lemma(bundled_instance()).status == "inapplicable"
    assert verify_reduction_lemma(NET111).status == "inapplicable"
    with pytest.raises(ValueError):
        verify_reduction_lemma(path_graph(2, (1, 1)))


def test_reduction_lemma_holds_at_small_orders():
    out = reduction_lemma_campaign(5)
    assert out["instances"] == 81
    assert out["falsified"] == 0
    assert out["holds"] > 0
    assert out["events"] == []


# ---------------------------------------------------------------------------
# theorem chain


def test_theorem_chain_campaign_n6():
    out = theorem_chain_campaign(6)
    assert out["instances"] == 82
    assert out["evenInstances"] == 1
    assert out["minimalEven"] == 1 and out["minimalOdd"] == 0
    assert out["chainsVerified"] == 1
    assert out["events"] == []
    mi = out["minimalInstances"][0]
    assert are_isomorphic(parse_graph6(mi["graph6"]), build_corona(3))
    assert all(mi["links"].values())


def test_theorem_chain_preconditions():
    with pytest.raises(ValueError, match="weights"):
        verify_theorem_chain(NET111.with_weights((2, 1, 1, 0, 0, 0)))
    with pytest.raises(ValueError, match="even"):
        verify_theorem_chain(path_graph(3, (0, 1, 0)))
    with pytest.raises(ValueError, match="Bob win"):
        verify_theorem_chain(path_graph(4, (1, 1, 1, 1)))
    padded = WeightedGraph.from_edges(
        8, list(NET111.edges()) + [(6, 0), (7, 0)], NET111.weights + (0, 0))
    with pytest.raises(ValueError, match="minimal"):
        verify_theorem_chain(padded)


def test_theorem_chain_on_net():
    verdict = verify_theorem_chain(NET111)
    assert verdict.all_hold
    assert verdict.corona is not None and verdict.corona.r == 3
    assert verdict.links == {
        "nonCutverticesAreZeroLeaves": True,
        "nonBipartite": True,
        "cycleVerticesAreCutvertices": True,
        "inducedCoronaConstructed": True,
    }


# ---------------------------------------------------------------------------
# certifications


def test_certify_counterexample_quick():
    cert = certify_counterexample(sweep_max_order=5)
    assert cert.passed
    assert cert.clauses == {"bobWin": True, "coronaFree": True,
                            "connectedOrder8": True, "noSmallerEvenBobWin": True}
    assert cert.details["diffValue"] == -1
    assert "incomplete" in cert.note or "bounded" in cert.note


def test_certify_counterexample_negative_controls():
    g = bundled_instance()
    # tampering: drop one edge of the bridge cycle
    edges = [e for e in g.edges() if e != (1, 2)]
    tampered = WeightedGraph.from_edges(8, edges, g.weights)
    cert = certify_counterexample(instance=tampered, sweep_max_order=3)
    assert not cert.passed and not cert.clauses["bobWin"]

    # degenerate configuration: weight bound 0 excludes the instance weighting
    cert0 = certify_counterexample(weight_bound=0, sweep_max_order=3)
    assert not cert0.passed
    assert not cert0.clauses["bobWin"]
    assert cert0.clauses["noSmallerEvenBobWin"]  # all-zero weightings trivially pass


def test_certify_hub_family():
    cert = certify_hub_family(5)
    assert cert.passed
    assert len(cert.details["diffValues"]) == 8
    assert set(cert.details["diffValues"].values()) == {-1}
    with pytest.raises(ValueError):
        certify_hub_family(2)


def test_bundled_instance_matches_constructor():
    g = bundled_instance()
    built = build_hub_member(3)
    assert g.n == built.n
    assert sorted(g.edges()) == sorted(built.edges())
    assert g.weights == built.weights
