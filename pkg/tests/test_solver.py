"""Perfect-play engine: values, moves, principal variations, invariants."""

import random

import numpy as np
import pytest

from grabgame.batch import GraphTable
from grabgame.enumeration import connected_graphs, trees
from grabgame.graphs import (
    WeightedGraph,
    complete_graph,
    cycle_graph,
    mask_of,
    path_graph,
)
from grabgame.solver import (
    DisconnectedGraphError,
    GameState,
    SolveContext,
    alice_outcome,
    evaluate_moves,
    legal_moves,
    principal_variation,
    replay_value,
    solve_diff,
)

from oracles import all_playouts, brute_diff

K2 = WeightedGraph.from_edges(2, [(0, 1)], (3, 1))


def weighted(g, weights):
    return g.with_weights(tuple(weights))


def test_legal_moves_examples():
    p4 = path_graph(4, (0, 0, 0, 0))
    assert legal_moves(GameState.initial(p4)) == mask_of([0, 3])
    tri = cycle_graph(3, (0, 0, 0))
    assert legal_moves(GameState.initial(tri)) == mask_of([0, 1, 2])
    assert legal_moves(GameState(p4, mask_of([2]))) == mask_of([2])


def test_state_requires_connected_remainder():
    p4 = path_graph(4)
    with pytest.raises(DisconnectedGraphError):
        GameState(p4, mask_of([0, 2]))
    with pytest.raises(ValueError):
        GameState(p4, 1 << 5)


def test_solve_diff_examples():
    assert solve_diff(GameState.initial(K2)) == 2
    tri = cycle_graph(3, (1, 1, 1))
    assert solve_diff(GameState.initial(tri)) == 1  # frozen from brute_diff
    assert brute_diff(tri) == 1
    p4 = path_graph(4, (0, 1, 1, 0))
    assert solve_diff(GameState.initial(p4)) == 0  # frozen from brute_diff
    assert brute_diff(p4) == 0


def test_alice_outcome_examples():
    out = alice_outcome(K2)
    assert (out.alice_total, out.bob_total, out.alice_wins) == (3, 1, True)
    p4 = path_graph(4, (0, 1, 1, 0))
    out = alice_outcome(p4)
    assert (out.alice_total, out.bob_total, out.alice_wins) == (1, 1, True)
    with pytest.raises(DisconnectedGraphError):
        alice_outcome(WeightedGraph.from_edges(2, [], (1, 1)))


def test_evaluate_moves_examples():
    evs = evaluate_moves(GameState.initial(K2))
    assert [(e.vertex, e.value_after, e.optimal) for e in evs] == [(0, 2, True), (1, -2, False)]
    one = WeightedGraph(1, (0,), (7,))
    evs = evaluate_moves(GameState.initial(one))
    assert [(e.vertex, e.value_after, e.optimal) for e in evs] == [(0, 7, True)]
    p4 = path_graph(4, (0, 1, 1, 0))
    evs = evaluate_moves(GameState.initial(p4))
    assert [(e.vertex, e.value_after, e.optimal) for e in evs] == [(0, 0, True), (3, 0, True)]


def test_evaluate_moves_max_matches_diff():
    rng = random.Random(4)
    for g in connected_graphs(6):
        gw = weighted(g, [rng.randrange(6) for _ in range(6)])
        st = GameState.initial(gw)
        evs = evaluate_moves(st)
        assert max(e.value_after for e in evs) == solve_diff(st)
        assert any(e.optimal for e in evs)
        assert [e.vertex for e in evs] == sorted(e.vertex for e in evs)


def test_principal_variation_examples():
    assert principal_variation(K2) == (0, 1)
    assert principal_variation(WeightedGraph(1, (0,), (5,))) == (0,)
    assert principal_variation(cycle_graph(3, (1, 1, 1))) == (0, 1, 2)


def test_principal_variation_replays_to_diff():
    rng = random.Random(11)
    for n in (2, 5, 7):
        for _ in range(25):
            g = rng.choice(connected_graphs(n))
            gw = weighted(g, [rng.randrange(9) for _ in range(n)])
            pv = principal_variation(gw)
            assert len(pv) == n
            assert replay_value(gw, pv) == solve_diff(GameState.initial(gw))
            out = alice_outcome(gw)
            assert out.alice_total + out.bob_total == gw.total_weight


def test_oracle_equivalence_small():
    """Memoized solver == memoization-free enumeration (n <= 5 here;
    the full n <= 6 x 50 run lives in the acceptance suite)."""
    rng = random.Random(21)
    for n in range(1, 6):
        for g in connected_graphs(n):
            for _ in range(8):
                gw = weighted(g, [rng.randrange(7) for _ in range(n)])
                assert solve_diff(GameState.initial(gw)) == brute_diff(gw)


def test_diff_is_max_over_playouts():
    # difference form: optimal first-mover advantage over *all* legal playouts
    rng = random.Random(31)
    for g in connected_graphs(4):
        gw = weighted(g, [rng.randrange(5) for _ in range(4)])
        plays = list(all_playouts(gw))
        # optimal play: D >= value of every Alice strategy vs optimal Bob,
        # and D equals the PV replay; cheap sanity: D within playout range
        values = [replay_value(gw, p) for p in plays]
        d = solve_diff(GameState.initial(gw))
        assert min(values) <= d <= max(values)


def test_scaling_invariance():
    rng = random.Random(41)
    for _ in range(40):
        g = rng.choice(connected_graphs(6))
        w = [rng.randrange(5) for _ in range(6)]
        gw = weighted(g, w)
        for c in (2, 3, 7):
            gc = weighted(g, [c * x for x in w])
            assert solve_diff(GameState.initial(gc)) == c * solve_diff(GameState.initial(gw))
            opt = {e.vertex for e in evaluate_moves(GameState.initial(gw)) if e.optimal}
            optc = {e.vertex for e in evaluate_moves(GameState.initial(gc)) if e.optimal}
            assert opt == optc


def test_even_order_shift_invariance():
    rng = random.Random(51)
    for n in (4, 6):
        for _ in range(20):
            g = rng.choice(connected_graphs(n))
            w = [rng.randrange(5) for _ in range(n)]
            base = solve_diff(GameState.initial(weighted(g, w)))
            for k in (1, 3):
                shifted = solve_diff(GameState.initial(weighted(g, [x + k for x in w])))
                assert shifted == base
    for n in (3, 5):
        for _ in range(20):
            g = rng.choice(connected_graphs(n))
            w = [rng.randrange(5) for _ in range(n)]
            base = solve_diff(GameState.initial(weighted(g, w)))
            for k in (1, 2):
                shifted = solve_diff(GameState.initial(weighted(g, [x + k for x in w])))
                assert shifted == base + k


def test_memo_is_bounded_by_subsets():
    g = cycle_graph(6, (1, 2, 3, 4, 5, 6))
    ctx = SolveContext(g)
    ctx.diff(g.full_mask)
    assert len(ctx._diff) <= 1 << 6
    assert all(mask & ~g.full_mask == 0 for mask in ctx._diff)
    # memo keys are remaining sets: every non-root entry misses >= 1 vertex
    assert g.full_mask in ctx._diff


def test_batch_table_matches_reference():
    rng = random.Random(61)
    for n in range(2, 7):
        for g in rng.sample(list(connected_graphs(n)), min(12, len(connected_graphs(n)))):
            W = np.array([[rng.randrange(7) for _ in range(n)] for _ in range(16)])
            table = GraphTable(g)
            vals = table.diff_values(W)
            for k in range(16):
                gw = weighted(g, [int(x) for x in W[k]])
                assert vals[k] == solve_diff(GameState.initial(gw))


def test_batch_table_rows_are_subgame_values():
    rng = random.Random(71)
    g = connected_graphs(6)[50]
    W = np.array([[rng.randrange(4) for _ in range(6)] for _ in range(8)])
    table = GraphTable(g)
    full = table.diff_table(W)
    for mask in range(1, 1 << 6):
        if not table.connected[mask]:
            continue
        for k in (0, 3, 7):
            gw = weighted(g, [int(x) for x in W[k]])
            assert full[mask, k] == SolveContext(gw).diff(mask)
