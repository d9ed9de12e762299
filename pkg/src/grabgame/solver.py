"""Exact perfect-play engine for the grabbing game.

Players alternately remove a vertex whose removal leaves the remaining
vertices inducing a connected subgraph, and score the weights they removed.
The engine computes the difference value of a remaining set S:

    diff(empty) = 0
    diff(S)     = max over legal v of (weight(v) - diff(S minus v))

i.e. the mover's total minus the opponent's total under optimal play.  Both
players face the identical maximization, so the value depends on the
remaining set only and the memo table is keyed on the set bitmask alone.
Ties are broken toward the lowest vertex id, which makes best moves and
principal variations deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import WeightedGraph, bits, is_connected, non_cutvertices


class DisconnectedGraphError(ValueError):
    """The game is only defined while the remainder is connected."""


@dataclass(frozen=True)
class GameState:
    graph: WeightedGraph
    remaining: int

    def __post_init__(self):
        if self.remaining & ~self.graph.full_mask:
            raise ValueError("remaining set contains vertices outside the graph")
        if not is_connected(self.graph, self.remaining):
            raise DisconnectedGraphError("remaining vertices do not induce a connected subgraph")

    @classmethod
    def initial(cls, graph: WeightedGraph) -> "GameState":
        return cls(graph, graph.full_mask)


@dataclass(frozen=True)
class MoveEval:
    vertex: int
    value_after: int  # weight(vertex) - diff(S minus vertex)
    optimal: bool


@dataclass(frozen=True)
class SolveResult:
    diff_value: int
    best_move: int | None
    pv: tuple[int, ...]


@dataclass(frozen=True)
class AliceOutcome:
    alice_total: int
    bob_total: int
    alice_wins: bool  # ties count as Alice wins ("at least half")


class SolveContext:
    """Memoized solver over one immutable graph.

    A context is single-writer; run one per worker.  Memory is bounded by
    one memo entry per connected subset, at most 2^n.
    """

    def __init__(self, graph: WeightedGraph):
        self.graph = graph
        self._diff: dict[int, int] = {}
        self._moves: dict[int, int] = {}

    def legal_moves(self, remaining: int) -> int:
        """Bitmask of legal grabs: the non-cutvertices of the remainder."""
        cached = self._moves.get(remaining)
        if cached is None:
            cached = non_cutvertices(self.graph, remaining)
            self._moves[remaining] = cached
        return cached

    def diff(self, remaining: int) -> int:
        memo = self._diff
        val = memo.get(remaining)
        if val is not None:
            return val
        if remaining == 0:
            memo[0] = 0
            return 0
        w = self.graph.weights
        best = None
        for v in bits(self.legal_moves(remaining)):
            val = w[v] - self.diff(remaining & ~(1 << v))
            if best is None or val > best:
                best = val
        memo[remaining] = best
        return best

    def evaluate(self, remaining: int) -> list[MoveEval]:
        """One MoveEval per legal move, ascending vertex id."""
        if remaining == 0:
            raise ValueError("no moves in an empty position")
        target = self.diff(remaining)
        w = self.graph.weights
        out = []
        for v in bits(self.legal_moves(remaining)):
            val = w[v] - self.diff(remaining & ~(1 << v))
            out.append(MoveEval(v, val, val == target))
        return out

    def best_move(self, remaining: int) -> int | None:
        if remaining == 0:
            return None
        target = self.diff(remaining)
        w = self.graph.weights
        for v in bits(self.legal_moves(remaining)):
            if w[v] - self.diff(remaining & ~(1 << v)) == target:
                return v
        raise AssertionError("no optimal move found")  # pragma: no cover

    def principal_variation(self, remaining: int) -> tuple[int, ...]:
        pv = []
        s = remaining
        while s:
            v = self.best_move(s)
            pv.append(v)
            s &= ~(1 << v)
        return tuple(pv)

    def solve(self, remaining: int) -> SolveResult:
        pv = self.principal_variation(remaining)
        return SolveResult(self.diff(remaining), pv[0] if pv else None, pv)


# ---------------------------------------------------------------------------
# module-level conveniences


def legal_moves(state: GameState) -> int:
    return SolveContext(state.graph).legal_moves(state.remaining) if state.remaining else 0


def solve_diff(state: GameState) -> int:
    """Exact difference value of the state (mover minus opponent)."""
    return SolveContext(state.graph).diff(state.remaining)


def evaluate_moves(state: GameState) -> list[MoveEval]:
    return SolveContext(state.graph).evaluate(state.remaining)


def principal_variation(g: WeightedGraph) -> tuple[int, ...]:
    """A full optimal playout from the start, lowest-id tie-breaking."""
    if not is_connected(g):
        raise DisconnectedGraphError("graph is disconnected")
    return SolveContext(g).principal_variation(g.full_mask)


def alice_outcome(g: WeightedGraph, ctx: SolveContext | None = None) -> AliceOutcome:
    """Totals under optimal play; Alice wins iff she gets at least half.

    Computed without division: with W the total weight and D the difference
    value of the full game, 2 * alice_total = W + D and Alice wins iff D >= 0.
    """
    if not is_connected(g):
        raise DisconnectedGraphError("graph is disconnected")
    if ctx is None:
        ctx = SolveContext(g)
    d = ctx.diff(g.full_mask)
    w = g.total_weight
    assert (w + d) % 2 == 0, "difference value and total weight must share parity"
    alice = (w + d) // 2
    return AliceOutcome(alice, w - alice, d >= 0)


def replay_value(g: WeightedGraph, playout) -> int:
    """Difference value of a concrete playout (mover-alternating attribution).

    Validates legality: each prefix must leave a connected remainder.
    """
    s = g.full_mask
    totals = [0, 0]
    for i, v in enumerate(playout):
        if not s >> v & 1:
            raise ValueError(f"vertex {v} not in the remaining set")
        if not non_cutvertices(g, s) >> v & 1:
            raise ValueError(f"vertex {v} is not a legal grab")
        totals[i % 2] += g.weights[v]
        s &= ~(1 << v)
    if s:
        raise ValueError("playout does not remove every vertex")
    return totals[0] - totals[1]
