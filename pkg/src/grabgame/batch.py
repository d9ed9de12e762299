"""Vectorized many-weighting solver.

Campaigns solve one graph under thousands of weightings.  The game tree
structure (which subsets are connected, which grabs are legal) depends on
the graph alone, so it is precomputed once and the difference-value
recursion is then evaluated for all weightings at once with numpy integer
arithmetic.  This is a performance path only: tests pin it against the
reference solver, which stays the single source of truth.

A useful identity exploited throughout the harness: the value table rows
are games in their own right.  diff_table[S] is the difference value of the
grabbing game played on the subgraph induced by S, because the connectivity
rule only ever looks at remaining vertices.
"""

from __future__ import annotations

import numpy as np

from .graphs import WeightedGraph, bits, is_connected, non_cutvertices

TABLE_CAP = 22  # 2^n value-table rows; campaigns stay far below this


class GraphTable:
    """Per-graph precomputation: connected subsets and their legal moves."""

    def __init__(self, graph: WeightedGraph):
        if graph.n > TABLE_CAP:
            raise ValueError(f"value tables are capped at {TABLE_CAP} vertices")
        self.graph = graph
        size = 1 << graph.n
        self.connected = np.zeros(size, dtype=bool)
        moves: list[int] = [0] * size
        for mask in range(1, size):
            if is_connected(graph, mask):
                self.connected[mask] = True
                moves[mask] = non_cutvertices(graph, mask)
        self.moves = moves

    def diff_table(self, weights: np.ndarray) -> np.ndarray:
        """Value table for a batch of weightings.

        weights: int array of shape (k, n), one weighting per row.
        Returns an int64 array of shape (2^n, k); row S holds diff(S) for
        every weighting.  Rows for disconnected subsets are unused zeros.
        """
        weights = np.asarray(weights, dtype=np.int64)
        if weights.ndim == 1:
            weights = weights[None, :]
        k, n = weights.shape
        if n != self.graph.n:
            raise ValueError("weighting width does not match the graph")
        wt = weights.T.copy()  # (n, k)
        table = np.zeros((1 << n, k), dtype=np.int64)
        connected = self.connected
        moves = self.moves
        for mask in range(1, 1 << n):
            if not connected[mask]:
                continue
            best = None
            for v in bits(moves[mask]):
                val = wt[v] - table[mask ^ (1 << v)]
                if best is None:
                    best = val
                else:
                    np.maximum(best, val, out=best)
            table[mask] = best
        return table

    def diff_values(self, weights: np.ndarray) -> np.ndarray:
        """diff of the full vertex set for each weighting, shape (k,)."""
        return self.diff_table(weights)[self.graph.full_mask]


def batch_diff(graph: WeightedGraph, weights: np.ndarray) -> np.ndarray:
    return GraphTable(graph).diff_values(weights)
