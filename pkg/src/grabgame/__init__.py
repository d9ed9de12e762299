"""Exact engine and verification harness for the graph grabbing game."""

from .graphs import (
    WeightedGraph,
    Graph6Error,
    InstanceError,
    bits,
    mask_of,
    is_connected,
    non_cutvertices,
    is_bipartite,
    parse_graph6,
    encode_graph6,
    parse_instance,
    instance_document,
)
from .solver import (
    GameState,
    SolveContext,
    SolveResult,
    MoveEval,
    AliceOutcome,
    DisconnectedGraphError,
    solve_diff,
    alice_outcome,
    evaluate_moves,
    principal_variation,
    legal_moves,
)

__all__ = [name for name in dir() if not name.startswith("_")]
