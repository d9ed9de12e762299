"""Backtracking search for induced-subgraph embeddings.

The matcher looks for an injection of a pattern graph into a host graph
such that pattern edges map to host edges and pattern non-edges map to host
non-edges (an induced embedding).  Selected pattern pairs can be declared
flexible, in which case their adjacency in the image is unconstrained;
this is how parameterized pattern families with optional edges are matched
in a single search instead of one search per member.

The problem is NP-hard in general, so every search carries a node budget.
Exhausting it raises SearchBudgetExceeded; the matcher never returns a
wrong answer.
"""

from __future__ import annotations

from .graphs import WeightedGraph, bits

DEFAULT_BUDGET = 2_000_000


class SearchBudgetExceeded(RuntimeError):
    """The backtracking node budget was exhausted before a definite answer."""


class Budget:
    """Search-node allowance, shareable across several searches."""

    def __init__(self, limit: int | None):
        self.limit = limit
        self.used = 0

    def spend(self, amount: int = 1) -> None:
        self.used += amount
        if self.limit is not None and self.used > self.limit:
            raise SearchBudgetExceeded(f"search exceeded {self.limit} nodes")


def find_induced_embedding(
    pattern: WeightedGraph,
    host: WeightedGraph,
    flexible=(),
    budget: int | Budget | None = DEFAULT_BUDGET,
) -> list[int] | None:
    """Map pattern vertices to host vertices, or None if no embedding exists.

    flexible: iterable of pattern vertex pairs whose image adjacency is not
    constrained.  Returns a list m with m[p] the host vertex for pattern
    vertex p.
    """
    np_, nh = pattern.n, host.n
    if np_ == 0:
        return []
    if np_ > nh:
        return None
    if not isinstance(budget, Budget):
        budget = Budget(budget)

    flex = [0] * np_
    for a, b in flexible:
        flex[a] |= 1 << b
        flex[b] |= 1 << a

    # fixed adjacency/non-adjacency the image must reproduce
    required = [pattern.adj[v] & ~flex[v] for v in range(np_)]
    forbidden = [~pattern.adj[v] & ~flex[v] & ((1 << np_) - 1) & ~(1 << v) for v in range(np_)]

    order = _connect_first_order(np_, [pattern.adj[v] | flex[v] for v in range(np_)], required)
    pos = [0] * np_
    for i, v in enumerate(order):
        pos[v] = i

    host_deg = [host.adj[v].bit_count() for v in range(nh)]
    min_deg = [required[v].bit_count() for v in range(np_)]

    mapping = [-1] * np_
    used = 0

    def place(i: int) -> bool:
        nonlocal used
        if i == np_:
            return True
        u = order[i]
        req, forb = required[u], forbidden[u]
        for hv in range(nh):
            hb = 1 << hv
            if used & hb or host_deg[hv] < min_deg[u]:
                continue
            budget.spend()
            hadj = host.adj[hv]
            ok = True
            for p in bits(req):
                m = mapping[p]
                if m >= 0 and not hadj >> m & 1:
                    ok = False
                    break
            if ok:
                for p in bits(forb):
                    m = mapping[p]
                    if m >= 0 and hadj >> m & 1:
                        ok = False
                        break
            if not ok:
                continue
            mapping[u] = hv
            used |= hb
            if place(i + 1):
                return True
            mapping[u] = -1
            used &= ~hb
        return False

    return list(mapping) if place(0) else None


def _connect_first_order(n, adj, required):
    """Vertex order that keeps each new vertex attached to the placed ones."""
    order = []
    placed = 0
    remaining = set(range(n))
    while remaining:
        # prefer vertices with fixed edges into the placed prefix, then high degree
        best = max(
            remaining,
            key=lambda v: ((required[v] & placed).bit_count(),
                           (adj[v] & placed).bit_count(),
                           required[v].bit_count(),
                           -v),
        )
        order.append(best)
        placed |= 1 << best
        remaining.remove(best)
    return order


def contains_induced(pattern, host, flexible=(), budget=DEFAULT_BUDGET) -> bool:
    return find_induced_embedding(pattern, host, flexible, budget) is not None
