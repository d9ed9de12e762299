"""Structural pattern families: induced odd cycles, odd coronas, hub members.

Two families matter for the conjecture work:

* odd coronas: the corona product of an odd cycle C_r with a single point,
  i.e. an r-cycle with one private pendant leaf per cycle vertex (the r=3
  member is the net graph).  A graph is corona-free when no member occurs
  as an induced subgraph.

* the hub family: the family generalizing the bundled 8-vertex second
  player win.  A member hub(r, S) consists of an odd cycle x0..x_{r-1}
  whose two cycle edges at the hub x0 are optional (S picks which are
  present), two bridge vertices u1 ~ {x0, x1} and u2 ~ {x0, x_{r-1}}
  spanning those optional edges, and pendant leaves on x0, u1 and u2.
  Exactly four vertices carry weight in the canonical weighting: the hub
  (2), both bridges (1 each) and the hub's leaf (1).  hub(3, {}) is the
  bundled counterexample instance itself.

Detectors re-verify every witness against its own invariants before
returning it; search and witness checking stay separate code paths.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graphs import WeightedGraph, bits, is_bipartite, mask_of
from .matching import Budget, SearchBudgetExceeded, find_induced_embedding

HUB_EDGE_COUNT = 2  # optional cycle edges at the hub: x0-x1 and x0-x_{r-1}


# ---------------------------------------------------------------------------
# induced odd cycles


def find_induced_odd_cycle(g: WeightedGraph) -> tuple[int, ...] | None:
    """An induced (chordless) odd cycle, or None iff the graph is bipartite.

    Starts from an odd closed walk and repeatedly passes to an odd
    sub-cycle: a repeated vertex splits a closed walk into two closed walks
    of lengths summing odd, and a chord splits an odd cycle into one odd
    and one even cycle; keeping the odd part must terminate.
    """
    res = is_bipartite(g)
    if res.bipartite:
        return None
    cyc = list(res.odd_walk[:-1])

    # reduce the closed walk to a simple odd cycle
    while True:
        seen = {}
        dup = None
        for i, v in enumerate(cyc):
            if v in seen:
                dup = (seen[v], i)
                break
            seen[v] = i
        if dup is None:
            break
        i, j = dup
        a, b = cyc[i:j], cyc[j:] + cyc[:i]
        cyc = a if len(a) % 2 == 1 else b
    # shortcut chords, keeping odd parity
    while True:
        k = len(cyc)
        chord = None
        for i, j in combinations(range(k), 2):
            if (j - i) % k in (1, k - 1):
                continue
            if g.has_edge(cyc[i], cyc[j]):
                chord = (i, j)
                break
        if chord is None:
            break
        i, j = chord
        a, b = cyc[i:j + 1], cyc[j:] + cyc[:i + 1]
        cyc = a if len(a) % 2 == 1 else b
    assert len(cyc) % 2 == 1 and len(cyc) >= 3
    assert _induces_cycle(g, cyc)
    return tuple(cyc)


def _induces_cycle(g, cyc) -> bool:
    k = len(cyc)
    if len(set(cyc)) != k or k < 3:
        return False
    for i in range(k):
        for j in range(i + 1, k):
            want = (j - i) % k in (1, k - 1)
            if g.has_edge(cyc[i], cyc[j]) != want:
                return False
    return True


def _cycle_dfs(g, start, r, budget: Budget):
    """Induced r-cycles through start with start minimal, by chordless DFS."""
    path = [start]

    def ok_next(v, closing):
        # chordless: v may touch only the path tail (plus start when closing)
        for i, p in enumerate(path[:-1]):
            if g.has_edge(v, p) and not (closing and i == 0):
                return False
        return True

    def rec():
        budget.spend()
        if len(path) == r - 1:
            last = path[-1]
            for v in bits(g.adj[last] & g.adj[start]):
                if v <= start or v in path or v <= path[1]:
                    continue
                if ok_next(v, closing=True):
                    yield tuple(path) + (v,)
            return
        for v in bits(g.adj[path[-1]])    :
            if v <= start or v in path:
                continue
            if ok_next(v, closing=False):
                path.append(v)
                yield from rec()
                path.pop()

    yield from rec()


# ---------------------------------------------------------------------------
# odd coronas


@dataclass(frozen=True)
class CoronaMatch:
    """Witness of an induced odd corona: cycle[i] carries pendant pendants[i]."""

    r: int
    cycle: tuple[int, ...]
    pendants: tuple[int, ...]


def build_corona(r: int) -> WeightedGraph:
    """Corona product of an r-cycle and a point: pendant r+i hangs on i."""
    if r % 2 == 0 or r < 3:
        raise ValueError(f"corona cycle length must be odd and >= 3, got {r}")
    edges = [(i, (i + 1) % r) for i in range(r)] + [(i, r + i) for i in range(r)]
    return WeightedGraph.from_edges(2 * r, edges)


def verify_corona_match(g: WeightedGraph, m: CoronaMatch) -> bool:
    """Re-check a corona witness against its invariants by direct inspection."""
    if m.r % 2 == 0 or m.r < 3:
        return False
    if len(m.cycle) != m.r or len(m.pendants) != m.r:
        return False
    vs = m.cycle + m.pendants
    if len(set(vs)) != 2 * m.r or not all(0 <= v < g.n for v in vs):
        return False
    if not _induces_cycle(g, list(m.cycle)):
        return False
    cyc_mask = mask_of(m.cycle)
    pend_mask = mask_of(m.pendants)
    for i, y in enumerate(m.pendants):
        if g.adj[y] & cyc_mask != 1 << m.cycle[i]:
            return False
        if g.adj[y] & pend_mask:
            return False
    return True


def find_odd_corona(g: WeightedGraph, budget: int | None = 500_000) -> CoronaMatch | None:
    """Find an induced odd corona, smallest cycle first, or None.

    Enumerates induced odd cycles and tries to assign pairwise non-adjacent
    private pendants to every cycle vertex.  Raises SearchBudgetExceeded
    when the node budget runs out; never returns a wrong answer.
    """
    b = Budget(budget)
    for r in range(3, g.n // 2 + 1, 2):
        for cycle in _cycle_dfs_all(g, r, b):
            found = _assign_pendants(g, cycle, b)
            if found is not None:
                match = CoronaMatch(r, cycle, found)
                assert verify_corona_match(g, match)
                return match
    return None


def is_corona_free(g: WeightedGraph, budget: int | None = 500_000) -> bool:
    return find_odd_corona(g, budget) is None


def _cycle_dfs_all(g, r, budget):
    for start in range(g.n):
        yield from _cycle_dfs(g, start, r, budget)


def _assign_pendants(g, cycle, budget: Budget):
    cyc_mask = mask_of(cycle)
    cands = []
    for x in cycle:
        c = [y for y in bits(g.adj[x] & ~cyc_mask) if g.adj[y] & cyc_mask == 1 << x]
        if not c:
            return None
        cands.append(c)
    order = sorted(range(len(cycle)), key=lambda i: len(cands[i]))
    chosen: dict[int, int] = {}
    chosen_mask = 0

    def rec(k):
        nonlocal chosen_mask
        budget.spend()
        if k == len(order):
            return True
        i = order[k]
        for y in cands[i]:
            yb = 1 << y
            if chosen_mask & yb or g.adj[y] & chosen_mask:
                continue
            chosen[i] = y
            chosen_mask |= yb
            if rec(k + 1):
                return True
            del chosen[i]
            chosen_mask &= ~yb
        return False

    if rec(0):
        return tuple(chosen[i] for i in range(len(cycle)))
    return None


# ---------------------------------------------------------------------------
# the hub family


@dataclass(frozen=True)
class HubWeighting:
    """Weights of the four designated vertices: hub, both bridges, hub leaf."""

    hub: int = 2
    bridge1: int = 1
    bridge2: int = 1
    hub_leaf: int = 1

    def __post_init__(self):
        if min(self.hub, self.bridge1, self.bridge2, self.hub_leaf) <= 0:
            raise ValueError("all four designated weights must be positive")


@dataclass(frozen=True)
class HubMatch:
    """Witness of an induced hub member.

    core maps the member's canonical layout (x0..x_{r-1}, u1, u2, leaf_x0,
    leaf_u1, leaf_u2) to host vertices; present lists which of the two
    optional hub edges the image realizes (subset of {0, 1}).
    """

    r: int
    core: tuple[int, ...]
    present: frozenset[int]


def hub_member_order(r: int) -> int:
    return r + 5


def hub_optional_pairs(r: int) -> tuple[tuple[int, int], tuple[int, int]]:
    """The two optional pattern edges: (x0, x1) and (x0, x_{r-1})."""
    return ((0, 1), (0, r - 1))


def build_hub_member(
    r: int,
    present=frozenset(),
    weighting: HubWeighting | None = None,
) -> WeightedGraph:
    """Construct hub(r, present) with the canonical four-vertex weighting.

    present: which optional hub edges exist; subset of {0, 1} (0 is x0-x1,
    1 is x0-x_{r-1}).  hub(3, {}) is the bundled 8-vertex counterexample.
    """
    if r % 2 == 0 or r < 3:
        raise ValueError(f"cycle length must be odd and >= 3, got {r}")
    present = frozenset(present)
    if not present <= {0, 1}:
        raise ValueError(f"optional edge ids must be within {{0, 1}}, got {sorted(present)}")
    weighting = weighting or HubWeighting()
    u1, u2 = r, r + 1
    leaf_x0, leaf_u1, leaf_u2 = r + 2, r + 3, r + 4
    edges = [(i, i + 1) for i in range(1, r - 1)]  # solid cycle arc x1..x_{r-1}
    if 0 in present:
        edges.append((0, 1))
    if 1 in present:
        edges.append((0, r - 1))
    edges += [(u1, 0), (u1, 1), (u2, 0), (u2, r - 1)]
    edges += [(leaf_x0, 0), (leaf_u1, u1), (leaf_u2, u2)]
    w = [0] * (r + 5)
    w[0] = weighting.hub
    w[u1] = weighting.bridge1
    w[u2] = weighting.bridge2
    w[leaf_x0] = weighting.hub_leaf
    mask = sum(1 << e for e in present)
    name = f"hub/r={r}/edges={mask}"
    return WeightedGraph.from_edges(r + 5, edges, w, name=name)


def verify_hub_match(g: WeightedGraph, m: HubMatch) -> bool:
    """Re-check that the matched ids induce exactly hub(r, present)."""
    if m.r % 2 == 0 or m.r < 3 or not set(m.present) <= {0, 1}:
        return False
    member = build_hub_member(m.r, m.present)
    if len(m.core) != member.n or len(set(m.core)) != member.n:
        return False
    if not all(0 <= v < g.n for v in m.core):
        return False
    for i in range(member.n):
        for j in range(i + 1, member.n):
            if g.has_edge(m.core[i], m.core[j]) != member.has_edge(i, j):
                return False
    return True


def find_induced_hub(g: WeightedGraph, budget: int | None = 500_000) -> HubMatch | None:
    """Find an induced hub member for some (r, present), smallest r first."""
    b = Budget(budget)
    for r in range(3, g.n - 4, 2):
        if hub_member_order(r) > g.n:
            break
        pattern = build_hub_member(r, frozenset({0, 1}))
        mapping = find_induced_embedding(pattern, g, flexible=hub_optional_pairs(r), budget=b)
        if mapping is None:
            continue
        present = frozenset(
            e for e, (a, c) in enumerate(hub_optional_pairs(r))
            if g.has_edge(mapping[a], mapping[c])
        )
        match = HubMatch(r, tuple(mapping), present)
        assert verify_hub_match(g, match)
        return match
    return None


def is_hub_free(g: WeightedGraph, budget: int | None = 500_000) -> bool:
    return find_induced_hub(g, budget) is None
