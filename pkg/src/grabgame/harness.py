"""Conjecture verification harness.

Campaigns enumerate (graph, weighting) pairs at desk scale, solve every
pair exactly, and collect second-player (Bob) wins with witnesses.  On top
of the campaigns sit the counterexample machinery: a shrinker that reduces
Bob wins to locally minimal instances, a checker for the pair-removal
reduction lemma, a verifier for the structure-theorem chain on minimal
binary-weighted instances, and certifications for the bundled 8-vertex
counterexample and its generalizing family.

Weight search is bounded integer enumeration; general non-negative real
weights are not searchable, and every report states this incompleteness.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from importlib import resources
from itertools import product

import numpy as np

from .batch import GraphTable
from .enumeration import connected_graphs, packaged_connected_graphs, read_graph6_lines
from .graphs import (
    Graph6Error,
    WeightedGraph,
    bits,
    encode_graph6,
    is_bipartite,
    is_connected,
    non_cutvertices,
    parse_graph6,
    parse_instance,
)
from .patterns import (
    CoronaMatch,
    build_hub_member,
    find_induced_odd_cycle,
    find_induced_hub,
    find_odd_corona,
    verify_corona_match,
)
from .solver import SolveContext

DEFAULT_WEIGHTING_BUDGET = 1_000_000
INCOMPLETENESS_NOTE = (
    "weight search is bounded integer enumeration; "
    "general non-negative real weightings are out of reach of this sweep"
)


class WeightingBudgetExceeded(ValueError):
    """The requested weighting enumeration is larger than the budget."""


# ---------------------------------------------------------------------------
# weighting enumeration


def count_weightings(n: int, weight_set, max_nonzero: int | None = None) -> int:
    from math import comb

    values = sorted(set(weight_set))
    k = len(values)
    if max_nonzero is None:
        return k ** n
    if 0 not in values:
        return k ** n if n <= max_nonzero else 0
    nz = k - 1
    return sum(comb(n, j) * nz ** j for j in range(0, min(max_nonzero, n) + 1))


def enumerate_weightings(
    g: WeightedGraph,
    weight_set,
    budget: int | None = DEFAULT_WEIGHTING_BUDGET,
    max_nonzero: int | None = None,
):
    """All weight assignments from the set, in deterministic product order.

    Raises WeightingBudgetExceeded when |weight_set|^n (or the support-capped
    count) exceeds the budget.
    """
    values = sorted(set(weight_set))
    if not values:
        raise ValueError("weight set must be nonempty")
    if any(v < 0 for v in values):
        raise ValueError("weights must be non-negative")
    total = count_weightings(g.n, values, max_nonzero)
    if budget is not None and total > budget:
        raise WeightingBudgetExceeded(
            f"{total} weightings exceed the budget of {budget}")
    for w in product(values, repeat=g.n):
        if max_nonzero is not None and sum(1 for x in w if x) > max_nonzero:
            continue
        yield w


def weighting_matrix(g, weight_set, budget=DEFAULT_WEIGHTING_BUDGET, max_nonzero=None):
    return np.array(list(enumerate_weightings(g, weight_set, budget, max_nonzero)),
                    dtype=np.int64).reshape(-1, g.n)


# ---------------------------------------------------------------------------
# instances and reports


@dataclass(frozen=True)
class Instance:
    """A (graph, weighting) pair with provenance and cached verdicts."""

    graph: WeightedGraph
    provenance: str = "generated"  # generated | ingested | bundled
    verdicts: dict | None = None

    def computed_verdicts(self, detector_budget: int | None = 500_000) -> dict:
        ctx = SolveContext(self.graph)
        d = ctx.diff(self.graph.full_mask)
        return {
            "aliceWins": d >= 0,
            "diffValue": d,
            "bipartite": bool(is_bipartite(self.graph)),
            "coronaFree": find_odd_corona(self.graph, detector_budget) is None,
            "hubFree": find_induced_hub(self.graph, detector_budget) is None,
        }


@dataclass
class Report:
    """Campaign output: parameters, counts, and re-verifiable Bob-win rows."""

    campaign: str
    parameters: dict
    counts: dict
    rows: list = field(default_factory=list)
    errors: list = field(default_factory=list)
    events: list = field(default_factory=list)  # falsification events
    wall_clock: float = 0.0
    note: str = INCOMPLETENESS_NOTE

    def header(self, include_timing: bool = False) -> dict:
        return {
            "campaign": self.campaign,
            "parameters": self.parameters,
            "counts": self.counts,
            "errors": self.errors,
            "events": self.events,
            # timing is measurement noise: byte-identical reports for
            # identical inputs are a contract, so persisting it is opt-in
            "wallClock": round(self.wall_clock, 3) if include_timing else 0.0,
            "note": self.note,
        }

    def to_jsonl(self, include_timing: bool = False) -> str:
        lines = [json.dumps(self.header(include_timing), sort_keys=True)]
        lines += [json.dumps(row, sort_keys=True) for row in self.rows]
        return "\n".join(lines) + "\n"

    def save(self, path, include_timing: bool = False) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.to_jsonl(include_timing))


def load_report(path, verify: bool = True) -> Report:
    """Read a campaign report; by default re-solve every Bob-win row."""
    with open(path, "r", encoding="utf-8") as fh:
        lines = [line for line in fh.read().splitlines() if line.strip()]
    head = json.loads(lines[0])
    rows = [json.loads(line) for line in lines[1:]]
    report = Report(
        campaign=head["campaign"],
        parameters=head["parameters"],
        counts=head["counts"],
        rows=rows,
        errors=head.get("errors", []),
        events=head.get("events", []),
        wall_clock=head.get("wallClock", 0.0),
        note=head.get("note", ""),
    )
    if verify:
        for row in rows:
            g = parse_graph6(row["graph6"]).with_weights(row["weights"])
            ctx = SolveContext(g)
            d = ctx.diff(g.full_mask)
            if d != row["diffValue"] or d >= 0:
                raise ValueError(
                    f"report row failed re-verification: {row['graph6']} {row['weights']}")
    return report


# ---------------------------------------------------------------------------
# graph supply


def stream_from_lines(lines, cap: int | None = None):
    """Yield (lineno, WeightedGraph | Exception) from graph6 text lines."""
    for lineno, text in read_graph6_lines(lines):
        try:
            g = parse_graph6(text)
            if cap is not None and g.n > cap:
                raise Graph6Error(f"graph exceeds the configured {cap}-vertex cap")
            yield lineno, g
        except Graph6Error as e:
            yield lineno, e


def stream_from_file(path, cap: int | None = None):
    with open(path, "r", encoding="ascii") as fh:
        yield from stream_from_lines(fh, cap)


def generated_supply(n_min: int, n_max: int, packaged: bool = True):
    """Built-in fallback supply: isomorph-free connected graphs."""
    source = packaged_connected_graphs if packaged else connected_graphs
    for n in range(n_min, n_max + 1):
        for g in source(n):
            yield None, g


# ---------------------------------------------------------------------------
# Bob-win campaigns


@dataclass(frozen=True)
class Filters:
    even_only: bool = False
    bipartite_only: bool = False
    corona_free_only: bool = False
    hub_free_only: bool = False

    def admit(self, g: WeightedGraph, detector_budget=500_000) -> bool:
        if self.even_only and g.n % 2 != 0:
            return False
        if self.bipartite_only and not is_bipartite(g):
            return False
        if self.corona_free_only and find_odd_corona(g, detector_budget) is not None:
            return False
        if self.hub_free_only and find_induced_hub(g, detector_budget) is not None:
            return False
        return True


def find_bob_wins(
    supply,
    weight_set=(0, 1),
    filters: Filters = Filters(),
    budget: int | None = DEFAULT_WEIGHTING_BUDGET,
    max_nonzero: int | None = None,
    campaign: str = "bob-wins",
    collect_witnesses: bool = True,
    detector_budget: int | None = 500_000,
) -> Report:
    """Solve every admitted (graph, weighting) pair; collect Bob wins.

    supply yields (lineno, WeightedGraph | Exception); bad lines are
    counted and skipped, never aborting the campaign.
    """
    t0 = time.monotonic()
    weight_values = sorted(set(weight_set))
    counts = {"graphs": 0, "admitted": 0, "weightings": 0, "bobWins": 0, "badLines": 0,
              "skippedDisconnected": 0}
    rows = []
    errors = []
    for lineno, item in supply:
        if isinstance(item, Exception):
            counts["badLines"] += 1
            errors.append({"line": lineno, "error": str(item)})
            continue
        g = item
        counts["graphs"] += 1
        if not is_connected(g):
            counts["skippedDisconnected"] += 1
            errors.append({"line": lineno, "error": "disconnected graph skipped"})
            continue
        if not filters.admit(g, detector_budget):
            continue
        counts["admitted"] += 1
        weights = weighting_matrix(g, weight_values, budget, max_nonzero)
        counts["weightings"] += len(weights)
        table = GraphTable(g)
        values = table.diff_table(weights)
        dfull = values[g.full_mask]
        for k in np.nonzero(dfull < 0)[0]:
            w = tuple(int(x) for x in weights[k])
            rows.append(_bob_win_row(g, w, int(dfull[k]),
                                     collect_witnesses, detector_budget))
            counts["bobWins"] += 1
    rows.sort(key=lambda r: (len(r["weights"]), r["graph6"], r["weights"]))
    return Report(
        campaign=campaign,
        parameters={
            "weightSet": weight_values,
            "maxNonzero": max_nonzero,
            "filters": {
                "evenOnly": filters.even_only,
                "bipartiteOnly": filters.bipartite_only,
                "coronaFreeOnly": filters.corona_free_only,
                "hubFreeOnly": filters.hub_free_only,
            },
        },
        counts=counts,
        rows=rows,
        errors=errors,
        wall_clock=time.monotonic() - t0,
    )


def _bob_win_row(g, w, diff_value, collect_witnesses, detector_budget):
    gw = g.with_weights(w)
    row = {
        "graph6": encode_graph6(g),
        "n": g.n,
        "weights": list(w),
        "diffValue": diff_value,
    }
    if collect_witnesses:
        ctx = SolveContext(gw)
        corona = find_odd_corona(gw, detector_budget)
        hub = find_induced_hub(gw, detector_budget)
        row["verdicts"] = {
            "aliceWins": False,
            "bipartite": bool(is_bipartite(gw)),
            "coronaFree": corona is None,
            "hubFree": hub is None,
        }
        row["witnesses"] = {
            "pv": list(ctx.principal_variation(gw.full_mask)),
            "corona": None if corona is None else
                {"r": corona.r, "cycle": list(corona.cycle), "pendants": list(corona.pendants)},
            "hubMember": None if hub is None else
                {"r": hub.r, "core": list(hub.core), "present": sorted(hub.present)},
        }
    return row


# ---------------------------------------------------------------------------
# shrinking and the reduction lemma


@dataclass(frozen=True)
class ShrinkResult:
    minimal: WeightedGraph
    steps: tuple  # ("pair", u, v) and ("single", x) entries, original vertex ids


def _optimal_moves(ctx: SolveContext, mask: int):
    target = ctx.diff(mask)
    w = ctx.graph.weights
    return [v for v in bits(ctx.legal_moves(mask))
            if w[v] - ctx.diff(mask & ~(1 << v)) == target]


def _qualifying_pairs(ctx: SolveContext, mask: int):
    """Optimal (u, v) openings with w(u) >= w(v) and a connected remainder."""
    g = ctx.graph
    for u in _optimal_moves(ctx, mask):
        mu = mask & ~(1 << u)
        if mu == 0:
            continue
        for v in _optimal_moves(ctx, mu):
            if g.weights[u] < g.weights[v]:
                continue
            muv = mu & ~(1 << v)
            if is_connected(g, muv):
                yield u, v, muv


def shrink_instance(g: WeightedGraph) -> ShrinkResult:
    """Reduce a verified Bob win while Bob keeps winning.

    Two moves are tried, re-solving every intermediate instance: the
    pair-removal of an optimal opening (u, v) with w(u) >= w(v), and plain
    single-vertex deletion keeping the remainder connected.  All optimal
    pairs are explored, not just the tie-break one; the result is a local
    minimum where no step preserves the Bob win.
    """
    ctx = SolveContext(g)
    if ctx.diff(g.full_mask) >= 0:
        raise ValueError("shrink_instance expects a verified Bob win")
    mask = g.full_mask
    steps = []
    while True:
        step = None
        for u, v, muv in _qualifying_pairs(ctx, mask):
            if muv and ctx.diff(muv) < 0:
                step = ("pair", u, v)
                mask = muv
                break
        if step is None:
            for x in bits(mask):
                mx = mask & ~(1 << x)
                if mx and is_connected(g, mx) and ctx.diff(mx) < 0:
                    step = ("single", x)
                    mask = mx
                    break
        if step is None:
            break
        steps.append(step)
    minimal, _ = g.induced(mask)
    return ShrinkResult(minimal.with_name(g.name), tuple(steps))


@dataclass(frozen=True)
class LemmaOutcome:
    status: str  # holds | falsified | inapplicable
    pairs_checked: int
    counterexamples: tuple = ()


def verify_reduction_lemma(g: WeightedGraph) -> LemmaOutcome:
    """Check pair-removal on a Bob win: every qualifying optimal opening
    (u, v) with w(u) >= w(v) must leave a graph Bob still wins."""
    ctx = SolveContext(g)
    if ctx.diff(g.full_mask) >= 0:
        raise ValueError("reduction lemma applies to verified Bob wins only")
    checked = 0
    bad = []
    for u, v, muv in _qualifying_pairs(ctx, g.full_mask):
        checked += 1
        if ctx.diff(muv) >= 0:
            bad.append({"u": u, "v": v, "diffAfter": ctx.diff(muv)})
    if checked == 0:
        return LemmaOutcome("inapplicable", 0)
    return LemmaOutcome("falsified" if bad else "holds", checked, tuple(bad))


# ---------------------------------------------------------------------------
# theorem chain on minimal binary-weight instances


@dataclass(frozen=True)
class ChainVerdict:
    links: dict
    corona: CoronaMatch | None
    failures: tuple
    all_hold: bool


def verify_theorem_chain(g: WeightedGraph) -> ChainVerdict:
    """Verify the structure chain on a minimal even-order {0,1} Bob win.

    Links: (1) every non-cutvertex is a weight-0 leaf; (2) the graph is not
    bipartite; (3) some induced odd cycle consists of cutvertices only;
    (4) picking, for each cycle vertex, a neighbor separated from the next
    cycle vertex yields a verified induced odd corona.
    """
    if not set(g.weights) <= {0, 1}:
        raise ValueError("theorem chain requires weights in {0, 1}")
    if g.n % 2 != 0:
        raise ValueError("theorem chain requires even order")
    ctx = SolveContext(g)
    if ctx.diff(g.full_mask) >= 0:
        raise ValueError("theorem chain requires a Bob win")
    if shrink_instance(g).steps:
        raise ValueError("theorem chain requires a shrink-minimal instance")

    links = {}
    failures = []

    free = non_cutvertices(g)
    bad = [v for v in bits(free) if g.weights[v] != 0 or g.degree(v) != 1]
    links["nonCutverticesAreZeroLeaves"] = not bad
    if bad:
        failures.append({"link": "nonCutverticesAreZeroLeaves", "vertices": bad})

    links["nonBipartite"] = not is_bipartite(g)
    if not links["nonBipartite"]:
        failures.append({"link": "nonBipartite"})
        return ChainVerdict(links, None, tuple(failures), False)

    cycle = find_induced_odd_cycle(g)
    cutvertex_cycle = all(not free >> x & 1 for x in cycle)
    links["cycleVerticesAreCutvertices"] = cutvertex_cycle
    if not cutvertex_cycle:
        failures.append({"link": "cycleVerticesAreCutvertices", "cycle": list(cycle)})

    corona, detail = _corona_from_cycle(g, cycle)
    links["inducedCoronaConstructed"] = corona is not None
    if corona is None:
        failures.append({"link": "inducedCoronaConstructed", **detail})
    return ChainVerdict(links, corona, tuple(failures), not failures)


def _corona_from_cycle(g, cycle):
    """For each cycle vertex pick a neighbor with no path to the next cycle
    vertex once the cycle vertex is removed, then verify the corona."""
    r = len(cycle)
    pendants = []
    for i, x in enumerate(cycle):
        nxt = cycle[(i + 1) % r]
        rest = g.full_mask & ~(1 << x)
        comp = _component_of(g, rest, nxt)
        choices = [y for y in bits(g.adj[x]) if not comp >> y & 1]
        if not choices:
            return None, {"reason": f"no separated neighbor at cycle vertex {x}"}
        pendants.append(choices[0])
    match = CoronaMatch(r, tuple(cycle), tuple(pendants))
    if not verify_corona_match(g, match):
        return None, {"reason": "constructed pendant set does not induce a corona",
                      "cycle": list(cycle), "pendants": pendants}
    return match, {}


def _component_of(g, mask, v):
    seen = 1 << v
    frontier = seen
    while frontier:
        reach = 0
        for u in bits(frontier):
            reach |= g.adj[u]
        frontier = reach & mask & ~seen
        seen |= frontier
    return seen


# ---------------------------------------------------------------------------
# campaign wrappers used by the acceptance criteria and the CLI


def reduction_lemma_campaign(n_max: int = 8, campaign_report: Report | None = None) -> dict:
    """Check the reduction lemma on every {0,1} Bob win at n <= n_max."""
    report = campaign_report or find_bob_wins(
        generated_supply(2, n_max), (0, 1), campaign="binary-bob-wins",
        collect_witnesses=False)
    outcome = {"instances": 0, "holds": 0, "inapplicable": 0, "falsified": 0,
               "events": []}
    for row in report.rows:
        g = parse_graph6(row["graph6"]).with_weights(row["weights"])
        res = verify_reduction_lemma(g)
        outcome["instances"] += 1
        outcome[res.status] += 1
        if res.status == "falsified":
            outcome["events"].append({
                "kind": "reduction-lemma-falsified",
                "graph6": row["graph6"],
                "weights": row["weights"],
                "pairs": list(res.counterexamples),
            })
    return outcome


def theorem_chain_campaign(n_max: int = 8, campaign_report: Report | None = None) -> dict:
    """Shrink every even-order {0,1} Bob win at n <= n_max and verify the
    chain on each distinct minimal even-order instance."""
    report = campaign_report or find_bob_wins(
        generated_supply(2, n_max), (0, 1), campaign="binary-bob-wins",
        collect_witnesses=False)
    minimal_seen = {}
    outcome = {"instances": 0, "evenInstances": 0, "minimalEven": 0, "minimalOdd": 0,
               "chainsVerified": 0, "events": [], "minimalInstances": []}
    for row in report.rows:
        outcome["instances"] += 1
        if row["n"] % 2 != 0:
            continue
        outcome["evenInstances"] += 1
        g = parse_graph6(row["graph6"]).with_weights(row["weights"])
        minimal = shrink_instance(g).minimal
        key = (encode_graph6(minimal), minimal.weights)
        if key in minimal_seen:
            continue
        minimal_seen[key] = True
        if minimal.n % 2 != 0:
            outcome["minimalOdd"] += 1
            continue
        outcome["minimalEven"] += 1
        verdict = verify_theorem_chain(minimal)
        outcome["minimalInstances"].append({
            "graph6": key[0], "weights": list(key[1]),
            "links": verdict.links,
        })
        if verdict.all_hold:
            outcome["chainsVerified"] += 1
        else:
            outcome["events"].append({
                "kind": "theorem-chain-falsified",
                "graph6": key[0],
                "weights": list(key[1]),
                "failures": list(verdict.failures),
            })
    return outcome


# ---------------------------------------------------------------------------
# certifications


@dataclass
class Certification:
    name: str
    clauses: dict
    passed: bool
    details: dict
    note: str = INCOMPLETENESS_NOTE


def bundled_instance(name: str = "bobwin8") -> WeightedGraph:
    """Load a bundled instance document from package data."""
    path = resources.files("grabgame").joinpath(f"data/{name}.json")
    return parse_instance(path.read_text(encoding="utf-8"))


def recover_counterexample(order: int = 8, weight_bound: int = 4, max_nonzero: int = 4):
    """Regenerate the minimal counterexample by exhaustive search.

    Sweeps all connected corona-free graphs of the given order with at most
    max_nonzero nonzero integer weights <= weight_bound and returns (hits,
    canonical minimum), the minimum taken by edge count, then graph6 line,
    then total weight, max weight and the weight tuple.
    """
    hits = []
    for _, g in generated_supply(order, order):
        if find_odd_corona(g) is not None:
            continue
        weights = weighting_matrix(g, range(weight_bound + 1),
                                   budget=None, max_nonzero=max_nonzero)
        if len(weights) == 0:
            continue
        d = GraphTable(g).diff_values(weights)
        for k in np.nonzero(d < 0)[0]:
            hits.append((encode_graph6(g), tuple(int(x) for x in weights[k]), int(d[k])))
    if not hits:
        return hits, None
    g6, w, _ = min(hits, key=lambda h: (parse_graph6(h[0]).edge_count(), h[0],
                                        sum(h[1]), max(h[1]), h[1]))
    return hits, parse_graph6(g6).with_weights(w)


def certify_counterexample(
    instance: WeightedGraph | None = None,
    weight_bound: int = 4,
    max_nonzero: int = 4,
    sweep_max_order: int = 7,
    recover: bool = False,
) -> Certification:
    """Certify the bundled 8-vertex counterexample.

    Clauses: (a) the instance is a Bob win and its weighting lies in the
    configured bounded class; (b) no induced odd corona; (c) connected, of
    order 8; (d) no connected corona-free graph of smaller even order
    admits any Bob-win weighting within the same bounded class.

    The minimality sweep covers even orders only: on odd orders the second
    player wins trivially even on paths (0,1,0), which is why the whole
    conjectural landscape restricts to even order.  The bound also makes
    (d) an incomplete minimality statement; the record spells both out.
    """
    details: dict = {"weightBound": weight_bound, "maxNonzero": max_nonzero}
    if instance is None:
        if recover:
            _, instance = recover_counterexample(8, weight_bound, max_nonzero)
            if instance is None:
                return Certification(
                    "counterexample", {"bobWin": False}, False,
                    dict(details, error="recovery sweep found no instance"))
        else:
            instance = bundled_instance()
    g = instance
    ctx = SolveContext(g)
    d = ctx.diff(g.full_mask) if is_connected(g) else None
    in_class = (sum(1 for w in g.weights if w) <= max_nonzero
                and max(g.weights, default=0) <= weight_bound)
    clauses = {
        "bobWin": d is not None and d < 0 and in_class,
        "coronaFree": find_odd_corona(g) is None,
        "connectedOrder8": is_connected(g) and g.n == 8,
    }
    details["diffValue"] = d
    details["weightsInBoundedClass"] = in_class

    sweep_hits = []
    for n in range(2, sweep_max_order + 1, 2):
        for _, h in generated_supply(n, n):
            if find_odd_corona(h) is not None:
                continue
            weights = weighting_matrix(h, range(weight_bound + 1),
                                       budget=None, max_nonzero=max_nonzero)
            if len(weights) == 0:
                continue
            vals = GraphTable(h).diff_values(weights)
            for k in np.nonzero(vals < 0)[0]:
                sweep_hits.append({"graph6": encode_graph6(h),
                                   "weights": [int(x) for x in weights[k]],
                                   "diffValue": int(vals[k])})
    clauses["noSmallerEvenBobWin"] = not sweep_hits
    details["sweepMaxOrder"] = sweep_max_order
    details["sweepScope"] = ("even orders only: odd-order games have trivial "
                             "second-player wins (a path weighted 0,1,0 already "
                             "loses for the first player), so minimality is "
                             "claimed within the even-order setting")
    details["sweepHits"] = sweep_hits
    return Certification("counterexample", clauses, all(clauses.values()), details)


def certify_hub_family(r_max: int = 5) -> Certification:
    """Solve every hub member with r <= r_max under the canonical weighting;
    all of them are expected to be Bob wins."""
    if r_max % 2 == 0 or r_max < 3:
        raise ValueError(f"r_max must be odd and >= 3, got {r_max}")
    members = {}
    for r in range(3, r_max + 1, 2):
        for mask in range(1 << 2):
            present = frozenset(e for e in (0, 1) if mask >> e & 1)
            g = build_hub_member(r, present)
            d = SolveContext(g).diff(g.full_mask)
            members[f"r={r}/edges={mask}"] = d
    ok = all(d < 0 for d in members.values())
    return Certification(
        "hub-family",
        {"allMembersBobWin": ok},
        ok,
        {"rMax": r_max, "diffValues": members},
    )
