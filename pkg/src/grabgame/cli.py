"""Command-line entry point.

Subcommands:
  solve <instance.json>        verdict, totals, principal variation, evals
  detect <instance.json>       bipartite / corona / hub verdicts with witnesses
  search                       Bob-win campaign over generated or ingested graphs
  verify bobwin8|hub-family|theorem-chain
                               certifications and proof-chain campaigns
  gen corona <r> | hub-member <r> <mask>
                               print pattern instances as JSON documents
  serve                        run the interactive play service

Exit status: 0 on success, 1 when a falsification event (or failed
certification) occurred, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import harness
from .graphs import (
    InstanceError,
    fraction_to_decimal,
    instance_document,
    is_bipartite,
    parse_instance,
)
from .matching import SearchBudgetExceeded
from .patterns import build_corona, build_hub_member, find_induced_hub, find_odd_corona
from .solver import GameState, SolveContext, alice_outcome
from fractions import Fraction

EXIT_OK = 0
EXIT_FALSIFIED = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="grabgame", description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--seed", type=int, default=2024,
                   help="seed for all randomized sampling (default 2024)")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("solve", help="solve one instance document")
    sp.add_argument("instance", help="path to a JSON instance document")

    dp = sub.add_parser("detect", help="run pattern detectors on an instance")
    dp.add_argument("instance")
    dp.add_argument("--budget", type=int, default=default_budget(),
                    help="detector search-node budget")

    se = sub.add_parser("search", help="Bob-win campaign")
    se.add_argument("--n", type=int, default=6,
                    help="max order for generated graphs (default 6)")
    se.add_argument("--n-min", type=int, default=2)
    se.add_argument("--weights", default="0,1",
                    help="comma-separated integer weight set (default 0,1)")
    se.add_argument("--max-nonzero", type=int, default=None)
    se.add_argument("--graphs", help="graph6 stream file instead of generated graphs")
    se.add_argument("--filter", default="",
                    help="comma list from even,bipartite,corona-free,hub-free")
    se.add_argument("--out", help="write the JSON-lines report here")
    se.add_argument("--budget", type=int, default=default_budget(),
                    help="weighting-enumeration budget per graph")

    vp = sub.add_parser("verify", help="certifications and proof-chain campaigns")
    vp.add_argument("target", choices=["bobwin8", "hub-family", "theorem-chain"])
    vp.add_argument("--r-max", type=int, default=5, help="hub-family: largest cycle")
    vp.add_argument("--n", type=int, default=8, help="theorem-chain: max order")
    vp.add_argument("--sweep-max", type=int, default=7,
                    help="bobwin8: max order for the minimality sweep")
    vp.add_argument("--weight-bound", type=int, default=4)
    vp.add_argument("--max-nonzero", type=int, default=4)
    vp.add_argument("--recover", action="store_true",
                    help="bobwin8: regenerate the instance by exhaustive search "
                         "instead of loading the bundled file")
    vp.add_argument("--instance", help="bobwin8: certify this file instead")

    gp = sub.add_parser("gen", help="print pattern instances as JSON")
    gsub = gp.add_subparsers(dest="pattern", required=True)
    gc = gsub.add_parser("corona")
    gc.add_argument("r", type=int)
    gh = gsub.add_parser("hub-member")
    gh.add_argument("r", type=int)
    gh.add_argument("mask", type=int, nargs="?", default=0,
                    help="optional-edge bitmask 0..3 (default 0)")

    sv = sub.add_parser("serve", help="run the interactive play service")
    sv.add_argument("--port", type=int, default=8000)
    sv.add_argument("--host", default="127.0.0.1")
    sv.add_argument("--session-ttl", type=float, default=3600.0,
                    help="idle session expiry in seconds (default 3600)")
    sv.add_argument("--ui", default=None,
                    help="serve this directory of static files at /ui")
    return p


def default_budget() -> int:
    env = os.environ.get("GRABGAME_BUDGET")
    return int(env) if env else harness.DEFAULT_WEIGHTING_BUDGET


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK
    try:
        return run(args)
    except (InstanceError, FileNotFoundError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except SearchBudgetExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


def run(args) -> int:
    if args.command == "solve":
        return cmd_solve(args)
    if args.command == "detect":
        return cmd_detect(args)
    if args.command == "search":
        return cmd_search(args)
    if args.command == "verify":
        return cmd_verify(args)
    if args.command == "gen":
        return cmd_gen(args)
    if args.command == "serve":
        return cmd_serve(args)
    raise AssertionError(args.command)  # pragma: no cover


def load_instance_file(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_instance(fh.read())


def in_units(g, value: int) -> str:
    """Scaled score back to original input units as an exact decimal."""
    return fraction_to_decimal(Fraction(value, g.scale))


def cmd_solve(args) -> int:
    g = load_instance_file(args.instance)
    ctx = SolveContext(g)
    out = alice_outcome(g, ctx)
    pv = ctx.principal_variation(g.full_mask)
    print(f"n={g.n} total weight={in_units(g, g.total_weight)}")
    print(f"Alice total: {in_units(g, out.alice_total)}")
    print(f"Bob total:   {in_units(g, out.bob_total)}")
    print("verdict:     " + ("Alice wins (ties count for Alice)" if out.alice_wins
                             else "Bob wins"))
    print("principal variation:", " ".join(map(str, pv)))
    print("first-move evaluations:")
    for ev in ctx.evaluate(g.full_mask):
        mark = " *" if ev.optimal else ""
        print(f"  grab {ev.vertex}: {in_units(g, ev.value_after)}{mark}")
    return EXIT_OK


def cmd_detect(args) -> int:
    g = load_instance_file(args.instance)
    bip = is_bipartite(g)
    print(f"bipartite: {bip.bipartite}")
    if bip.bipartite:
        print("  coloring:", "".join(map(str, bip.coloring)))
    else:
        print("  odd closed walk:", " ".join(map(str, bip.odd_walk)))
    corona = find_odd_corona(g, args.budget)
    print(f"corona-free: {corona is None}")
    if corona:
        print(f"  cycle: {list(corona.cycle)} pendants: {list(corona.pendants)}")
    hub = find_induced_hub(g, args.budget)
    print(f"hub-free: {hub is None}")
    if hub:
        print(f"  r={hub.r} core={list(hub.core)} present={sorted(hub.present)}")
    return EXIT_OK


def parse_weight_set(text):
    try:
        values = sorted({int(x) for x in text.split(",") if x.strip() != ""})
    except ValueError:
        raise ValueError(f"bad weight set {text!r}; expected comma-separated integers")
    if not values:
        raise ValueError("empty weight set")
    return values


def cmd_search(args) -> int:
    weight_set = parse_weight_set(args.weights)
    names = {f for f in args.filter.split(",") if f}
    unknown = names - {"even", "bipartite", "corona-free", "hub-free"}
    if unknown:
        raise ValueError(f"unknown filters: {sorted(unknown)}")
    filters = harness.Filters(
        even_only="even" in names,
        bipartite_only="bipartite" in names,
        corona_free_only="corona-free" in names,
        hub_free_only="hub-free" in names,
    )
    if args.graphs:
        supply = harness.stream_from_file(args.graphs, cap=32)
        source = args.graphs
    else:
        supply = harness.generated_supply(args.n_min, args.n)
        source = f"generated n={args.n_min}..{args.n}"
    report = harness.find_bob_wins(
        supply, weight_set, filters, budget=args.budget,
        max_nonzero=args.max_nonzero, campaign=f"search[{source}]")
    report.parameters["source"] = source
    report.parameters["seed"] = args.seed
    print_report_summary(report)
    if args.out:
        report.save(args.out)
        print(f"report written to {args.out}")
    return EXIT_OK


def print_report_summary(report) -> None:
    c = report.counts
    print(f"campaign: {report.campaign}")
    print(f"graphs: {c['graphs']}  admitted: {c['admitted']}  "
          f"weightings: {c['weightings']}  bad lines: {c['badLines']}")
    print(f"Bob wins: {c['bobWins']}")
    print(f"note: {report.note}")
    widths = "{:<28} {:>3} {:<24} {:>5}"
    if report.rows:
        print(widths.format("graph6", "n", "weights", "diff"))
        for row in report.rows[:40]:
            print(widths.format(row["graph6"], row["n"],
                                "".join(map(str, row["weights"])), row["diffValue"]))
        if len(report.rows) > 40:
            print(f"... {len(report.rows) - 40} more rows")


def cmd_verify(args) -> int:
    if args.target == "bobwin8":
        instance = load_instance_file(args.instance) if args.instance else None
        cert = harness.certify_counterexample(
            instance=instance, weight_bound=args.weight_bound,
            max_nonzero=args.max_nonzero, sweep_max_order=args.sweep_max,
            recover=args.recover)
        print(f"certification: {cert.name}")
        for clause, ok in cert.clauses.items():
            print(f"  [{'PASS' if ok else 'FAIL'}] {clause}")
        print(f"  diff value: {cert.details.get('diffValue')}")
        hits = cert.details.get("sweepHits", [])
        print(f"  smaller-order sweep hits: {len(hits)}")
        print(f"  note: {cert.note}")
        return EXIT_OK if cert.passed else EXIT_FALSIFIED

    if args.target == "hub-family":
        cert = harness.certify_hub_family(args.r_max)
        print(f"certification: {cert.name} (r <= {args.r_max})")
        for member, d in cert.details["diffValues"].items():
            print(f"  [{'PASS' if d < 0 else 'FAIL'}] {member}: diff {d}")
        return EXIT_OK if cert.passed else EXIT_FALSIFIED

    # theorem-chain: reduction lemma plus the structure chain, one campaign
    report = harness.find_bob_wins(
        harness.generated_supply(2, args.n), (0, 1),
        campaign=f"binary-bob-wins n<={args.n}", collect_witnesses=False)
    lemma = harness.reduction_lemma_campaign(args.n, campaign_report=report)
    chain = harness.theorem_chain_campaign(args.n, campaign_report=report)
    print(f"binary Bob wins at n<={args.n}: {report.counts['bobWins']}")
    print(f"reduction lemma: holds on {lemma['holds']}, inapplicable on "
          f"{lemma['inapplicable']}, falsified on {lemma['falsified']}")
    print(f"even-order instances: {chain['evenInstances']}; distinct minimal "
          f"even: {chain['minimalEven']}; minimal odd: {chain['minimalOdd']}")
    print(f"chains verified: {chain['chainsVerified']}/{chain['minimalEven']}")
    for mi in chain["minimalInstances"]:
        links = " ".join(f"{k}={'ok' if v else 'FAIL'}" for k, v in mi["links"].items())
        print(f"  minimal {mi['graph6']} w={''.join(map(str, mi['weights']))}: {links}")
    events = lemma["events"] + chain["events"]
    for ev in events:
        print(f"FALSIFICATION EVENT: {json.dumps(ev, sort_keys=True)}")
    return EXIT_FALSIFIED if events else EXIT_OK


def cmd_gen(args) -> int:
    if args.pattern == "corona":
        g = build_corona(args.r).with_name(f"corona/r={args.r}")
    else:
        if not 0 <= args.mask <= 3:
            raise ValueError("mask must be within 0..3")
        present = frozenset(e for e in (0, 1) if args.mask >> e & 1)
        g = build_hub_member(args.r, present)
    print(json.dumps(instance_document(g)))
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(session_ttl=args.session_ttl, ui_dir=args.ui)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
