#!/usr/bin/env python3
"""Regenerate the packaged data files.

* data/connected{1..8}.g6: isomorph-free connected graph streams from the
  built-in enumerator (class counts are pinned in the tests against the
  published counting sequence values).
* data/bobwin8.json: the canonical 8-vertex second-player win.  By default
  it is rebuilt from the hub-family constructor; --recover re-runs the
  exhaustive sweep (all connected corona-free graphs of order 8, every
  weighting with at most 4 nonzero integer weights <= 4) and verifies that
  the constructor output is exactly the sweep's canonical minimum.
"""

import argparse
import itertools
import json
import sys
from pathlib import Path

from grabgame.enumeration import connected_graphs, write_graph6_file
from grabgame.graphs import encode_graph6, instance_document
from grabgame.harness import recover_counterexample
from grabgame.patterns import build_hub_member

DATA = Path(__file__).resolve().parent.parent / "src" / "grabgame" / "data"


def weighted_isomorphic(a, b) -> bool:
    """Exact weight-preserving isomorphism check, brute force (tiny graphs)."""
    if a.n != b.n or sorted(a.weights) != sorted(b.weights):
        return False
    for perm in itertools.permutations(range(a.n)):
        if any(a.weights[v] != b.weights[perm[v]] for v in range(a.n)):
            continue
        if all(a.has_edge(u, v) == b.has_edge(perm[u], perm[v])
               for u in range(a.n) for v in range(u + 1, a.n)):
            return True
    return False


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--recover", action="store_true",
                        help="re-run the exhaustive order-8 sweep (minutes)")
    args = parser.parse_args()

    for n in range(1, 9):
        graphs = connected_graphs(n)
        write_graph6_file(DATA / f"connected{n}.g6", graphs)
        print(f"connected{n}.g6: {len(graphs)} graphs")

    flagship = build_hub_member(3).with_name("bobwin8")
    if args.recover:
        hits, canonical = recover_counterexample(8, weight_bound=4, max_nonzero=4)
        print(f"sweep: {len(hits)} Bob-win (graph, weighting) pairs")
        if canonical is None:
            print("sweep found nothing; refusing to write", file=sys.stderr)
            return 1
        same = weighted_isomorphic(canonical, flagship)
        print(f"canonical minimum {encode_graph6(canonical)} weights "
              f"{canonical.weights}; constructor reproduces it: {same}")
        if not same:
            print("constructor output differs from the sweep minimum",
                  file=sys.stderr)
            return 1
    with open(DATA / "bobwin8.json", "w", encoding="utf-8") as fh:
        json.dump(instance_document(flagship), fh, indent=1)
        fh.write("\n")
    print("bobwin8.json written")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
