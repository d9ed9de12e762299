"""Isomorph-free graph supply at desk scale.

The harness primarily ingests external graph6 streams; this module is the
built-in fallback generator.  Connected graphs are grown one vertex at a
time (every connected graph arises from a connected graph one vertex
smaller by attaching a new vertex to a nonempty neighborhood, since every
connected graph has a non-cutvertex) and deduplicated up to isomorphism
with a color-refinement invariant plus explicit isomorphism checks inside
invariant buckets.

Generated streams are deterministic: sorted by edge count, then graph6
string.  Class counts for n <= 8 (1, 1, 2, 6, 21, 112, 853, 11117) and
tree counts for n <= 10 are pinned in the tests against the published
values of the corresponding counting sequences.
"""

from __future__ import annotations

from functools import lru_cache
from importlib import resources

from .graphs import WeightedGraph, bits, encode_graph6, parse_graph6


def refinement_colors(g: WeightedGraph) -> tuple[int, ...]:
    """Stable vertex colors from iterated neighborhood refinement.

    Colors are label-invariant: an isomorphism always maps a vertex to one
    with the same color.
    """
    colors = [g.degree(v) for v in range(g.n)]
    classes = len(set(colors))
    while True:
        keys = [
            (colors[v], tuple(sorted(colors[u] for u in bits(g.adj[v]))))
            for v in range(g.n)
        ]
        palette = {k: i for i, k in enumerate(sorted(set(keys)))}
        colors = [palette[k] for k in keys]
        if len(palette) == classes:
            return tuple(colors)
        classes = len(palette)


def invariant_key(g: WeightedGraph) -> tuple:
    """Cheap isomorphism-invariant fingerprint used for dedup buckets."""
    colors = refinement_colors(g)
    # per-vertex (color, sorted neighbor colors) multiset pins the bucket tighter
    profile = tuple(sorted(
        (colors[v], tuple(sorted(colors[u] for u in bits(g.adj[v]))))
        for v in range(g.n)
    ))
    return (g.n, g.edge_count(), profile)


def are_isomorphic(g1: WeightedGraph, g2: WeightedGraph) -> bool:
    """Exact unlabeled isomorphism test (weights ignored)."""
    if g1.n != g2.n or g1.edge_count() != g2.edge_count():
        return False
    c1, c2 = refinement_colors(g1), refinement_colors(g2)
    if sorted(c1) != sorted(c2):
        return False
    n = g1.n
    # rarest color classes first shrinks the branching
    by_color: dict[int, list[int]] = {}
    for v, c in enumerate(c2):
        by_color.setdefault(c, []).append(v)
    order = sorted(range(n), key=lambda v: (len(by_color.get(c1[v], ())), -g1.degree(v), v))

    mapping = [-1] * n
    used = 0

    def place(i: int) -> bool:
        nonlocal used
        if i == n:
            return True
        u = order[i]
        for hv in by_color.get(c1[u], ()):
            hb = 1 << hv
            if used & hb:
                continue
            ok = True
            for j in range(i):
                p = order[j]
                if (g1.adj[u] >> p & 1) != (g2.adj[hv] >> mapping[p] & 1):
                    ok = False
                    break
            if not ok:
                continue
            mapping[u] = hv
            used |= hb
            if place(i + 1):
                return True
            used &= ~hb
        return False

    return place(0)


class _ClassSet:
    """Accumulates one representative per isomorphism class."""

    def __init__(self):
        self.buckets: dict[tuple, list[WeightedGraph]] = {}

    def add(self, g: WeightedGraph) -> bool:
        key = invariant_key(g)
        bucket = self.buckets.setdefault(key, [])
        for rep in bucket:
            if are_isomorphic(g, rep):
                return False
        bucket.append(g)
        return True

    def sorted_reps(self) -> list[WeightedGraph]:
        reps = [g for bucket in self.buckets.values() for g in bucket]
        return sorted(reps, key=lambda g: (g.edge_count(), encode_graph6(g)))


@lru_cache(maxsize=None)
def connected_graphs(n: int) -> tuple[WeightedGraph, ...]:
    """All connected graphs on n vertices up to isomorphism (weights 0)."""
    if n < 1:
        return ()
    if n == 1:
        return (WeightedGraph(1, (0,), (0,)),)
    out = _ClassSet()
    for parent in connected_graphs(n - 1):
        base = list(parent.adj) + [0]
        for nb in range(1, 1 << (n - 1)):
            adj = base.copy()
            adj[n - 1] = nb
            for v in bits(nb):
                adj[v] |= 1 << (n - 1)
            out.add(WeightedGraph(n, tuple(adj), (0,) * n))
    return tuple(out.sorted_reps())


@lru_cache(maxsize=None)
def trees(n: int) -> tuple[WeightedGraph, ...]:
    """All trees on n vertices up to isomorphism (grown leaf by leaf)."""
    if n < 1:
        return ()
    if n == 1:
        return (WeightedGraph(1, (0,), (0,)),)
    out = _ClassSet()
    for parent in trees(n - 1):
        for v in range(n - 1):
            adj = list(parent.adj) + [1 << v]
            adj[v] |= 1 << (n - 1)
            out.add(WeightedGraph(n, tuple(adj), (0,) * n))
    return tuple(out.sorted_reps())


# ---------------------------------------------------------------------------
# graph6 stream I/O


def read_graph6_lines(lines):
    """Yield (line_number, text) for non-empty lines of a graph6 stream."""
    for i, line in enumerate(lines, start=1):
        text = line.strip()
        if text:
            yield i, text


def load_graph6_file(path) -> list[WeightedGraph]:
    with open(path, "r", encoding="ascii") as fh:
        return [parse_graph6(text) for _, text in read_graph6_lines(fh)]


def write_graph6_file(path, graphs) -> None:
    with open(path, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(encode_graph6(g) + "\n")


def packaged_connected_graphs(n: int) -> tuple[WeightedGraph, ...]:
    """Connected graphs on n vertices from the shipped stream files.

    Falls back to live generation when no stream is packaged for n.
    """
    name = f"connected{n}.g6"
    root = resources.files("grabgame").joinpath("data")
    candidate = root.joinpath(name)
    if candidate.is_file():
        text = candidate.read_text(encoding="ascii")
        return tuple(parse_graph6(t) for _, t in read_graph6_lines(text.splitlines()))
    return connected_graphs(n)
