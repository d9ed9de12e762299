"""Core graph model for the grabbing game.

Graphs are undirected, simple and loopless, with at most 32 vertices and
exact non-negative integer vertex weights.  Vertex subsets are plain int
bitmasks throughout (bit v set <=> vertex v in the subset), which keeps the
game-state machinery allocation-free.

Rational weights are accepted at ingestion as decimal strings and scaled to
integers by the least common denominator; the scale factor is kept on the
graph so user-facing output can be rescaled to the original units.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from math import lcm

MAX_VERTICES = 32


class Graph6Error(ValueError):
    """Malformed graph6 input."""


class InstanceError(ValueError):
    """Malformed JSON instance document."""


# ---------------------------------------------------------------------------
# bitmask helpers


def bits(mask: int):
    """Yield the vertex ids set in a bitmask, ascending."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def mask_of(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class WeightedGraph:
    """Immutable vertex-weighted graph on ids 0..n-1.

    adj[v] is the neighbor bitmask of v.  weights are exact non-negative
    integers in scaled units; original units are weights[v] / scale.
    """

    n: int
    adj: tuple[int, ...]
    weights: tuple[int, ...]
    scale: int = 1
    name: str | None = None

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n or len(self.weights) != self.n:
            raise ValueError("adjacency/weight length does not match n")
        full = (1 << self.n) - 1
        for v, m in enumerate(self.adj):
            if m & ~full:
                raise ValueError(f"neighbor of {v} out of range")
            if m >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in bits(m):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric edge {v},{u}")
        if any(w < 0 for w in self.weights):
            raise ValueError("negative weight")
        if self.scale < 1:
            raise ValueError("scale must be a positive integer")

    @classmethod
    def from_edges(cls, n, edges, weights=None, scale=1, name=None) -> "WeightedGraph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range")
            if u == v:
                raise ValueError(f"loop edge ({u},{v})")
            if adj[u] >> v & 1:
                raise ValueError(f"duplicate edge ({u},{v})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        if weights is None:
            weights = (0,) * n
        return cls(n, tuple(adj), tuple(int(w) for w in weights), scale, name)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def total_weight(self) -> int:
        return sum(self.weights)

    def edges(self):
        for v in range(self.n):
            for u in bits(self.adj[v] >> (v + 1) << (v + 1)):
                yield (v, u)

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def with_weights(self, weights, scale: int = 1) -> "WeightedGraph":
        return replace(self, weights=tuple(int(w) for w in weights), scale=scale)

    def with_name(self, name: str | None) -> "WeightedGraph":
        return replace(self, name=name)

    def add_edges(self, edges) -> "WeightedGraph":
        new = list(self.edges()) + list(edges)
        return WeightedGraph.from_edges(self.n, new, self.weights, self.scale, self.name)

    def induced(self, mask: int) -> tuple["WeightedGraph", list[int]]:
        """Induced subgraph on a bitmask, relabeled 0..k-1.

        Returns (subgraph, vertex_map) with vertex_map[i] the original id of
        new vertex i.
        """
        vmap = list(bits(mask))
        index = {v: i for i, v in enumerate(vmap)}
        adj = [0] * len(vmap)
        for i, v in enumerate(vmap):
            for u in bits(self.adj[v] & mask):
                adj[i] |= 1 << index[u]
        weights = tuple(self.weights[v] for v in vmap)
        return WeightedGraph(len(vmap), tuple(adj), weights, self.scale, None), vmap


# ---------------------------------------------------------------------------
# connectivity and articulation machinery


def is_connected(g: WeightedGraph, mask: int | None = None) -> bool:
    """True iff the subgraph induced on mask is connected (|mask| <= 1 counts)."""
    if mask is None:
        mask = g.full_mask
    if mask == 0:
        return True
    seen = mask & -mask
    frontier = seen
    while frontier:
        reach = 0
        for v in bits(frontier):
            reach |= g.adj[v]
        frontier = reach & mask & ~seen
        seen |= frontier
    return seen == mask


def non_cutvertices(g: WeightedGraph, mask: int | None = None) -> int:
    """Bitmask of vertices whose removal keeps the induced subgraph connected.

    Articulation points are found by one depth-first lowpoint pass over the
    subgraph induced on mask, which must be connected.
    """
    if mask is None:
        mask = g.full_mask
    if mask & ~g.full_mask:
        raise ValueError("mask contains vertices outside the graph")
    if mask == 0:
        return 0
    if mask & (mask - 1) == 0:
        return mask
    if not is_connected(g, mask):
        raise ValueError("induced subgraph is disconnected")

    disc = [-1] * g.n
    low = [0] * g.n
    root = (mask & -mask).bit_length() - 1
    timer = 0
    disc[root] = low[root] = timer
    timer += 1
    root_children = 0
    art = 0
    stack = [(root, -1, bits(g.adj[root] & mask))]
    while stack:
        v, parent, it = stack[-1]
        w = next(it, None)
        if w is None:
            stack.pop()
            if stack:
                p = stack[-1][0]
                if low[v] < low[p]:
                    low[p] = low[v]
                if p != root and low[v] >= disc[p]:
                    art |= 1 << p
            continue
        if disc[w] < 0:
            disc[w] = low[w] = timer
            timer += 1
            if v == root:
                root_children += 1
            stack.append((w, v, bits(g.adj[w] & mask)))
        elif w != parent and disc[w] < low[v]:
            low[v] = disc[w]
    if root_children > 1:
        art |= 1 << root
    return mask & ~art


@dataclass(frozen=True)
class BipartiteResult:
    bipartite: bool
    # proper 2-coloring (tuple of 0/1 per vertex) when bipartite
    coloring: tuple[int, ...] | None = None
    # closed walk of odd length, first vertex repeated at the end, otherwise
    odd_walk: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.bipartite


def is_bipartite(g: WeightedGraph) -> BipartiteResult:
    """2-color the graph, or exhibit an odd closed walk from the BFS layering."""
    color = [-1] * g.n
    parent = [-1] * g.n
    for start in range(g.n):
        if color[start] >= 0:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            nxt = []
            for v in queue:
                for u in bits(g.adj[v]):
                    if color[u] < 0:
                        color[u] = color[v] ^ 1
                        parent[u] = v
                        nxt.append(u)
                    elif color[u] == color[v]:
                        return BipartiteResult(False, None, _odd_walk(parent, v, u))
            queue = nxt
    return BipartiteResult(True, tuple(color), None)


def _odd_walk(parent, u, v):
    # root->u path, the offending edge u-v, then v->root: odd closed walk
    up = [u]
    while parent[up[-1]] >= 0:
        up.append(parent[up[-1]])
    down = [v]
    while parent[down[-1]] >= 0:
        down.append(parent[down[-1]])
    walk = tuple(reversed(up)) + tuple(down)
    assert (len(walk) - 1) % 2 == 1
    return walk


# ---------------------------------------------------------------------------
# graph6 codec (bit-exact: 6-bit chunks, char = value + 63, columns of the
# upper triangle in order x(0,1); x(0,2),x(1,2); x(0,3),...)


def parse_graph6(text: str) -> WeightedGraph:
    """Decode one graph6 line into a weight-0 graph."""
    line = text.rstrip("\n")
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    if not line:
        raise Graph6Error("empty graph6 line")
    head = ord(line[0]) - 63
    if head < 0 or head > 63:
        raise Graph6Error(f"malformed header character {line[0]!r}")
    if head == 63:
        # multi-byte vertex count; anything encoded this way exceeds our cap
        n = _parse_long_n(line)
        raise Graph6Error(f"vertex count {n} exceeds the {MAX_VERTICES}-vertex cap")
    n = head
    if n > MAX_VERTICES:
        raise Graph6Error(f"vertex count {n} exceeds the {MAX_VERTICES}-vertex cap")
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    body = line[1:]
    if len(body) < nchars:
        raise Graph6Error(f"truncated encoding: need {nchars} body characters, got {len(body)}")
    if len(body) > nchars:
        raise Graph6Error(f"trailing garbage after {nchars} body characters")
    bitstream = 0
    for ch in body:
        val = ord(ch) - 63
        if val < 0 or val > 63:
            raise Graph6Error(f"out-of-range character {ch!r}")
        bitstream = bitstream << 6 | val
    pad = nchars * 6 - nbits
    if pad and bitstream & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    bitstream >>= pad
    adj = [0] * n
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if bitstream >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k -= 1
    return WeightedGraph(n, tuple(adj), (0,) * n)


def _parse_long_n(line):
    vals = [ord(c) - 63 for c in line[1:]]
    if vals and vals[0] == 63:
        vals = vals[1:]
        take = 6
    else:
        take = 3
    if len(vals) < take or any(v < 0 or v > 63 for v in vals[:take]):
        raise Graph6Error("malformed multi-byte vertex count")
    n = 0
    for v in vals[:take]:
        n = n << 6 | v
    return n


def encode_graph6(g: WeightedGraph) -> str:
    """Encode the adjacency (weights are not representable in graph6)."""
    n = g.n
    out = [chr(n + 63)]
    acc = 0
    nacc = 0
    for j in range(1, n):
        for i in range(j):
            acc = acc << 1 | (g.adj[i] >> j & 1)
            nacc += 1
            if nacc == 6:
                out.append(chr(acc + 63))
                acc = nacc = 0
    if nacc:
        out.append(chr((acc << (6 - nacc)) + 63))
    return "".join(out)


# ---------------------------------------------------------------------------
# JSON instance documents


def parse_instance(document) -> WeightedGraph:
    """Parse a {"n", "edges", "weights", "name"?} document (str or dict).

    Weights are decimal strings (or ints); they are scaled by the least
    common denominator to exact integers, with the factor kept in .scale.
    """
    if isinstance(document, (str, bytes)):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as e:
            raise InstanceError(f"invalid JSON: {e}") from None
    if not isinstance(document, dict):
        raise InstanceError("instance document must be a JSON object")
    try:
        n = document["n"]
        edges = document["edges"]
        weights = document["weights"]
    except KeyError as e:
        raise InstanceError(f"missing field {e.args[0]!r}") from None
    if not isinstance(n, int) or isinstance(n, bool) or not 0 <= n <= MAX_VERTICES:
        raise InstanceError(f"n must be an integer in 0..{MAX_VERTICES}")
    if not isinstance(weights, list) or len(weights) != n:
        raise InstanceError(f"expected exactly {n} weights")
    fracs = [_parse_weight(w, i) for i, w in enumerate(weights)]
    scale = lcm(*(f.denominator for f in fracs)) if fracs else 1
    scaled = tuple(int(f * scale) for f in fracs)
    name = document.get("name")
    if name is not None and not isinstance(name, str):
        raise InstanceError("name must be a string")
    if not isinstance(edges, list):
        raise InstanceError("edges must be a list of [u, v] pairs")
    pairs = []
    for e in edges:
        if not (isinstance(e, (list, tuple)) and len(e) == 2
                and all(isinstance(x, int) and not isinstance(x, bool) for x in e)):
            raise InstanceError(f"bad edge entry {e!r}")
        pairs.append((e[0], e[1]))
    try:
        return WeightedGraph.from_edges(n, pairs, scaled, scale, name)
    except ValueError as e:
        raise InstanceError(str(e)) from None


def _parse_weight(w, i):
    if isinstance(w, bool) or isinstance(w, float):
        raise InstanceError(f"weight {i} must be a decimal string or integer, got {w!r}")
    if isinstance(w, int):
        f = Fraction(w)
    elif isinstance(w, str):
        try:
            f = Fraction(Decimal(w))
        except InvalidOperation:
            raise InstanceError(f"weight {i} is not a decimal number: {w!r}") from None
    else:
        raise InstanceError(f"weight {i} must be a decimal string or integer, got {w!r}")
    if f < 0:
        raise InstanceError(f"weight {i} is negative")
    return f


def fraction_to_decimal(f: Fraction) -> str:
    """Exact decimal string for a fraction whose denominator is 2^a * 5^b."""
    den = f.denominator
    k = 0
    while den % 2 == 0:
        den //= 2
        k += 1
    j = 0
    while den % 5 == 0:
        den //= 5
        j += 1
    if den != 1:
        raise ValueError(f"{f} has no finite decimal representation")
    exp = max(k, j)
    digits = f.numerator * 10 ** exp // f.denominator
    if exp == 0:
        return str(digits)
    sign = "-" if digits < 0 else ""
    digits = abs(digits)
    whole, frac = divmod(digits, 10 ** exp)
    text = f"{sign}{whole}.{frac:0{exp}d}".rstrip("0").rstrip(".")
    return text if text not in ("", "-") else "0"


def original_weight(g: WeightedGraph, v: int) -> str:
    """Weight of v as an exact decimal string in original input units."""
    return fraction_to_decimal(Fraction(g.weights[v], g.scale))


def instance_document(g: WeightedGraph) -> dict:
    """Round-trippable JSON document with weights in original units."""
    doc = {
        "n": g.n,
        "edges": [list(e) for e in g.edges()],
        "weights": [original_weight(g, v) for v in range(g.n)],
    }
    if g.name is not None:
        doc["name"] = g.name
    return doc


# ---------------------------------------------------------------------------
# small constructors used by tests, presets and the CLI


def path_graph(n, weights=None) -> WeightedGraph:
    return WeightedGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)], weights)


def cycle_graph(n, weights=None) -> WeightedGraph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    edges = [(i, (i + 1) % n) for i in range(n)]
    return WeightedGraph.from_edges(n, edges, weights)


def complete_graph(n, weights=None) -> WeightedGraph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return WeightedGraph.from_edges(n, edges, weights)


def star_graph(leaves, weights=None) -> WeightedGraph:
    return WeightedGraph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)], weights)
