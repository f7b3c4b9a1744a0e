"""Bounded-degree multigraphs with explicit degree and multiplicity bounds.

This module owns the input side of the package: a small immutable multigraph
structure, a deterministic random generator for test instances, a BFS distance
on the line graph, and a plain-text serialisation format.

Vertices are integers 0..n-1.  Parallel edges are allowed and distinguished by
a multiplicity index k >= 1 per unordered vertex pair; self-loops are not.
Every graph carries its tightest degree bound (``delta``) and edge
multiplicity bound (``pi``), which downstream modules use to size colour
palettes as delta + pi.

The text format is line based::

    mg <n> <m> <delta> <pi>
    u v k
    ...

with one ``u v k`` line per edge.  The parser is strict: the header bounds
must equal the recomputed tight bounds and the k values per vertex pair must
form exactly 1..m (the writer always emits this normal form).

Instances are immutable after construction and safe to share between threads.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field

__all__ = [
    "Multigraph",
    "build",
    "generate_random",
    "line_graph_distance",
]


# ---------------------------------------------------------------------------
# Data structure
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Multigraph:
    """An undirected multigraph without self-loops.

    Attributes:
        n:     Number of vertices (vertices are 0..n-1).
        edges: Tuple of (u, v, k) triples with u < v and k the 1-based
               multiplicity index among the parallel edges joining u and v.
               The position of a triple in this tuple is the edge's id.
        delta: Tightest degree bound (max number of incident edges; 0 iff
               the graph has no edges).
        pi:    Tightest multiplicity bound (max number of parallel edges on
               one vertex pair; 0 iff the graph has no edges).
        adj:   Per-vertex tuple of incident edge ids, ascending.
    """

    n: int
    edges: tuple[tuple[int, int, int], ...]
    delta: int
    pi: int
    adj: tuple[tuple[int, ...], ...] = field(repr=False)

    # -- basic accessors ----------------------------------------------------

    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self.edges)

    @property
    def palette(self) -> int:
        """Number of colours available to colourings of this graph."""
        return self.delta + self.pi

    def endpoints(self, e: int) -> tuple[int, int]:
        """Return the endpoints (u, v) of edge e, with u < v."""
        u, v, _ = self.edges[e]
        return u, v

    def other(self, e: int, x: int) -> int:
        """Return the endpoint of edge e that is not x.

        Raises ValueError if x is not an endpoint of e.
        """
        u, v, _ = self.edges[e]
        if x == u:
            return v
        if x == v:
            return u
        raise ValueError(f"vertex {x} is not an endpoint of edge {e}")

    def degree(self, x: int) -> int:
        """Number of edges incident to vertex x."""
        return len(self.adj[x])

    def multiplicity(self, u: int, v: int) -> int:
        """Number of parallel edges joining u and v."""
        if u > v:
            u, v = v, u
        return sum(1 for (a, b, _) in self.edges if a == u and b == v)

    # -- serialisation ------------------------------------------------------

    def to_text(self) -> str:
        """Serialise to the ``mg`` text format (byte-deterministic)."""
        lines = [f"mg {self.n} {self.m} {self.delta} {self.pi}"]
        lines.extend(f"{u} {v} {k}" for (u, v, k) in self.edges)
        return "\n".join(lines) + "\n"

    def save(self, path: str) -> None:
        """Write the ``mg`` text form to ``path``."""
        with open(path, "w", encoding="ascii", newline="\n") as fh:
            fh.write(self.to_text())

    @staticmethod
    def from_text(text: str) -> "Multigraph":
        """Parse the ``mg`` text format; see the module docstring.

        Raises ValueError with a 1-based line number on any malformed input.
        """
        return _parse_mg(text)

    @staticmethod
    def load(path: str) -> "Multigraph":
        """Read a graph from an ``mg`` file written by :meth:`save`."""
        with open(path, "r", encoding="ascii") as fh:
            return _parse_mg(fh.read())


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------


def build(n: int, triples: list[tuple[int, int, int]]) -> Multigraph:
    """Build a multigraph from (u, v, k) triples.

    The input k tags only distinguish parallel edges; they are renumbered to
    1..m per vertex pair in input order, so callers may pass any positive
    value (repeats included).  Edge ids follow input order.

    Args:
        n:       Vertex count; all endpoints must lie in 0..n-1.
        triples: One (u, v, k) per edge, u != v, any orientation.

    Returns:
        The graph with tight ``delta`` and ``pi`` bounds computed.

    Raises:
        ValueError: on self-loops, out-of-range vertices, or bad k.
    """
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    norm: list[tuple[int, int, int]] = []
    pair_count: dict[tuple[int, int], int] = {}
    for idx, (u, v, k) in enumerate(triples):
        if not (0 <= u < n) or not (0 <= v < n):
            raise ValueError(f"edge {idx}: vertex out of range 0..{n - 1}")
        if u == v:
            raise ValueError(f"edge {idx}: self-loops are not allowed")
        if k < 1:
            raise ValueError(f"edge {idx}: multiplicity index must be >= 1")
        if u > v:
            u, v = v, u
        c = pair_count.get((u, v), 0) + 1
        pair_count[(u, v)] = c
        norm.append((u, v, c))
    return _finish(n, norm, pair_count)


def _finish(
    n: int,
    norm: list[tuple[int, int, int]],
    pair_count: dict[tuple[int, int], int],
) -> Multigraph:
    adj_lists: list[list[int]] = [[] for _ in range(n)]
    for eid, (u, v, _) in enumerate(norm):
        adj_lists[u].append(eid)
        adj_lists[v].append(eid)
    delta = max((len(a) for a in adj_lists), default=0)
    pi = max(pair_count.values(), default=0)
    return Multigraph(
        n=n,
        edges=tuple(norm),
        delta=delta,
        pi=pi,
        adj=tuple(tuple(a) for a in adj_lists),
    )


def _parse_mg(text: str) -> Multigraph:
    lines = text.splitlines()
    if not lines:
        raise ValueError("line 1: empty input, expected 'mg' header")
    head = lines[0].split()
    if len(head) != 5 or head[0] != "mg":
        raise ValueError("line 1: expected header 'mg <n> <m> <delta> <pi>'")
    try:
        n, m, delta, pi = (int(t) for t in head[1:])
    except ValueError:
        raise ValueError("line 1: header fields must be integers") from None
    if n < 0 or m < 0:
        raise ValueError("line 1: n and m must be non-negative")
    body = lines[1:]
    if len(body) != m:
        raise ValueError(
            f"line {len(lines)}: header announces {m} edges, found {len(body)}"
        )
    triples: list[tuple[int, int, int]] = []
    pair_count: dict[tuple[int, int], int] = {}
    for off, line in enumerate(body):
        lineno = off + 2
        parts = line.split()
        if len(parts) != 3:
            raise ValueError(f"line {lineno}: expected 'u v k'")
        try:
            u, v, k = (int(t) for t in parts)
        except ValueError:
            raise ValueError(f"line {lineno}: fields must be integers") from None
        if not (0 <= u < n) or not (0 <= v < n):
            raise ValueError(f"line {lineno}: vertex out of range 0..{n - 1}")
        if u == v:
            raise ValueError(f"line {lineno}: self-loops are not allowed")
        if u > v:
            u, v = v, u
        c = pair_count.get((u, v), 0) + 1
        pair_count[(u, v)] = c
        if k != c:
            raise ValueError(
                f"line {lineno}: multiplicity index {k} out of order, expected {c}"
            )
        triples.append((u, v, k))
    g = _finish(n, triples, pair_count)
    if g.delta != delta or g.pi != pi:
        raise ValueError(
            f"line 1: header bounds delta={delta} pi={pi} do not match "
            f"recomputed delta={g.delta} pi={g.pi}"
        )
    return g


# ---------------------------------------------------------------------------
# Random instances
# ---------------------------------------------------------------------------


def generate_random(
    n: int, target_delta: int, target_pi: int, seed: int
) -> Multigraph:
    """Generate a deterministic random multigraph within the given bounds.

    Runs 3 * n * target_delta attempts; each attempt draws an unordered
    vertex pair uniformly and adds an edge iff both endpoint degrees are
    below target_delta and the pair's multiplicity is below target_pi.  With
    that many attempts the degree caps saturate on all but small graphs, so
    the expected edge count approaches n * target_delta / 2.

    The result is identical for identical (n, target_delta, target_pi, seed).
    The realised bounds satisfy delta <= target_delta and pi <= target_pi
    (they may be smaller; ``build`` recomputes tight values).
    """
    if target_delta < 1 or target_pi < 1:
        raise ValueError("target_delta and target_pi must be >= 1")
    if n < 2:
        return build(max(n, 0), [])
    rng = random.Random(seed)
    deg = [0] * n
    mult: dict[tuple[int, int], int] = {}
    triples: list[tuple[int, int, int]] = []
    for _ in range(3 * n * target_delta):
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u == v:
            continue
        if u > v:
            u, v = v, u
        if deg[u] >= target_delta or deg[v] >= target_delta:
            continue
        c = mult.get((u, v), 0)
        if c >= target_pi:
            continue
        mult[(u, v)] = c + 1
        deg[u] += 1
        deg[v] += 1
        triples.append((u, v, c + 1))
    return build(n, triples)


# ---------------------------------------------------------------------------
# Line-graph distance
# ---------------------------------------------------------------------------


def line_graph_distance(
    g: Multigraph, e: int, f: int, cap: int | None = None
) -> int | None:
    """BFS distance between edges e and f in the line graph of g.

    Two edges are adjacent iff they share a vertex (parallel edges share
    two).  Returns 0 for e == f, and None when the distance exceeds ``cap``
    (or when e and f lie in different components; pass cap=None to search the
    whole component).

    Cost is O(edges within the cap ball * delta); with a cap this stays local.
    """
    if e == f:
        return 0
    seen = bytearray(g.m)
    seen[e] = 1
    frontier = [e]
    dist = 0
    adj = g.adj
    edges = g.edges
    while frontier:
        dist += 1
        if cap is not None and dist > cap:
            return None
        nxt: list[int] = []
        for eid in frontier:
            u, v, _ = edges[eid]
            for x in (u, v):
                for nid in adj[x]:
                    if not seen[nid]:
                        if nid == f:
                            return dist
                        seen[nid] = 1
                        nxt.append(nid)
        frontier = nxt
    return None
