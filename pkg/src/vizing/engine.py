"""Colouring drivers: sequential colourer, round scheduler, orientation.

Three ways to put the chain machinery to work:

  * colour_sequential colours every edge of a finite multigraph in exactly
    m augmentations, one chain per edge, giving a full proper colouring
    with delta + pi colours;

  * run_scheduler colours rounds of far-apart edges simultaneously, but
    only ever applies chains of at most 3L edges: plain chains whose path
    is shorter than L, or second-order chains through a superb edge within
    the first L path positions whose second path is also short.  It stops
    once a full cycle of its schedule finds nothing to do, leaving a
    colouring that cannot be improved at scale L -- the state the audit
    module's fraction bounds apply to;

  * orient turns a full colouring of a multiplicity-1 graph into an edge
    orientation with out-degree at most ceil((delta+2)/2), by pairing
    colour classes into unions of paths and cycles and orienting each
    component consistently.

The scheduler's classes are pairwise more than 6L apart in the line graph,
so the chains applied within one round are vertex-disjoint (asserted) and
the result does not depend on application order.  Everything is
deterministic given (graph, L, seed); round logs are emitted as JSON lines
with stable keys.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import TextIO

from .chains import augment_in_place, vizing_chain
from .colouring import Colouring
from .iterated import superb_scan
from .multigraph import Multigraph

__all__ = [
    "MaxRoundsExceeded",
    "Orientation",
    "ScheduleState",
    "build_schedule",
    "colour_sequential",
    "orient",
    "run_scheduler",
]


# ---------------------------------------------------------------------------
# Sequential colouring
# ---------------------------------------------------------------------------


def colour_sequential(g: Multigraph) -> Colouring:
    """A full proper colouring of g in exactly m augmentations.

    Edges are handled in index order; each is augmented along the chain
    from its smaller endpoint (edge triples store that endpoint first).
    Augmentation recolours but never uncolours, so every edge is uncoloured
    when its turn comes and coloured for good afterwards.
    """
    c = Colouring.empty(g)
    for e in range(g.m):
        augment_in_place(c, vizing_chain(c, g.edges[e][0], e).edges())
    return c


# ---------------------------------------------------------------------------
# Schedules
# ---------------------------------------------------------------------------


def _line_ball(g: Multigraph, start: int, radius: int) -> dict[int, int]:
    """Line-graph distances from the edge `start`, capped at `radius`."""
    dist = {start: 0}
    frontier = [start]
    d = 0
    while frontier and d < radius:
        d += 1
        nxt = []
        for f in frontier:
            u, v, _ = g.edges[f]
            for x in (u, v):
                for h in g.adj[x]:
                    if h not in dist:
                        dist[h] = d
                        nxt.append(h)
        frontier = nxt
    return dist


def _line_components(g: Multigraph) -> tuple[list[int], list[int]]:
    """Line-graph component id per edge, plus each component root's
    eccentricity (the BFS depth from the component's smallest edge id)."""
    comp = [-1] * g.m
    eccs: list[int] = []
    for root in range(g.m):
        if comp[root] != -1:
            continue
        cid = len(eccs)
        comp[root] = cid
        frontier = [root]
        ecc = 0
        while frontier:
            nxt = []
            for f in frontier:
                u, v, _ = g.edges[f]
                for x in (u, v):
                    for h in g.adj[x]:
                        if comp[h] == -1:
                            comp[h] = cid
                            nxt.append(h)
            if nxt:
                ecc += 1
            frontier = nxt
        eccs.append(ecc)
    return comp, eccs


def build_schedule(
    g: Multigraph, c: Colouring, L: int, seed: int
) -> list[tuple[int, ...]]:
    """Partition the uncoloured edges of c into classes pairwise more than
    6L apart in the line graph; the scheduler cycles through the returned
    list forever, so every edge that stays uncoloured is revisited.

    Edges in different line-graph components are arbitrarily far apart and
    may always share a class.  When every component fits inside radius 3L
    of its root, any two edges of one component are within 6L, so the
    classes are exactly the round-robin transversals: the i-th class takes
    the i-th uncoloured edge (in seed-shuffled order) of every component.
    Otherwise a greedy colouring of the 6L-th power of the line graph
    assigns each edge the first class free within its 6L ball.  Classes
    come out sorted internally; requires L > 2*delta so that chain
    modifications fit in 3L edges.
    """
    if L <= 2 * g.delta:
        raise ValueError(
            f"L={L} is too small: chain modifications must fit in 3L edges, "
            f"which needs L > 2*delta = {2 * g.delta}"
        )
    order = c.uncoloured()
    if not order:
        return []
    random.Random(seed).shuffle(order)
    comp, eccs = _line_components(g)
    if all(ecc <= 3 * L for ecc in eccs):
        buckets: list[list[int]] = [[] for _ in eccs]
        for f in order:
            buckets[comp[f]].append(f)
        classes = []
        i = 0
        while True:
            cls = [b[i] for b in buckets if i < len(b)]
            if not cls:
                return classes
            classes.append(tuple(sorted(cls)))
            i += 1
    assigned: dict[int, int] = {}
    greedy: list[list[int]] = []
    for f in order:
        ball = _line_ball(g, f, 6 * L)
        used = {assigned[h] for h in ball if h in assigned}
        n = 0
        while n in used:
            n += 1
        assigned[f] = n
        if n == len(greedy):
            greedy.append([])
        greedy[n].append(f)
    return [tuple(sorted(cls)) for cls in greedy]


# ---------------------------------------------------------------------------
# The round scheduler
# ---------------------------------------------------------------------------


@dataclass
class ScheduleState:
    """Scheduler progress, dumped when the round budget runs out: the
    colouring so far, the scale L, rounds completed, the cyclic class
    list, and per-round recoloured-edge counts."""

    colouring: Colouring
    L: int
    round: int
    schedule: list[tuple[int, ...]]
    changed_log: list[int] = field(default_factory=list)


class MaxRoundsExceeded(RuntimeError):
    """The scheduler hit its round budget before settling; `state` holds
    the partial colouring and round statistics at the point of failure."""

    def __init__(self, state: ScheduleState):
        self.state = state
        super().__init__(
            f"scheduler stopped after {state.round} rounds with "
            f"{state.colouring.uncoloured_count} edges still uncoloured"
        )


def _second_len(path) -> int:
    return 0 if path is None else len(path.edges)


def _candidate_chain(c: Colouring, e: int, L: int) -> list[int] | None:
    """The edge sequence to augment for e at scale L, or None when every
    route is too long.

    Witnesses are tried smallest first: for each endpoint, the plain chain
    qualifies when its fan is augmenting (no path at all) or its path has
    fewer than L edges; otherwise the first superb edge within the first L
    path positions whose second path has at most L edges supplies the
    second-order chain.
    """
    u, v, _ = c.graph.edges[e]
    for x in (u, v):
        chain = vizing_chain(c, x, e)
        if chain.tail is None or len(chain.tail.edges) < L:
            return chain.edges()
        scan = superb_scan(c, x, e, limit=L, with_chains=True)
        try:
            for entry in scan:
                if entry.superb and _second_len(entry.second_path) <= L:
                    return entry.chain.edges()
        finally:
            scan.close()
    return None


def run_scheduler(
    g: Multigraph,
    L: int,
    seed: int,
    max_rounds: int | None = None,
    log: TextIO | None = None,
) -> Colouring:
    """Colour g from scratch by rounds of short augmentations.

    Each round takes the next class of the cyclic schedule, collects the
    still-uncoloured members that admit a chain of at most 3L edges (see
    _candidate_chain), and augments all of them against the same snapshot;
    the class spacing makes those chains vertex-disjoint, which is
    asserted, so the application order is irrelevant.  Stops once a full
    cycle of the schedule produces no candidates; the result then cannot
    be improved at scale L, which check_unimprovable re-verifies.

    When `log` is given, one JSON object per round is written with keys
    round, class_index, candidates, augmented, recoloured and
    uncoloured_remaining.  Raises MaxRoundsExceeded (carrying the state)
    if more than max_rounds rounds would be needed.
    """
    c = Colouring.empty(g)
    schedule = build_schedule(g, c, L, seed)
    state = ScheduleState(colouring=c, L=L, round=0, schedule=schedule)
    if not schedule:
        return c
    empty_streak = 0
    index = 0
    while empty_streak < len(schedule):
        if max_rounds is not None and state.round >= max_rounds:
            raise MaxRoundsExceeded(state)
        cls = schedule[index]
        chains: list[list[int]] = []
        for e in cls:
            if c.colour_of(e) == 0:
                q = _candidate_chain(c, e, L)
                if q is not None:
                    assert len(q) <= 3 * L, "chain exceeds the 3L budget"
                    chains.append(q)
        seen: set[int] = set()
        for q in chains:
            verts = {w for f in q for w in g.edges[f][:2]}
            assert not (verts & seen), "chains within a round must be vertex-disjoint"
            seen |= verts
        recoloured = 0
        for q in chains:
            recoloured += augment_in_place(c, q)
        assert recoloured <= 3 * L * len(chains)
        state.round += 1
        state.changed_log.append(recoloured)
        if log is not None:
            log.write(
                json.dumps(
                    {
                        "round": state.round,
                        "class_index": index,
                        "candidates": len(chains),
                        "augmented": len(chains),
                        "recoloured": recoloured,
                        "uncoloured_remaining": c.uncoloured_count,
                    },
                    sort_keys=True,
                )
                + "\n"
            )
        empty_streak = 0 if chains else empty_streak + 1
        index = (index + 1) % len(schedule)
    return c


# ---------------------------------------------------------------------------
# Orientation
# ---------------------------------------------------------------------------


@dataclass
class Orientation:
    """A direction for every edge, as edge id -> (tail, head)."""

    direction: dict[int, tuple[int, int]]

    def out_degree_counts(self) -> dict[int, int]:
        """Out-degree per vertex, counting only vertices with an out-edge."""
        counts: dict[int, int] = {}
        for tail, _ in self.direction.values():
            counts[tail] = counts.get(tail, 0) + 1
        return counts

    def max_out_degree(self) -> int:
        counts = self.out_degree_counts()
        return max(counts.values(), default=0)


def _orient_walk(
    g: Multigraph,
    incident: dict[int, list[int]],
    visited: set[int],
    start: int,
    direction: dict[int, tuple[int, int]],
) -> None:
    """Walk a path/cycle component from `start`, orienting every edge along
    the walk; the smallest-id unvisited edge fixes a cycle's direction."""
    cur = start
    while True:
        pending = [f for f in incident[cur] if f not in visited]
        if not pending:
            return
        f = min(pending)
        visited.add(f)
        u, v, _ = g.edges[f]
        other = v if cur == u else u
        direction[f] = (cur, other)
        cur = other


def orient(c: Colouring) -> Orientation:
    """Orient the edges of a fully coloured multiplicity-1 graph with max
    out-degree at most ceil((delta+2)/2).

    Colours are sorted and grouped into pairs (plus one leftover
    singleton when their number is odd).  A pair's union has max degree 2
    (asserted), so it splits into paths and cycles, each oriented
    consistently: one out-edge per vertex per group at most.  A singleton
    group is a matching, oriented from the smaller endpoint.  With at most
    delta + 1 colours this gives at most ceil((delta+2)/2) groups.
    """
    g = c.graph
    if g.pi > 1:
        raise ValueError(
            f"graph has parallel edges (pi={g.pi}); orientation covers "
            "multiplicity 1 only"
        )
    if c.uncoloured_count:
        raise ValueError(
            f"{c.uncoloured_count} edges are uncoloured; orientation needs "
            "a full colouring"
        )
    used = sorted({c.colour_of(e) for e in range(g.m)})
    direction: dict[int, tuple[int, int]] = {}
    for i in range(0, len(used), 2):
        group = used[i : i + 2]
        members = [e for e in range(g.m) if c.colour_of(e) in group]
        if len(group) == 1:
            for e in members:
                u, v, _ = g.edges[e]
                direction[e] = (u, v)
            continue
        incident: dict[int, list[int]] = {}
        for e in members:
            u, v, _ = g.edges[e]
            incident.setdefault(u, []).append(e)
            incident.setdefault(v, []).append(e)
        for lst in incident.values():
            assert len(lst) <= 2, "a colour-pair union must split into paths and cycles"
        visited: set[int] = set()
        for start in sorted(w for w, lst in incident.items() if len(lst) == 1):
            if incident[start][0] not in visited:
                _orient_walk(g, incident, visited, start, direction)
        for start in sorted(incident):
            if any(f not in visited for f in incident[start]):
                _orient_walk(g, incident, visited, start, direction)
    return Orientation(direction=direction)
