"""Counting graphs and exact quantitative checks over partial colourings.

The constructive machinery promises more than termination: when a colouring
resists improvement at scale L, every uncoloured edge must sit at the start
of long chains, while each coloured edge is traversed by only boundedly many
of them.  This module makes those counting statements checkable on concrete
colourings:

  * audit graphs: bipartite incidence between uncoloured edges and the
    coloured edges their chains traverse -- one flavour for plain chains,
    one for second-order chains through superb path edges;

  * degree bounds: a coloured edge serves at most (delta+pi)^4 plain chains
    and at most (delta+pi)^9 second-order chains, while under
    unimprovability every uncoloured edge has plain degree at least L;

  * improvement checks: whether any uncoloured edge still admits a short
    augmenting chain, in the plain or the second-order sense;

  * fraction bounds: an unimprovable colouring leaves at most (delta+pi)^4/L
    (plain) or (delta+pi)^15/L^2 (second-order, once L > 10(delta+pi)^6) of
    the edges uncoloured;

  * superb-edge counting: among the first L path edges, some colour pair
    collects many superb edges whose second paths use only those colours;

  * weighted chain mass: the chain's total weight relative to its starting
    edge, reducing to chain length minus one at unit weights.

Pass/fail decisions use exact rational arithmetic throughout; floating point
never decides anything.  Bounds that are vacuous at the chosen parameters (a
fraction bound of at least 1, a count bound of at most 0) verdict as
"vacuous-pass", distinct from substantive passes, so batch runs can insist
on a minimum number of substantive checks.  Everything here re-derives
chains from the colouring itself; nothing trusts caller-side caches.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .chains import AlternatingPath, max_fan, vizing_chain
from .colouring import Colouring
from .iterated import superb_scan
from .multigraph import Multigraph

__all__ = [
    "AuditGraph",
    "AuditReport",
    "DegreeBoundCheck",
    "EdgeWeights",
    "FractionBound",
    "SuperbCount",
    "VERDICT_PASS",
    "VERDICT_FAIL",
    "VERDICT_VACUOUS",
    "VERDICT_NOT_APPLICABLE",
    "audit_report",
    "build_audit_graph",
    "check_degree_bounds",
    "check_unimprovable",
    "superb_count_check",
    "uncoloured_fraction_bounds",
    "weighted_chain_mass",
]

VERDICT_PASS = "pass"
VERDICT_FAIL = "fail"
VERDICT_VACUOUS = "vacuous-pass"
VERDICT_NOT_APPLICABLE = "bound not applicable"

SIMPLE = "simple"
ITERATED = "iterated"


# ---------------------------------------------------------------------------
# Audit graphs
# ---------------------------------------------------------------------------


@dataclass
class AuditGraph:
    """Bipartite incidence between uncoloured edges and coloured edges.

    For kind "simple", an uncoloured edge e is adjacent to every coloured
    edge on one of its two augmenting chains.  For kind "iterated", e is
    adjacent to every coloured edge on a second-order chain through some
    superb path edge (searched among the first L_cap path positions).

    adjacency maps each uncoloured edge to its (possibly empty) partner
    set; reverse_degrees counts, for each coloured edge that appears at
    all, how many uncoloured edges it partners.
    """

    kind: str
    adjacency: dict[int, frozenset[int]]
    reverse_degrees: dict[int, int]

    def degree(self, e: int) -> int:
        """Partner count of the uncoloured edge e (0 if e has no entry)."""
        return len(self.adjacency.get(e, ()))

    def coloured_degree(self, f: int) -> int:
        """How many uncoloured edges the coloured edge f partners."""
        return self.reverse_degrees.get(f, 0)

    def edge_count(self) -> int:
        return sum(len(p) for p in self.adjacency.values())

    def min_uncoloured_degree(self) -> tuple[int | None, int]:
        """(edge, degree) minimising over uncoloured edges; (None, 0) when
        the colouring is full."""
        best: tuple[int | None, int] = (None, 0)
        for e in sorted(self.adjacency):
            d = len(self.adjacency[e])
            if best[0] is None or d < best[1]:
                best = (e, d)
        return best

    def max_coloured_degree(self) -> tuple[int | None, int]:
        """(edge, degree) maximising over coloured edges; (None, 0) when no
        coloured edge appears in any chain."""
        best: tuple[int | None, int] = (None, 0)
        for f in sorted(self.reverse_degrees):
            d = self.reverse_degrees[f]
            if best[0] is None or d > best[1]:
                best = (f, d)
        return best


def _chain_partners(c: Colouring, x: int, e: int) -> set[int]:
    """Coloured edges of the augmenting chain for (x, e): every chain edge
    except e itself."""
    partners = set(vizing_chain(c, x, e).edges())
    partners.discard(e)
    return partners


def _second_order_partners(
    c: Colouring, x: int, e: int, L_cap: int | None
) -> set[int]:
    """Coloured edges of second-order chains through superb path edges at
    positions up to L_cap.  Empty when the fan is augmenting (no path)."""
    if max_fan(c, x, e).augmenting:
        return set()
    partners: set[int] = set()
    scan = superb_scan(c, x, e, limit=L_cap, with_chains=True)
    try:
        for entry in scan:
            if entry.superb:
                partners.update(entry.chain.edges())
    finally:
        scan.close()
    partners.discard(e)
    return partners


def build_audit_graph(
    c: Colouring, kind: str, L_cap: int | None = None
) -> AuditGraph:
    """The counting graph of the given kind for the colouring c.

    kind "simple" pairs each uncoloured edge with the coloured edges of its
    two plain chains (one per endpoint); kind "iterated" pairs it with the
    coloured edges of its second-order chains, searching superb edges among
    the first L_cap path positions (no cap when L_cap is None).  Exact and
    deterministic; the colouring is restored to its input state.
    """
    if kind not in (SIMPLE, ITERATED):
        raise ValueError(f"unknown audit graph kind {kind!r}")
    adjacency: dict[int, frozenset[int]] = {}
    reverse: Counter[int] = Counter()
    for e in c.uncoloured():
        u, v, _ = c.graph.edges[e]
        partners: set[int] = set()
        for x in (u, v):
            if kind == SIMPLE:
                partners |= _chain_partners(c, x, e)
            else:
                partners |= _second_order_partners(c, x, e, L_cap)
        adjacency[e] = frozenset(partners)
        reverse.update(partners)
    return AuditGraph(kind=kind, adjacency=adjacency, reverse_degrees=dict(reverse))


# ---------------------------------------------------------------------------
# Degree bounds
# ---------------------------------------------------------------------------


class DegreeBoundCheck(NamedTuple):
    """Outcome of a coloured-side degree check: every coloured edge's
    degree must stay within `bound`; `worst_edge` attains `max_degree`
    (None when no coloured edge appears in the audit graph)."""

    ok: bool
    bound: int
    max_degree: int
    worst_edge: int | None


def check_degree_bounds(
    audit_graph: AuditGraph, delta: int, pi: int
) -> DegreeBoundCheck:
    """Check every coloured edge's degree against the cap for the kind:
    (delta+pi)^4 for plain chains, (delta+pi)^9 for second-order ones."""
    power = 4 if audit_graph.kind == SIMPLE else 9
    bound = (delta + pi) ** power
    worst, max_degree = audit_graph.max_coloured_degree()
    return DegreeBoundCheck(
        ok=max_degree <= bound, bound=bound, max_degree=max_degree, worst_edge=worst
    )


# ---------------------------------------------------------------------------
# Improvement checks
# ---------------------------------------------------------------------------


def _second_path_length(entry_path: AlternatingPath | None) -> int:
    return 0 if entry_path is None else len(entry_path.edges)


def check_unimprovable(c: Colouring, L: int, mode: str = ITERATED) -> bool:
    """Whether no uncoloured edge admits a short improvement at scale L.

    For every uncoloured edge e and endpoint x, the fan must not be
    augmenting and the alternating path must have at least L edges.  In
    "iterated" mode (the default), additionally every superb path edge
    within the first L positions must lead to a second path of at least L
    edges -- an empty second path (always the case for Type0) violates this
    whenever L > 0.  "simple" mode checks only the fan and path clauses.
    """
    if mode not in (SIMPLE, ITERATED):
        raise ValueError(f"unknown improvement mode {mode!r}")
    for e in c.uncoloured():
        u, v, _ = c.graph.edges[e]
        for x in (u, v):
            if max_fan(c, x, e).augmenting:
                return False
            chain = vizing_chain(c, x, e)
            if len(chain.tail.edges) < L:
                return False
            if mode == SIMPLE:
                continue
            scan = superb_scan(c, x, e, limit=L)
            try:
                for entry in scan:
                    if entry.superb and _second_path_length(entry.second_path) < L:
                        return False
            finally:
                scan.close()
    return True


# ---------------------------------------------------------------------------
# Uncoloured fraction bounds
# ---------------------------------------------------------------------------


class FractionBound(NamedTuple):
    """Uncoloured fraction against the unimprovability bound.  verdict is
    one of "pass", "fail", "vacuous-pass" (bound at least 1) or "bound not
    applicable" (precondition unmet; fraction and bound still reported)."""

    fraction: Fraction
    bound: Fraction
    verdict: str

    @property
    def passed(self) -> bool:
        return self.verdict in (VERDICT_PASS, VERDICT_VACUOUS)


def fraction_bound_value(mode: str, delta: int, pi: int, L: int) -> Fraction:
    """The bound formula alone: (delta+pi)^4/L for plain improvement,
    (delta+pi)^15/L^2 for the second-order variant."""
    if mode == SIMPLE:
        return Fraction((delta + pi) ** 4, L)
    if mode == ITERATED:
        return Fraction((delta + pi) ** 15, L * L)
    raise ValueError(f"unknown improvement mode {mode!r}")


def _fraction_verdict(fraction: Fraction, bound: Fraction, applicable: bool) -> str:
    if not applicable:
        return VERDICT_NOT_APPLICABLE
    if fraction > bound:
        return VERDICT_FAIL
    if bound >= 1:
        return VERDICT_VACUOUS
    return VERDICT_PASS


def uncoloured_fraction_bounds(c: Colouring, L: int, mode: str) -> FractionBound:
    """Measure the uncoloured fraction |U_c|/|E| and compare it with the
    bound for the mode.

    The bound only applies when check_unimprovable holds for the mode's
    definition; the second-order bound additionally needs L > 10(delta+pi)^6.
    When either precondition fails the verdict is "bound not applicable"
    and no pass/fail claim is made (the formula value is still reported).
    On real colourings satisfying the preconditions the "fail" verdict
    should be unreachable; it exists so a violation is loud, not silent.
    """
    g = c.graph
    bound = fraction_bound_value(mode, g.delta, g.pi, L)
    fraction = Fraction(0) if g.m == 0 else Fraction(c.uncoloured_count, g.m)
    applicable = check_unimprovable(c, L, mode=mode)
    if mode == ITERATED and not 10 * (g.delta + g.pi) ** 6 < L:
        applicable = False
    return FractionBound(
        fraction=fraction, bound=bound, verdict=_fraction_verdict(fraction, bound, applicable)
    )


# ---------------------------------------------------------------------------
# Superb-edge counting
# ---------------------------------------------------------------------------


class SuperbCount(NamedTuple):
    """Best colour-pair bucket of superb edges in a path prefix.  count is
    the number of superb edges among the first L path positions whose
    second path uses only colours from {gamma, theta}; verdict compares it
    with `bound` ("vacuous-pass" when the bound is not positive)."""

    gamma: int
    theta: int
    count: int
    bound: Fraction
    verdict: str

    @property
    def passed(self) -> bool:
        return self.verdict in (VERDICT_PASS, VERDICT_VACUOUS)


def superb_count_bound(delta: int, pi: int, L: int) -> Fraction:
    """The guaranteed size of the best bucket:
    (L/2 - delta^5 - 1) / (3 (delta+pi)^2) - 2 delta^3."""
    return (Fraction(L, 2) - delta**5 - 1) / (3 * (delta + pi) ** 2) - 2 * delta**3


def _path_colour_set(path: AlternatingPath | None) -> frozenset[int]:
    """Colours actually used by a second path: empty paths use none and a
    single-edge path uses only its first colour."""
    if path is None or not path.edges:
        return frozenset()
    if len(path.edges) == 1:
        return frozenset((path.alpha,))
    return frozenset((path.alpha, path.beta))


def superb_count_check(c: Colouring, e: int, x: int, L: int) -> SuperbCount:
    """Bucket the superb edges among the first L path positions by the
    colour pair of their second paths and return the best bucket.

    A superb edge counts for the pair {gamma, theta} when its second path
    uses only those colours, so Type0 edges (empty second path) count for
    every pair and single-colour paths count for every pair containing
    that colour.  Requires the alternating path to have at least L edges;
    a shorter path (or an augmenting fan, which has no path) is an error.
    Ties prefer the lexicographically smallest pair.
    """
    if max_fan(c, x, e).augmenting:
        raise ValueError(
            "the fan around the edge is augmenting; there is no alternating "
            "path to count superb edges in"
        )
    chain = vizing_chain(c, x, e)
    path_len = len(chain.tail.edges)
    if path_len < L:
        raise ValueError(
            f"alternating path has {path_len} edges but the count needs at least L={L}"
        )
    empty_count = 0
    by_single: Counter[int] = Counter()
    by_pair: Counter[frozenset[int]] = Counter()
    scan = superb_scan(c, x, e, limit=L)
    try:
        for entry in scan:
            if not entry.superb:
                continue
            cols = _path_colour_set(entry.second_path)
            if len(cols) == 0:
                empty_count += 1
            elif len(cols) == 1:
                by_single[next(iter(cols))] += 1
            else:
                by_pair[cols] += 1
    finally:
        scan.close()
    palette = c.graph.palette
    best: tuple[int, int, int] | None = None
    for gamma in range(1, palette + 1):
        for theta in range(gamma + 1, palette + 1):
            count = (
                empty_count
                + by_single[gamma]
                + by_single[theta]
                + by_pair[frozenset((gamma, theta))]
            )
            if best is None or count > best[2]:
                best = (gamma, theta, count)
    if best is None:
        raise AssertionError("palette has fewer than two colours")
    bound = superb_count_bound(c.graph.delta, c.graph.pi, L)
    if bound <= 0:
        verdict = VERDICT_VACUOUS
    elif best[2] >= bound:
        verdict = VERDICT_PASS
    else:
        verdict = VERDICT_FAIL
    return SuperbCount(
        gamma=best[0], theta=best[1], count=best[2], bound=bound, verdict=verdict
    )


# ---------------------------------------------------------------------------
# Weighted chain mass
# ---------------------------------------------------------------------------


@dataclass
class EdgeWeights:
    """Positive rational weights on edges, looked up by edge id."""

    weight: dict[int, Fraction]

    def __post_init__(self) -> None:
        self.weight = {e: Fraction(w) for e, w in self.weight.items()}
        for e, w in self.weight.items():
            if w <= 0:
                raise ValueError(f"edge {e}: weight {w} is not positive")

    @classmethod
    def unit(cls, graph: Multigraph) -> "EdgeWeights":
        return cls({e: Fraction(1) for e in range(graph.m)})

    def __getitem__(self, e: int) -> Fraction:
        return self.weight[e]


def weighted_chain_mass(c: Colouring, e: int, x: int, weights) -> Fraction:
    """Total weight of the chain for (x, e) relative to e's own weight:
    sum of weight(f)/weight(e) over the chain's edges f other than e.
    With unit weights this is the chain length minus one.  weights may be
    an EdgeWeights or any mapping from edge id to a positive rational.
    """
    if c.colour_of(e) != 0:
        raise ValueError(f"edge {e} is coloured; chain mass needs an uncoloured edge")
    total = Fraction(0)
    for f in vizing_chain(c, x, e).edges():
        if f != e:
            total += Fraction(weights[f])
    return total / Fraction(weights[e])


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------


def _frac_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


@dataclass
class AuditReport:
    """One colouring's worth of audit results, everything recomputable from
    the colouring itself.  superb_count_checks rows are
    (e, x, gamma, theta, count, bound, verdict)."""

    max_deg_simple: int
    max_deg_iterated: int
    min_uncoloured_deg: int
    uncoloured_fraction: Fraction
    superb_count_checks: list[tuple[int, int, int, int, int, Fraction, str]]
    weighted_min_mass: Fraction | None

    def to_json(self) -> str:
        doc = {
            "max_deg_simple": self.max_deg_simple,
            "max_deg_iterated": self.max_deg_iterated,
            "min_uncoloured_deg": self.min_uncoloured_deg,
            "uncoloured_fraction": _frac_str(self.uncoloured_fraction),
            "superb_count_checks": [
                [e, x, gamma, theta, count, _frac_str(bound), verdict]
                for (e, x, gamma, theta, count, bound, verdict) in self.superb_count_checks
            ],
            "weighted_min_mass": (
                None if self.weighted_min_mass is None else _frac_str(self.weighted_min_mass)
            ),
        }
        return json.dumps(doc, sort_keys=True, indent=2)


def audit_report(
    c: Colouring,
    L: int,
    superb_probes: tuple[tuple[int, int], ...] = (),
    weights=None,
) -> AuditReport:
    """Assemble the standard report: both audit graphs (second-order search
    capped at L), their extreme degrees, the exact uncoloured fraction,
    superb counts for the requested (e, x) probes, and the minimum weighted
    chain mass over all uncoloured edges and endpoints (unit weights when
    none are given; None when the colouring is full)."""
    simple = build_audit_graph(c, SIMPLE)
    iterated = build_audit_graph(c, ITERATED, L_cap=L)
    rows = []
    for e, x in superb_probes:
        sc = superb_count_check(c, e, x, L)
        rows.append((e, x, sc.gamma, sc.theta, sc.count, sc.bound, sc.verdict))
    if weights is None:
        weights = EdgeWeights.unit(c.graph)
    min_mass: Fraction | None = None
    for e in c.uncoloured():
        u, v, _ = c.graph.edges[e]
        for x in (u, v):
            mass = weighted_chain_mass(c, e, x, weights)
            if min_mass is None or mass < min_mass:
                min_mass = mass
    fraction = Fraction(0) if c.graph.m == 0 else Fraction(c.uncoloured_count, c.graph.m)
    return AuditReport(
        max_deg_simple=simple.max_coloured_degree()[1],
        max_deg_iterated=iterated.max_coloured_degree()[1],
        min_uncoloured_deg=simple.min_uncoloured_degree()[1],
        uncoloured_fraction=fraction,
        superb_count_checks=rows,
        weighted_min_mass=min_mass,
    )
