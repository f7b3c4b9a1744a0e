"""Alternating paths, maximal fans, and the augmenting chains built from them.

Given a proper partial colouring, an uncoloured edge e and an endpoint x, the
constructions here produce a chain that is guaranteed to be augmenting, so
one shift-plus-colour step extends the colouring.  Three layers:

  * alternating paths: maximal walks through edges coloured alpha or beta,
    starting at a vertex missing beta.  Since a proper colouring has at most
    one edge of each colour per vertex, the walk is forced and the path is
    unique;

  * maximal fans around x: edge sequences (e_0=e, e_1, ...) pivoting on x,
    where each next edge's colour is the minimal colour available at the
    previous far endpoint (availability excludes colours already chosen at
    the same far endpoint, which matters when parallel edges repeat it);

  * the full chain: the fan itself when augmenting, otherwise the fan prefix
    through the first critical index followed by an alternating path that
    avoids x.

Everything is a pure function of a colouring snapshot and deterministic:
minimal-colour choices use the natural integer order, and the one place the
construction could branch (two candidate critical indices) has a fixed
preference.  Safe to run concurrently on shared read-only snapshots.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from collections.abc import Sequence

from .colouring import ChainStatus, Colouring, classify_chain

__all__ = [
    "AlternatingPath",
    "Fan",
    "VizingChain",
    "alternating_path",
    "prefix_stability_check",
    "max_fan",
    "repeated_colour_indices",
    "vizing_chain",
    "augment",
    "augment_in_place",
]


# ---------------------------------------------------------------------------
# Alternating paths
# ---------------------------------------------------------------------------


@dataclass
class AlternatingPath:
    """A maximal alternating path.

    ``edges`` is the walk's edge sequence: colours alternate alpha, beta,
    alpha, ... starting from ``start_vertex``.  Empty iff alpha is missing at
    the start vertex, in which case last_vertex == start_vertex.
    """

    start_vertex: int
    alpha: int
    beta: int
    edges: list[int]
    last_vertex: int

    def __len__(self) -> int:
        return len(self.edges)


def _edge_at_with_colour(c: Colouring, x: int, col: int) -> int | None:
    """The unique edge at x coloured col, or None (uniqueness by properness)."""
    colours = c.colours
    for e in c.graph.adj[x]:
        if colours[e] == col:
            return e
    return None


def alternating_path(c: Colouring, x: int, alpha: int, beta: int) -> AlternatingPath:
    """The maximal alternating alpha/beta-path starting at vertex x.

    Walks the subgraph of edges coloured alpha or beta, starting with an
    alpha edge at x.  Requires alpha != beta and beta missing at x; under
    those preconditions the path is unique, edge-injective, and visits no
    vertex more than twice.

    Raises ValueError on a precondition violation (this is a contract error,
    not an empty result).
    """
    g = c.graph
    palette = g.palette
    if not (1 <= alpha <= palette) or not (1 <= beta <= palette):
        raise ValueError(f"colours must lie in 1..{palette}")
    if alpha == beta:
        raise ValueError("alpha and beta must differ")
    if not (0 <= x < g.n):
        raise ValueError(f"vertex {x} out of range")
    if not c.is_missing(x, beta):
        raise ValueError(f"colour {beta} is not missing at vertex {x}")
    edges: list[int] = []
    v = x
    want, succ = alpha, beta
    guard = g.m + 1
    while True:
        e = _edge_at_with_colour(c, v, want)
        if e is None:
            break
        edges.append(e)
        v = g.other(e, v)
        want, succ = succ, want
        guard -= 1
        if guard < 0:  # unreachable: the walk uses each edge at most once
            raise AssertionError("alternating walk failed to terminate")
    return AlternatingPath(
        start_vertex=x, alpha=alpha, beta=beta, edges=edges, last_vertex=v
    )


def prefix_stability_check(
    c: Colouring, d: Colouring, x: int, alpha: int, beta: int
) -> bool:
    """Oracle: is the alpha/beta-path under c a prefix of the one under d?

    Preconditions (violations raise ValueError, distinctly from a False
    result): both colourings proper on the same graph, beta missing at x in
    both, and c and d agree on every edge of the path under c.
    """
    if c.graph is not d.graph:
        raise ValueError("colourings must colour the same graph")
    p_c = alternating_path(c, x, alpha, beta)
    if not d.is_missing(x, beta):
        raise ValueError(
            f"precondition violated: colour {beta} not missing at {x} under d"
        )
    for e in p_c.edges:
        if c.colour_of(e) != d.colour_of(e):
            raise ValueError(
                f"precondition violated: colourings disagree on path edge {e}"
            )
    p_d = alternating_path(d, x, alpha, beta)
    return p_d.edges[: len(p_c.edges)] == p_c.edges


# ---------------------------------------------------------------------------
# Maximal fans
# ---------------------------------------------------------------------------


@dataclass
class Fan:
    """A maximal fan around ``centre`` starting at an uncoloured edge.

    ``edges`` = (e_0, ..., e_k), all containing the centre; ``far_endpoints``
    their other endpoints (v_0, ..., v_k); ``colour_seq`` = (a_0, ..., a_{k-1})
    with c(e_{i+1}) = a_i the minimal available colour at step i.  The colour
    sequence never repeats (its edges are distinct coloured edges at one
    vertex), so ``next_colour`` -- the minimal available colour at the final
    step, whose edge at the centre either does not exist or already sits in
    the fan -- repeats at most one earlier choice.

    augmenting: whether the whole fan, viewed as a chain, is augmenting.
    next_colour: the stop colour a_k.
    repeat_pos: position p >= 1 with edges[p] the centre's next_colour-edge,
        or None when no such edge exists (in which case the fan always turns
        out to be augmenting).
    """

    centre: int
    edges: list[int]
    far_endpoints: list[int]
    colour_seq: list[int]
    augmenting: bool
    next_colour: int
    repeat_pos: int | None


def _min_in_mask(mask: int, big_colour: int | None) -> int:
    """Minimal colour in a nonzero mask; big_colour, if given, compares
    larger than every other colour."""
    if big_colour is not None:
        rest = mask & ~(1 << (big_colour - 1))
        if rest:
            mask = rest
    return (mask & -mask).bit_length()


def max_fan(
    c: Colouring, x: int, e: int, big_colour: int | None = None
) -> Fan:
    """The unique maximal fan around x starting at the uncoloured edge e.

    Construction: repeatedly take the minimal colour available at the current
    far endpoint (missing colours there, minus colours already chosen at
    earlier steps with the same far endpoint -- possible with parallel
    edges).  If the centre has no edge of that colour, or that edge is
    already in the fan, stop; otherwise append it.

    ``big_colour`` reorders the palette so that one colour compares larger
    than all others; the default natural order is used everywhere except the
    shadow-fan comparison in the iterated machinery.

    The augmenting flag evaluates the full fan as a chain.
    """
    g = c.graph
    if c.colour_of(e) != 0:
        raise ValueError(f"edge {e} is coloured; fans start at uncoloured edges")
    u, v, _ = g.edges[e]
    if x != u and x != v:
        raise ValueError(f"vertex {x} is not an endpoint of edge {e}")
    edges = [e]
    far = [g.other(e, x)]
    colour_seq: list[int] = []
    chosen_at: dict[int, int] = {}
    colours = c.colours
    while True:
        tip = far[-1]
        avail = c.missing_mask(tip) & ~chosen_at.get(tip, 0)
        if avail == 0:  # cannot happen: at most pi-1 exclusions of >= pi missing
            raise AssertionError("fan step has no available colour")
        col = _min_in_mask(avail, big_colour)
        nxt = _edge_at_with_colour(c, x, col)
        if nxt is None:
            next_colour, repeat_pos = col, None
            break
        if nxt in edges:
            next_colour, repeat_pos = col, edges.index(nxt)
            break
        chosen_at[tip] = chosen_at.get(tip, 0) | (1 << (col - 1))
        edges.append(nxt)
        far.append(g.other(nxt, x))
        colour_seq.append(col)
    augmenting = classify_chain(c, edges) is ChainStatus.AUGMENTING
    return Fan(
        centre=x,
        edges=edges,
        far_endpoints=far,
        colour_seq=colour_seq,
        augmenting=augmenting,
        next_colour=next_colour,
        repeat_pos=repeat_pos,
    )


def repeated_colour_indices(
    c: Colouring, x: int, e: int, fan: Fan | None = None
) -> tuple[int, int, int]:
    """The indices (j, k) with equal fan colours a_j = a_k =: beta.

    k is the fan's final index and beta its stop colour; j+1 is the position
    of the centre's beta-edge inside the fan.  Defined only for
    non-augmenting fans (ValueError otherwise); then the stop was forced by
    a repeated edge, the pair is unique (the colour sequence is injective),
    and the far endpoints v_j, v_k differ.
    """
    if fan is None:
        fan = max_fan(c, x, e)
    if fan.augmenting:
        raise ValueError("fan is augmenting; no repeated colour pair need exist")
    if fan.repeat_pos is None:  # unreachable: a no-edge stop is augmenting
        raise AssertionError("non-augmenting fan without a repeated edge")
    k = len(fan.edges) - 1
    beta = fan.next_colour
    j = fan.repeat_pos - 1
    assert 0 <= j < k and fan.colour_seq[j] == beta
    assert fan.far_endpoints[j] != fan.far_endpoints[k]
    return j, k, beta


# ---------------------------------------------------------------------------
# The full chain
# ---------------------------------------------------------------------------


@dataclass
class VizingChain:
    """An augmenting chain: a fan prefix, possibly followed by a path.

    When the fan is augmenting the chain is the whole fan and there is no
    tail.  Otherwise the chain keeps the fan prefix through the first
    critical index i (that is, i+1 edges) and appends the alternating
    alpha/beta-path from v_i, which avoids the centre.
    """

    fan: Fan
    fan_prefix_len: int
    tail: AlternatingPath | None
    first_critical_index: int | None
    alpha: int | None
    beta: int | None
    _edge_list: list[int] = field(default=None, repr=False)  # type: ignore[assignment]

    def edges(self) -> list[int]:
        """The chain's edge sequence (cached)."""
        if self._edge_list is None:
            seq = self.fan.edges[: self.fan_prefix_len]
            if self.tail is not None:
                seq = seq + self.tail.edges
            self._edge_list = seq
        return self._edge_list

    def path_edges(self) -> list[int]:
        """The tail path's edges ([] when the fan was augmenting)."""
        return [] if self.tail is None else self.tail.edges

    def __len__(self) -> int:
        return len(self.edges())


def _path_avoids(path: AlternatingPath, x: int) -> bool:
    # x misses one of the two path colours, so it has at most one edge in the
    # two-coloured subgraph and can only be an endpoint of the path.
    return path.last_vertex != x


def vizing_chain(c: Colouring, x: int, e: int) -> VizingChain:
    """The augmenting chain for the uncoloured edge e around endpoint x.

    If the maximal fan is augmenting, that fan is the chain.  Otherwise let
    alpha = min missing colour at x and beta the fan's repeated colour; of
    the two candidate indices from :func:`repeated_colour_indices`, the first
    critical index i is one whose alternating alpha/beta-path from v_i avoids
    x (at least one does; when both do, i = j is preferred), and the chain is
    the fan prefix through e_i followed by that path.

    The result always classifies as augmenting.
    """
    fan = max_fan(c, x, e)
    if fan.augmenting:
        return VizingChain(
            fan=fan,
            fan_prefix_len=len(fan.edges),
            tail=None,
            first_critical_index=None,
            alpha=None,
            beta=None,
        )
    j, k, beta = repeated_colour_indices(c, x, e, fan)
    alpha = c.min_missing(x)
    # beta sits on an edge at x (the repeat edge), hence beta differs from
    # every colour missing at x, in particular from alpha.
    path_j = alternating_path(c, fan.far_endpoints[j], alpha, beta)
    if _path_avoids(path_j, x):
        i, tail = j, path_j
    else:
        path_k = alternating_path(c, fan.far_endpoints[k], alpha, beta)
        if not _path_avoids(path_k, x):  # unreachable: both ends at x
            raise AssertionError("both candidate alternating paths end at x")
        i, tail = k, path_k
    return VizingChain(
        fan=fan,
        fan_prefix_len=i + 1,
        tail=tail,
        first_critical_index=i,
        alpha=alpha,
        beta=beta,
    )


# ---------------------------------------------------------------------------
# Augmentation
# ---------------------------------------------------------------------------


def augment_in_place(c: Colouring, chain: Sequence[int]) -> int:
    """Shift c along an augmenting chain and colour its last edge with the
    minimal colour missing at both endpoints.  Returns the number of edges
    whose colour actually changed.  The caller guarantees the chain is
    augmenting; the colouring's own invariants abort on violations.
    """
    old = [c.colour_of(f) for f in chain]
    c.shift_in_place(chain)
    last = chain[-1]
    u, v, _ = c.graph.edges[last]
    common = c.missing_mask(u) & c.missing_mask(v)
    if common == 0:
        raise ValueError("chain is not augmenting: no common missing colour")
    c.assign(last, (common & -common).bit_length())
    return sum(1 for f, col in zip(chain, old) if c.colour_of(f) != col)


def augment(c: Colouring, chain) -> Colouring:
    """Pure augmentation: returns a new colouring with one more coloured
    edge, all changes confined to the chain.  Accepts an edge sequence or
    any chain object with an ``edges()`` method.  The chain must classify
    as augmenting (ValueError otherwise)."""
    seq = chain.edges() if callable(getattr(chain, "edges", None)) else list(chain)
    if classify_chain(c, seq) is not ChainStatus.AUGMENTING:
        raise ValueError("chain is not augmenting")
    out = c.copy()
    augment_in_place(out, seq)
    return out
