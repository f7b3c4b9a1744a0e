"""Second-level augmenting chains built through a distant edge of the tail path.

When an uncoloured edge's fan is not augmenting, the ordinary chain ends in an
alternating path.  Instead of augmenting along that path directly, one can
pick a *suitable* edge f on it (far from the start, not the last edge, and
carrying the path's primary colour alpha), imagine shifting the chain up to f
so that f becomes uncoloured, and grow a second fan around f's far endpoint y.
The machinery here constructs that second level:

  * suitable_edges lists the eligible path edges;

  * conditional_fan grows the fan around y.  It is defined against the
    *original* colouring: availability uses the original missing sets, and the
    fan additionally stops early upon reaching a far endpoint whose missing
    set contains alpha or beta.  check_shadow_fan verifies the defining
    property that this fan is a prefix of the ordinary fan around y computed
    under the shifted colouring with beta reordered to be the largest colour;

  * classify_suitable sorts a suitable edge into Type0 (chain-so-far already
    augmenting), TypeI (beta missing at the fan's last far endpoint), or
    TypeII (the fan stopped on a repeated colour epsilon; delta is the
    smallest colour missing at y);

  * is_superb checks that the second alternating path is unaffected by the
    shift (for TypeII, both candidate paths), by performing the shift with an
    undo log and comparing paths before and after;

  * iterated_chain assembles the full augmenting chain: everything before f,
    then the conditional fan (cut at the second critical index for TypeII),
    then the second alternating path.

superb_scan is the batch driver used by audits and the scheduler: it walks
all suitable edges of one tail path in order, advancing a single in-place
shift incrementally (shift composition makes consecutive shifted colourings
differ only on a short segment) and reading original colours through a small
overlay, so a full scan costs about one shift of the whole path rather than
one per suitable edge.

Everything is deterministic; minimal-colour choices use the natural order.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .colouring import ChainStatus, Colouring, classify_chain
from .chains import (
    AlternatingPath,
    VizingChain,
    alternating_path,
    max_fan,
    vizing_chain,
)

__all__ = [
    "SuitableType",
    "SuitableEdge",
    "ConditionalFan",
    "Classification",
    "IteratedChain",
    "ScanEntry",
    "suitable_edges",
    "conditional_fan",
    "check_shadow_fan",
    "classify_suitable",
    "is_superb",
    "iterated_chain",
    "superb_scan",
]


class SuitableType(enum.Enum):
    """Classification of a suitable edge by how its conditional fan ends."""

    TYPE0 = "Type0"
    TYPE1 = "TypeI"
    TYPE2 = "TypeII"


@dataclass(frozen=True)
class SuitableEdge:
    """An eligible path edge f: far from the chain's start (line-graph
    distance > 4), not the path's last edge, and coloured alpha.

    position is 1-based within the tail path, so the path prefix of that
    length ends with f.  far_vertex (y) is f's endpoint farther along the
    path; near_vertex (z) is the closer one.
    """

    edge: int
    position: int
    far_vertex: int
    near_vertex: int


@dataclass
class ConditionalFan:
    """The fan grown around far_vertex = y, starting at the suitable edge.

    edges = (g_0, ..., g_m) all contain y, with far endpoints (u_0, ..., u_m)
    and colour_seq the chosen colours (c(g_{i+1}) for i < m).  Stops:

      * early_stop: the newest far endpoint has alpha or beta missing;
      * otherwise maximal: the wanted colour (next_colour) has no edge at y
        (repeat_pos None) or that edge already sits in the fan (repeat_pos
        its position).
    """

    centre: int
    edges: list[int]
    far_endpoints: list[int]
    colour_seq: list[int]
    early_stop: bool
    next_colour: int | None
    repeat_pos: int | None
    type_tag: SuitableType | None = None
    second_critical_index: int | None = None


@dataclass
class Classification:
    """A suitable edge's type together with its colour witnesses.

    alpha/beta are the tail path's colours.  For TypeII, delta is the
    smallest colour missing at y, epsilon the repeated fan colour, and
    repeat_index the earlier fan index that chose epsilon; all four colours
    are pairwise distinct.
    """

    type_tag: SuitableType
    suitable: SuitableEdge
    fan: ConditionalFan
    alpha: int
    beta: int
    delta: int | None = None
    epsilon: int | None = None
    repeat_index: int | None = None


@dataclass
class IteratedChain:
    """The assembled second-level augmenting chain.

    The edge sequence is: the first-level chain cut just before the suitable
    edge, then the conditional fan (trimmed to the second critical index for
    TypeII), then the second alternating path (absent for Type0).
    """

    suitable: SuitableEdge
    type_tag: SuitableType
    first_segment: list[int]
    fan_segment: list[int]
    second_path: AlternatingPath | None
    second_critical_index: int | None
    alpha: int
    beta: int
    delta: int | None
    epsilon: int | None
    _edge_list: list[int] = field(default=None, repr=False)  # type: ignore[assignment]

    def edges(self) -> list[int]:
        if self._edge_list is None:
            seq = self.first_segment + self.fan_segment
            if self.second_path is not None:
                seq = seq + self.second_path.edges
            self._edge_list = seq
        return self._edge_list

    def __len__(self) -> int:
        return len(self.edges())


@dataclass
class ScanEntry:
    """One suitable edge's verdict from :func:`superb_scan`.

    second_path is the second alternating path computed under the *input*
    colouring: absent for Type0 (whose second path is empty by convention)
    and for non-superb TypeII edges whose candidate paths both end at y.
    chain is filled for superb entries when the scan is asked for chains.
    """

    suitable: SuitableEdge
    classification: Classification
    superb: bool
    second_path: AlternatingPath | None
    chain: IteratedChain | None = None


# ---------------------------------------------------------------------------
# Colour views: live colouring vs. original colouring during a scan
# ---------------------------------------------------------------------------


class _OrigView:
    """Read-only view of the original colouring while the underlying
    Colouring object is temporarily shifted.

    overrides maps mutated edges to their original colours; dirty_masks maps
    the few vertices whose missing masks differ (the chain's first-level
    vertices, captured before the shift) to their original masks.  The two
    seam vertices of the current shift frontier are corrected analytically:
    the shift freed alpha at the current far vertex and beta at the near one.
    """

    __slots__ = ("c", "overrides", "dirty_masks", "seam_y", "seam_z", "_abit", "_bbit")

    def __init__(self, c: Colouring, alpha: int, beta: int):
        self.c = c
        self.overrides: dict[int, int] = {}
        self.dirty_masks: dict[int, int] = {}
        self.seam_y: int | None = None
        self.seam_z: int | None = None
        self._abit = 1 << (alpha - 1)
        self._bbit = 1 << (beta - 1)

    def colour_of(self, e: int) -> int:
        got = self.overrides.get(e)
        return self.c.colour_of(e) if got is None else got

    def missing_mask(self, v: int) -> int:
        got = self.dirty_masks.get(v)
        if got is not None:
            return got
        live = self.c.missing_mask(v)
        if v == self.seam_y:
            return live & ~self._abit
        if v == self.seam_z:
            return live & ~self._bbit
        return live

    def is_missing(self, v: int, col: int) -> bool:
        return bool(self.missing_mask(v) >> (col - 1) & 1)

    def min_missing(self, v: int) -> int:
        m = self.missing_mask(v)
        return (m & -m).bit_length()

    def edge_at(self, v: int, col: int) -> int | None:
        for e in self.c.graph.adj[v]:
            if self.colour_of(e) == col:
                return e
        return None

    def walk(self, start: int, alpha: int, beta: int) -> AlternatingPath:
        """Alternating-path walk under this view (mirrors the live walker)."""
        edges: list[int] = []
        v = start
        want, succ = alpha, beta
        guard = self.c.graph.m + 1
        while True:
            e = self.edge_at(v, want)
            if e is None:
                break
            edges.append(e)
            v = self.c.graph.other(e, v)
            want, succ = succ, want
            guard -= 1
            if guard < 0:
                raise AssertionError("alternating walk failed to terminate")
        return AlternatingPath(
            start_vertex=start, alpha=alpha, beta=beta, edges=edges, last_vertex=v
        )


class _LiveView(_OrigView):
    """The same interface over the colouring as-is (no shift in progress)."""

    def __init__(self, c: Colouring):
        super().__init__(c, 1, 1)
        self.seam_y = self.seam_z = None

    def missing_mask(self, v: int) -> int:
        return self.c.missing_mask(v)

    def walk(self, start: int, alpha: int, beta: int) -> AlternatingPath:
        return alternating_path(self.c, start, alpha, beta)


# ---------------------------------------------------------------------------
# Context shared by every operation on one (c, x, e)
# ---------------------------------------------------------------------------


class _Context:
    """First-level chain data reused across suitable-edge operations."""

    __slots__ = (
        "c", "x", "e", "vc", "alpha", "beta",
        "path_edges", "path_vertices", "prefix_len", "chain_edges",
        "chain_pos", "near_e",
    )

    def __init__(self, c: Colouring, x: int, e: int):
        vc = vizing_chain(c, x, e)
        if vc.tail is None:
            raise ValueError(
                "the fan around the edge is augmenting; there is no tail path "
                "to pick suitable edges from"
            )
        self.c = c
        self.x = x
        self.e = e
        self.vc = vc
        self.alpha = vc.alpha
        self.beta = vc.beta
        self.path_edges = vc.tail.edges
        self.prefix_len = vc.fan_prefix_len
        self.chain_edges = vc.edges()
        self.chain_pos = {h: q for q, h in enumerate(self.chain_edges)}
        # vertices along the tail path: path_vertices[t] is where edge t starts
        verts = [vc.tail.start_vertex]
        g = c.graph
        for h in self.path_edges:
            verts.append(g.other(h, verts[-1]))
        self.path_vertices = verts
        self.near_e = _edge_ball(g, e, radius=4)

    def suitables(self, limit: int | None) -> list[SuitableEdge]:
        last = len(self.path_edges) - 1
        stop = last if limit is None else min(limit, last)
        out = []
        for t in range(0, stop, 2):  # alpha-coloured edges sit at even offsets
            f = self.path_edges[t]
            if f not in self.near_e:
                out.append(
                    SuitableEdge(
                        edge=f,
                        position=t + 1,
                        far_vertex=self.path_vertices[t + 1],
                        near_vertex=self.path_vertices[t],
                    )
                )
        return out

    def resolve(self, f: int | SuitableEdge, limit: int | None = None) -> SuitableEdge:
        if isinstance(f, SuitableEdge):
            return f
        for su in self.suitables(limit):
            if su.edge == f:
                return su
        raise ValueError(f"edge {f} is not suitable for this chain")

    def shift_chain(self, position: int) -> list[int]:
        """The chain whose shift makes the suitable edge at ``position``
        uncoloured: the first-level chain cut right after that edge."""
        return self.chain_edges[: self.prefix_len + position]


def _edge_ball(g, e: int, radius: int) -> set[int]:
    """Edges at line-graph distance <= radius from e (BFS)."""
    seen = {e}
    frontier = [e]
    for _ in range(radius):
        nxt = []
        for eid in frontier:
            u, v, _ = g.edges[eid]
            for w in (u, v):
                for nid in g.adj[w]:
                    if nid not in seen:
                        seen.add(nid)
                        nxt.append(nid)
        frontier = nxt
    return seen


# ---------------------------------------------------------------------------
# Conditional fans and classification
# ---------------------------------------------------------------------------


def _conditional_fan(ctx: _Context, su: SuitableEdge, view: _OrigView) -> ConditionalFan:
    y = su.far_vertex
    alpha, beta = ctx.alpha, ctx.beta
    edges = [su.edge]
    far = [su.near_vertex]
    colour_seq: list[int] = []
    chosen_at: dict[int, int] = {}
    # the near vertex sits between two path edges coloured alpha and beta,
    # so the early-stop condition cannot trigger at step 0
    assert not (view.is_missing(far[0], alpha) or view.is_missing(far[0], beta))
    early_stop = False
    next_colour: int | None = None
    repeat_pos: int | None = None
    while True:
        tip = far[-1]
        avail = view.missing_mask(tip) & ~chosen_at.get(tip, 0)
        assert avail != 0, "conditional fan step has no available colour"
        col = (avail & -avail).bit_length()
        nxt = view.edge_at(y, col)
        if nxt is None:
            next_colour, repeat_pos = col, None
            break
        if nxt in edges:
            next_colour, repeat_pos = col, edges.index(nxt)
            break
        chosen_at[tip] = chosen_at.get(tip, 0) | (1 << (col - 1))
        edges.append(nxt)
        far.append(ctx.c.graph.other(nxt, y))
        colour_seq.append(col)
        if view.is_missing(far[-1], alpha) or view.is_missing(far[-1], beta):
            early_stop = True
            break
    return ConditionalFan(
        centre=y,
        edges=edges,
        far_endpoints=far,
        colour_seq=colour_seq,
        early_stop=early_stop,
        next_colour=next_colour,
        repeat_pos=repeat_pos,
    )


def _classify(ctx: _Context, su: SuitableEdge, view: _OrigView) -> Classification:
    fan = _conditional_fan(ctx, su, view)
    alpha, beta = ctx.alpha, ctx.beta
    y = su.far_vertex
    u_m = fan.far_endpoints[-1]
    if _first_segment_augmenting(ctx, su, fan, view):
        fan.type_tag = SuitableType.TYPE0
        return Classification(SuitableType.TYPE0, su, fan, alpha, beta)
    if view.is_missing(u_m, beta):
        # were alpha missing at u_m too, the chain would have been augmenting
        assert not view.is_missing(u_m, alpha)
        fan.type_tag = SuitableType.TYPE1
        fan.second_critical_index = len(fan.edges) - 1
        return Classification(SuitableType.TYPE1, su, fan, alpha, beta)
    # the fan neither stopped early nor ran out of edges at y (a no-edge stop
    # makes the chain augmenting), so a repeated colour forced the stop
    assert not fan.early_stop and fan.repeat_pos is not None
    fan.type_tag = SuitableType.TYPE2
    i = fan.repeat_pos - 1
    epsilon = fan.next_colour
    delta = view.min_missing(y)
    assert fan.colour_seq[i] == epsilon
    assert delta != epsilon and not {delta, epsilon} & {alpha, beta}
    return Classification(
        SuitableType.TYPE2, su, fan, alpha, beta,
        delta=delta, epsilon=epsilon, repeat_index=i,
    )


def _first_segment_augmenting(
    ctx: _Context, su: SuitableEdge, fan: ConditionalFan, view: _OrigView
) -> bool:
    """Is (chain before f) + (conditional fan) augmenting, i.e. do y and the
    fan's last far endpoint share a missing colour after that shift?

    The chain is proper-shiftable (the shadow-fan property guarantees it), so
    only the missing masks of the last edge's endpoints are needed, and the
    shift changes edge colours only along the chain: inside the chain's
    first-level part every edge takes its successor's colour, and inside the
    fan part g_i takes c(g_{i+1}) with the last fan edge uncoloured.
    """
    chain = ctx.chain_edges
    cut = ctx.prefix_len + su.position - 1  # edges of the chain before f
    fan_after: dict[int, int] = {}
    for q in range(len(fan.edges) - 1):
        fan_after[fan.edges[q]] = view.colour_of(fan.edges[q + 1])
    fan_after[fan.edges[-1]] = 0

    def col_after(h: int) -> int:
        got = fan_after.get(h)
        if got is not None:
            return got
        q = ctx.chain_pos.get(h)
        if q is not None and q < cut:
            return view.colour_of(chain[q + 1])
        return view.colour_of(h)

    g = ctx.c.graph
    full = (1 << g.palette) - 1
    masks = []
    for v in (fan.centre, fan.far_endpoints[-1]):
        used = 0
        for h in g.adj[v]:
            col = col_after(h)
            if col:
                used |= 1 << (col - 1)
        masks.append(full & ~used)
    return bool(masks[0] & masks[1])


# ---------------------------------------------------------------------------
# Superb tests and chain assembly
# ---------------------------------------------------------------------------


def _second_paths_c(
    ctx: _Context, cls: Classification, view: _OrigView
) -> tuple[list[tuple[int, int, int]], AlternatingPath | None, int | None]:
    """The alternating-path probes a superb test must compare, under the
    input colouring: a list of (start, colour1, colour2), plus the chain's
    second path and second critical index when determined.

    TypeI compares one alpha/beta path from the last far endpoint; its path
    is also the chain's second path.  TypeII compares delta/epsilon paths
    from both the repeated index's far endpoint and the last one; the chain
    uses whichever avoids y (preferring the earlier index).
    """
    fan = cls.fan
    if cls.type_tag is SuitableType.TYPE1:
        u_m = fan.far_endpoints[-1]
        p = view.walk(u_m, cls.alpha, cls.beta)
        return [(u_m, cls.alpha, cls.beta)], p, len(fan.edges) - 1
    u_i = fan.far_endpoints[cls.repeat_index]
    u_m = fan.far_endpoints[-1]
    probes = [(u_i, cls.delta, cls.epsilon), (u_m, cls.delta, cls.epsilon)]
    # delta is missing at y, so y can only be an endpoint of a
    # delta/epsilon path and the last-vertex test decides avoidance
    p_i = view.walk(u_i, cls.delta, cls.epsilon)
    if p_i.last_vertex != fan.centre:
        return probes, p_i, cls.repeat_index
    p_m = view.walk(u_m, cls.delta, cls.epsilon)
    if p_m.last_vertex != fan.centre:
        return probes, p_m, len(fan.edges) - 1
    return probes, None, None


def _assemble(
    ctx: _Context,
    cls: Classification,
    second_path: AlternatingPath | None,
    second_critical_index: int | None,
) -> IteratedChain:
    su = cls.suitable
    first = ctx.chain_edges[: ctx.prefix_len + su.position - 1]
    if cls.type_tag is SuitableType.TYPE2:
        fan_part = cls.fan.edges[: second_critical_index + 1]
    else:
        fan_part = list(cls.fan.edges)
    cls.fan.second_critical_index = second_critical_index
    return IteratedChain(
        suitable=su,
        type_tag=cls.type_tag,
        first_segment=first,
        fan_segment=fan_part,
        second_path=second_path,
        second_critical_index=second_critical_index,
        alpha=cls.alpha,
        beta=cls.beta,
        delta=cls.delta,
        epsilon=cls.epsilon,
    )


# ---------------------------------------------------------------------------
# Public operations
# ---------------------------------------------------------------------------


def suitable_edges(
    c: Colouring, x: int, e: int, limit: int | None = None
) -> list[SuitableEdge]:
    """All suitable edges among the first ``limit`` edges of the tail path
    (the whole path when limit is None), in path order.

    An edge qualifies iff its line-graph distance from e exceeds 4, it is not
    the path's last edge, and it carries the path's primary colour (which
    every second path edge does).  Raises ValueError when the fan around
    (x, e) is augmenting, since then there is no tail path.
    """
    return _Context(c, x, e).suitables(limit)


def conditional_fan(
    c: Colouring, x: int, e: int, f: int | SuitableEdge
) -> ConditionalFan:
    """The maximal conditional fan around the suitable edge's far vertex.

    Starting from g_0 = f, repeatedly pick the minimal colour missing at the
    current far endpoint (excluding colours chosen at earlier steps with the
    same far endpoint) and follow the centre's edge of that colour.  Stops
    when that edge does not exist or already sits in the fan, or early, as
    soon as a far endpoint misses one of the path's two colours.

    Raises ValueError if f is not suitable.
    """
    ctx = _Context(c, x, e)
    return _conditional_fan(ctx, ctx.resolve(f), _LiveView(c))


def check_shadow_fan(c: Colouring, x: int, e: int, f: int | SuitableEdge) -> bool:
    """Does the conditional fan agree with its shifted-colouring shadow?

    Shifts the first-level chain through f (undoing afterwards), computes the
    ordinary fan around the far vertex under that colouring with beta
    reordered to compare largest, and checks that the conditional fan is a
    prefix of it.  True for every suitable f; exposed as a test oracle.
    """
    ctx = _Context(c, x, e)
    su = ctx.resolve(f)
    fan = _conditional_fan(ctx, su, _LiveView(c))
    log = c.shift_in_place(ctx.shift_chain(su.position))
    try:
        shadow = max_fan(c, su.far_vertex, su.edge, big_colour=ctx.beta)
    finally:
        c.apply_undo(log)
    return fan.edges == shadow.edges[: len(fan.edges)]


def classify_suitable(
    c: Colouring, x: int, e: int, f: int | SuitableEdge
) -> Classification:
    """Type of the suitable edge f with its colour witnesses.

    Type0 iff the chain up to f followed by the conditional fan is
    augmenting; else TypeI iff beta is missing at the fan's last far
    endpoint; else TypeII, which always exhibits a repeated minimal available
    colour epsilon at an earlier index, with delta the smallest colour
    missing at the fan centre and {alpha, beta}, {delta, epsilon} disjoint.
    """
    ctx = _Context(c, x, e)
    return _classify(ctx, ctx.resolve(f), _LiveView(c))


def is_superb(c: Colouring, x: int, e: int, f: int | SuitableEdge) -> bool:
    """Is the suitable edge's second-level chain stable under the shift?

    Type0 edges are always superb.  For TypeI and TypeII the relevant
    alternating paths are computed before and after shifting the first-level
    chain through f (in place, reverted via the undo log) and must match
    exactly.
    """
    ctx = _Context(c, x, e)
    su = ctx.resolve(f)
    view = _LiveView(c)
    cls = _classify(ctx, su, view)
    if cls.type_tag is SuitableType.TYPE0:
        return True
    probes, _sec, _j = _second_paths_c(ctx, cls, view)
    before = [view.walk(v, a, b).edges for (v, a, b) in probes]
    log = c.shift_in_place(ctx.shift_chain(su.position))
    try:
        after = []
        for v, a, b in probes:
            assert c.is_missing(v, b)
            after.append(alternating_path(c, v, a, b).edges)
    finally:
        c.apply_undo(log)
    return before == after


def iterated_chain(
    c: Colouring, x: int, e: int, f: int | SuitableEdge
) -> IteratedChain:
    """The assembled second-level chain for a superb edge f.

    The edge sequence is the first-level chain cut just before f, the
    conditional fan (trimmed to the second critical index for TypeII, which
    is chosen so its path avoids the fan centre, preferring the earlier
    index), and the second alternating path.  The result always classifies
    as augmenting.  Raises ValueError if f is not superb.
    """
    ctx = _Context(c, x, e)
    su = ctx.resolve(f)
    view = _LiveView(c)
    cls = _classify(ctx, su, view)
    if cls.type_tag is SuitableType.TYPE0:
        chain = _assemble(ctx, cls, None, None)
    else:
        if not is_superb(c, x, e, su):
            raise ValueError(
                f"edge {su.edge} is suitable but not superb; "
                "its chain is undefined"
            )
        _probes, sec, j = _second_paths_c(ctx, cls, view)
        if sec is None and cls.type_tag is SuitableType.TYPE2:
            raise AssertionError("both candidate second paths end at the centre")
        chain = _assemble(ctx, cls, sec, j)
    assert classify_chain(c, chain.edges()) is ChainStatus.AUGMENTING
    return chain


def superb_scan(
    c: Colouring,
    x: int,
    e: int,
    limit: int | None = None,
    with_chains: bool = False,
):
    """Classify and superb-test every suitable edge of one tail path.

    Yields a :class:`ScanEntry` per suitable edge among the first ``limit``
    path edges, in path order.  Equivalent to calling classify_suitable and
    is_superb edge by edge, but the in-place shift advances incrementally
    (consecutive shifted colourings differ only on the segment between two
    suitable edges, by shift composition), and original colours and missing
    masks are read through an overlay, so the whole scan performs one pass of
    shifting instead of one full shift per suitable edge.  The colouring is
    restored before the generator finishes, including on early exit.
    """
    ctx = _Context(c, x, e)
    sus = ctx.suitables(limit)
    if not sus:
        return
    view = _OrigView(c, ctx.alpha, ctx.beta)
    # missing masks that the first-level shift disturbs beyond the moving
    # seam: the fan centre and the fan's far endpoints
    for v in {ctx.x, *ctx.vc.fan.far_endpoints[: ctx.prefix_len]}:
        view.dirty_masks[v] = c.missing_mask(v)
    undo: dict[int, int] = {}
    shifted_len = 0
    try:
        for su in sus:
            target = ctx.prefix_len + su.position
            if shifted_len == 0:
                seg = ctx.chain_edges[:target]
            else:
                seg = ctx.chain_edges[shifted_len - 1 : target]
            log = c.shift_in_place(seg)
            for h, old in log:
                if h not in undo:
                    undo[h] = old
                    view.overrides[h] = old
            shifted_len = target
            view.seam_y = su.far_vertex
            view.seam_z = su.near_vertex
            cls = _classify(ctx, su, view)
            if cls.type_tag is SuitableType.TYPE0:
                entry = ScanEntry(su, cls, True, None)
                if with_chains:
                    entry.chain = _assemble(ctx, cls, None, None)
                yield entry
                continue
            probes, sec, j = _second_paths_c(ctx, cls, view)
            superb = True
            for v, a, b in probes:
                assert c.is_missing(v, b)
                if view.walk(v, a, b).edges != alternating_path(c, v, a, b).edges:
                    superb = False
                    break
            entry = ScanEntry(su, cls, superb, sec)
            if with_chains and superb:
                if sec is None and cls.type_tag is SuitableType.TYPE2:
                    raise AssertionError(
                        "superb TypeII edge with both paths ending at the centre"
                    )
                entry.chain = _assemble(ctx, cls, sec, j)
            yield entry
    finally:
        c.apply_undo(list(undo.items()))
