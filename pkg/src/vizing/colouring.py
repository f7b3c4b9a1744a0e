"""Partial proper edge colourings, chains, and the shift operation.

A partial colouring assigns colours from the palette 1..(delta+pi) to a
subset of the edges so that edges sharing a vertex (parallel edges included)
get distinct colours.  Uncoloured edges form the set U_c; the whole package
is about shrinking U_c by augmenting along chains.

A chain is a sequence of edges in which consecutive edges share a vertex.
Shifting a colouring along a chain moves every edge's colour one position
toward the head: the first edge takes the second edge's colour, and the last
edge becomes uncoloured.  A chain is

  * edge-injective    if no edge repeats,
  * shiftable         if additionally its first edge is uncoloured and all
                      later edges are coloured,
  * proper-shiftable  if additionally the shifted colouring is proper,
  * augmenting        if additionally, after the shift, the endpoints of the
                      last edge share a missing colour (so the last edge can
                      be coloured and the colouring grows by one edge).

:class:`Colouring` maintains properness as a class invariant (dense colour
array plus one used-colour bitmask per vertex, so missing-set probes are
O(1) in the palette size).  States that may be improper, such as the result
of shifting a merely-shiftable chain, are handled as plain colour maps via
:func:`shifted_assignment` and never materialised as Colouring objects.

Shifts along infinite chains never arise here: all inputs are finite, so
every chain is a finite list.

Thread-safety: a Colouring is exclusively owned by one mutator at a time;
read-only snapshots may be shared freely.  Everything else in this module is
pure.
"""

from __future__ import annotations

import enum
from collections.abc import Mapping, Sequence

from .multigraph import Multigraph

__all__ = [
    "Colouring",
    "ChainStatus",
    "missing_colours",
    "is_proper",
    "classify_chain",
    "shift_along",
    "shifted_assignment",
    "split_shift_check",
]


# ---------------------------------------------------------------------------
# The colouring structure
# ---------------------------------------------------------------------------


class Colouring:
    """A proper partial edge colouring of a :class:`Multigraph`.

    The colour of edge e is an integer in 1..graph.palette, or 0 when e is
    uncoloured.  Properness (no two incident coloured edges share a colour)
    is an invariant: every mutation validates it and raises ValueError on
    violation.
    """

    __slots__ = ("graph", "_colours", "_used", "_uncoloured")

    def __init__(self, graph: Multigraph, _colours: list[int] | None = None):
        self.graph = graph
        if _colours is None:
            self._colours = [0] * graph.m
            self._used = [0] * graph.n
            self._uncoloured = graph.m
        else:
            if len(_colours) != graph.m:
                raise ValueError("colour array length does not match edge count")
            self._colours = list(_colours)
            self._used = [0] * graph.n
            self._uncoloured = 0
            palette = graph.palette
            for e, col in enumerate(self._colours):
                if col == 0:
                    self._uncoloured += 1
                    continue
                if not (1 <= col <= palette):
                    raise ValueError(
                        f"edge {e}: colour {col} outside palette 1..{palette}"
                    )
                bit = 1 << (col - 1)
                u, v, _ = graph.edges[e]
                if (self._used[u] | self._used[v]) & bit:
                    raise ValueError(
                        f"edge {e}: colour {col} already used at an endpoint"
                    )
                self._used[u] |= bit
                self._used[v] |= bit

    # -- constructors -------------------------------------------------------

    @classmethod
    def empty(cls, graph: Multigraph) -> "Colouring":
        """The all-uncoloured colouring."""
        return cls(graph)

    @classmethod
    def from_assignment(
        cls, graph: Multigraph, assignment: Mapping[int, int] | Sequence[int]
    ) -> "Colouring":
        """Build from a dict {edge: colour} or a dense colour sequence.

        Unmentioned edges are uncoloured; colour 0 also means uncoloured.
        Raises ValueError if the assignment is out of range or improper.
        """
        colours = [0] * graph.m
        if isinstance(assignment, Mapping):
            for e, col in assignment.items():
                if not (0 <= e < graph.m):
                    raise ValueError(f"edge id {e} out of range")
                colours[e] = col
        else:
            if len(assignment) != graph.m:
                raise ValueError("colour array length does not match edge count")
            colours = list(assignment)
        return cls(graph, colours)

    def copy(self) -> "Colouring":
        dup = Colouring.__new__(Colouring)
        dup.graph = self.graph
        dup._colours = list(self._colours)
        dup._used = list(self._used)
        dup._uncoloured = self._uncoloured
        return dup

    # -- queries ------------------------------------------------------------

    def colour_of(self, e: int) -> int:
        """Colour of edge e (0 = uncoloured)."""
        return self._colours[e]

    @property
    def colours(self) -> list[int]:
        """The dense colour array (do not mutate)."""
        return self._colours

    @property
    def uncoloured_count(self) -> int:
        return self._uncoloured

    def uncoloured(self) -> list[int]:
        """Ids of uncoloured edges, ascending."""
        return [e for e, col in enumerate(self._colours) if col == 0]

    def assignment(self) -> dict[int, int]:
        """The coloured edges as a dict {edge: colour}."""
        return {e: col for e, col in enumerate(self._colours) if col != 0}

    def used_mask(self, x: int) -> int:
        """Bitmask of colours used at vertex x (bit col-1)."""
        return self._used[x]

    def missing_mask(self, x: int) -> int:
        """Bitmask of colours missing at vertex x."""
        return ((1 << self.graph.palette) - 1) & ~self._used[x]

    def missing_colours(self, x: int) -> set[int]:
        """The set of palette colours not present on any edge at x."""
        m = self.missing_mask(x)
        return {c + 1 for c in range(self.graph.palette) if (m >> c) & 1}

    def min_missing(self, x: int) -> int:
        """Smallest colour missing at x (every vertex misses >= pi colours)."""
        m = self.missing_mask(x)
        if m == 0:
            raise ValueError(f"vertex {x} has no missing colour")
        return (m & -m).bit_length()

    def is_missing(self, x: int, col: int) -> bool:
        return bool(self.missing_mask(x) >> (col - 1) & 1)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Colouring)
            and self.graph is other.graph
            and self._colours == other._colours
        )

    __hash__ = None  # mutable; not usable as a dict key

    # -- mutation -----------------------------------------------------------

    def assign(self, e: int, col: int) -> None:
        """Colour edge e with col; e must be uncoloured and col free at both
        endpoints (ValueError otherwise)."""
        if self._colours[e] != 0:
            raise ValueError(f"edge {e} is already coloured")
        if not (1 <= col <= self.graph.palette):
            raise ValueError(f"colour {col} outside palette 1..{self.graph.palette}")
        bit = 1 << (col - 1)
        u, v, _ = self.graph.edges[e]
        if (self._used[u] | self._used[v]) & bit:
            raise ValueError(f"colour {col} already used at an endpoint of edge {e}")
        self._colours[e] = col
        self._used[u] |= bit
        self._used[v] |= bit
        self._uncoloured -= 1

    def unassign(self, e: int) -> int:
        """Uncolour edge e, returning its previous colour."""
        col = self._colours[e]
        if col == 0:
            raise ValueError(f"edge {e} is already uncoloured")
        bit = 1 << (col - 1)
        u, v, _ = self.graph.edges[e]
        self._colours[e] = 0
        self._used[u] &= ~bit
        self._used[v] &= ~bit
        self._uncoloured += 1
        return col

    def shift_in_place(self, chain: Sequence[int]) -> list[tuple[int, int]]:
        """Shift this colouring along a proper-shiftable chain, in place.

        Returns an undo log for :meth:`apply_undo`.  The caller guarantees
        the chain is proper-shiftable; a merely-shiftable chain raises
        ValueError mid-way (the improper state cannot be represented).
        """
        old = [(e, self._colours[e]) for e in chain]
        new_cols = [self._colours[chain[i + 1]] for i in range(len(chain) - 1)]
        for e, col in old:
            if col != 0:
                self.unassign(e)
        for i, col in enumerate(new_cols):
            self.assign(chain[i], col)
        return old

    def apply_undo(self, log: list[tuple[int, int]]) -> None:
        """Revert a :meth:`shift_in_place` (or any log of (edge, colour))."""
        for e, _ in log:
            if self._colours[e] != 0:
                self.unassign(e)
        for e, col in log:
            if col != 0:
                self.assign(e, col)

    # -- serialisation ------------------------------------------------------

    def to_text(self) -> str:
        """Dump format: one line per edge, ``edge_index colour``, 0 meaning
        uncoloured, edges in ascending id order."""
        return "".join(f"{e} {col}\n" for e, col in enumerate(self._colours))

    def save(self, path: str) -> None:
        with open(path, "w", encoding="ascii", newline="\n") as fh:
            fh.write(self.to_text())

    @staticmethod
    def parse_dump(graph: Multigraph, text: str) -> list[int]:
        """Parse a colouring dump into a raw colour array (no properness
        check; use :func:`is_proper` or ``from_dump`` to validate).

        Raises ValueError with a 1-based line number on malformed input.
        """
        lines = text.splitlines()
        if len(lines) != graph.m:
            raise ValueError(
                f"line {len(lines)}: expected one line per edge ({graph.m}), "
                f"found {len(lines)}"
            )
        colours = [0] * graph.m
        for off, line in enumerate(lines):
            lineno = off + 1
            parts = line.split()
            if len(parts) != 2:
                raise ValueError(f"line {lineno}: expected 'edge_index colour'")
            try:
                e, col = int(parts[0]), int(parts[1])
            except ValueError:
                raise ValueError(f"line {lineno}: fields must be integers") from None
            if e != off:
                raise ValueError(f"line {lineno}: expected edge index {off}, got {e}")
            if not (0 <= col <= graph.palette):
                raise ValueError(
                    f"line {lineno}: colour {col} outside 0..{graph.palette}"
                )
            colours[e] = col
        return colours

    @staticmethod
    def from_dump(graph: Multigraph, text: str) -> "Colouring":
        """Parse a dump and validate it as a proper colouring."""
        return Colouring(graph, Colouring.parse_dump(graph, text))

    @staticmethod
    def load(graph: Multigraph, path: str) -> "Colouring":
        with open(path, "r", encoding="ascii") as fh:
            return Colouring.from_dump(graph, fh.read())


# ---------------------------------------------------------------------------
# Free-function views of the basic queries
# ---------------------------------------------------------------------------


def missing_colours(c: Colouring, x: int) -> set[int]:
    """Palette colours not present on any coloured edge at vertex x."""
    if not (0 <= x < c.graph.n):
        raise ValueError(f"vertex {x} out of range")
    return c.missing_colours(x)


def is_proper(
    c: Colouring | Mapping[int, int] | Sequence[int],
    graph: Multigraph | None = None,
) -> bool:
    """Check properness by direct re-scan (no reliance on cached masks).

    Accepts a Colouring, or a raw assignment (dict or dense sequence) plus
    the graph it colours.  True iff no two edges sharing a vertex carry the
    same non-zero colour.
    """
    if isinstance(c, Colouring):
        graph = c.graph
        colours = c.colours
    else:
        if graph is None:
            raise ValueError("graph required when passing a raw assignment")
        if isinstance(c, Mapping):
            colours = [0] * graph.m
            for e, col in c.items():
                colours[e] = col
        else:
            colours = list(c)
    for x in range(graph.n):
        seen = 0
        for e in graph.adj[x]:
            col = colours[e]
            if col == 0:
                continue
            bit = 1 << (col - 1)
            if seen & bit:
                return False
            seen |= bit
    return True


# ---------------------------------------------------------------------------
# Chains and shifts
# ---------------------------------------------------------------------------


class ChainStatus(enum.Enum):
    """Strength ladder of chain labels; each level implies all earlier ones."""

    NOT_EDGE_INJECTIVE = "not-edge-injective"
    NOT_SHIFTABLE = "not-shiftable"
    SHIFTABLE = "shiftable"
    PROPER_SHIFTABLE = "proper-shiftable"
    AUGMENTING = "augmenting"

    def at_least(self, other: "ChainStatus") -> bool:
        order = list(ChainStatus)
        return order.index(self) >= order.index(other)


def _validate_chain(graph: Multigraph, chain: Sequence[int]) -> None:
    if len(chain) == 0:
        raise ValueError("a chain must contain at least one edge")
    for e in chain:
        if not (0 <= e < graph.m):
            raise ValueError(f"edge id {e} out of range")
    for a, b in zip(chain, chain[1:]):
        ua, va, _ = graph.edges[a]
        ub, vb, _ = graph.edges[b]
        if ua != ub and ua != vb and va != ub and va != vb:
            raise ValueError(
                f"edges {a} and {b} are consecutive in the chain but disjoint"
            )


def shifted_assignment(c: Colouring, chain: Sequence[int]) -> dict[int, int]:
    """The colour changes a shift along ``chain`` would make, as a map
    {edge: new colour} with 0 for the last edge.  Pure; works for any
    shiftable chain, including ones whose shift would be improper.
    """
    overlay: dict[int, int] = {}
    for i in range(len(chain) - 1):
        overlay[chain[i]] = c.colour_of(chain[i + 1])
    overlay[chain[-1]] = 0
    return overlay


def classify_chain(c: Colouring, chain: Sequence[int]) -> ChainStatus:
    """Label a chain with the strongest applicable status.

    The labels are nested, so evaluation proceeds in increasing strength and
    stops at the first failure:

      1. edge-injectivity;
      2. shiftability (first edge uncoloured, all later edges coloured);
      3. properness of the shifted colouring (checked locally: only chain
         edges change);
      4. a common missing colour, under the shifted colouring, at the two
         endpoints of the last edge.

    Raises ValueError if ``chain`` is not structurally a chain (empty,
    invalid ids, or consecutive edges disjoint).
    """
    g = c.graph
    _validate_chain(g, chain)
    if len(set(chain)) != len(chain):
        return ChainStatus.NOT_EDGE_INJECTIVE
    if c.colour_of(chain[0]) != 0 or any(c.colour_of(e) == 0 for e in chain[1:]):
        return ChainStatus.NOT_SHIFTABLE
    overlay = shifted_assignment(c, chain)
    colours = c.colours

    def col_after(e: int) -> int:
        got = overlay.get(e)
        return colours[e] if got is None else got

    for e in chain:
        new_col = overlay[e]
        if new_col == 0:
            continue
        u, v, _ = g.edges[e]
        for x in (u, v):
            for other in g.adj[x]:
                if other != e and col_after(other) == new_col:
                    return ChainStatus.SHIFTABLE
    last = chain[-1]
    u, v, _ = g.edges[last]
    full = (1 << g.palette) - 1
    masks = []
    for x in (u, v):
        used = 0
        for e in g.adj[x]:
            col = col_after(e)
            if col:
                used |= 1 << (col - 1)
        masks.append(full & ~used)
    if masks[0] & masks[1]:
        return ChainStatus.AUGMENTING
    return ChainStatus.PROPER_SHIFTABLE


def shift_along(c: Colouring, chain: Sequence[int]) -> Colouring:
    """Return the shift of ``c`` along ``chain`` as a new colouring.

    The first edge takes the second edge's old colour, each later edge takes
    its successor's, and the last edge becomes uncoloured; the uncoloured
    count is conserved.  The chain must be shiftable (ValueError otherwise),
    and the result must be proper (Colouring represents only proper states;
    inspect a merely-shiftable chain's shift via :func:`shifted_assignment`).
    """
    status = classify_chain(c, chain)
    if not status.at_least(ChainStatus.SHIFTABLE):
        raise ValueError(f"chain is not shiftable: {status.value}")
    new_colours = list(c.colours)
    for e, col in shifted_assignment(c, chain).items():
        new_colours[e] = col
    if not status.at_least(ChainStatus.PROPER_SHIFTABLE):
        raise ValueError(
            "shift result is improper (chain is shiftable but not "
            "proper-shiftable); use shifted_assignment to inspect it"
        )
    return Colouring(c.graph, new_colours)


def split_shift_check(c: Colouring, chain: Sequence[int], i: int) -> bool:
    """Oracle for shift composition: does shifting along the (i+1)-prefix and
    then along the suffix starting at position i reproduce the direct shift?

    Works on raw colour arrays so intermediate states may be improper.  The
    chain must be c-shiftable and 0 <= i < l(chain).
    """
    if not classify_chain(c, chain).at_least(ChainStatus.SHIFTABLE):
        raise ValueError("chain is not shiftable")
    if not (0 <= i < len(chain)):
        raise ValueError(f"split position {i} out of range")

    def raw_shift(colours: list[int], seq: Sequence[int]) -> list[int] | None:
        if colours[seq[0]] != 0 or any(colours[e] == 0 for e in seq[1:]):
            return None
        out = list(colours)
        for j in range(len(seq) - 1):
            out[seq[j]] = colours[seq[j + 1]]
        out[seq[-1]] = 0
        return out

    direct = raw_shift(list(c.colours), chain)
    step1 = raw_shift(list(c.colours), chain[: i + 1])
    if step1 is None:
        return False
    step2 = raw_shift(step1, chain[i:])
    return step2 is not None and step2 == direct
