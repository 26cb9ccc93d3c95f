"""Planar diagrams of oriented links given by PD codes.

A diagram is a list of crossings plus a count of crossingless circles.
Each crossing is a 4-tuple of edge labels listed counterclockwise
starting from the incoming under-strand, so the under-strand always
runs from the first to the third position.  Strand orientations are
not stored; they are recovered by constraint propagation (every edge
must leave one crossing and enter another).

Sign convention, with the under-strand drawn upward::

          c                 c
          ^                 ^
          |                 |
     d ---+--> b       d <--+--- b
          |                 |
          a                 a
       sign +1           sign -1

i.e. a crossing is positive when the over-strand runs from the fourth
tuple position to the second.  The A-smoothing of the bracket joins
the strand ends (a, b) and (c, d); with these two choices a positive
kink contributes -A^3, the usual pairing.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .errors import PDError
from .laurent import LOOP_FACTOR, LaurentPoly

Crossing = tuple[int, int, int, int]

_IN = 0
_OUT = 1

_X_TOKEN = re.compile(r"^X\((\d+),(\d+),(\d+),(\d+)\)$")


@dataclass(frozen=True)
class LinkDiagram:
    """An oriented link diagram: crossing tuples plus free loops."""

    crossings: tuple[Crossing, ...]
    free_loops: int = 0

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(sorted(tuple(c) for c in self.crossings)))
        if self.free_loops < 0:
            raise PDError("free loop count must be non-negative")
        for c in self.crossings:
            if len(c) != 4:
                raise PDError(f"crossing {c} is not a 4-tuple")
            for label in c:
                if not isinstance(label, int) or label < 1:
                    raise PDError(f"edge label {label!r} is not a positive integer")
        _analyze(self)  # validate eagerly

    @property
    def edge_labels(self) -> tuple[int, ...]:
        return tuple(sorted({label for c in self.crossings for label in c}))

    def __str__(self) -> str:
        return serialize_pd(self)


class _Junction:
    """One passage of a strand through a crossing."""

    __slots__ = ("crossing", "in_slot", "out_slot")

    def __init__(self, crossing: int, in_slot: int, out_slot: int):
        self.crossing = crossing
        self.in_slot = in_slot
        self.out_slot = out_slot

    @property
    def is_under(self) -> bool:
        return self.in_slot == 0


class DiagramData:
    """Derived orientation and component structure of a diagram."""

    def __init__(self, diagram: LinkDiagram):
        crossings = diagram.crossings
        occ: dict[int, list[tuple[int, int]]] = {}
        for ci, c in enumerate(crossings):
            for slot, label in enumerate(c):
                occ.setdefault(label, []).append((ci, slot))
        for label, places in occ.items():
            if len(places) != 2:
                raise PDError(f"edge label {label} occurs {len(places)} times, expected 2")

        self.occurrences = occ
        self.direction, self.over_in = _resolve_directions(crossings, occ)

        # Tail = where the edge leaves a crossing, head = where it enters one.
        self.edge_tail: dict[int, tuple[int, int]] = {}
        self.edge_head: dict[int, tuple[int, int]] = {}
        for label, places in occ.items():
            for place in places:
                if self.direction[place] == _OUT:
                    self.edge_tail[label] = place
                else:
                    self.edge_head[label] = place

        # Walk the strands.  Each component is recorded from its smallest
        # edge label onward, with junctions[i] sitting between edges[i]
        # and edges[i + 1] (cyclically).
        components: list[tuple[int, ...]] = []
        junction_runs: list[tuple[_Junction, ...]] = []
        seen: set[int] = set()
        for start in sorted(occ):
            if start in seen:
                continue
            edges: list[int] = []
            junctions: list[_Junction] = []
            e = start
            while True:
                edges.append(e)
                seen.add(e)
                ci, in_slot = self.edge_head[e]
                out_slot = 2 if in_slot == 0 else 4 - in_slot
                junctions.append(_Junction(ci, in_slot, out_slot))
                e = crossings[ci][out_slot]
                if e == start:
                    break
            components.append(tuple(edges))
            junction_runs.append(tuple(junctions))

        self.strand_components = tuple(components)
        self.junction_runs = tuple(junction_runs)
        self.comp_of = {e: i for i, comp in enumerate(components) for e in comp}
        self.signs = tuple(1 if self.over_in[ci] == 3 else -1 for ci in range(len(crossings)))
        self.n_components = len(components) + diagram.free_loops


def _resolve_directions(crossings, occ):
    direction: dict[tuple[int, int], int] = {}
    over_in: dict[int, int] = {}
    pending: list[tuple[int, int, int]] = []

    def assign(ci: int, slot: int, d: int):
        key = (ci, slot)
        cur = direction.get(key)
        if cur is not None:
            if cur != d:
                raise PDError(
                    f"strands do not close up into oriented cycles (crossing {ci})"
                )
            return
        direction[key] = d
        pending.append((ci, slot, d))

    def propagate():
        while pending:
            ci, slot, d = pending.pop()
            label = crossings[ci][slot]
            for place in occ[label]:
                if place != (ci, slot):
                    assign(place[0], place[1], _OUT if d == _IN else _IN)
            if slot in (1, 3):
                assign(ci, 4 - slot, _OUT if d == _IN else _IN)
                over_in[ci] = slot if d == _IN else 4 - slot

    for ci in range(len(crossings)):
        assign(ci, 0, _IN)
        assign(ci, 2, _OUT)
    propagate()
    # Components that never pass under anything leave their over slots
    # unconstrained; orient them so the over-strand runs d -> b.
    for ci in range(len(crossings)):
        if ci not in over_in:
            assign(ci, 3, _IN)
            propagate()
    return direction, over_in


def is_planar(diagram: LinkDiagram) -> bool:
    """Whether the PD code embeds in the plane.

    Each connected piece of the 4-valent map must satisfy V - E + F = 2,
    where faces are the orbits of the counterclockwise corner walk.
    Reconnection surgery at arcs that are not flat-band adjacent leaves
    the planar category; this predicate detects that.
    """
    crossings = diagram.crossings
    if not crossings:
        return True
    other: dict[tuple[int, int], tuple[int, int]] = {}
    occ: dict[int, list[tuple[int, int]]] = {}
    for ci, c in enumerate(crossings):
        for slot, label in enumerate(c):
            occ.setdefault(label, []).append((ci, slot))
    for places in occ.values():
        p, q = places
        other[p] = q
        other[q] = p

    parent = list(range(len(crossings)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for places in occ.values():
        (c1, _), (c2, _) = places
        r1, r2 = find(c1), find(c2)
        if r1 != r2:
            parent[r2] = r1
    pieces = sum(1 for ci in range(len(crossings)) if find(ci) == ci)

    faces = 0
    seen: set[tuple[int, int]] = set()
    for start in sorted(other):
        if start in seen:
            continue
        faces += 1
        end = start
        while True:
            seen.add(end)
            ci, slot = other[end]
            end = (ci, (slot + 1) % 4)
            if end == start:
                break
    euler = len(crossings) - 2 * len(crossings) + faces
    return euler == 2 * pieces


@lru_cache(maxsize=4096)
def _analyze(diagram: LinkDiagram) -> DiagramData:
    return DiagramData(diagram)


def diagram_data(diagram: LinkDiagram) -> DiagramData:
    """Derived structure (orientations, components, signs) of a diagram."""
    return _analyze(diagram)


def parse_pd(text: str) -> LinkDiagram:
    """Parse PD text: whitespace-separated X(a,b,c,d) and O tokens.

    `#` starts a comment running to the end of the line.
    """
    stripped = "\n".join(line.split("#", 1)[0] for line in text.splitlines())
    crossings: list[Crossing] = []
    free_loops = 0
    for token in stripped.split():
        if token == "O":
            free_loops += 1
            continue
        m = _X_TOKEN.match(token)
        if m is None:
            raise PDError(f"bad PD token {token!r}")
        labels = tuple(int(g) for g in m.groups())
        if any(label < 1 for label in labels):
            raise PDError(f"edge labels must be positive in {token!r}")
        crossings.append(labels)
    return LinkDiagram(tuple(crossings), free_loops)


def serialize_pd(diagram: LinkDiagram) -> str:
    """Canonical PD text: sorted X tokens, then one O per free loop."""
    tokens = [f"X({a},{b},{c},{d})" for (a, b, c, d) in diagram.crossings]
    tokens.extend("O" * diagram.free_loops)
    return " ".join(tokens)


def component_count(diagram: LinkDiagram) -> int:
    return _analyze(diagram).n_components


def component_edges(diagram: LinkDiagram, comp: int) -> tuple[int, ...]:
    """Edges of a strand component in traversal order (empty for free loops)."""
    data = _analyze(diagram)
    n_strand = len(data.strand_components)
    if not 0 <= comp < data.n_components:
        raise PDError(f"component index {comp} out of range")
    if comp >= n_strand:
        return ()
    return data.strand_components[comp]


def crossing_signs(diagram: LinkDiagram) -> tuple[int, ...]:
    """Signs aligned with diagram.crossings order."""
    return _analyze(diagram).signs


def writhe(diagram: LinkDiagram) -> int:
    return sum(_analyze(diagram).signs)


def self_writhe(diagram: LinkDiagram, comp: int) -> int:
    """Signed count of the component's crossings with itself."""
    data = _analyze(diagram)
    total = 0
    for ci, c in enumerate(diagram.crossings):
        under = data.comp_of[c[0]]
        over = data.comp_of[c[data.over_in[ci]]]
        if under == comp and over == comp:
            total += data.signs[ci]
    return total


def linking_number(diagram: LinkDiagram, i: int, j: int) -> int:
    """Half the signed count of crossings between components i and j."""
    data = _analyze(diagram)
    if i == j:
        raise PDError("linking number needs two distinct components")
    for idx in (i, j):
        if not 0 <= idx < data.n_components:
            raise PDError(f"component index {idx} out of range")
    total = 0
    for ci, c in enumerate(diagram.crossings):
        under = data.comp_of[c[0]]
        over = data.comp_of[c[data.over_in[ci]]]
        if {under, over} == {i, j}:
            total += data.signs[ci]
    assert total % 2 == 0
    return total // 2


def mirror(diagram: LinkDiagram) -> LinkDiagram:
    """Switch every crossing (reflect across the projection plane).

    The old over-strand becomes the under-strand, so each tuple is
    re-rooted at the old over-entry slot; the planar order is kept.
    """
    data = _analyze(diagram)
    new = []
    for ci, (a, b, c, d) in enumerate(diagram.crossings):
        if data.over_in[ci] == 3:
            new.append((d, a, b, c))
        else:
            new.append((b, c, d, a))
    return LinkDiagram(tuple(new), diagram.free_loops)


def reverse(diagram: LinkDiagram) -> LinkDiagram:
    """Reverse the orientation of every component."""
    new = tuple((c, d, a, b) for (a, b, c, d) in diagram.crossings)
    return LinkDiagram(new, diagram.free_loops)


def relabeled(diagram: LinkDiagram, offset: int) -> LinkDiagram:
    new = tuple(tuple(label + offset for label in c) for c in diagram.crossings)
    return LinkDiagram(new, diagram.free_loops)


def disjoint_union(a: LinkDiagram, b: LinkDiagram) -> LinkDiagram:
    offset = max(a.edge_labels, default=0)
    shifted = relabeled(b, offset)
    return LinkDiagram(a.crossings + shifted.crossings, a.free_loops + b.free_loops)


MAX_BRACKET_CROSSINGS = 20


def kauffman_bracket(diagram: LinkDiagram) -> LaurentPoly:
    """Exact bracket state sum.

    Normalization: a lone loop evaluates to 1 and every further loop
    multiplies by (-A^2 - A^-2).  The writhe is not corrected for;
    see normalized_bracket.
    """
    n = len(diagram.crossings)
    if n > MAX_BRACKET_CROSSINGS:
        raise PDError(f"bracket state sum limited to {MAX_BRACKET_CROSSINGS} crossings")
    total_loops_offset = diagram.free_loops
    if n == 0:
        if total_loops_offset == 0:
            raise PDError("bracket of the empty diagram is undefined")
        return LOOP_FACTOR ** (total_loops_offset - 1)

    data = _analyze(diagram)
    # Slots are numbered 4*ci + slot; each edge joins its two occurrences.
    edge_pairs = []
    for places in data.occurrences.values():
        (c1, s1), (c2, s2) = places
        edge_pairs.append((4 * c1 + s1, 4 * c2 + s2))
    # Smoothing A joins (a, b) and (c, d); B joins (a, d) and (b, c).
    a_pairs = [((4 * ci, 4 * ci + 1), (4 * ci + 2, 4 * ci + 3)) for ci in range(n)]
    b_pairs = [((4 * ci, 4 * ci + 3), (4 * ci + 1, 4 * ci + 2)) for ci in range(n)]

    size = 4 * n
    result = LaurentPoly.zero()
    for state in range(1 << n):
        parent = list(range(size))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x: int, y: int):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[ry] = rx

        for x, y in edge_pairs:
            union(x, y)
        a_count = 0
        for ci in range(n):
            if state & (1 << ci):
                a_count += 1
                pairs = a_pairs[ci]
            else:
                pairs = b_pairs[ci]
            for x, y in pairs:
                union(x, y)
        loops = sum(1 for x in range(size) if find(x) == x)
        exponent = 2 * a_count - n  # a_count - b_count
        term = LaurentPoly.monomial(1, exponent) * LOOP_FACTOR ** (loops + total_loops_offset - 1)
        result = result + term
    return result


def normalized_bracket(diagram: LinkDiagram) -> LaurentPoly:
    """Bracket times (-A^3)^(-writhe); invariant under all Reidemeister moves."""
    return kauffman_bracket(diagram) * _minus_a_cubed_power(-writhe(diagram))


def _minus_a_cubed_power(k: int) -> LaurentPoly:
    sign = -1 if k % 2 else 1
    return LaurentPoly.monomial(sign, 3 * k)
