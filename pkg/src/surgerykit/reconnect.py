"""Reconnection surgery on link diagrams.

Cutting two arcs of a diagram and regluing the four loose ends is the
one-dimensional version of surgery: the strand topology changes while
every crossing stays in place.  Two reglue choices exist:

* ``cross`` joins each outgoing end to the other arc's incoming end,
  respecting strand orientations.  Applied to two arcs of one component
  it splits the component in two; across components it merges them.
* ``flip`` joins outgoing ends to outgoing ends, which forces part of
  the diagram to reverse direction.  Across components the second
  component is reversed wholesale and the count drops by one; within a
  component the strand segment between the arcs is reversed and the
  count is unchanged.

The rewiring is combinatorial: crossings are kept verbatim and only the
arc connectivity changes.  When the two arcs are flat-band adjacent in
the plane the result is again planar; at other sites the rewired code
leaves the planar category (diagrams.is_planar detects this).  For any
arc pair exactly one of the two choices is the flat one: the faces walk
every edge once in each direction, so the relative alignment of two
arcs is the same through every face they share.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagrams import LinkDiagram, _Junction, diagram_data
from .errors import SiteError

RECONNECTIONS = ("cross", "flip")

ArcRef = int | str


@dataclass(frozen=True)
class SurgerySite1D:
    """Two marked arcs plus a reglue choice.

    Arcs are edge labels (ints) or free-loop references ("o0", "o1", ...).
    Two marks on the same free loop are allowed and mean two distinct
    points of that circle.
    """

    edge_a: ArcRef
    edge_b: ArcRef
    reconnection: str = "cross"

    def __post_init__(self):
        if self.reconnection not in RECONNECTIONS:
            raise SiteError(f"unknown reconnection {self.reconnection!r}")
        if self.edge_a == self.edge_b and not _is_loop_ref(self.edge_a):
            raise SiteError("surgery sites must mark two distinct arcs")


def _is_loop_ref(ref: ArcRef) -> bool:
    return isinstance(ref, str)


def _loop_index(ref: str) -> int:
    if not (ref.startswith("o") and ref[1:].isdigit()):
        raise SiteError(f"bad free-loop reference {ref!r}")
    return int(ref[1:])


def _reversed_junction(j: _Junction) -> _Junction:
    return _Junction(j.crossing, j.out_slot, j.in_slot)


def _rebuild(diagram: LinkDiagram, component_pairs) -> LinkDiagram:
    """Re-emit crossing tuples from rewired strand walks.

    component_pairs lists, per component, (edge label, junction) pairs
    where the junction consumes the edge; geometric slots never move,
    so each tuple is just re-rooted at its under-entry slot.
    """
    slot_label: dict[tuple[int, int], int] = {}
    under_in: dict[int, int] = {}
    for pairs in component_pairs:
        n = len(pairs)
        for idx, (label, junc) in enumerate(pairs):
            prev = pairs[(idx - 1) % n][1]
            slot_label[(prev.crossing, prev.out_slot)] = label
            slot_label[(junc.crossing, junc.in_slot)] = label
            if junc.in_slot in (0, 2):
                under_in[junc.crossing] = junc.in_slot
    crossings = []
    for ci in range(len(diagram.crossings)):
        root = under_in[ci]
        crossings.append(tuple(slot_label[(ci, (root + k) % 4)] for k in range(4)))
    return LinkDiagram(tuple(crossings), diagram.free_loops)


def _component_pairs(diagram: LinkDiagram):
    data = diagram_data(diagram)
    return [
        list(zip(edges, junctions))
        for edges, junctions in zip(data.strand_components, data.junction_runs)
    ]


def reverse_component(diagram: LinkDiagram, comp: int) -> LinkDiagram:
    """Reverse the orientation of one strand component."""
    data = diagram_data(diagram)
    if not 0 <= comp < len(data.strand_components):
        raise SiteError(f"component {comp} is not a strand component")
    crossings = []
    for ci, c in enumerate(diagram.crossings):
        if data.comp_of[c[0]] == comp:
            crossings.append((c[2], c[3], c[0], c[1]))
        else:
            crossings.append(c)
    return LinkDiagram(tuple(crossings), diagram.free_loops)


def _cyclic_range(start: int, stop: int, n: int) -> list[int]:
    """Indices start, start+1, ... up to (but not including) stop, mod n."""
    out = []
    k = start % n
    while k != stop % n:
        out.append(k)
        k = (k + 1) % n
    return out


def _cross_pairs(pairs_a, i, pairs_b, j, label_a, label_b):
    """Orientation-preserving reglue; pairs_a is pairs_b for a split."""
    if pairs_a is pairs_b:
        m = len(pairs_a)
        cycle1 = [(label_a, pairs_a[j][1])] + [pairs_a[k] for k in _cyclic_range(j + 1, i, m)]
        cycle2 = [(label_b, pairs_a[i][1])] + [pairs_a[k] for k in _cyclic_range(i + 1, j, m)]
        return [cycle1, cycle2]
    ma, mb = len(pairs_a), len(pairs_b)
    merged = [(label_a, pairs_b[j][1])]
    merged += [pairs_b[k] for k in _cyclic_range(j + 1, j, mb)]
    merged += [(label_b, pairs_a[i][1])]
    merged += [pairs_a[k] for k in _cyclic_range(i + 1, i, ma)]
    return [merged]


def _flip_pairs_same_component(pairs, i, j, label_a, label_b):
    """Reversing reglue within one component: the i..j segment runs backward."""
    m = len(pairs)
    segment = _cyclic_range(i + 1, j, m)
    rest = _cyclic_range(j + 1, i, m)
    new = [(label_a, _reversed_junction(pairs[(j - 1) % m][1]))]
    for k in reversed(segment):
        new.append((pairs[k][0], _reversed_junction(pairs[(k - 1) % m][1])))
    new.append((label_b, pairs[j][1]))
    for k in rest:
        new.append(pairs[k])
    return [new]


def one_dim_zero_surgery(
    diagram: LinkDiagram,
    site: SurgerySite1D,
    preserve_orientation: bool = False,
) -> LinkDiagram:
    """Cut the two marked arcs and reglue them per the site's choice."""
    if preserve_orientation and site.reconnection == "flip":
        raise SiteError("flip reconnection reverses strand orientation")

    a, b = site.edge_a, site.edge_b
    if _is_loop_ref(a) and not _is_loop_ref(b):
        a, b = b, a  # normalize: loop ref second

    if _is_loop_ref(a):  # both are loops
        la, lb = _loop_index(a), _loop_index(b)
        for idx in (la, lb):
            if idx >= diagram.free_loops:
                raise SiteError(f"free loop o{idx} is absent")
        if la == lb:
            delta = 1 if site.reconnection == "cross" else 0
        else:
            delta = -1
        return LinkDiagram(diagram.crossings, diagram.free_loops + delta)

    data = diagram_data(diagram)
    if a not in data.comp_of:
        raise SiteError(f"site edge {a} is absent")

    if _is_loop_ref(b):  # strand arc + free loop: the loop is absorbed
        lb = _loop_index(b)
        if lb >= diagram.free_loops:
            raise SiteError(f"free loop o{lb} is absent")
        return LinkDiagram(diagram.crossings, diagram.free_loops - 1)

    if b not in data.comp_of:
        raise SiteError(f"site edge {b} is absent")

    comp_a, comp_b = data.comp_of[a], data.comp_of[b]
    work = diagram
    if site.reconnection == "flip" and comp_a != comp_b:
        work = reverse_component(diagram, comp_b)
        data = diagram_data(work)
        comp_a, comp_b = data.comp_of[a], data.comp_of[b]

    pairs = _component_pairs(work)
    ia = data.strand_components[comp_a].index(a)
    ib = data.strand_components[comp_b].index(b)

    if site.reconnection == "flip" and comp_a == comp_b:
        rewired = _flip_pairs_same_component(pairs[comp_a], ia, ib, a, b)
    else:
        rewired = _cross_pairs(pairs[comp_a], ia, pairs[comp_b], ib, a, b)

    untouched = [p for k, p in enumerate(pairs) if k not in (comp_a, comp_b)]
    return _rebuild(work, untouched + rewired)
