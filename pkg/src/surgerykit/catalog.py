"""Named diagram fixtures and small generators used across the package.

Braids are words in the generators of the braid group on `strands`
strands: letter +i crosses strands i and i+1 with the left strand on
top, letter -i with the right strand on top (1-based positions).
"""

from __future__ import annotations

import random

from .diagrams import LinkDiagram, mirror, parse_pd
from .errors import PDError


def braid_closure(word: list[int] | tuple[int, ...], strands: int) -> LinkDiagram:
    """Plat-free closure of a braid word into a link diagram.

    Strands run downward; position labels are the current edge on each
    strand.  The closure identifies bottom labels with top labels, so
    unused strands become free loops.
    """
    if strands < 1:
        raise PDError("a braid needs at least one strand")
    for letter in word:
        if letter == 0 or abs(letter) >= strands:
            raise PDError(f"braid letter {letter} out of range for {strands} strands")

    next_label = strands + 1
    current = list(range(1, strands + 1))
    top = list(current)
    crossings = []
    for letter in word:
        i = abs(letter) - 1
        left, right = current[i], current[i + 1]
        out_left, out_right = next_label, next_label + 1
        next_label += 2
        if letter > 0:
            # left strand on top: under-strand enters at the top right
            crossings.append((right, left, out_left, out_right))
        else:
            crossings.append((left, out_left, out_right, right))
        current[i], current[i + 1] = out_left, out_right
    # close up: merge bottom labels into top labels
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        while parent.get(x, x) != x:
            parent[x] = parent.get(parent[x], parent[x])
            x = parent[x]
        return x

    def union(x: int, y: int):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    for t, b in zip(top, current):
        union(t, b)
    merged = []
    free_loops = 0
    for c in crossings:
        merged.append(tuple(find(x) for x in c))
    used = {x for c in merged for x in c}
    for t, b in zip(top, current):
        if t == b and t not in used:
            free_loops += 1  # strand without crossings
    # compact the labels
    relabel = {old: new for new, old in enumerate(sorted(used), start=1)}
    compact = tuple(tuple(relabel[x] for x in c) for c in merged)
    return LinkDiagram(compact, free_loops)


# ---------------------------------------------------------------------------
# fixtures

UNKNOT = parse_pd("O")
UNLINK_2 = parse_pd("O O")

#: Standard clasp diagram of the Hopf link (two negative crossings).
HOPF = parse_pd("X(1,4,2,3) X(3,2,4,1)")

#: Trefoils named by their writhe under this package's sign convention.
TREFOIL_LEFT = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)")  # writhe -3
TREFOIL_RIGHT = mirror(TREFOIL_LEFT)  # writhe +3

#: Closure of a 4-letter 2-strand twist: the (2,4) torus link.
TORUS_2_4 = braid_closure([1, 1, 1, 1], 2)


def random_braid_diagram(rng: random.Random, max_crossings: int = 8) -> LinkDiagram:
    """Seeded random link diagram via a braid closure."""
    strands = rng.randint(1, 4)
    length = rng.randint(0, max_crossings) if strands > 1 else 0
    word = [rng.choice([1, -1]) * rng.randint(1, strands - 1) for _ in range(length)]
    return braid_closure(word, strands)
