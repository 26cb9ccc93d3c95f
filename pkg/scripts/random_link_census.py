#!/usr/bin/env python3
"""Census of surgeries on random framed links.

For each sample the first homology is computed twice, by abelianizing
the surgery presentation and by the linking-matrix cokernel, and the
two must agree.  Prints the distribution of the groups seen.
"""

import argparse
import random
from collections import Counter

from surgerykit.catalog import random_braid_diagram
from surgerykit.dehn import FramedLink, h1_of_surgery, surgery_group
from surgerykit.diagrams import component_count
from surgerykit.presentations import abelianization


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=500)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--max-crossings", type=int, default=8)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    census = Counter()
    mismatches = 0
    for _ in range(args.count):
        diagram = random_braid_diagram(rng, args.max_crossings)
        framings = tuple(rng.randint(-5, 5) for _ in range(component_count(diagram)))
        fl = FramedLink(diagram, framings)
        via_group = abelianization(surgery_group(fl))
        via_matrix = h1_of_surgery(fl)
        if via_group != via_matrix:
            mismatches += 1
            print(f"MISMATCH {diagram} framings={framings}: {via_group} vs {via_matrix}")
        census[str(via_matrix)] += 1

    print(f"{args.count} samples, {mismatches} route mismatches")
    for h1, n in census.most_common(12):
        print(f"{n:>6}  {h1}")


if __name__ == "__main__":
    main()
