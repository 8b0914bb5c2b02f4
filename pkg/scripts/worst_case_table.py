#!/usr/bin/env python3
"""Reproduce the worst-case comparison counts per approach.

For each population size, builds the two-front instance at the worst split,
inserts the adversarial probe under every approach, and prints the measured
counter next to the closed-form value.
"""

from __future__ import annotations

import argparse

from ndfronts import (
    Counter,
    FrontSet,
    full_sort,
    gen_worst_two_front,
    max_comp_left_tree,
    max_comp_linear,
    max_comp_right_tree,
    same_partition,
    worst_split,
)
from ndfronts.cli import insert_with

FORMULAS = {
    "linear": max_comp_linear,
    "ltree": max_comp_left_tree,
    "rtree": max_comp_right_tree,
}


def measure(n: int, approach: str) -> int:
    population, probe = gen_worst_two_front(n)
    n1 = worst_split(n).sizes[0]
    fs = FrontSet(2, [population[:n1], population[n1:]])
    counter = Counter()
    insert_with(fs, probe, approach, counter)
    assert same_partition(fs, full_sort(population + [probe]))
    return counter.pair_compares


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", type=int, nargs="*", default=[16, 50, 100, 101, 200, 401])
    args = parser.parse_args()

    header = f"{'N':>6} | " + " | ".join(f"{ap + ' meas':>12} {ap + ' form':>12}" for ap in FORMULAS)
    print(header)
    print("-" * len(header))
    for n in args.sizes:
        profile = worst_split(n)
        cells = []
        for approach, formula in FORMULAS.items():
            measured = measure(n, approach)
            expected = formula(profile)
            mark = "" if measured == expected else " <-- MISMATCH"
            cells.append(f"{measured:>12} {expected:>12}{mark}")
        print(f"{n:>6} | " + " | ".join(cells))


if __name__ == "__main__":
    main()
