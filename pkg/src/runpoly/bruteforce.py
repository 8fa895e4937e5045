"""Ground-truth run counting by exhaustive permutation enumeration.

A run is a maximal interval of consecutive increasing or decreasing entries;
a monotone permutation has exactly one run, and every permutation of n >= 2
elements has between 1 and n-1 runs.  Enumeration is capped at n = 11
(about 4e7 permutations) to keep the full oracle suite fast.
"""

from __future__ import annotations

from itertools import permutations
from typing import Sequence

from .triangle import RunCountTriangle

ENUMERATION_CAP = 11


def count_runs(values: Sequence[int]) -> int:
    """Number of maximal monotone intervals of a permutation.

    Counted as one plus the number of interior positions where the comparison
    direction flips; a single pass, and trivially 1 for n = 2.
    """
    if len(values) < 2:
        raise ValueError("run counting needs at least 2 elements")
    runs = 1
    rising = values[1] > values[0]
    prev = values[1]
    for cur in values[2:]:
        r = cur > prev
        if r != rising:
            runs += 1
            rising = r
        prev = cur
    return runs


def brute_triangle(n_max: int) -> RunCountTriangle:
    """Tally run counts over all n! permutations for every n up to n_max."""
    if not 2 <= n_max <= ENUMERATION_CAP:
        raise ValueError(f"n_max must be in 2..{ENUMERATION_CAP}, got {n_max}")
    rows = []
    for n in range(2, n_max + 1):
        tally = [0] * n
        for perm in permutations(range(n)):
            # count_runs, inlined: the call overhead dominates at n = 10.
            runs = 1
            rising = perm[1] > perm[0]
            prev = perm[1]
            for cur in perm[2:]:
                r = cur > prev
                if r != rising:
                    runs += 1
                    rising = r
                prev = cur
            tally[runs] += 1
        rows.append(tuple(tally[1:]))
    return RunCountTriangle(n_max=n_max, rows=tuple(rows))
