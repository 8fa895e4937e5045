"""The triangle of counts P(n, s): permutations of n elements with s runs.

Built from the classical recurrence

    P(n, s) = s*P(n-1, s) + 2*P(n-1, s-1) + (n-s)*P(n-1, s-2)

with base row P(2, s) = 2*delta_{s,1}.  The recurrence is applied only for
n >= 3 (it would need an undefined P(1, .) at n = 2) and out-of-range values
(s < 1 or s > n-1) are taken as 0.  Entries are exact Python integers.
"""

from __future__ import annotations

import dataclasses
from math import factorial


@dataclasses.dataclass(frozen=True)
class RunCountTriangle:
    """Rows of P(n, s) for 2 <= n <= n_max; row for n holds s = 1..n-1."""

    n_max: int
    rows: tuple[tuple[int, ...], ...]

    def value(self, n: int, s: int) -> int:
        """P(n, s), with 0 for s outside 1..n-1."""
        if not 2 <= n <= self.n_max:
            raise ValueError(f"n must be in 2..{self.n_max}, got {n}")
        if s < 1 or s > n - 1:
            return 0
        return self.rows[n - 2][s - 1]

    def row(self, n: int) -> tuple[int, ...]:
        if not 2 <= n <= self.n_max:
            raise ValueError(f"n must be in 2..{self.n_max}, got {n}")
        return self.rows[n - 2]

    def row_sums_are_factorials(self) -> bool:
        return all(sum(self.row(n)) == factorial(n) for n in range(2, self.n_max + 1))

    def truncated(self, n_max: int) -> RunCountTriangle:
        """Restriction to 2..n_max, for comparing tables of different heights."""
        if not 2 <= n_max <= self.n_max:
            raise ValueError(f"n_max must be in 2..{self.n_max}, got {n_max}")
        return RunCountTriangle(n_max=n_max, rows=self.rows[: n_max - 1])


def build_triangle(n_max: int) -> RunCountTriangle:
    """Compute P(n, s) for all 2 <= n <= n_max by the run-count recurrence."""
    if n_max < 2:
        raise ValueError(f"n_max must be >= 2, got {n_max}")
    rows = [(2,)]
    for n in range(3, n_max + 1):
        prev = rows[-1]

        def p(s: int) -> int:
            # previous row covers 1..n-2
            if s < 1 or s > n - 2:
                return 0
            return prev[s - 1]

        rows.append(
            tuple(
                s * p(s) + 2 * p(s - 1) + (n - s) * p(s - 2)
                for s in range(1, n)
            )
        )
    return RunCountTriangle(n_max=n_max, rows=tuple(rows))
