"""Shared brute-force oracles, independent of the library's own algorithms."""
from __future__ import annotations

import pytest


def naive_partitions(n, max_part=None):
    """All partitions of n by plain recursion; independent of the package."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in naive_partitions(n - first, first):
            yield (first,) + rest


def column_count_strip(outer, inner):
    """Horizontal-strip test by counting skew boxes per column."""
    if len(inner) > len(outer):
        return False
    if any(inner[i] > outer[i] for i in range(len(inner))):
        return False
    width = outer[0] if outer else 0
    for col in range(width):
        boxes = 0
        for row in range(len(outer)):
            lo = inner[row] if row < len(inner) else 0
            if lo <= col < outer[row]:
                boxes += 1
        if boxes > 1:
            return False
    return True


def brute_ssyt_count(lam, alpha):
    """Semistandard fillings of a straight shape by cell-wise backtracking.

    Weakly increasing rows, strictly increasing columns, entry i used
    alpha[i-1] times.  Independent of the chain-of-partitions counting.
    """
    if sum(lam) != sum(alpha):
        return 0
    cells = [(r, c) for r in range(len(lam)) for c in range(lam[r])]
    remaining = list(alpha)
    grid = {}
    total = 0

    def rec(idx):
        nonlocal total
        if idx == len(cells):
            total += 1
            return
        r, c = cells[idx]
        left = grid.get((r, c - 1), 1)
        above = grid.get((r - 1, c), 0)
        for v in range(max(left, above + 1), len(alpha) + 1):
            if remaining[v - 1] == 0:
                continue
            grid[(r, c)] = v
            remaining[v - 1] -= 1
            rec(idx + 1)
            remaining[v - 1] += 1
            del grid[(r, c)]

    rec(0)
    return total


@pytest.fixture(scope="session")
def small_profiles():
    from cylschur import CylProfile

    return [CylProfile(n, level) for n in (1, 2, 3) for level in (1, 2, 3)]
