"""Partition primitives and the (rank, level) bounded combinatorics.

Partitions are plain tuples of positive integers in weakly decreasing order;
trailing zeros are never stored, and ``part_at`` reads missing parts as 0.
Everything here is a pure function over immutable data.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterator, NamedTuple

Partition = tuple[int, ...]

EMPTY: Partition = ()


class CylProfile(NamedTuple):
    """Rank/level pair fixing the bounded setting."""

    rank: int
    level: int


class SkewShape(NamedTuple):
    outer: Partition
    inner: Partition

    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)


def make_partition(parts) -> Partition:
    """Normalize an iterable of nonnegative integers to a canonical partition.

    Strips trailing zeros; raises ValueError if the parts are not weakly
    decreasing or contain negatives.
    """
    lam = tuple(int(x) for x in parts)
    while lam and lam[-1] == 0:
        lam = lam[:-1]
    if any(x <= 0 for x in lam):
        raise ValueError(f"partition parts must be positive: {lam}")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {lam}")
    return lam


def make_profile(rank: int, level: int) -> CylProfile:
    if rank < 1 or level < 1:
        raise ValueError(f"rank and level must be >= 1, got ({rank}, {level})")
    return CylProfile(rank, level)


def part_at(lam: Partition, i: int) -> int:
    """The i-th part (1-indexed), 0 beyond the stored length."""
    return lam[i - 1] if 1 <= i <= len(lam) else 0


def contains(outer: Partition, inner: Partition) -> bool:
    if len(inner) > len(outer):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))


def make_skew_shape(outer, inner) -> SkewShape:
    outer = make_partition(outer)
    inner = make_partition(inner)
    if not contains(outer, inner):
        raise ValueError(f"skew shape requires containment: {outer}/{inner}")
    return SkewShape(outer, inner)


def is_horizontal_strip(outer: Partition, inner: Partition) -> bool:
    """True iff outer/inner interlaces: λ1 ≥ μ1 ≥ λ2 ≥ μ2 ≥ ..."""
    if not contains(outer, inner):
        return False
    for i in range(1, len(outer) + 1):
        if part_at(inner, i) < part_at(outer, i + 1):
            return False
    return True


def is_nl_partition(p: CylProfile, lam: Partition) -> bool:
    """At most N parts, and first part minus N-th part at most L."""
    if len(lam) > p.rank:
        return False
    return part_at(lam, 1) - part_at(lam, p.rank) <= p.level


def is_nl_horizontal_strip(p: CylProfile, outer: Partition, inner: Partition) -> bool:
    if not is_horizontal_strip(outer, inner):
        return False
    if len(outer) > p.rank:
        return False
    return part_at(outer, 1) - part_at(inner, p.rank) <= p.level


def is_nl_cylindric(p: CylProfile, shape: SkewShape) -> bool:
    """Both ends of the shape lie in the bounded family."""
    return (
        contains(shape.outer, shape.inner)
        and is_nl_partition(p, shape.outer)
        and is_nl_partition(p, shape.inner)
    )


def grlex_key(lam: Partition):
    """Sort key for graded-lex order: by size, then lex descending on parts."""
    return (sum(lam), tuple(-x for x in lam))


def partitions_of(n: int, max_length: int | None = None, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n, parts <= max_part, length <= max_length, lex descending."""
    if n < 0:
        return
    if max_part is None:
        max_part = n

    def rec(remaining: int, bound: int, rows_left: int | None, prefix: list[int]):
        if remaining == 0:
            yield tuple(prefix)
            return
        if rows_left is not None and rows_left == 0:
            return
        top = min(bound, remaining)
        for first in range(top, 0, -1):
            prefix.append(first)
            yield from rec(remaining - first, first,
                           None if rows_left is None else rows_left - 1, prefix)
            prefix.pop()

    yield from rec(n, max_part, max_length, [])


@lru_cache(maxsize=None)
def enumerate_nl_partitions(p: CylProfile, n: int) -> tuple[Partition, ...]:
    """All (rank, level)-bounded partitions of n in graded-lex order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = [lam for lam in partitions_of(n, max_length=p.rank)
           if is_nl_partition(p, lam)]
    out.sort(key=grlex_key)
    return tuple(out)


def horizontal_strip_extensions(p: CylProfile, inner: Partition, k: int) -> list[Partition]:
    """All ρ ⊇ inner with ρ/inner a bounded horizontal strip of size k.

    Returns the empty list for k > level (no strips exist).  The inner
    partition must itself be (rank, level)-bounded.
    """
    if not is_nl_partition(p, inner):
        raise ValueError(f"inner partition {inner} is not ({p.rank},{p.level})-bounded")
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k > p.level:
        return []
    n, cap = p.rank, p.level
    results: list[Partition] = []

    # ρ_i ranges over [μ_i, μ_{i-1}] per interlacing; ρ_1 additionally obeys
    # ρ_1 - μ_N <= L.  Rows beyond N stay empty.
    def rec(i: int, remaining: int, rows: list[int]):
        if i > n:
            if remaining == 0:
                results.append(make_partition(rows))
            return
        lo = part_at(inner, i)
        if i == 1:
            hi = min(part_at(inner, n) + cap, lo + remaining)
        else:
            hi = min(part_at(inner, i - 1), lo + remaining)
        # remaining boxes must fit in later rows; crude but correct bound
        for v in range(hi, lo - 1, -1):
            rows.append(v)
            rec(i + 1, remaining - (v - lo), rows)
            rows.pop()

    rec(1, k, [])
    results.sort(key=grlex_key)
    return results


def sub_partitions(lam: Partition) -> Iterator[Partition]:
    """All partitions contained in lam, graded-lex order."""
    found = set()

    def rec(i: int, bound: int, prefix: list[int]):
        found.add(tuple(prefix))
        if i >= len(lam):
            return
        for v in range(1, min(bound, lam[i]) + 1):
            prefix.append(v)
            rec(i + 1, v, prefix)
            prefix.pop()

    rec(0, lam[0] if lam else 0, [])
    yield from sorted(found, key=grlex_key)
