"""Counting and enumerating bounded cylindric semistandard tableaux.

A tableau of skew shape outer/inner and weight alpha is a chain of
partitions inner = v0, v1, ..., vr = outer where each step vi/v(i-1) is a
bounded horizontal strip of size alpha_i.  Counting is layered dynamic
programming over reachable partitions; enumeration is a direct DFS over
chains and exists as the brute-force cross-check.
"""
from __future__ import annotations

from .partitions import (
    CylProfile,
    Partition,
    SkewShape,
    grlex_key,
    horizontal_strip_extensions,
    is_nl_cylindric,
)

Weight = tuple[int, ...]
TableauChain = tuple[Partition, ...]


def make_weight(entries) -> Weight:
    alpha = tuple(int(x) for x in entries)
    if any(x < 0 for x in alpha):
        raise ValueError(f"weight entries must be nonnegative: {alpha}")
    return alpha


def _check_shape(p: CylProfile, shape: SkewShape) -> None:
    if not is_nl_cylindric(p, shape):
        raise ValueError(
            f"shape {shape.outer}/{shape.inner} is not ({p.rank},{p.level})-cylindric"
        )


def count_cyl_tableaux(p: CylProfile, shape: SkewShape, alpha: Weight) -> int:
    """Number of bounded cylindric tableaux of the given shape and weight.

    Zero whenever some alpha_i exceeds the level or the weight total differs
    from the shape size.
    """
    _check_shape(p, shape)
    if sum(alpha) != shape.size() or any(a > p.level for a in alpha):
        return 0
    layer: dict[Partition, int] = {shape.inner: 1}
    for a in alpha:
        nxt: dict[Partition, int] = {}
        for nu, cnt in layer.items():
            for rho in horizontal_strip_extensions(p, nu, a):
                nxt[rho] = nxt.get(rho, 0) + cnt
        layer = nxt
        if not layer:
            return 0
    return layer.get(shape.outer, 0)


def enumerate_cyl_tableaux(p: CylProfile, shape: SkewShape, alpha: Weight) -> list[TableauChain]:
    """All tableau chains explicitly.  Exponential; intended for small shapes."""
    _check_shape(p, shape)
    if sum(alpha) != shape.size() or any(a > p.level for a in alpha):
        return []
    chains: list[TableauChain] = []

    def rec(i: int, chain: list[Partition]):
        if i == len(alpha):
            if chain[-1] == shape.outer:
                chains.append(tuple(chain))
            return
        for rho in horizontal_strip_extensions(p, chain[-1], alpha[i]):
            chain.append(rho)
            rec(i + 1, chain)
            chain.pop()

    rec(0, [shape.inner])
    chains.sort(key=lambda c: [grlex_key(nu) for nu in c])
    return chains


def classical_kostka(lam: Partition, alpha: Weight) -> int:
    """Kostka number: semistandard tableaux of shape lam and weight alpha.

    Realized as the cylindric count at a level large enough (>= lam_1) that
    the level constraint is vacuous.
    """
    p = CylProfile(max(len(lam), 1), sum(lam) + 1)
    return count_cyl_tableaux(p, SkewShape(lam, ()), alpha)
