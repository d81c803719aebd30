"""Classical symmetric function calculus at a fixed homogeneous degree.

Coefficient vectors are plain dicts from partition tuples to integers with
zero entries never stored; all keys in one vector share a common size.  The
Littlewood-Richardson rule is implemented by direct lattice-word tableau
enumeration so it stays independent of the quotient-ring machinery.
"""
from __future__ import annotations

from functools import lru_cache

from .partitions import (
    CylProfile,
    Partition,
    SkewShape,
    contains,
    is_nl_cylindric,
    make_partition,
    part_at,
    partitions_of,
)
from .tableaux import Weight, count_cyl_tableaux

CoeffVector = dict[Partition, int]


def vec_add(acc: CoeffVector, other: CoeffVector, scale: int = 1) -> None:
    """In-place acc += scale * other, dropping zeros."""
    for key, c in other.items():
        new = acc.get(key, 0) + scale * c
        if new:
            acc[key] = new
        else:
            acc.pop(key, None)


@lru_cache(maxsize=None)
def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Littlewood-Richardson coefficient c^lam_{mu,nu}.

    Counts column-strict fillings of lam/mu with content nu whose reverse
    reading word (right to left along rows, top to bottom) is a lattice word.
    Returns 0 on size mismatch or failed containment.
    """
    if sum(lam) != sum(mu) + sum(nu) or not contains(lam, mu):
        return 0
    if nu == ():
        return 1
    rows = len(lam)
    # cells in reverse reading order
    cells = [(r, c) for r in range(rows)
             for c in range(lam[r] - 1, part_at(mu, r + 1) - 1, -1)]
    nletters = len(nu)
    remaining = list(nu)
    counts = [0] * (nletters + 1)  # counts[0] is a sentinel upper bound
    counts[0] = sum(nu) + 1
    grid: dict[tuple[int, int], int] = {}
    total = 0

    def rec(idx: int) -> None:
        nonlocal total
        if idx == len(cells):
            total += 1
            return
        r, c = cells[idx]
        above = grid.get((r - 1, c), 0)
        right = grid.get((r, c + 1), nletters + 1)
        for v in range(max(above + 1, 1), min(right, nletters) + 1):
            if remaining[v - 1] == 0 or counts[v] + 1 > counts[v - 1]:
                continue
            grid[(r, c)] = v
            remaining[v - 1] -= 1
            counts[v] += 1
            rec(idx + 1)
            counts[v] -= 1
            remaining[v - 1] += 1
            del grid[(r, c)]

    rec(0)
    return total


@lru_cache(maxsize=None)
def _schur_product_cached(mu: Partition, nu: Partition, max_length: int) -> tuple[tuple[Partition, int], ...]:
    n = sum(mu) + sum(nu)
    out = []
    bound = min(max_length, len(mu) + len(nu)) if n else 0
    for lam in partitions_of(n, max_length=bound, max_part=part_at(mu, 1) + part_at(nu, 1)):
        if not (contains(lam, mu) and contains(lam, nu)):
            continue
        c = lr_coefficient(lam, mu, nu)
        if c:
            out.append((lam, c))
    return tuple(out)


def schur_product(mu: Partition, nu: Partition, max_length: int) -> CoeffVector:
    """Schur expansion of s_mu * s_nu, keeping keys of length <= max_length."""
    if max_length < 1:
        raise ValueError("max_length must be positive")
    return dict(_schur_product_cached(mu, nu, max_length))


@lru_cache(maxsize=None)
def _kostka_row(lam: Partition) -> tuple[tuple[Partition, int], ...]:
    from .tableaux import classical_kostka

    out = []
    for alpha in partitions_of(sum(lam)):
        k = classical_kostka(lam, alpha)
        if k:
            out.append((alpha, k))
    return tuple(out)


def schur_to_monomial(lam: Partition) -> CoeffVector:
    """Monomial expansion of s_lam: coefficient on alpha is the Kostka number."""
    return dict(_kostka_row(lam))


def classical_strip_extensions(inner: Partition, k: int, max_length: int) -> list[Partition]:
    """Classical Pieri step: partitions adding a horizontal k-strip to inner."""
    results = []

    def rec(i: int, remaining: int, rows: list[int]):
        if i > max_length:
            if remaining == 0:
                results.append(make_partition(rows))
            return
        lo = part_at(inner, i)
        hi = lo + remaining if i == 1 else min(part_at(inner, i - 1), lo + remaining)
        for v in range(hi, lo - 1, -1):
            rows.append(v)
            rec(i + 1, remaining - (v - lo), rows)
            rows.pop()

    if len(inner) > max_length:
        return []
    rec(1, k, [])
    return results


def h_to_schur(alpha: Weight, max_length: int) -> CoeffVector:
    """Schur expansion of h_alpha in max_length variables, by iterated Pieri."""
    if max_length < 1:
        raise ValueError("max_length must be positive")
    vec: CoeffVector = {(): 1}
    for k in alpha:
        nxt: CoeffVector = {}
        for lam, c in vec.items():
            for rho in classical_strip_extensions(lam, k, max_length):
                nxt[rho] = nxt.get(rho, 0) + c
        vec = nxt
    return vec


def cylindric_schur(p: CylProfile, shape: SkewShape) -> CoeffVector:
    """Monomial expansion of the bounded cylindric Schur function of a shape.

    Coefficient on each partition alpha of the shape size is the cylindric
    tableau count; symmetry makes the partition-indexed coefficients a full
    description.
    """
    if not is_nl_cylindric(p, shape):
        raise ValueError(
            f"shape {shape.outer}/{shape.inner} is not ({p.rank},{p.level})-cylindric"
        )
    out: CoeffVector = {}
    for alpha in partitions_of(shape.size(), max_part=p.level):
        k = count_cyl_tableaux(p, shape, alpha)
        if k:
            out[alpha] = k
    return out


def skew_schur_monomial(outer: Partition, inner: Partition) -> CoeffVector:
    """Classical skew Schur in the monomial basis, via the LR expansion."""
    out: CoeffVector = {}
    for nu in partitions_of(sum(outer) - sum(inner)):
        c = lr_coefficient(outer, inner, nu)
        if c:
            vec_add(out, schur_to_monomial(nu), c)
    return out
