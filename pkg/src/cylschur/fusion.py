"""Degree-by-degree construction of the level-bounded quotient ring.

The quotient of symmetric polynomials in N variables by the ideal generated
by Schur polynomials with first-minus-last part equal to level+1 is built one
homogeneous degree at a time.  Each degree piece is an exact integer linear
algebra problem: the ideal's degree-n slice is spanned (by homogeneity) by
products of a single generator with an arbitrary Schur polynomial, and
reduction to the bounded-partition basis is a precomputed integer matrix.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .partitions import (
    CylProfile,
    Partition,
    enumerate_nl_partitions,
    grlex_key,
    horizontal_strip_extensions,
    is_nl_partition,
    partitions_of,
)
from .schur import CoeffVector, classical_strip_extensions, h_to_schur, schur_product
from .tableaux import Weight


def ideal_generators(p: CylProfile, n: int) -> list[Partition]:
    """Generator partitions of size n: length <= rank, first - last = level+1."""
    out = [g for g in partitions_of(n, max_length=p.rank)
           if g and g[0] - (g[p.rank - 1] if len(g) >= p.rank else 0) == p.level + 1]
    out.sort(key=grlex_key)
    return out


def _hermite_rows(rows: list[list[int]], width: int) -> list[list[int]]:
    """Row-style Hermite form: echelon, positive pivots, entries above reduced."""
    work = [r[:] for r in rows if any(r)]
    echelon: list[list[int]] = []
    pivots: list[int] = []
    col = 0
    while col < width and work:
        live = [r for r in work if r[col]]
        if not live:
            col += 1
            continue
        # gcd elimination within the column
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[col]))
            base = live[0]
            for r in live[1:]:
                q = r[col] // base[col]
                for j in range(col, width):
                    r[j] -= q * base[j]
            live = [r for r in live if r[col]]
        piv = live[0]
        if piv[col] < 0:
            piv[:] = [-x for x in piv]
        echelon.append(piv)
        pivots.append(col)
        work = [r for r in work if r is not piv and any(r)]
        col += 1
    # reduce entries above each pivot into [0, pivot)
    for i in range(len(echelon) - 1, -1, -1):
        c = pivots[i]
        h = echelon[i][c]
        for k in range(i):
            q = echelon[k][c] // h
            if q:
                for j in range(c, width):
                    echelon[k][j] -= q * echelon[i][j]
    return echelon


@dataclass(frozen=True)
class DegreeQuotient:
    """One homogeneous degree of the quotient, with its reduction operator."""

    profile: CylProfile
    degree: int
    ambient: tuple[Partition, ...]
    basis: tuple[Partition, ...]
    ideal_rows: tuple[tuple[int, ...], ...]  # Hermite form of the ideal slice
    reduction: tuple[tuple[int, ...], ...]   # basis coefficient = reduction @ vector

    @property
    def rank(self) -> int:
        return len(self.basis)

    def reduce(self, coeffs: CoeffVector) -> CoeffVector:
        index = {lam: j for j, lam in enumerate(self.ambient)}
        v = [0] * len(self.ambient)
        for lam, c in coeffs.items():
            if sum(lam) != self.degree:
                raise ValueError(f"key {lam} has size != degree {self.degree}")
            v[index[lam]] = c
        out: CoeffVector = {}
        for nu, row in zip(self.basis, self.reduction):
            c = sum(r * x for r, x in zip(row, v) if x)
            if c:
                out[nu] = c
        return out


def _invert_top(basis_cols: list[int], ideal_rows, ambient_len: int, rank: int):
    """First `rank` rows of the inverse of [unit cols | ideal rows^T]."""
    m = ambient_len
    cols = len(basis_cols) + len(ideal_rows)
    if cols != m:
        raise ValueError("degree piece is not full: basis + ideal rank != ambient")
    aug = []
    for i in range(m):
        row = [Fraction(0)] * (m + m)
        for j, bc in enumerate(basis_cols):
            if bc == i:
                row[j] = Fraction(1)
        for j, irow in enumerate(ideal_rows):
            row[len(basis_cols) + j] = Fraction(irow[i])
        row[m + i] = Fraction(1)
        aug.append(row)
    # Gauss-Jordan
    for col in range(m):
        piv = next((r for r in range(col, m) if aug[r][col]), None)
        if piv is None:
            raise ValueError("singular basis-completion matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(m):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    top = []
    for i in range(rank):
        row = aug[i][m:]
        if any(x.denominator != 1 for x in row):
            raise ValueError("reduction matrix is not integral; basis claim violated")
        top.append(tuple(int(x) for x in row))
    return tuple(top)


@lru_cache(maxsize=None)
def build_degree_quotient(p: CylProfile, n: int) -> DegreeQuotient:
    """Construct and cache the degree-n piece of the quotient for a profile."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    ambient = tuple(sorted(partitions_of(n, max_length=p.rank), key=grlex_key))
    index = {lam: j for j, lam in enumerate(ambient)}
    basis = enumerate_nl_partitions(p, n)

    raw_rows: list[list[int]] = []
    for m in range(1, n + 1):
        for gamma in ideal_generators(p, m):
            for nu in partitions_of(n - m, max_length=p.rank):
                row = [0] * len(ambient)
                for lam, c in schur_product(nu, gamma, p.rank).items():
                    row[index[lam]] = c
                raw_rows.append(row)
    echelon = _hermite_rows(raw_rows, len(ambient))
    if len(ambient) - len(echelon) != len(basis):
        raise ValueError(
            f"rank mismatch at ({p.rank},{p.level}) degree {n}: "
            f"ambient {len(ambient)}, ideal rank {len(echelon)}, basis {len(basis)}"
        )
    basis_cols = [index[nu] for nu in basis]
    reduction = _invert_top(basis_cols, echelon, len(ambient), len(basis))
    return DegreeQuotient(
        profile=p,
        degree=n,
        ambient=ambient,
        basis=basis,
        ideal_rows=tuple(tuple(r) for r in echelon),
        reduction=reduction,
    )


def reduce_vector(p: CylProfile, degree: int, coeffs: CoeffVector) -> CoeffVector:
    """Expand an ambient Schur-coordinate vector in the bounded basis."""
    return build_degree_quotient(p, degree).reduce(coeffs)


def reduce_schur(p: CylProfile, lam: Partition) -> CoeffVector:
    """Expansion of a single Schur class in the bounded-partition basis."""
    if len(lam) > p.rank:
        raise ValueError(f"partition {lam} has more than {p.rank} parts")
    return reduce_vector(p, sum(lam), {lam: 1})


def fusion_product(p: CylProfile, mu: Partition, nu: Partition) -> CoeffVector:
    """Structure constants: coefficient on lam is d^lam_{mu,nu}."""
    for x in (mu, nu):
        if not is_nl_partition(p, x):
            raise ValueError(f"partition {x} is not ({p.rank},{p.level})-bounded")
    return reduce_vector(p, sum(mu) + sum(nu), schur_product(mu, nu, p.rank))


def fusion_h_expansion(p: CylProfile, alpha: Weight) -> CoeffVector:
    """Image of the complete homogeneous product h_alpha in the quotient.

    Computed two independent ways and asserted equal: iterated bounded
    horizontal-strip sums, and linear-algebra reduction of the classical
    Schur expansion of h_alpha.  Entries of alpha must not exceed the level.
    """
    if any(a > p.level for a in alpha):
        raise ValueError(f"weight {alpha} has an entry exceeding level {p.level}")
    strip_path: CoeffVector = {(): 1}
    for k in alpha:
        nxt: CoeffVector = {}
        for eta, c in strip_path.items():
            for rho in horizontal_strip_extensions(p, eta, k):
                nxt[rho] = nxt.get(rho, 0) + c
        strip_path = nxt
    reduce_path = reduce_vector(p, sum(alpha), h_to_schur(alpha, p.rank))
    if strip_path != reduce_path:
        raise AssertionError(
            f"strip-sum and reduction disagree for alpha={alpha} at "
            f"({p.rank},{p.level}): {strip_path} vs {reduce_path}"
        )
    return strip_path


def verify_pieri(p: CylProfile, eta: Partition, k: int) -> bool:
    """Check the bounded Pieri rule at (eta, k) by the two-path comparison."""
    if not is_nl_partition(p, eta):
        raise ValueError(f"partition {eta} is not ({p.rank},{p.level})-bounded")
    if not 0 <= k <= p.level:
        raise ValueError(f"k={k} outside [0, {p.level}]")
    product = {rho: 1 for rho in classical_strip_extensions(eta, k, p.rank)}
    lhs = reduce_vector(p, sum(eta) + k, product)
    rhs = {rho: 1 for rho in horizontal_strip_extensions(p, eta, k)}
    return lhs == rhs
