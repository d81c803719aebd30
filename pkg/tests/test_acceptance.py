"""Acceptance suite: one test per criterion, printed as a pass/fail line.

Every comparison is exact (integer or coefficient-map equality); there are
no numeric tolerances anywhere.
"""
from itertools import permutations

from cylschur import (
    CylProfile,
    SkewShape,
    build_degree_quotient,
    count_cyl_tableaux,
    cylindric_schur,
    enumerate_cyl_tableaux,
    enumerate_nl_partitions,
    fusion_product,
    is_nl_partition,
    lr_coefficient,
    verify_pieri,
)
from cylschur.partitions import partitions_of, sub_partitions
from cylschur.schur import skew_schur_monomial
from cylschur.verify import ScanConfig, scan


def _report(num: int, desc: str, ok: bool) -> None:
    print(f"\ncriterion {num} [{'PASS' if ok else 'FAIL'}]: {desc}")
    assert ok, f"criterion {num} failed: {desc}"


def _bounded_shapes(p, deg_max):
    for n in range(deg_max + 1):
        for lam in enumerate_nl_partitions(p, n):
            for mu in sub_partitions(lam):
                if is_nl_partition(p, mu):
                    yield SkewShape(lam, mu)


def test_criterion_1_theorem1_exhaustive_scan():
    config = ScanConfig(n_max=3, l_max=3, deg_max=7)
    failures = [r for r in scan(config) if not r.passed]
    _report(1, "scan n_max=3 l_max=3 deg_max=7 has zero failures",
            not failures)


def test_criterion_2_prop1_including_vanishing_branch():
    failures = 0
    vanishing_seen = 0
    config = ScanConfig(n_max=3, l_max=3, deg_max=7)
    for r in scan(config):
        if r.check != "prop1":
            continue
        if not r.passed:
            failures += 1
        if r.alpha and r.alpha[0] > r.profile.level:
            vanishing_seen += 1
    _report(2, "prop1 over the full grid incl. alpha_1 > L vanishing branch",
            failures == 0 and vanishing_seen > 0)


def test_criterion_3_pieri_two_path_agreement():
    ok = True
    for n_rank in range(1, 5):
        for level in range(1, 5):
            p = CylProfile(n_rank, level)
            for n in range(7):
                for eta in enumerate_nl_partitions(p, n):
                    for k in range(level + 1):
                        ok = ok and verify_pieri(p, eta, k)
    _report(3, "Pieri reduction equals strip sum for N,L <= 4, |eta| <= 6",
            ok)


def test_criterion_4_basis_rank_identity():
    ok = True
    for n_rank in range(1, 5):
        for level in range(1, 5):
            p = CylProfile(n_rank, level)
            for n in range(9):
                q = build_degree_quotient(p, n)
                ok = ok and q.rank == len(enumerate_nl_partitions(p, n))
    _report(4, "quotient rank equals bounded-partition count, N,L <= 4, n <= 8",
            ok)


def test_criterion_5_structure_constants_nonneg_integers():
    ok = True
    for n_rank in range(1, 5):
        for level in range(1, 5):
            p = CylProfile(n_rank, level)
            for a in range(9):
                for b in range(9 - a):
                    for mu in enumerate_nl_partitions(p, a):
                        for nu in enumerate_nl_partitions(p, b):
                            prod = fusion_product(p, mu, nu)
                            ok = ok and all(
                                type(d) is int and d > 0 for d in prod.values())
    _report(5, "all structure constants with |mu|+|nu| <= 8 are nonneg integers",
            ok)


def test_criterion_6_large_level_degeneration():
    ok = True
    for n_rank in (1, 2, 3):
        p = CylProfile(n_rank, 5)
        for n in range(9):
            for lam in partitions_of(n, max_length=n_rank, max_part=4):
                if not is_nl_partition(p, lam):
                    continue
                for mu in sub_partitions(lam):
                    if not is_nl_partition(p, mu):
                        continue
                    shape = SkewShape(lam, mu)
                    ok = ok and cylindric_schur(p, shape) == \
                        skew_schur_monomial(lam, mu)
                    for nu in enumerate_nl_partitions(p, shape.size()):
                        d = fusion_product(p, mu, nu).get(lam, 0)
                        ok = ok and d == lr_coefficient(lam, mu, nu)
    _report(6, "level 5 with lam_1 <= 4: classical skew Schur and LR agreement",
            ok)


def test_criterion_7_weight_permutation_symmetry():
    ok = True
    for n_rank in (1, 2, 3):
        for level in (1, 2, 3):
            p = CylProfile(n_rank, level)
            for shape in _bounded_shapes(p, 6):
                for alpha in partitions_of(shape.size()):
                    base = count_cyl_tableaux(p, shape, alpha)
                    for perm in set(permutations(alpha)):
                        ok = ok and count_cyl_tableaux(p, shape, perm) == base
    _report(7, "tableau counts invariant under weight permutation, N,L <= 3",
            ok)


def test_criterion_8_dp_equals_enumeration():
    ok = True
    for n_rank in (1, 2, 3):
        for level in (1, 2, 3):
            p = CylProfile(n_rank, level)
            for shape in _bounded_shapes(p, 6):
                for alpha in partitions_of(shape.size()):
                    ok = ok and count_cyl_tableaux(p, shape, alpha) == \
                        len(enumerate_cyl_tableaux(p, shape, alpha))
    _report(8, "DP count equals explicit chain enumeration, |lam/mu| <= 6",
            ok)
