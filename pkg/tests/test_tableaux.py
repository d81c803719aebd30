import pytest
from hypothesis import given, settings, strategies as st

from cylschur import (
    CylProfile,
    SkewShape,
    classical_kostka,
    count_cyl_tableaux,
    enumerate_cyl_tableaux,
    enumerate_nl_partitions,
    is_nl_partition,
    make_weight,
)
from cylschur.partitions import is_nl_horizontal_strip, sub_partitions

from conftest import brute_ssyt_count, naive_partitions


def test_single_box():
    p = CylProfile(2, 1)
    assert count_cyl_tableaux(p, SkewShape((1,), ()), (1,)) == 1


def test_unique_chain_enumeration():
    p = CylProfile(2, 1)
    chains = enumerate_cyl_tableaux(p, SkewShape((1, 1), (1,)), (1,))
    assert chains == [((1,), (1, 1))]


def test_empty_weight_convention():
    # K of shape lam/lam with empty weight is 1; lam != mu gives 0
    for p in [CylProfile(2, 1), CylProfile(3, 2)]:
        assert count_cyl_tableaux(p, SkewShape((2, 1), (2, 1)), ()) == 1
        assert enumerate_cyl_tableaux(p, SkewShape((2, 1), (2, 1)), ()) == [((2, 1),)]
        assert count_cyl_tableaux(p, SkewShape((2, 1), (1,)), ()) == 0


def test_zero_weight_entries_repeat_partition():
    p = CylProfile(2, 2)
    shape = SkewShape((1,), ())
    assert count_cyl_tableaux(p, shape, (0, 1, 0)) == 1
    chains = enumerate_cyl_tableaux(p, shape, (0, 1, 0))
    assert chains == [((), (), (1,), (1,))]


def test_count_matches_enumeration_on_staircase():
    p = CylProfile(2, 1)
    shape = SkewShape((5, 4), ())
    alpha = (1,) * 9
    chains = enumerate_cyl_tableaux(p, shape, alpha)
    assert count_cyl_tableaux(p, shape, alpha) == len(chains)
    assert len(chains) > 0


def test_classical_regime_matches_kostka():
    # level >= lam_1 makes strips classical
    p = CylProfile(3, 5)
    assert count_cyl_tableaux(p, SkewShape((2, 1), ()), (1, 1, 1)) == 2
    assert count_cyl_tableaux(p, SkewShape((2, 1), ()), (1, 1, 1)) == \
        brute_ssyt_count((2, 1), (1, 1, 1))


def test_vanishing():
    p = CylProfile(2, 2)
    shape = SkewShape((2, 1), ())
    assert count_cyl_tableaux(p, shape, (2,)) == 0          # wrong total
    assert count_cyl_tableaux(p, shape, (3,)) == 0          # entry > level
    assert enumerate_cyl_tableaux(p, shape, (3,)) == []


def test_shape_validation():
    p = CylProfile(2, 1)
    with pytest.raises(ValueError):
        count_cyl_tableaux(p, SkewShape((3,), ()), (3,))  # outer not bounded
    with pytest.raises(ValueError):
        enumerate_cyl_tableaux(p, SkewShape((1,), (2,)), (1,))  # no containment


def test_chain_steps_are_bounded_strips():
    p = CylProfile(2, 2)
    shape = SkewShape((3, 1), ())
    alpha = (2, 1, 1)
    for chain in enumerate_cyl_tableaux(p, shape, alpha):
        assert chain[0] == shape.inner and chain[-1] == shape.outer
        for a, (prev, nxt) in zip(alpha, zip(chain, chain[1:])):
            assert is_nl_horizontal_strip(p, nxt, prev)
            assert sum(nxt) - sum(prev) == a


def test_count_equals_enumeration_small_grid():
    for n_rank in (2, 3):
        for level in (1, 2):
            p = CylProfile(n_rank, level)
            for n in range(5):
                for lam in enumerate_nl_partitions(p, n):
                    for mu in sub_partitions(lam):
                        if not is_nl_partition(p, mu):
                            continue
                        shape = SkewShape(lam, mu)
                        for alpha in naive_partitions(shape.size()):
                            assert count_cyl_tableaux(p, shape, alpha) == \
                                len(enumerate_cyl_tableaux(p, shape, alpha))


@settings(max_examples=60, deadline=None)
@given(st.permutations([2, 1, 1, 0]))
def test_weight_permutation_invariance(perm):
    p = CylProfile(2, 2)
    shape = SkewShape((3, 1), ())
    assert count_cyl_tableaux(p, shape, tuple(perm)) == \
        count_cyl_tableaux(p, shape, (2, 1, 1, 0))


def test_classical_kostka_examples():
    assert classical_kostka((2, 1), (1, 1, 1)) == 2
    for n in range(1, 6):
        assert classical_kostka((n,), (n,)) == 1
    assert classical_kostka((1, 1), (2,)) == 0
    assert classical_kostka((), ()) == 1


def test_classical_kostka_against_brute_force():
    for n in range(7):
        for lam in naive_partitions(n):
            for alpha in naive_partitions(n):
                assert classical_kostka(lam, alpha) == brute_ssyt_count(lam, alpha)


def test_classical_kostka_compositions():
    # weight need not be a partition
    assert classical_kostka((2, 1), (1, 2)) == classical_kostka((2, 1), (2, 1)) == 1
    assert classical_kostka((3, 1), (1, 1, 2)) == brute_ssyt_count((3, 1), (1, 1, 2))


def test_make_weight():
    assert make_weight([0, 2, 1]) == (0, 2, 1)
    with pytest.raises(ValueError):
        make_weight([1, -1])
