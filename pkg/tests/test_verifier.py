from __future__ import annotations

from itertools import combinations

import pytest

from stampset import FiniteIntegerSet, InvalidSetError, n_fold_sumset, reflect
from stampset.errors import InvalidResidueError
from stampset.verifier import (
    all_n_criterion,
    check_structure,
    min_threshold,
    placement_check,
)

from oracles import brute_nfold, brute_profile


def fis(*values: int) -> FiniteIntegerSet:
    return FiniteIntegerSet(tuple(values))


def every_normalized(b_max, ell_min=0):
    for b in range(2, b_max + 1):
        for r in range(b):
            for interior in combinations(range(1, b), r):
                a = FiniteIntegerSet((0, *interior, b))
                if a.is_normalized and a.ell >= ell_min:
                    yield a


def brute_description(elements, n_summands):
    """Oracle for the interval description, from brute-force profiles."""
    b = max(elements)
    reflected = tuple(sorted(b - x for x in elements))
    first, _, _ = brute_profile(elements)
    first_r, _, _ = brute_profile(reflected)
    top = b * n_summands
    keep = {n for n in range(0, top + 1, b)}
    for a in range(1, b):
        lo, hi = first[a - 1], top - first_r[b - a - 1]
        keep.update(range(lo, hi + 1, b))
    return keep


def test_check_structure_failing_example():
    report = check_structure(fis(0, 1, 5, 6), 3)
    assert not report.holds
    assert 4 in report.missing_witnesses
    assert report.missing_count == len(report.missing_witnesses) == 3
    assert report.missing_witnesses == (4, 9, 14)
    assert report.rhs_size == 19


def test_check_structure_holding_examples():
    assert check_structure(fis(0, 3, 5), 2).holds
    assert check_structure(fis(*range(8)), 1).holds
    assert check_structure(fis(0, 1), 5).holds


def test_check_structure_rejects_bad_input():
    with pytest.raises(InvalidSetError):
        check_structure(fis(0, 2, 4), 2)
    with pytest.raises(ValueError):
        check_structure(fis(0, 3, 5), 0)


def test_check_structure_witness_cap():
    report = check_structure(fis(0, 1, 5, 6), 3, witness_cap=1)
    assert report.missing_witnesses == (4,)
    assert report.missing_count == 3


def test_check_structure_matches_oracle_exhaustively():
    for a in every_normalized(7):
        for n_summands in range(1, a.b - a.ell + 3):
            report = check_structure(a, n_summands)
            expected = brute_description(a.elements, n_summands)
            got_sumset = brute_nfold(a.elements, n_summands)
            assert report.holds == (expected == got_sumset), (a, n_summands)
            assert set(report.missing_witnesses) <= expected - got_sumset


def test_witnesses_are_valid():
    for a in [fis(0, 1, 5, 6), fis(0, 1, 3, 4), fis(0, 1, 7, 8)]:
        for n_summands in range(1, a.b):
            report = check_structure(a, n_summands)
            sumset = n_fold_sumset(a, n_summands)
            top = a.b * n_summands
            from stampset import exceptional_profile

            gaps = set(exceptional_profile(a).gaps)
            gaps_r = set(exceptional_profile(reflect(a)).gaps)
            for w in report.missing_witnesses:
                assert 0 <= w <= top
                assert w not in sumset
                assert w not in gaps
                assert top - w not in gaps_r


def test_min_threshold_frozen_examples():
    assert min_threshold(fis(0, 1, 5, 6)) == 4
    assert min_threshold(fis(0, 3, 5)) == 1
    assert min_threshold(fis(0, 1, 3, 4)) == 2
    assert min_threshold(fis(0, 1)) == 1
    assert min_threshold(fis(*range(10))) == 1


def test_min_threshold_is_exact():
    # the returned N0 holds, N0 - 1 (when >= 1) fails
    for a in every_normalized(9):
        n0 = min_threshold(a)
        assert check_structure(a, n0).holds
        if n0 > 1:
            assert not check_structure(a, n0 - 1).holds


def test_threshold_never_exceeds_interval_bound():
    # the description always holds from N = b - ell on
    for a in every_normalized(10):
        assert min_threshold(a) <= max(1, a.b - a.ell)


def test_reflection_symmetry_of_the_description():
    for a in every_normalized(8):
        mirrored = reflect(a)
        for n_summands in range(1, a.b + 1):
            assert (
                check_structure(a, n_summands).holds
                == check_structure(mirrored, n_summands).holds
            )


def test_all_n_criterion_examples():
    assert all_n_criterion(fis(0, 3, 5))
    assert all_n_criterion(fis(0, 2, 4, 7))
    assert not all_n_criterion(fis(0, 1, 5, 6))
    assert all_n_criterion(fis(0, 1))


def test_all_n_criterion_equivalent_to_threshold_one():
    for a in every_normalized(10):
        assert all_n_criterion(a) == (min_threshold(a) == 1), a


def test_placement_check_frozen_example():
    result = placement_check(fis(0, 3, 5), 1, 2)
    assert result.hypothesis_met
    assert result.holds
    assert result.target == 6 + 5
    assert result.kb_size == 3  # {0,3} doubled in Z/5 is {0,1,3}
    result = placement_check(fis(0, 1, 6, 7), 5, 2)
    assert result.hypothesis_met and result.holds
    assert result.target == 5 + 7


def test_placement_check_vacuous_when_hypothesis_unmet():
    # {0,1,9}: B = {0,1}, |2B| = 3 < 9 - min_summands(5) = 9 - 5
    result = placement_check(fis(0, 1, 9), 5, 2)
    assert not result.hypothesis_met
    assert result.holds


def test_placement_check_never_false_small():
    for a in every_normalized(9, ell_min=1):
        for residue in range(1, a.b):
            for k in range(1, a.b + 1):
                result = placement_check(a, residue, k)
                assert result.holds, (a, residue, k)


def test_placement_check_rejects_bad_residue():
    with pytest.raises(InvalidResidueError):
        placement_check(fis(0, 3, 5), 5, 2)
    with pytest.raises(InvalidResidueError):
        placement_check(fis(0, 3, 5), 0, 2)
    with pytest.raises(ValueError):
        placement_check(fis(0, 3, 5), 1, 0)
