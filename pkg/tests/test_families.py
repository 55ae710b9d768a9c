from __future__ import annotations

from itertools import combinations

import pytest

from stampset import FiniteIntegerSet, InvalidSetError
from stampset.families import (
    FamilyLabel,
    appendix_family_threshold,
    classify_exceptional_family,
)
from stampset.verifier import all_n_criterion, check_structure, min_threshold


def fis(*values: int) -> FiniteIntegerSet:
    return FiniteIntegerSet(tuple(values))


def every_normalized(b_range, ell_min=0, ell_max=None):
    for b in b_range:
        for r in range(b):
            for interior in combinations(range(1, b), r):
                a = FiniteIntegerSet((0, *interior, b))
                if not a.is_normalized or a.ell < ell_min:
                    continue
                if ell_max is not None and a.ell > ell_max:
                    continue
                yield a


def kinds_of(labels):
    return {(label.kind, label.parameters, label.reflected) for label in labels}


def test_punctured_interval_is_f1():
    labels = kinds_of(classify_exceptional_family(fis(0, 1, 3, 4), 1))
    # the shape is mirror-symmetric, so it matches on both sides; with
    # a = 2 the punctured interval is also the two-then-tail shape
    assert ("F1", (("a", 2),), False) in labels
    assert ("F1", (("a", 2),), True) in labels
    assert labels <= {
        ("F1", (("a", 2),), False),
        ("F1", (("a", 2),), True),
        ("F2", (("a", 2),), False),
        ("F2", (("a", 2),), True),
    }


def test_two_then_tail_is_f2():
    labels = classify_exceptional_family(fis(0, 1, 4, 5, 6), 1)
    assert kinds_of(labels) == {("F2", (("a", 3),), False)}


def test_f2_detected_through_reflection():
    labels = classify_exceptional_family(fis(0, 1, 2, 5, 6), 1)
    assert kinds_of(labels) == {("F2", (("a", 3),), True)}


def test_generic_sets_get_no_label():
    assert classify_exceptional_family(fis(0, 3, 5), 1) == ()
    assert classify_exceptional_family(fis(0, 3, 5), 2) == ()
    assert classify_exceptional_family(fis(*range(9)), 2) == ()


def test_delta_two_catalog_examples():
    labels = classify_exceptional_family(fis(0, 1, 2, 6, 7, 8, 9, 10), 2)
    assert ("G3", (), False) in kinds_of(labels)

    labels = classify_exceptional_family(fis(0, 1, 3, 6, 7, 8, 9, 10), 2)
    assert ("G4", (), False) in kinds_of(labels)

    labels = classify_exceptional_family(fis(0, 1, 3, 4, 6, 7, 8, 9, 10), 2)
    assert ("G1", (("a", 2), ("d", 5)), False) in kinds_of(labels)

    labels = classify_exceptional_family(fis(0, 1, 3, 5, 6), 2)
    assert ("G2", (("a", 2), ("c", 4)), False) in kinds_of(labels)
    assert ("G2", (("a", 2), ("c", 4)), True) in kinds_of(labels)


def test_delta_one_never_reports_g_families():
    labels = classify_exceptional_family(fis(0, 1, 3, 5, 6), 1)
    assert all(label.kind in ("F1", "F2") for label in labels)


def test_classify_validates_input():
    with pytest.raises(InvalidSetError):
        classify_exceptional_family(fis(0, 2, 4), 1)
    with pytest.raises(ValueError):
        classify_exceptional_family(fis(0, 1, 3, 4), 3)


def test_label_str_and_parameter_access():
    label = FamilyLabel("G1", (("a", 2), ("d", 5)), True)
    assert str(label) == "G1(a=2, d=5)~"
    assert label.parameter("d") == 5
    with pytest.raises(KeyError):
        label.parameter("h")


def test_theorem_catalog_iff_small():
    # failure at some N >= max(1, b - ell - 1) happens exactly on catalog sets
    for a in every_normalized(range(4, 11)):
        labeled = bool(classify_exceptional_family(a, 1))
        fails_late = min_threshold(a) > max(1, a.b - a.ell - 1)
        assert labeled == fails_late, a


def test_labeled_sets_fail_exactly_at_the_stated_depth():
    for a in every_normalized(range(4, 11)):
        if classify_exceptional_family(a, 1):
            assert not check_structure(a, max(1, a.b - a.ell - 1)).holds, a
            assert check_structure(a, a.b - a.ell).holds, a


def test_delta_two_catalog_gap_is_exactly_the_known_shape():
    """The literal catalog provably misses one shape; pin it precisely.

    Every set {0,...,b} \\ {a, b-1} with 3 <= a <= b-4 (or its mirror
    image {0,...,b} \\ {1, c}) fails the interval description exactly at
    N = b - ell - 2 = 1, yet matches no cataloged shape: the pair
    recognizer's printed range stops at b - 2.  These are the only sets
    on which catalog membership and observed failure disagree.
    """
    observed_gaps = set()
    for a in every_normalized(range(9, 11), ell_min=5):
        labeled = bool(classify_exceptional_family(a, 2))
        fails_late = min_threshold(a) > max(1, a.b - a.ell - 2)
        if labeled != fails_late:
            # every disagreement is a failure the catalog missed, never
            # a cataloged set that holds
            assert fails_late and not labeled, a
            assert min_threshold(a) == 2, a
            observed_gaps.add(a.elements)
    expected_gaps = set()
    for b in (9, 10):
        for x in range(3, b - 3):
            shape = tuple(v for v in range(b + 1) if v not in (x, b - 1))
            mirror = tuple(sorted(b - v for v in shape))
            expected_gaps.add(shape)
            expected_gaps.add(mirror)
    assert observed_gaps == expected_gaps


def test_appendix_matches_frozen():
    label, threshold = appendix_family_threshold(fis(0, 2, 4, 7))
    assert (label.kind, dict(label.parameters), threshold) == ("A1", {"a": 2}, 1)

    label, threshold = appendix_family_threshold(fis(0, 1, 3, 5))
    assert (label.kind, dict(label.parameters), threshold) == ("A2", {"a": 3}, 1)

    label, threshold = appendix_family_threshold(fis(0, 3, 4, 8))
    assert (label.kind, dict(label.parameters), threshold) == ("A3", {"h": 3}, 1)

    label, threshold = appendix_family_threshold(fis(0, 3, 7, 10))
    assert (label.kind, dict(label.parameters), threshold) == ("A4", {"h": 3}, 6)

    label, threshold = appendix_family_threshold(fis(0, 1, 5, 8))
    assert (label.kind, dict(label.parameters), threshold) == ("A5", {"a": 1}, 4)

    label, threshold = appendix_family_threshold(fis(0, 3, 5, 8, 10))
    assert (label.kind, dict(label.parameters), threshold) == ("A6", {"a": 3}, 4)


def test_appendix_rejects_other_shapes():
    assert appendix_family_threshold(fis(0, 2, 3, 7)) is None
    assert appendix_family_threshold(fis(0, 3, 5)) is None
    assert appendix_family_threshold(fis(*range(7))) is None


def test_appendix_thresholds_are_sound_small():
    hits = 0
    for a in every_normalized(range(4, 13)):
        matched = appendix_family_threshold(a)
        if matched is None:
            continue
        hits += 1
        label, claimed = matched
        assert min_threshold(a) <= claimed, (a, label, claimed)
        if label.kind in ("A1", "A2", "A3"):
            assert all_n_criterion(a), (a, label)
            assert min_threshold(a) == 1
    assert hits > 20  # the sweep actually exercised the matcher
