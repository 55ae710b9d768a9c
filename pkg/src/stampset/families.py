"""Recognizers for the exceptional families of the structure identity.

Most normalized sets ``A = {0, ..., b}`` satisfy the interval description
of ``NA`` well below the guaranteed bound ``N = b - ell``.  The sets that
do not are rare and completely cataloged, and every catalog entry is an
explicit shape in one or two integer parameters:

Failure catalogs (:func:`classify_exceptional_family`):

* ``F1``: ``{0, ..., b} \\ {a}`` with ``2 <= a <= b - 2``.  The identity
  first holds at ``N = b - ell = 2``, one step later than generic sets.
* ``F2``: ``{0, 1, a+1, ..., b}`` with ``2 <= a <= b - 2``.  First holds
  at ``N = b - ell = a``.
* ``G1``: ``{0, 1, b}`` joined with ``{a+1, ..., b-1}`` minus one element
  ``d`` (``2 <= a <= b - 2``, ``a + 2 <= d <= b - 1``), subject to ``a``
  not being a sum of ``a - 1`` elements of the set.
* ``G2``: ``{0, ..., b} \\ {a, c}`` with ``2 <= a < c <= b - 2``.
* ``G3``: ``{0, 1, 2, 6, ..., b}`` with ``5`` not a sum of two elements.
* ``G4``: ``{0, 1, 3, 6, ..., b}`` with ``5`` not a sum of two elements.

``F1`` and ``F2`` are exactly the sets that still fail somewhere at or
above ``N = b - ell - 1``; adding ``G1`` through ``G4`` gives the sets
failing at or above ``N = b - ell - 2`` (for ``b >= 9`` and ``ell >= 5``).
Both catalogs are closed under the question "is ``A`` *or* its reflection
``b - A`` of this shape", so every recognizer runs on both and labels the
mirror matches.

Sufficiency catalog (:func:`appendix_family_threshold`): six parametrized
shapes with two or three nonzero elements below ``b`` whose thresholds
are known exactly or near-exactly:

* ``A1``: ``{0, a, 2a, b}``, ``gcd(a, b) = 1`` - holds for every ``N``.
* ``A2``: ``{0, 2a - b, a, b}``, ``gcd(a, b) = 1`` - holds for every ``N``.
* ``A3``: ``{0, h, b/2, b}``, ``gcd(h, b/2) = 1`` - holds for every ``N``.
* ``A4``: ``{0, h, b - h, b}``, ``gcd(h, b) = 1`` - holds for
  ``N >= b - 1 - h``.
* ``A5``: ``{0, a, a + b/2, b}``, ``gcd(a, b/2) = 1`` - holds for
  ``N >= b/2``.
* ``A6``: ``{0, a, b/2, a + b/2, b}``, ``gcd(a, b/2) = 1`` - holds for
  ``N >= b/2 - 1``.

The printed side conditions (the ``gcd`` requirements and the sumset
non-membership clauses) are all consequences of the shapes for normalized
input, but they are checked computationally anyway so that each
recognizer is a faithful transcription of its family's definition.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .core import FiniteIntegerSet, n_fold_sumset, reflect
from .errors import InvalidSetError

__all__ = [
    "FamilyLabel",
    "classify_exceptional_family",
    "appendix_family_threshold",
]


@dataclass(frozen=True)
class FamilyLabel:
    """A recognized exceptional family, with its parameter values.

    ``kind`` is one of ``F1``, ``F2``, ``G1``..``G4`` (failure catalogs)
    or ``A1``..``A6`` (sufficiency catalog).  ``parameters`` maps the
    family's printed parameter names to their values, as a sorted tuple
    of pairs so labels stay hashable.  ``reflected`` marks matches found
    on ``b - A`` rather than ``A`` itself.
    """

    kind: str
    parameters: tuple[tuple[str, int], ...] = field(default=())
    reflected: bool = False

    def parameter(self, name: str) -> int:
        for key, value in self.parameters:
            if key == name:
                return value
        raise KeyError(name)

    def __str__(self) -> str:
        inner = ", ".join(f"{k}={v}" for k, v in self.parameters)
        tag = f"{self.kind}({inner})" if inner else self.kind
        return tag + ("~" if self.reflected else "")


def _complement(subject: FiniteIntegerSet) -> list[int]:
    members = set(subject.elements)
    return [x for x in range(subject.b + 1) if x not in members]


def _match_f1(subject: FiniteIntegerSet) -> list[tuple[str, tuple[tuple[str, int], ...]]]:
    b = subject.b
    missing = _complement(subject)
    if len(missing) == 1 and 2 <= missing[0] <= b - 2:
        a = missing[0]
        if a not in subject:
            return [("F1", (("a", a),))]
    return []


def _tail_above_one(subject: FiniteIntegerSet) -> list[int] | None:
    """Interior elements other than 1, provided 0, 1, b are all present."""
    if 1 not in subject:
        return None
    return [x for x in subject.elements if x not in (0, 1, subject.b)]


def _match_f2(subject: FiniteIntegerSet) -> list[tuple[str, tuple[tuple[str, int], ...]]]:
    b = subject.b
    tail = _tail_above_one(subject)
    if not tail:
        return []
    a = tail[0] - 1
    if not 2 <= a <= b - 2:
        return []
    if tail != list(range(a + 1, b)):
        return []
    if a in n_fold_sumset(subject, a - 1):
        return []
    return [("F2", (("a", a),))]


def _match_g1(subject: FiniteIntegerSet) -> list[tuple[str, tuple[tuple[str, int], ...]]]:
    b = subject.b
    tail = _tail_above_one(subject)
    if not tail:
        return []
    a = tail[0] - 1
    if not 2 <= a <= b - 2:
        return []
    gaps = sorted(set(range(a + 1, b)) - set(tail))
    if len(gaps) != 1:
        return []
    d = gaps[0]
    if not a + 2 <= d <= b - 1:
        return []
    if a in n_fold_sumset(subject, a - 1):
        return []
    return [("G1", (("a", a), ("d", d)))]


def _match_g2(subject: FiniteIntegerSet) -> list[tuple[str, tuple[tuple[str, int], ...]]]:
    b = subject.b
    missing = _complement(subject)
    if len(missing) != 2:
        return []
    a, c = missing
    if not (2 <= a <= b - 2 and 2 <= c <= b - 2):
        return []
    if a in subject or c in subject:
        return []
    return [("G2", (("a", a), ("c", c)))]


def _match_fixed_head(
    subject: FiniteIntegerSet, head: tuple[int, ...], kind: str
) -> list[tuple[str, tuple[tuple[str, int], ...]]]:
    b = subject.b
    if subject.elements != head + tuple(range(6, b + 1)):
        return []
    if 5 in n_fold_sumset(subject, 2):
        return []
    return [(kind, ())]


_DELTA_ONE_MATCHERS = (_match_f1, _match_f2)
_DELTA_TWO_MATCHERS = (
    _match_f1,
    _match_f2,
    _match_g1,
    _match_g2,
    lambda s: _match_fixed_head(s, (0, 1, 2), "G3"),
    lambda s: _match_fixed_head(s, (0, 1, 3), "G4"),
)


def classify_exceptional_family(
    a_set: FiniteIntegerSet, delta: int = 1
) -> tuple[FamilyLabel, ...]:
    """Report every failure-catalog family that A or its reflection matches.

    With ``delta=1`` the catalog is {F1, F2}: exactly the sets that fail
    the interval description at some N >= max(1, b - ell - 1).  With
    ``delta=2`` the catalog grows by {G1, G2, G3, G4}, covering failures
    at some N >= max(1, b - ell - 2) whenever b >= 9 and ell >= 5.  An
    empty result means the set is generic at that depth.

    Matches on the reflection b - A are re-verified on the reflected set
    and carry ``reflected=True``; a self-symmetric shape therefore shows
    up twice, once per side.
    """
    if not a_set.is_normalized:
        raise InvalidSetError(f"{a_set} is not normalized")
    if delta not in (1, 2):
        raise ValueError(f"delta must be 1 or 2, got {delta}")
    matchers = _DELTA_ONE_MATCHERS if delta == 1 else _DELTA_TWO_MATCHERS
    labels = []
    for subject, mirrored in ((a_set, False), (reflect(a_set), True)):
        for matcher in matchers:
            for kind, parameters in matcher(subject):
                labels.append(FamilyLabel(kind, parameters, mirrored))
    return tuple(labels)


def appendix_family_threshold(
    a_set: FiniteIntegerSet,
) -> tuple[FamilyLabel, int] | None:
    """Match A against the six sufficiency shapes and return the threshold.

    The returned integer is the N from which the interval description is
    guaranteed to hold for that family (1 for A1-A3, b - 1 - h for A4,
    b/2 for A5, b/2 - 1 for A6).  It is an upper bound for
    :func:`~stampset.verifier.min_threshold`, not always the exact value.
    Patterns are tried in order A1..A6 and the first match wins; returns
    None when no shape fits.
    """
    if not a_set.is_normalized:
        raise InvalidSetError(f"{a_set} is not normalized")
    b = a_set.b
    interior = a_set.elements[1:-1]
    half = b // 2 if b % 2 == 0 else None

    if len(interior) == 2:
        x, y = interior
        if y == 2 * x and gcd(x, b) == 1:
            return FamilyLabel("A1", (("a", x),)), 1
        if x == 2 * y - b and gcd(y, b) == 1:
            return FamilyLabel("A2", (("a", y),)), 1
        if half is not None and half in (x, y):
            h = y if x == half else x
            if gcd(h, half) == 1:
                return FamilyLabel("A3", (("h", h),)), 1
        if x + y == b and gcd(x, b) == 1:
            return FamilyLabel("A4", (("h", x),)), b - 1 - x
        if half is not None and y == x + half and gcd(x, half) == 1:
            return FamilyLabel("A5", (("a", x),)), half
    elif len(interior) == 3 and half is not None:
        x, y, z = interior
        if y == half and z == x + half and gcd(x, half) == 1:
            return FamilyLabel("A6", (("a", x),)), half - 1
    return None
