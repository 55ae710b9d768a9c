"""Exact arithmetic for N-fold sumsets of finite integer sets.

For a finite set A of non-negative integers the N-fold sumset is

    NA = { a_1 + a_2 + ... + a_N : a_i in A },

sums of exactly N elements with repetition allowed.  When 0 is in A the
sumsets are nested (NA is contained in (N+1)A) and their union

    P(A) = union of NA over all N >= 1

is the numerical semigroup generated by A.  If additionally gcd(A) = 1,
P(A) contains every sufficiently large integer; the finitely many positive
integers it misses form the exceptional set (the "gaps")

    E(A) = { n >= 1 : n not in P(A) }.

Any finite set with at least two elements can be brought into this shape:
A = g*B + tau for a unique normalized B with min B = 0 and gcd(B) = 1, and
then NA = g*NB + N*tau, so nothing is lost by working with normalized sets.

Throughout, b denotes max(A) and ell the number of interior elements
(|A| - 2).  Per non-zero residue class a mod b the profile records

    first_reachable[a] = least n >= 1 with n in P(A) and n = a (mod b),
    min_summands[a]    = least N with first_reachable[a] in NA,

which pin down E(A) exactly: the class-a gaps are the positive n = a (mod b)
below first_reachable[a].

Sets of reachable sums are held as Python integers used as bitmasks
(bit n set <=> n reachable), so one shift-or applies a summand to every
partial sum at once.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Iterator, NamedTuple

from .errors import (
    DegenerateSetError,
    InvalidResidueError,
    InvalidSetError,
    NotRepresentableError,
)

__all__ = [
    "FiniteIntegerSet",
    "Normalization",
    "ReachabilityMask",
    "ExceptionalProfile",
    "RepresentationCertificate",
    "normalize",
    "reflect",
    "n_fold_sumset",
    "exceptional_profile",
    "represent",
]


@dataclass(frozen=True)
class FiniteIntegerSet:
    """A finite set of non-negative integers, stored strictly increasing.

    ``b`` is the largest element and ``ell`` the number of interior
    elements (everything except min and max).  Analysis operations
    require the normalized form: min 0 and gcd 1.
    """

    elements: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.elements) < 2:
            raise DegenerateSetError(
                f"need at least two elements, got {list(self.elements)}"
            )
        if self.elements[0] < 0:
            raise InvalidSetError("elements must be non-negative")
        if any(x >= y for x, y in zip(self.elements, self.elements[1:])):
            raise InvalidSetError("elements must be strictly increasing")

    @classmethod
    def of(cls, values: Iterable[int]) -> "FiniteIntegerSet":
        return cls(tuple(sorted(set(values))))

    @property
    def b(self) -> int:
        return self.elements[-1]

    @property
    def ell(self) -> int:
        return len(self.elements) - 2

    @property
    def is_normalized(self) -> bool:
        g = 0
        for x in self.elements:
            g = gcd(g, x)
        return self.elements[0] == 0 and g == 1

    def __contains__(self, n: int) -> bool:
        return n in self.elements

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __str__(self) -> str:
        return "{" + ",".join(str(x) for x in self.elements) + "}"


class Normalization(NamedTuple):
    g: int
    tau: int
    set: FiniteIntegerSet


def normalize(raw: Iterable[int]) -> Normalization:
    """Write the input as g*B + tau with B normalized; return (g, tau, B).

    tau is the minimum of the input and g the gcd of the shifted set, so
    that every sumset question about the input reduces to one about B via
    N(g*B + tau) = g*NB + N*tau.
    """
    values = sorted(set(raw))
    if len(values) < 2:
        raise DegenerateSetError(f"need at least two distinct values, got {values}")
    tau = values[0]
    shifted = [x - tau for x in values]
    g = 0
    for x in shifted:
        g = gcd(g, x)
    return Normalization(g, tau, FiniteIntegerSet(tuple(x // g for x in shifted)))


def reflect(a_set: FiniteIntegerSet) -> FiniteIntegerSet:
    """The reflected set b - A = {b - a : a in A}.

    Reflection is an involution that preserves normalization, and it pairs
    the two ends of every sumset: n lies in NA exactly when bN - n lies in
    N(b - A).
    """
    b = a_set.b
    return FiniteIntegerSet(tuple(b - x for x in reversed(a_set.elements)))


def _require_normalized(a_set: FiniteIntegerSet) -> None:
    if not a_set.is_normalized:
        raise InvalidSetError(f"set {a_set} is not normalized (min 0, gcd 1)")


@dataclass(frozen=True)
class ReachabilityMask:
    """A set of integers inside [0, bound], packed into one bitmask int."""

    bound: int
    bits: int

    def __contains__(self, n: int) -> bool:
        return 0 <= n <= self.bound and (self.bits >> n) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    @property
    def count(self) -> int:
        return self.bits.bit_count()

    def to_tuple(self) -> tuple[int, ...]:
        return tuple(self)


def _iter_nfold(elements: tuple[int, ...], bit_limit: int | None = None) -> Iterator[int]:
    """Yield the bitmask of NA for N = 1, 2, 3, ... in order.

    With bit_limit set, masks are truncated to [0, bit_limit]; membership
    below the limit stays exact because summands only move bits upward.
    """
    cap = None if bit_limit is None else (1 << (bit_limit + 1)) - 1
    mask = 1
    while True:
        acc = 0
        for a in elements:
            acc |= mask << a
        if cap is not None:
            acc &= cap
        mask = acc
        yield mask


def n_fold_sumset(a_set: FiniteIntegerSet, n_summands: int) -> ReachabilityMask:
    """The exact N-fold sumset NA as a mask over [0, b*N]."""
    if n_summands < 1:
        raise ValueError(f"number of summands must be >= 1, got {n_summands}")
    steps = _iter_nfold(a_set.elements)
    mask = 0
    for _ in range(n_summands):
        mask = next(steps)
    return ReachabilityMask(a_set.b * n_summands, mask)


def _semigroup_mask(elements: tuple[int, ...], bound: int) -> int:
    """Bitmask of P(A) on [0, bound]: closure of {0} under adding elements.

    Closing under one summand c uses shifts by c, 2c, 4c, ... so the whole
    computation is O(|A| log bound) shift-ors.
    """
    cap = (1 << (bound + 1)) - 1
    mask = 1
    for c in elements:
        if c == 0:
            continue
        step = c
        while step <= bound:
            mask |= (mask << step) & cap
            step <<= 1
    return mask


@dataclass(frozen=True)
class ExceptionalProfile:
    """Per-residue reachability data for a normalized set, plus its gaps.

    Index a-1 of the tuples holds the data for residue class a (mod b),
    a = 1 .. b-1.  ``gaps`` is E(A) in increasing order.  For the trivial
    set {0, 1} all tuples are empty.
    """

    modulus: int
    first_reachable: tuple[int, ...]
    min_summands: tuple[int, ...]
    gaps: tuple[int, ...]

    def _check_residue(self, residue: int) -> None:
        if not 1 <= residue <= self.modulus - 1:
            raise InvalidResidueError(
                f"residue must be in 1..{self.modulus - 1}, got {residue}"
            )

    def first_reachable_in(self, residue: int) -> int:
        """Least positive member of P(A) congruent to residue mod b."""
        self._check_residue(residue)
        return self.first_reachable[residue - 1]

    def min_summands_for(self, residue: int) -> int:
        """Least N such that first_reachable_in(residue) is a sum of N elements."""
        self._check_residue(residue)
        return self.min_summands[residue - 1]

    @property
    def max_summands(self) -> int:
        """The largest min_summands entry (0 for the trivial set {0, 1})."""
        return max(self.min_summands, default=0)


def exceptional_profile(a_set: FiniteIntegerSet) -> ExceptionalProfile:
    """Compute first_reachable, min_summands and the gap set E(A).

    Works inside [0, (b-1)^2]: a minimal representative of a non-zero class
    never uses the summand b (dropping it would yield a smaller member of
    the same class) and needs at most b-1 summands, each at most b-1, so
    every first_reachable value fits under that bound.
    """
    _require_normalized(a_set)
    b = a_set.b
    if b == 1:
        return ExceptionalProfile(1, (), (), ())
    bound = (b - 1) ** 2
    semigroup = _semigroup_mask(a_set.elements, bound)

    first = [0] * (b - 1)
    for a in range(1, b):
        n = a
        while n <= bound and not (semigroup >> n) & 1:
            n += b
        if n > bound:  # impossible for a normalized set; guard against bugs
            raise RuntimeError(f"no member of class {a} mod {b} below {bound}")
        first[a - 1] = n

    summands = [0] * (b - 1)
    remaining = set(range(1, b))
    for n_summands, mask in enumerate(_iter_nfold(a_set.elements, bound), start=1):
        for a in tuple(remaining):
            if (mask >> first[a - 1]) & 1:
                summands[a - 1] = n_summands
                remaining.discard(a)
        if not remaining:
            break
        if n_summands > bound:
            raise RuntimeError("minimal summand counts did not stabilize")

    gaps: list[int] = []
    for a in range(1, b):
        gaps.extend(range(a, first[a - 1], b))
    gaps.sort()
    return ExceptionalProfile(b, tuple(first), tuple(summands), tuple(gaps))


@dataclass(frozen=True)
class RepresentationCertificate:
    """A verified decomposition: ``parts`` are exactly N elements of the set
    (zeros included) summing to ``target``."""

    target: int
    parts: tuple[int, ...]

    @property
    def n_summands(self) -> int:
        return len(self.parts)


def represent(n: int, a_set: FiniteIntegerSet, n_summands: int) -> RepresentationCertificate:
    """Produce a certificate that n is a sum of exactly n_summands elements.

    Raises NotRepresentableError when n is not in the N-fold sumset.  The
    decomposition is deterministic: walking from N summands down to none,
    each step takes the smallest element that still leaves a representable
    remainder.
    """
    if n_summands < 1:
        raise ValueError(f"number of summands must be >= 1, got {n_summands}")
    if n < 0 or n > a_set.b * n_summands:
        raise NotRepresentableError(
            f"{n} is not a sum of {n_summands} elements of {a_set}"
        )
    # reach[k] = bitmask of kA, truncated to [0, n] (enough to answer
    # membership of remainders, which never exceed n).
    cap = (1 << (n + 1)) - 1
    reach = [1]
    mask = 1
    for _ in range(n_summands):
        acc = 0
        for a in a_set.elements:
            acc |= mask << a
        mask = acc & cap
        reach.append(mask)
    if not (reach[n_summands] >> n) & 1:
        raise NotRepresentableError(
            f"{n} is not a sum of {n_summands} elements of {a_set}"
        )
    parts = []
    remainder = n
    for k in range(n_summands, 0, -1):
        for a in a_set.elements:
            lower = remainder - a
            if lower >= 0 and (reach[k - 1] >> lower) & 1:
                parts.append(a)
                remainder = lower
                break
        else:  # pragma: no cover - contradicts the membership test above
            raise RuntimeError("certificate walk lost the representation")
    if remainder != 0:  # pragma: no cover
        raise RuntimeError("certificate walk ended off zero")
    return RepresentationCertificate(n, tuple(sorted(parts)))
