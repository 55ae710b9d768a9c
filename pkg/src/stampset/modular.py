"""Sumset arithmetic in the cyclic group Z/bZ.

The reduction B = A mod b of a normalized set A (top element b, so b and 0
collapse) drives all threshold bounds: how fast the iterated sumsets kB
grow in Z/bZ controls how soon NA fills out its interval description.  The
key growth facts, all checked here at runtime:

  * |U + V| >= |U + H| + |V + H| - |H| for the stabilizer
    H = { g : g + (U+V) = U+V }  (Kneser's bound for cyclic groups);
  * if B contains 0, generates, and has at least two non-zero residues,
    then |kB| >= min(b, |(k-1)B| + 2) for every k >= 2;
  * |2B| >= min(b, ell + 3) always, and |2B| >= min(b, ell + 4) outside
    six explicit one-parameter families of sets (K1..K6 below).

Residue sets are bitmasks over b bits; a modular sumset is an or of
rotations, and subgroups of Z/bZ are enumerated as dZ/bZ for divisors d.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Iterator

from .core import FiniteIntegerSet
from .errors import (
    EmptySetError,
    InvalidSetError,
    ModulusMismatchError,
    NotGeneratingError,
    TooSmallError,
)

__all__ = [
    "ResidueSet",
    "StabilizerSubgroup",
    "GrowthStep",
    "GrowthProfile",
    "DoublingMatch",
    "residues_mod_b",
    "mod_sumset",
    "stabilizer",
    "growth_profile",
    "small_doubling_families",
]


@dataclass(frozen=True)
class ResidueSet:
    """A subset of Z/bZ held as a bitmask over bits 0..b-1."""

    modulus: int
    bits: int

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}")
        if self.bits < 0 or self.bits >> self.modulus:
            raise ValueError("bitmask has bits outside 0..modulus-1")

    @classmethod
    def of(cls, values: Iterable[int], modulus: int) -> "ResidueSet":
        bits = 0
        for v in values:
            bits |= 1 << (v % modulus)
        return cls(modulus, bits)

    @property
    def size(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, residue: int) -> bool:
        return (self.bits >> (residue % self.modulus)) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def to_tuple(self) -> tuple[int, ...]:
        return tuple(self)

    def __str__(self) -> str:
        return "{" + ",".join(str(r) for r in self) + "} mod " + str(self.modulus)


def residues_mod_b(a_set: FiniteIntegerSet) -> ResidueSet:
    """Reduce a finite integer set mod its own largest element b."""
    return ResidueSet.of(a_set.elements, a_set.b)


def _rotate(bits: int, shift: int, modulus: int) -> int:
    """Cyclic left rotation of a b-bit mask: residue r maps to r + shift."""
    shift %= modulus
    full = (1 << modulus) - 1
    return ((bits << shift) | (bits >> (modulus - shift))) & full if shift else bits


def mod_sumset(u: ResidueSet, v: ResidueSet) -> ResidueSet:
    """The exact sumset U + V inside Z/bZ."""
    if u.modulus != v.modulus:
        raise ModulusMismatchError(
            f"cannot add subsets of Z/{u.modulus} and Z/{v.modulus}"
        )
    acc = 0
    for r in u:
        acc |= _rotate(v.bits, r, u.modulus)
    return ResidueSet(u.modulus, acc)


@dataclass(frozen=True)
class StabilizerSubgroup:
    """The subgroup H = dZ/bZ of translations fixing a residue set.

    ``generator`` is the least positive divisor d of b with d + W = W;
    d = b encodes the trivial subgroup {0}, d = 1 the full group.
    """

    modulus: int
    generator: int

    @property
    def order(self) -> int:
        return self.modulus // self.generator

    def members(self) -> tuple[int, ...]:
        return tuple(range(0, self.modulus, self.generator))


def stabilizer(w: ResidueSet) -> StabilizerSubgroup:
    """Compute H(W) = { g in Z/bZ : g + W = W }.

    Every subgroup of Z/bZ is dZ/bZ for a divisor d, and the set of
    stabilizing translations is a subgroup, so it suffices to try each
    divisor in increasing order and keep the first that fixes W.
    """
    if w.bits == 0:
        raise EmptySetError("stabilizer of the empty set is undefined here")
    b = w.modulus
    for d in range(1, b + 1):
        if b % d == 0 and _rotate(w.bits, d, b) == w.bits:
            return StabilizerSubgroup(b, d)
    raise RuntimeError("unreachable: d = b always stabilizes")  # pragma: no cover


@dataclass(frozen=True)
class GrowthStep:
    k: int
    size: int
    stabilizer: StabilizerSubgroup


@dataclass(frozen=True)
class GrowthProfile:
    """Sizes and stabilizers of the iterated sumsets kB in Z/bZ.

    ``entries`` stops at saturation (|kB| = b) or at the requested k_max,
    whichever comes first.  ``smallest_k(delta)`` returns the least K >= 2
    with |KB| >= min(b, 2K + ell + delta - 1), where ell is the number of
    non-zero residues of B; saturation guarantees this terminates by K = b.
    """

    residues: ResidueSet
    entries: tuple[GrowthStep, ...]
    _sizes: tuple[int, ...]  # 1-indexed by k, always reaching saturation

    def size_of(self, k: int) -> int:
        if k < 1:
            raise ValueError(f"k must be >= 1, got {k}")
        if k <= len(self._sizes):
            return self._sizes[k - 1]
        return self.residues.modulus  # saturated from here on

    def smallest_k(self, delta: int) -> int:
        b = self.residues.modulus
        ell = self.residues.size - 1
        for k in range(2, b + 2):
            if self.size_of(k) >= min(b, 2 * k + ell + delta - 1):
                return k
        raise RuntimeError(  # pragma: no cover - saturation forces a hit
            f"no admissible k below the cap for {self.residues}"
        )


def growth_profile(residues: ResidueSet, k_max: int | None = None) -> GrowthProfile:
    """Track |kB| and its stabilizer for k = 1, 2, ... up to saturation.

    Requires 0 in B and that B generate Z/bZ.  While iterating, the
    two-per-step growth law |kB| >= min(b, |(k-1)B| + 2) is asserted for
    sets with at least two non-zero residues; a violation would disprove
    the underlying theorem, so it raises RuntimeError rather than a
    package error.
    """
    if residues.bits == 0:
        raise EmptySetError("growth profile of the empty set is undefined")
    if 0 not in residues:
        raise NotGeneratingError(f"{residues} must contain the residue 0")
    b = residues.modulus
    g = b
    for r in residues:
        g = gcd(g, r)
    if g != 1:
        raise NotGeneratingError(f"{residues} does not generate Z/{b}")
    if k_max is not None and k_max < 1:
        raise ValueError(f"k_max must be >= 1, got {k_max}")

    # sizes always run to saturation (smallest_k needs them); entries stop
    # at k_max when one is given.
    ell = residues.size - 1
    entries: list[GrowthStep] = []
    sizes: list[int] = []
    mask = residues.bits
    k = 1
    while True:
        size = mask.bit_count()
        if ell >= 2 and k >= 2 and size < min(b, sizes[-1] + 2):
            raise RuntimeError(
                f"growth law violated at k={k} for {residues}: "
                f"|kB|={size} < min({b}, {sizes[-1]}+2)"
            )
        sizes.append(size)
        if k_max is None or k <= k_max:
            entries.append(GrowthStep(k, size, stabilizer(ResidueSet(b, mask))))
        if size == b:
            break
        if k >= b:
            raise RuntimeError(  # pragma: no cover - generating sets saturate
                f"{residues} failed to saturate within k <= {b}"
            )
        acc = 0
        probe = residues.bits
        while probe:
            low = probe & -probe
            acc |= _rotate(mask, low.bit_length() - 1, b)
            probe ^= low
        mask = acc
        k += 1
    return GrowthProfile(residues, tuple(entries), tuple(sizes))


@dataclass(frozen=True)
class DoublingMatch:
    """A structural match against one of the small-doubling families."""

    label: str
    h: int


# The six families attaining |2B| = ell + 3 < min(b, ell + 4).  Written as
# the full sets A (the reduction drops the top element b = 0 mod b):
#
#   K1  {0, h, 2h, b}          gcd(h, b) = 1
#   K2  {0, 2h-b, h, b}        gcd(h, b) = 1
#   K3  {0, h, b-h, b}         gcd(h, b) = 1
#   K4  {0, h, b/2, b}         gcd(h, b/2) = 1, b even
#   K5  {0, h, h+b/2, b}       gcd(h, b/2) = 1, b even
#   K6  {0, h, b/2, h+b/2, b}  gcd(h, b/2) = 1, b even
def small_doubling_families(a_set: FiniteIntegerSet) -> tuple[DoublingMatch, ...]:
    """Match A against the families whose doubling stalls at |2B| = ell + 3.

    Matches are only reported when b >= ell + 4.  Below that the stronger
    bound min(b, ell + 4) collapses to b, every admissible set already
    attains |2B| = b, and no set is exceptional even when its elements
    happen to line up with one of the patterns.

    Requires a normalized set with at least two interior elements.
    """
    if not a_set.is_normalized:
        raise InvalidSetError(f"set {a_set} is not normalized (min 0, gcd 1)")
    if a_set.ell < 2:
        raise TooSmallError(
            f"small-doubling families need at least 2 interior elements, "
            f"got {a_set.ell}"
        )
    b = a_set.b
    if b < a_set.ell + 4:
        return ()
    matches: list[DoublingMatch] = []
    interior = a_set.elements[1:-1]
    if len(interior) == 2:
        x, y = interior
        if y == 2 * x and gcd(x, b) == 1:
            matches.append(DoublingMatch("K1", x))
        if x == 2 * y - b and gcd(y, b) == 1:
            matches.append(DoublingMatch("K2", y))
        if x + y == b and gcd(x, b) == 1:
            matches.append(DoublingMatch("K3", x))
        if b % 2 == 0:
            half = b // 2
            if half in (x, y):
                h = y if x == half else x
                if gcd(h, half) == 1:
                    matches.append(DoublingMatch("K4", h))
            if y == x + half and gcd(x, half) == 1:
                matches.append(DoublingMatch("K5", x))
    elif len(interior) == 3 and b % 2 == 0:
        h, mid, top = interior
        half = b // 2
        if mid == half and top == h + half and gcd(h, half) == 1:
            matches.append(DoublingMatch("K6", h))
    return tuple(matches)
