"""How fast do repeated sumsets fill the cyclic group Z/bZ?

Reducing a stamp set mod b gives a residue set B containing 0.  The
iterated sumsets B, 2B, 3B, ... grow by at least two new residues per
step (once B has three or more residues) until they saturate the whole
group, and the exceptions to faster growth are rigid: a set whose double
2B stays unusually small must be close to an arithmetic progression.
This script prints growth tables, stabilizer jumps, and the recognized
small-doubling shapes.
"""

from __future__ import annotations

from stampset import (
    FiniteIntegerSet,
    growth_profile,
    residues_mod_b,
    small_doubling_families,
)


def show(raw: list[int]) -> None:
    a_set = FiniteIntegerSet.of(raw)
    residues = residues_mod_b(a_set)
    profile = growth_profile(residues)
    rendered = "{" + ",".join(str(r) for r in residues.to_tuple()) + "}"
    print(f"A = {a_set}, residues B = {rendered} mod {residues.modulus}")
    for step in profile.entries:
        bar = "#" * step.size
        print(
            f"  k={step.k}: |kB| = {step.size:2d}  {bar:<16} "
            f"stabilizer order {step.stabilizer.order}"
        )
    matches = small_doubling_families(a_set)
    if matches:
        rendered = ", ".join(f"{m.label}(h={m.h})" for m in matches)
        print(f"  small doubling, recognized shape: {rendered}")
    else:
        print("  doubling is generic: |2B| >= min(b, ell + 4)")
    print()


def main() -> None:
    show([0, 1, 6, 7])             # endpoints of a progression: slow growth
    show([0, 2, 3, 11, 12])        # generic set: quick saturation
    show([0, 1, 4, 5, 8, 9, 12])   # cosets of a subgroup: stabilizer order 3


if __name__ == "__main__":
    main()
