"""A guided tour of exact postage arithmetic with the set {0, 3, 5}.

With stamps worth 3 and 5 (and the option of leaving a slot empty, the
role of 0), which totals can you make with exactly N slots on the
envelope?  This script computes the answer exactly and shows that for
every N the reachable totals are the whole interval [0, 5N] minus two
fixed fringes: unreachable low values, and high values whose shortfall
5N - n is unreachable for the mirrored stamp set {0, 2, 5}.
"""

from __future__ import annotations

from stampset import (
    FiniteIntegerSet,
    check_structure,
    exceptional_profile,
    min_threshold,
    n_fold_sumset,
    reflect,
    represent,
)


def main() -> None:
    stamps = FiniteIntegerSet.of([0, 3, 5])
    mirror = reflect(stamps)
    print(f"stamp set A = {stamps}, mirror b-A = {mirror}")

    profile = exceptional_profile(stamps)
    mirror_profile = exceptional_profile(mirror)
    print(f"never reachable with A:   E(A)   = {set(profile.gaps)}")
    print(f"never reachable with b-A: E(b-A) = {set(mirror_profile.gaps)}")
    print()

    for n in (1, 2, 3, 4):
        reachable = n_fold_sumset(stamps, n)
        missing_low = [m for m in profile.gaps if m <= 5 * n]
        missing_high = [5 * n - m for m in mirror_profile.gaps if m <= 5 * n]
        described = sorted(
            set(range(0, 5 * n + 1)) - set(missing_low) - set(missing_high)
        )
        verdict = check_structure(stamps, n)
        print(f"N = {n}: exactly-{n}-stamp totals {reachable.to_tuple()}")
        print(f"       interval minus fringes    {tuple(described)}")
        print(f"       identity holds: {verdict.holds}")
    print()

    print(f"the identity holds for every N >= {min_threshold(stamps)}")
    print()

    target = 22
    cert = represent(target, stamps, 6)
    print(f"one way to pay {target} with exactly 6 slots: {cert.parts}")
    print("(zeros are empty slots)")


if __name__ == "__main__":
    main()
