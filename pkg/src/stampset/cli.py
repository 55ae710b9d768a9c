"""Command line front end for single-set analysis and exhaustive scans.

Four subcommands cover the library surface:

* ``analyze <set>``: exceptional sets on both sides, per-class minimal
  elements and summand counts, the minimal threshold, and the interval
  description verdict at a chosen N.
* ``scan --bmax B --delta D``: exhaustive verification over all
  normalized sets up to B, emitting the deterministic JSON report.
* ``classify <set>``: failure-catalog families and sufficiency-family
  threshold for one set.
* ``kneser <set>``: growth of the iterated residue sumsets kB and the
  small-doubling family classification.

Sets are written as comma-separated integers ("0,3,5").  Input sets are
normalized automatically (shift by the minimum, divide by the gcd) with
a notice showing the applied (g, tau).  Exit codes: 0 success, 2 bad
input, 3 a scan contradicted the expected catalogs, 4 report I/O error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .core import (
    FiniteIntegerSet,
    exceptional_profile,
    normalize,
    reflect,
)
from .errors import (
    CatalogMismatchError,
    DegenerateSetError,
    InvalidSetError,
    TooSmallError,
)
from .families import appendix_family_threshold, classify_exceptional_family
from .modular import growth_profile, residues_mod_b, small_doubling_families
from .scan import ScanConfig, render_report, scan_theorems
from .verifier import all_n_criterion, check_structure, min_threshold

__all__ = ["main"]


def _parse_set_literal(text: str) -> tuple[FiniteIntegerSet, int, int, tuple[int, ...]]:
    """Parse "0,3,5" into a normalized set plus the (g, tau) applied."""
    tokens = [token.strip() for token in text.split(",")]
    try:
        values = [int(token) for token in tokens]
    except ValueError:
        raise InvalidSetError(f"not a comma-separated integer list: {text!r}")
    if len(values) != len(set(values)):
        raise InvalidSetError(f"duplicate elements in {text!r}")
    g, tau, normalized = normalize(values)
    return normalized, g, tau, tuple(sorted(values))


def _gap_str(gaps: tuple[int, ...]) -> str:
    return "{" + ",".join(str(x) for x in gaps) + "}"


def _print_notice(out, normalized: FiniteIntegerSet, g: int, tau: int) -> None:
    if g != 1 or tau != 0:
        out.write(f"normalized input to {normalized} (g={g}, tau={tau})\n")


def _cmd_analyze(args) -> int:
    a_set, g, tau, _ = _parse_set_literal(args.set)
    n_summands = args.N if args.N is not None else max(1, a_set.b - a_set.ell)
    if n_summands < 1:
        raise InvalidSetError(f"N must be at least 1, got {n_summands}")
    prof = exceptional_profile(a_set)
    prof_r = exceptional_profile(reflect(a_set))
    threshold = min_threshold(a_set)
    report = check_structure(a_set, n_summands, witness_cap=args.witness_cap)

    if args.json:
        payload = {
            "set": list(a_set.elements),
            "g": g,
            "tau": tau,
            "b": a_set.b,
            "ell": a_set.ell,
            "gaps": list(prof.gaps),
            "reflected_gaps": list(prof_r.gaps),
            "first_reachable": list(prof.first_reachable),
            "min_summands": list(prof.min_summands),
            "max_summands": prof.max_summands,
            "min_threshold": threshold,
            "holds_for_all_n": all_n_criterion(a_set),
            "report": {
                "n": report.n_summands,
                "holds": report.holds,
                "witnesses": list(report.missing_witnesses),
                "witness_count": report.missing_count,
                "rhs_size": report.rhs_size,
            },
        }
        sys.stdout.write(json.dumps(payload, sort_keys=True) + "\n")
        return 0

    out = sys.stdout
    _print_notice(out, a_set, g, tau)
    out.write(f"set {a_set}  b={a_set.b}  ell={a_set.ell}\n")
    out.write(f"E(A)   = {_gap_str(prof.gaps)}\n")
    out.write(f"E(b-A) = {_gap_str(prof_r.gaps)}\n")
    for a in range(1, a_set.b):
        out.write(
            f"class {a}: first reachable {prof.first_reachable_in(a)} "
            f"using {prof.min_summands_for(a)} summands\n"
        )
    out.write(f"max summands over classes: {prof.max_summands}\n")
    out.write(f"minimal threshold: {threshold}\n")
    verdict = "holds" if report.holds else "fails"
    out.write(
        f"description at N={report.n_summands}: {verdict} "
        f"(described size {report.rhs_size})\n"
    )
    if not report.holds:
        shown = ",".join(str(w) for w in report.missing_witnesses)
        out.write(
            f"missing elements ({report.missing_count} total): {shown}\n"
        )
    return 0


def _cmd_classify(args) -> int:
    a_set, g, tau, _ = _parse_set_literal(args.set)
    out = sys.stdout
    _print_notice(out, a_set, g, tau)
    labels = classify_exceptional_family(a_set, args.delta)
    rendered = ", ".join(str(label) for label in labels) if labels else "none"
    out.write(f"set {a_set}\n")
    out.write(f"exceptional families (delta={args.delta}): {rendered}\n")
    matched = appendix_family_threshold(a_set)
    if matched is None:
        out.write("sufficiency family: none\n")
    else:
        label, threshold = matched
        out.write(f"sufficiency family: {label} holds from N={threshold}\n")
    return 0


def _cmd_kneser(args) -> int:
    a_set, g, tau, _ = _parse_set_literal(args.set)
    out = sys.stdout
    _print_notice(out, a_set, g, tau)
    residues = residues_mod_b(a_set)
    profile = growth_profile(residues, k_max=args.kmax)
    rendered = "{" + ",".join(str(r) for r in residues.to_tuple()) + "}"
    out.write(f"residues mod {residues.modulus}: {rendered}\n")
    for step in profile.entries:
        out.write(
            f"k={step.k}: |kB|={step.size}, stabilizer order {step.stabilizer.order}\n"
        )
    try:
        matches = small_doubling_families(a_set)
    except TooSmallError:
        out.write("doubling families: not applicable (needs ell >= 2)\n")
        return 0
    if matches:
        rendered = ", ".join(f"{m.label}(h={m.h})" for m in matches)
    else:
        rendered = "none"
    out.write(f"doubling families: {rendered}\n")
    return 0


def _cmd_scan(args) -> int:
    jobs = args.jobs
    if jobs is None:
        jobs = int(os.environ.get("SUMSET_JOBS", "1"))
    config = ScanConfig(
        b_min=2,
        b_max=args.bmax,
        delta=args.delta,
        parallelism=jobs,
    )
    code = 0
    try:
        result = scan_theorems(config)
    except CatalogMismatchError as err:
        if err.result is None:  # pragma: no cover - scan always attaches it
            raise
        result = err.result
        code = 3
        sys.stderr.write(f"catalog mismatch: {err}\n")
    text = render_report(result, "json")
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as handle:
                handle.write(text)
        except OSError as err:
            sys.stderr.write(f"cannot write report: {err}\n")
            return 4
    else:
        sys.stdout.write(text)
    return code


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stampset",
        description="structure of N-fold sumsets of finite integer sets",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    analyze = commands.add_parser(
        "analyze", help="profile one set and check the interval description"
    )
    analyze.add_argument("set", help='comma-separated integers, e.g. "0,3,5"')
    analyze.add_argument("--N", type=int, default=None, help="summand count to check")
    analyze.add_argument("--json", action="store_true", help="machine-readable output")
    analyze.add_argument("--witness-cap", type=int, default=64, dest="witness_cap")
    analyze.set_defaults(handler=_cmd_analyze)

    scan = commands.add_parser("scan", help="verify the description exhaustively")
    scan.add_argument("--bmax", type=int, required=True, help="largest modulus")
    scan.add_argument("--delta", type=int, choices=(0, 1, 2), default=0)
    scan.add_argument("--jobs", type=int, default=None, help="worker processes")
    scan.add_argument("--out", default=None, help="write the JSON report here")
    scan.set_defaults(handler=_cmd_scan)

    classify = commands.add_parser("classify", help="match one set against catalogs")
    classify.add_argument("set")
    classify.add_argument("--delta", type=int, choices=(1, 2), default=1)
    classify.set_defaults(handler=_cmd_classify)

    kneser = commands.add_parser("kneser", help="growth of residue sumsets kB")
    kneser.add_argument("set")
    kneser.add_argument("--kmax", type=int, default=None)
    kneser.set_defaults(handler=_cmd_kneser)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (InvalidSetError, DegenerateSetError, ValueError) as err:
        sys.stderr.write(f"error: {err}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
