"""Exhaustive verification of the interval description over small moduli.

For each modulus b the harness walks every subset of the interior
{1, ..., b-1} (as a bitmask, bit j standing for element j+1), keeps the
sets with gcd 1, and checks the interval description of the N-fold
sumset over a window of N values that provably decides the minimal
threshold:

* ``delta = 0`` certifies the unconditional guarantee: no normalized set
  may fail at any N >= max(1, b - ell).
* ``delta = 1`` widens the window by one step and compares the observed
  failures against the two-family catalog of
  :func:`~stampset.families.classify_exceptional_family`.
* ``delta = 2`` widens by two steps, restricts to b >= 9 and ell >= 5
  (the regime the deeper catalog covers), and compares against the
  six-family catalog.

Any disagreement - a failure the catalog misses, a cataloged set that
never fails, or worst of all a failure inside the guaranteed range - is
collected as a catalog mismatch and raised as
:class:`~stampset.errors.CatalogMismatchError` with the full result
attached, so callers can both see the report and treat the run as a
hard failure.

Work is partitioned into contiguous bitmask ranges, each a few
milliseconds of work, and farmed out to a process pool when
``parallelism > 1``.  Every shard reports how many masks it analyzed,
how many it skipped for gcd reasons, and the sum of the mask integers
it visited; the merge step checks those against closed-form totals, so
a lost or duplicated shard cannot go unnoticed.  Results are sorted by
(b, mask) after the merge, which makes reports byte-identical across
worker counts.
"""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb, gcd
from typing import Iterator

from .core import FiniteIntegerSet, exceptional_profile, reflect
from .errors import CatalogMismatchError
from .families import classify_exceptional_family
from .verifier import DEFAULT_WITNESS_CAP, _failure_scan

__all__ = [
    "ScanConfig",
    "FailureRecord",
    "MismatchRecord",
    "ScanResult",
    "enumerate_sets",
    "scan_theorems",
    "render_report",
    "emit_report",
]


@dataclass(frozen=True)
class ScanConfig:
    """Parameters of one exhaustive scan."""

    b_min: int
    b_max: int
    ell_min: int | None = None
    ell_max: int | None = None
    delta: int = 0
    parallelism: int = 1
    witness_cap: int = DEFAULT_WITNESS_CAP

    def __post_init__(self) -> None:
        if not 2 <= self.b_min <= self.b_max:
            raise ValueError(
                f"need 2 <= b_min <= b_max, got [{self.b_min}, {self.b_max}]"
            )
        if self.delta not in (0, 1, 2):
            raise ValueError(f"delta must be 0, 1 or 2, got {self.delta}")
        if self.parallelism < 1:
            raise ValueError("parallelism must be at least 1")
        if self.witness_cap < 1:
            raise ValueError("witness_cap must be at least 1")


@dataclass(frozen=True)
class FailureRecord:
    """One (set, N) pair where the description was strictly larger."""

    b: int
    elements: tuple[int, ...]
    n_summands: int
    witnesses: tuple[int, ...]
    witness_count: int
    labels: tuple[str, ...]


@dataclass(frozen=True)
class MismatchRecord:
    """A set on which observed failures and the catalog disagree."""

    b: int
    elements: tuple[int, ...]
    kind: str
    detail: str


@dataclass(frozen=True)
class ScanResult:
    config: ScanConfig
    sets_scanned: int
    skipped_gcd: int
    failures: tuple[FailureRecord, ...]
    catalog_mismatches: tuple[MismatchRecord, ...]
    timing: dict[int, float] = field(default_factory=dict, compare=False)


def _interior_from_mask(mask: int) -> tuple[int, ...]:
    interior = []
    j = 0
    while mask:
        if mask & 1:
            interior.append(j + 1)
        mask >>= 1
        j += 1
    return tuple(interior)


def enumerate_sets(
    b: int, ell_min: int | None = None, ell_max: int | None = None
) -> Iterator[FiniteIntegerSet]:
    """Every normalized set with endpoints 0 and b, in bitmask order.

    Subsets of {1, ..., b-1} are encoded as bitmasks (bit j set means
    element j+1 is present) and visited in increasing numeric order, so
    the stream is deterministic.  Subsets whose elements share a factor
    with b are skipped; an optional interior-size window filters on ell.
    """
    if b < 2:
        raise ValueError(f"modulus must be at least 2, got {b}")
    lo = 0 if ell_min is None else ell_min
    hi = b - 1 if ell_max is None else ell_max
    for mask in range(1 << (b - 1)):
        interior = _interior_from_mask(mask)
        if not lo <= len(interior) <= hi:
            continue
        g = b
        for x in interior:
            g = gcd(g, x)
        if g != 1:
            continue
        yield FiniteIntegerSet((0, *interior, b))


def _scan_unit(
    b: int,
    mask_lo: int,
    mask_hi: int,
    ell_lo: int,
    ell_hi: int,
    delta: int,
    witness_cap: int,
):
    """Scan one contiguous bitmask range; returns plain tuples for IPC."""
    analyzed = 0
    skipped_gcd = 0
    mask_sum = 0
    failures = []
    mismatches = []
    for mask in range(mask_lo, mask_hi):
        mask_sum += mask
        interior = _interior_from_mask(mask)
        ell = len(interior)
        if not ell_lo <= ell <= ell_hi:
            continue
        g = b
        for x in interior:
            g = gcd(g, x)
        if g != 1:
            skipped_gcd += 1
            continue
        analyzed += 1
        a_set = FiniteIntegerSet((0, *interior, b))
        prof = exceptional_profile(a_set)
        prof_r = exceptional_profile(reflect(a_set))
        window_lo = max(1, b - ell - delta)
        window_hi = max(b - ell, prof.max_summands)
        fails = _failure_scan(a_set, prof, prof_r, window_lo, window_hi, witness_cap)
        if delta:
            label_strs = tuple(
                str(label) for label in classify_exceptional_family(a_set, delta)
            )
        else:
            label_strs = ()
        for n_summands, witnesses, count in fails:
            failures.append(
                (mask, a_set.elements, n_summands, witnesses, count, label_strs)
            )
        guaranteed = max(1, b - ell)
        hard = [n for n, _, _ in fails if n >= guaranteed]
        if hard:
            mismatches.append(
                (
                    mask,
                    a_set.elements,
                    "identity_violation",
                    f"fails at N={hard} inside the guaranteed range N >= {guaranteed}",
                )
            )
        if delta and bool(fails) != bool(label_strs):
            if fails:
                kind = "failure_without_family"
                detail = (
                    f"fails at N={[n for n, _, _ in fails]} but matches no "
                    f"cataloged family at delta={delta}"
                )
            else:
                kind = "family_without_failure"
                detail = (
                    f"matches {'+'.join(label_strs)} but holds at every "
                    f"N in [{window_lo}, {window_hi}]"
                )
            mismatches.append((mask, a_set.elements, kind, detail))
    return analyzed, skipped_gcd, mask_sum, failures, mismatches


def _units_for(b: int, parallelism: int) -> list[tuple[int, int]]:
    span = 1 << (b - 1)
    if parallelism == 1:
        return [(0, span)]
    unit = max(64, span // 512)
    return [(lo, min(lo + unit, span)) for lo in range(0, span, unit)]


def scan_theorems(config: ScanConfig) -> ScanResult:
    """Run the configured scan and cross-check failures against the catalog.

    Returns the collected :class:`ScanResult` when observation and catalog
    agree everywhere.  Raises :class:`CatalogMismatchError` (with the
    result attached as ``.result``) when any set disagrees, since that
    either contradicts a proved statement or exposes a catalog gap.
    """
    all_failures = []
    all_mismatches = []
    sets_scanned = 0
    skipped_gcd = 0
    timing: dict[int, float] = {}

    b_lo, b_hi = config.b_min, config.b_max
    ell_floor = config.ell_min if config.ell_min is not None else 0
    if config.delta == 2:
        # the deeper catalog is only claimed for b >= 9 and ell >= 5
        b_lo = max(b_lo, 9)
        ell_floor = max(ell_floor, 5)

    pool = (
        ProcessPoolExecutor(max_workers=config.parallelism)
        if config.parallelism > 1
        else None
    )
    try:
        for b in range(b_lo, b_hi + 1):
            started = time.perf_counter()
            ell_lo = ell_floor
            ell_hi = config.ell_max if config.ell_max is not None else b - 1
            unit_args = [
                (b, lo, hi, ell_lo, ell_hi, config.delta, config.witness_cap)
                for lo, hi in _units_for(b, config.parallelism)
            ]
            if pool is None:
                outcomes = [_scan_unit(*args) for args in unit_args]
            else:
                outcomes = list(pool.map(_scan_unit, *zip(*unit_args)))

            analyzed = skipped = mask_sum = 0
            for unit_analyzed, unit_skipped, unit_mask_sum, fails, mismatches in outcomes:
                analyzed += unit_analyzed
                skipped += unit_skipped
                mask_sum += unit_mask_sum
                all_failures.extend((b, *item) for item in fails)
                all_mismatches.extend((b, *item) for item in mismatches)

            span = 1 << (b - 1)
            pool_size = sum(
                comb(b - 1, ell) for ell in range(max(0, ell_lo), min(b - 1, ell_hi) + 1)
            ) if ell_lo <= ell_hi else 0
            if mask_sum != span * (span - 1) // 2 or analyzed + skipped != pool_size:
                raise RuntimeError(
                    f"work partition for b={b} dropped or duplicated a shard"
                )
            sets_scanned += analyzed
            skipped_gcd += skipped
            timing[b] = time.perf_counter() - started
    finally:
        if pool is not None:
            pool.shutdown()

    all_failures.sort(key=lambda item: (item[0], item[1], item[3]))
    all_mismatches.sort(key=lambda item: (item[0], item[1]))
    result = ScanResult(
        config=config,
        sets_scanned=sets_scanned,
        skipped_gcd=skipped_gcd,
        failures=tuple(
            FailureRecord(b, elements, n, witnesses, count, labels)
            for b, _, elements, n, witnesses, count, labels in all_failures
        ),
        catalog_mismatches=tuple(
            MismatchRecord(b, elements, kind, detail)
            for b, _, elements, kind, detail in all_mismatches
        ),
        timing=timing,
    )
    if result.catalog_mismatches:
        first = result.catalog_mismatches[0]
        raise CatalogMismatchError(
            f"{len(result.catalog_mismatches)} set(s) disagree with the catalog, "
            f"first: {_set_str(first.elements)} ({first.kind}: {first.detail})",
            result=result,
        )
    return result


def _set_str(elements: tuple[int, ...]) -> str:
    return "{" + ",".join(str(x) for x in elements) + "}"


def render_report(
    result: ScanResult, format: str = "json", include_timing: bool = False
) -> str:
    """Serialize a result deterministically.

    JSON output is canonical: sorted keys, no whitespace, one trailing
    newline, and no scheduling-dependent values (timing stays empty and
    the echoed config omits the worker count) unless ``include_timing``
    asks for wall-clock numbers.  CSV holds one row per failure.
    """
    if format == "json":
        payload = {
            "config": {
                "b_min": result.config.b_min,
                "b_max": result.config.b_max,
                "ell_min": result.config.ell_min,
                "ell_max": result.config.ell_max,
                "delta": result.config.delta,
                "witness_cap": result.config.witness_cap,
            },
            "sets_scanned": result.sets_scanned,
            "skipped_gcd": result.skipped_gcd,
            "failures": [
                {
                    "b": record.b,
                    "set": _set_str(record.elements),
                    "n": record.n_summands,
                    "witnesses": list(record.witnesses),
                    "witness_count": record.witness_count,
                    "labels": list(record.labels),
                }
                for record in result.failures
            ],
            "catalog_mismatches": [
                {
                    "b": record.b,
                    "set": _set_str(record.elements),
                    "kind": record.kind,
                    "detail": record.detail,
                }
                for record in result.catalog_mismatches
            ],
            "timing": (
                {str(b): round(seconds, 6) for b, seconds in sorted(result.timing.items())}
                if include_timing
                else {}
            ),
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"
    if format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["b", "set", "n", "first_witness", "labels"])
        for record in result.failures:
            writer.writerow(
                [
                    record.b,
                    _set_str(record.elements),
                    record.n_summands,
                    record.witnesses[0] if record.witnesses else "",
                    "+".join(record.labels) if record.labels else "none",
                ]
            )
        return buffer.getvalue()
    raise ValueError(f"unknown report format: {format!r}")


def emit_report(
    result: ScanResult,
    format: str = "json",
    destination: str = "",
    include_timing: bool = False,
) -> None:
    """Write the rendered report to a file (UTF-8)."""
    text = render_report(result, format, include_timing)
    with open(destination, "w", encoding="utf-8") as handle:
        handle.write(text)
