"""Census sweeps and machine-readable reports."""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields
from typing import Iterable, Sequence

from .config import BatchConfig
from .errors import DegenerateInput, LatticeError
from .io import CensusEntry
from .lattice import convex_hull, is_reflexive
from .mirror import VerificationRecord, verify_mirror

REPORT_SCHEMA_VERSION = 1

INVARIANTS = ("ell_delta", "ell_dual", "h11_X", "h21_Z", "h11_Z", "pic_toric", "ph", "f21")
# Observed range of the toric Picard rank over reflexive 3-polytopes; reported, not enforced.
PIC_RANGE = (1, 19)


@dataclass(frozen=True)
class ReportRecord:
    schema_version: int
    id: int
    status: str  # "ok", "failed" or "skipped"
    reason: str
    ell_delta: int | None = None
    ell_dual: int | None = None
    h11_X: int | None = None
    h21_Z: int | None = None
    h11_Z: int | None = None
    pic_toric: int | None = None
    ph: int | None = None
    k: int | None = None
    f21: int | None = None
    extremal_facets: bool = False
    mirror_ok: bool = False
    point_count_ok: bool = False
    base_locus_ok: bool = False
    ledger_ok: bool = False
    picard_sum_ok: bool = False
    empty_facets_ok: bool = False
    sphere_ok: bool = False
    passed: bool = False

    @classmethod
    def from_verification(cls, entry_id: int, rec: VerificationRecord) -> "ReportRecord":
        d = rec.data
        return cls(
            schema_version=REPORT_SCHEMA_VERSION,
            id=entry_id,
            status="ok" if rec.passed else "failed",
            reason="" if rec.passed else ";".join(c.name for c in rec.failures()),
            ell_delta=d.ell_Delta,
            ell_dual=d.ell_Delta_dual,
            h11_X=d.h11_X,
            h21_Z=d.h21_Z,
            h11_Z=d.h11_Z,
            pic_toric=d.pic_toric_fiber,
            ph=d.ph,
            k=d.k,
            f21=rec.lg[2, 1],
            extremal_facets=rec.facets_without_interior,
            mirror_ok=rec.group_passed("mirror["),
            point_count_ok=rec.group_passed("point_count"),
            base_locus_ok=rec.check("base_locus").passed,
            ledger_ok=rec.check("h11_Z_ledger").passed and rec.check("h21_Z_ledger").passed,
            picard_sum_ok=rec.check("picard_sum").passed,
            empty_facets_ok=rec.check("empty_facets").passed,
            sphere_ok=rec.group_passed("sphere"),
            passed=rec.passed,
        )

    @classmethod
    def skipped(cls, entry_id: int, reason: str) -> "ReportRecord":
        return cls(REPORT_SCHEMA_VERSION, entry_id, "skipped", reason)

    @classmethod
    def errored(cls, entry_id: int, reason: str) -> "ReportRecord":
        return cls(REPORT_SCHEMA_VERSION, entry_id, "failed", reason)


REPORT_FIELDS = tuple(f.name for f in fields(ReportRecord))


def verify_entry(entry: CensusEntry) -> ReportRecord:
    """Full pipeline for one census entry; never raises for bad geometry."""
    try:
        P = convex_hull(entry.vertices)
    except DegenerateInput:
        return ReportRecord.skipped(entry.id, "DegenerateInput")
    except LatticeError as exc:
        return ReportRecord.errored(entry.id, type(exc).__name__)
    if not is_reflexive(P):
        return ReportRecord.skipped(entry.id, "NotReflexive")
    try:
        rec = verify_mirror(P, polytope_id=str(entry.id))
    except LatticeError as exc:
        return ReportRecord.errored(entry.id, type(exc).__name__)
    return ReportRecord.from_verification(entry.id, rec)


def summarize(records: Sequence[ReportRecord]) -> dict:
    done = [r for r in records if r.status != "skipped"]
    ok = [r for r in done if r.passed]
    summary: dict = {
        "schema_version": REPORT_SCHEMA_VERSION,
        "total": len(records),
        "passed": len(ok),
        "failed": len(done) - len(ok),
        "skipped": len(records) - len(done),
        "pass_rate": (len(ok) / len(done)) if done else None,
        "skip_reasons": dict(sorted(_count(r.reason for r in records if r.status == "skipped").items())),
        "failed_ids": [r.id for r in done if not r.passed],
    }
    computed = [r for r in done if r.ell_delta is not None]
    summary["invariants"] = {
        name: (
            {"min": min(getattr(r, name) for r in computed), "max": max(getattr(r, name) for r in computed)}
            if computed
            else None
        )
        for name in INVARIANTS
    }
    summary["extremal_facets"] = sum(r.extremal_facets for r in computed)
    summary["empty_facets_violations"] = sum(not r.empty_facets_ok for r in computed)
    summary["pic_outside_observed_range"] = sum(
        not PIC_RANGE[0] <= r.pic_toric <= PIC_RANGE[1] for r in computed
    )
    return summary


def _count(items: Iterable[str]) -> dict[str, int]:
    out: dict[str, int] = {}
    for x in items:
        out[x] = out.get(x, 0) + 1
    return out


def batch_verify(
    entries: Sequence[CensusEntry],
    jobs: int | None = None,
    config: BatchConfig | None = None,
) -> tuple[list[ReportRecord], dict]:
    """Verify every entry; records come back in input order whatever the job count."""
    start = time.perf_counter()
    jobs = (config or BatchConfig(jobs=jobs)).workers
    if jobs == 1 or len(entries) < 2:
        records = [verify_entry(e) for e in entries]
    else:
        chunk = max(1, len(entries) // (jobs * 8))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(verify_entry, entries, chunksize=chunk))
    summary = summarize(records)
    summary["seconds"] = round(time.perf_counter() - start, 3)
    return records, summary


def _csv_cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return ""
    return str(value)


def emit_report(records: Sequence[ReportRecord], fmt: str = "csv") -> bytes:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(REPORT_FIELDS)
        for r in records:
            writer.writerow([_csv_cell(getattr(r, name)) for name in REPORT_FIELDS])
        return buf.getvalue().encode("utf-8")
    if fmt == "json":
        rows = [asdict(r) for r in records]
        return (json.dumps(rows, indent=2) + "\n").encode("utf-8")
    raise ValueError(f"unknown report format {fmt!r}")
