import csv
import io
import json
from dataclasses import replace

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import CUBE, OCTAHEDRON, P3
from lgmirror.batch import REPORT_FIELDS, batch_verify, emit_report, verify_entry
from lgmirror.corpus import descend
from lgmirror.fixtures import fixture_entries
from lgmirror.io import CensusEntry

STRETCHED = [(2, 0, 0), (-2, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)]


@pytest.fixture(scope="module")
def worked_entries():
    return [
        CensusEntry(1, tuple(P3), "P3"),
        CensusEntry(2, tuple(CUBE), "cube"),
        CensusEntry(3, tuple(OCTAHEDRON), "octahedron"),
    ]


def test_worked_fixtures(worked_entries):
    records, summary = batch_verify(worked_entries, jobs=1)
    assert len(records) == 3 and all(r.passed for r in records)
    assert summary["pass_rate"] == 1.0
    assert (summary["passed"], summary["failed"], summary["skipped"]) == (3, 0, 0)
    assert [r.f21 for r in records] == [1, 23, 3]
    assert summary["invariants"]["ph"] == {"min": 3, "max": 19}
    # simplex and octahedron have no facet interior points
    assert summary["extremal_facets"] == 2
    assert summary["empty_facets_violations"] == 0


def test_non_reflexive_is_skipped():
    rec = verify_entry(CensusEntry(7, tuple(STRETCHED)))
    assert (rec.status, rec.reason, rec.passed) == ("skipped", "NotReflexive", False)


def test_degenerate_is_skipped():
    rec = verify_entry(CensusEntry(1, ((0, 0, 0), (1, 0, 0), (0, 1, 0))))
    assert (rec.status, rec.reason) == ("skipped", "DegenerateInput")


def test_overflow_is_a_failure_not_a_crash():
    rec = verify_entry(CensusEntry(1, ((10**7, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1))))
    assert (rec.status, rec.reason) == ("failed", "LatticeOverflowError")


def test_skips_do_not_count_against_pass_rate(worked_entries):
    entries = [*worked_entries, CensusEntry(4, tuple(STRETCHED))]
    _, summary = batch_verify(entries, jobs=1)
    assert summary["pass_rate"] == 1.0
    assert summary["skip_reasons"] == {"NotReflexive": 1}


def test_parallel_matches_serial():
    entries = fixture_entries()
    serial, _ = batch_verify(entries, jobs=1)
    parallel, _ = batch_verify(entries, jobs=2)
    assert serial == parallel


@settings(max_examples=15)
@given(st.permutations(list(range(13))))
def test_order_independence(perm):
    entries = fixture_entries()
    base = {r.id: r for r in batch_verify(entries, jobs=1)[0]}
    shuffled = [entries[i] for i in perm]
    records, _ = batch_verify(shuffled, jobs=1)
    assert [r.id for r in records] == [entries[i].id for i in perm]
    assert all(r == base[r.id] for r in records)


class TestReport:
    def test_csv_one_record(self, worked_entries):
        records, _ = batch_verify(worked_entries[:1], jobs=1)
        out = emit_report(records, "csv")
        lines = out.decode("utf-8").split("\n")
        assert lines[-1] == "" and len(lines) == 3
        assert tuple(lines[0].split(",")) == REPORT_FIELDS
        assert b"\r" not in out
        row = next(csv.DictReader(io.StringIO(out.decode())))
        assert row["passed"] == "true" and row["ph"] == "3"

    def test_csv_empty(self):
        assert emit_report([], "csv") == (",".join(REPORT_FIELDS) + "\n").encode()

    def test_json_two_records(self, worked_entries):
        records, _ = batch_verify(worked_entries[:2], jobs=1)
        rows = json.loads(emit_report(records, "json"))
        assert len(rows) == 2
        assert all(tuple(r) == REPORT_FIELDS for r in rows)

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            emit_report([], "xml")

    def test_byte_stability(self):
        entries = fixture_entries()
        a = emit_report(batch_verify(entries, jobs=1)[0], "csv")
        b = emit_report(batch_verify(entries, jobs=2)[0], "csv")
        assert a == b
        j1 = emit_report(batch_verify(entries, jobs=1)[0], "json")
        j2 = emit_report(batch_verify(entries, jobs=1)[0], "json")
        assert j1 == j2

    def test_failed_record_reason(self, worked_entries):
        records, _ = batch_verify(worked_entries[:1], jobs=1)
        bad = replace(records[0], passed=False, status="failed", reason="point_count")
        row = next(csv.DictReader(io.StringIO(emit_report([bad]).decode())))
        assert (row["status"], row["reason"], row["passed"]) == ("failed", "point_count", "false")


def test_synthetic_corpus_passes():
    polys = descend(120, bridge=0, seed=3)
    entries = [CensusEntry(i + 1, P.vertices) for i, P in enumerate(polys)]
    records, summary = batch_verify(entries, jobs=1)
    assert summary["failed"] == 0 and summary["skipped"] == 0
    assert summary["total"] == len(polys) > 50
