import csv
import json
from fractions import Fraction
from io import StringIO

import pytest

from core.acceptance import REPORT_COLUMNS, csv_cells, report_jobs, run_report, solve_report_row
from core.celery_app import celery_app
from core.config import settings
from core.family_constants import PROBE_COUNT, REPORT_DELTAS
from core.tasks import scan_critical_job, solve_report_job
from main import cli

SMALL_SPECS = ("A:1,0", "B:0,1")


def test_solve_report_row():
    row = solve_report_row("B:0,1", "1/2")
    assert row == {
        "family": "B:0,1",
        "dims": "3|2",
        "delta": "1/2",
        "nullity": 1,
        "scalar_line": True,
        "grading_ok": True,
    }


def test_report_jobs_add_one_seeded_random_delta():
    jobs = report_jobs(SMALL_SPECS, seed=4, max_dim=40)
    assert len(jobs) == len(SMALL_SPECS) * (len(REPORT_DELTAS) + 1)
    assert jobs == report_jobs(SMALL_SPECS, seed=4, max_dim=40)


def test_report_skips_large_instances():
    jobs = report_jobs(SMALL_SPECS, seed=4, max_dim=6)
    assert {spec for spec, _ in jobs} == {"B:0,1"}


def test_report_is_sorted_and_independent_of_jobs():
    serial = run_report(SMALL_SPECS, seed=9, jobs=1, use_celery=False)
    parallel = run_report(SMALL_SPECS, seed=9, jobs=2, use_celery=False)
    assert serial == parallel
    assert [row.sort_key() for row in serial] == sorted(row.sort_key() for row in serial)
    for row in serial:
        if row.delta == Fraction(1, 2):
            assert row.nullity == 1 and row.scalar_line
        elif row.delta != 1:
            assert row.nullity == 0
    fixed = {Fraction(text) for text in REPORT_DELTAS}
    assert len([row for row in serial if row.family == "A:1,0" and row.delta not in fixed]) == 1


def test_csv_cells_lowercase_booleans():
    rows = run_report(("B:0,1",), seed=1, jobs=1, max_dim=40, use_celery=False)
    half = next(row for row in rows if row.delta == Fraction(1, 2))
    assert csv_cells(half) == ["B:0,1", "3|2", "1/2", "1", "true", "true"]


@pytest.mark.slow
def test_report_command_csv():
    out = StringIO()
    assert cli(["report", "--seed", "2", "--max-dim", "8"], stdout=out, stderr=StringIO()) == 0
    reader = csv.reader(StringIO(out.getvalue()))
    header = next(reader)
    assert tuple(header) == REPORT_COLUMNS
    families = {row[0] for row in reader}
    assert families == {"A:1,0", "B:0,1", "C:2"}


def test_solve_report_job_runs_eagerly():
    result = solve_report_job.apply(args=("A:1,0", "3/7")).get()
    assert result["nullity"] == 0
    assert result["dims"] == "4|4"


def test_scan_critical_job_runs_eagerly():
    result = scan_critical_job.apply(args=("B:0,1", 5)).get()
    assert result["critical"][0] == {"delta": "1/2", "nullity": 1}
    assert result["unresolved_factors"] == []
    assert len(result["probes"]) == PROBE_COUNT


def test_scan_command_dispatches_to_celery(monkeypatch):
    monkeypatch.setattr(settings, "USE_CELERY", True)
    monkeypatch.setattr(celery_app.conf, "task_always_eager", True)
    out = StringIO()
    assert cli(["scan", "B:0,1", "--seed", "5"], stdout=out, stderr=StringIO()) == 0
    remote = json.loads(out.getvalue())

    monkeypatch.setattr(settings, "USE_CELERY", False)
    local = StringIO()
    assert cli(["scan", "B:0,1", "--seed", "5"], stdout=local, stderr=StringIO()) == 0
    assert remote == json.loads(local.getvalue())
    assert remote["critical"][0] == {"delta": "1/2", "nullity": 1}
