"""The report matrix and the delta scan, solved locally or on Celery workers."""
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, Iterable, List, Sequence, Tuple

from core.catalog import catalog_service
from core.config import settings
from core.deltader import derivation_service
from core.exactnum import format_rational, parse_rational
from core.family_constants import PROBE_COUNT, REPORT_DELTAS, REPORT_PROBES_PER_INSTANCE, SUPERIDENTITY_SPECS
from core.logging_config import get_logger, log_solve_event
from core.parametric import critical_deltas, probe_generic_nullity, random_probe_deltas
from core.superalgebra import SuperAlgebra
from schemas.derivation import CriticalEntry, ReportRow, ScanResponse

logger = get_logger(__name__)

REPORT_COLUMNS = ("family", "dims", "delta", "nullity", "scalar_line", "grading_ok")

Job = Tuple[str, str]


def solve_report_row(spec_string: str, delta_text: str) -> Dict:
    """One (instance, delta) cell of the report, as a JSON-ready dict."""
    entry = catalog_service.construct_from_string(spec_string)
    A = entry.algebra
    space, analysis = derivation_service.derive(A, parse_rational(delta_text))
    odd = len(A.odd_indices)
    row = ReportRow(
        family=spec_string,
        dims=f"{A.dim - odd}|{odd}",
        delta=space.delta,
        nullity=space.nullity,
        scalar_line=analysis.scalar_line,
        grading_ok=analysis.grading_preserving,
    )
    return row.model_dump(mode="json")


def report_jobs(specs: Iterable[str], seed: int, max_dim: int) -> List[Job]:
    """Fixed deltas plus one seeded probe per instance, skipping instances above ``max_dim``."""
    fixed = [parse_rational(text) for text in REPORT_DELTAS]
    jobs: List[Job] = []
    for spec_string in specs:
        dim = catalog_service.construct_from_string(spec_string).algebra.dim
        if dim > max_dim:
            logger.info(f"Skipping {spec_string}: dim {dim} exceeds {max_dim}")
            continue
        probes = random_probe_deltas(f"{seed}:{spec_string}", REPORT_PROBES_PER_INSTANCE, set(fixed))
        for delta in fixed + probes:
            jobs.append((spec_string, format_rational(delta)))
    return jobs


def _run_local(jobs: Sequence[Job], workers: int) -> List[Dict]:
    if workers <= 1:
        return [solve_report_row(spec, delta) for spec, delta in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(solve_report_row, [spec for spec, _ in jobs], [delta for _, delta in jobs]))


def _run_celery(jobs: Sequence[Job]) -> List[Dict]:
    from celery import group

    from core.tasks import solve_report_job

    result = group(solve_report_job.s(spec, delta) for spec, delta in jobs).apply_async()
    return result.get()


def run_report(
    specs: Sequence[str] = SUPERIDENTITY_SPECS,
    seed: int = settings.DEFAULT_SEED,
    jobs: int = settings.DEFAULT_JOBS,
    max_dim: int = settings.SUPERDER_MAX_DIM,
    use_celery: bool = settings.USE_CELERY,
) -> List[ReportRow]:
    """Rows sorted by (family, delta); independent of ``jobs`` and of the backend."""
    started = time.perf_counter()
    work = report_jobs(specs, seed, max_dim)
    raw = _run_celery(work) if use_celery else _run_local(work, jobs)
    rows = sorted((ReportRow.model_validate(item) for item in raw), key=ReportRow.sort_key)
    log_solve_event(
        logger,
        "report",
        "catalog",
        job=len(work),
        duration_ms=round((time.perf_counter() - started) * 1000, 2),
    )
    return rows


def csv_cells(row: ReportRow) -> List[str]:
    data = row.model_dump(mode="json")
    return [str(data[column]).lower() if isinstance(data[column], bool) else str(data[column]) for column in REPORT_COLUMNS]


def scan_response(A: SuperAlgebra, seed: int) -> ScanResponse:
    """Critical deltas of ``A`` plus seeded probes of the generic nullity."""
    report = critical_deltas(A)
    probes = probe_generic_nullity(A, report, seed, count=PROBE_COUNT)
    mismatched = [delta for delta, nullity in probes if nullity != report.generic_nullity]
    if mismatched:
        logger.warning(f"{A.name}: probe nullity differs from the generic nullity at {mismatched}")
    return ScanResponse(
        algebra=A.name,
        generic_rank=report.generic_rank,
        generic_nullity=report.generic_nullity,
        degenerate=report.degenerate,
        critical=[CriticalEntry(delta=delta, nullity=nullity) for delta, nullity in report.critical],
        unresolved_factors=[factor.to_json() for factor in report.unresolved_factors],
        probes=[CriticalEntry(delta=delta, nullity=nullity) for delta, nullity in probes],
    )


def scan_on_worker(spec_string: str, seed: int) -> ScanResponse:
    from core.tasks import scan_critical_job

    return ScanResponse.model_validate(scan_critical_job.delay(spec_string, seed).get())
