from core.acceptance import scan_response, solve_report_row
from core.catalog import catalog_service
from core.celery_app import celery_app
from core.config import settings
from core.exceptions import SuperderError
import logging

logger = logging.getLogger(__name__)


@celery_app.task(bind=True, name='core.tasks.solve_report_job')
def solve_report_job(self, spec_string: str, delta_text: str):
    """
    Celery task solving one cell of the report matrix

    Args:
        spec_string: family spec, e.g. "B:1,1"
        delta_text: delta as "n/d"

    Returns:
        dict: the report row (family, dims, delta, nullity, scalar_line, grading_ok)
    """
    try:
        row = solve_report_row(spec_string, delta_text)
        logger.info(f"Solved {spec_string} at delta={delta_text}: nullity {row['nullity']}")
        return row
    except SuperderError as exc:
        logger.error(f"Report job {spec_string} at delta={delta_text} failed: {exc.detail}")
        raise
    except Exception as exc:
        logger.error(f"Error solving {spec_string} at delta={delta_text}: {str(exc)}")
        raise self.retry(exc=exc, countdown=10, max_retries=3)


@celery_app.task(bind=True, name='core.tasks.scan_critical_job')
def scan_critical_job(self, spec_string: str, seed: int = settings.DEFAULT_SEED):
    """
    Celery task running the delta scan for one catalog instance

    Args:
        spec_string: family spec, e.g. "B:0,1"
        seed: seed for the generic-nullity probes

    Returns:
        dict: the scan document (generic rank, critical deltas, unresolved factors, probes)
    """
    entry = catalog_service.construct_from_string(spec_string)
    document = scan_response(entry.algebra, seed).model_dump(mode="json")
    logger.info(f"Scanned {spec_string}: critical {[item['delta'] for item in document['critical']]}")
    return {"task_id": self.request.id, **document}
