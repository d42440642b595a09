import csv
import io
import json
from typing import TextIO

from commands.common import write_artifact
from core.acceptance import REPORT_COLUMNS, csv_cells, run_report
from core.config import settings
from core.handlers import EXIT_OK
from schemas.run_config import RunConfig


def run(config: RunConfig, stream: TextIO) -> int:
    rows = run_report(seed=config.seed, jobs=config.jobs, max_dim=config.max_dim, use_celery=settings.USE_CELERY)
    if config.format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(REPORT_COLUMNS)
        for row in rows:
            writer.writerow(csv_cells(row))
        text = buffer.getvalue()
    else:
        text = json.dumps([row.model_dump(mode="json") for row in rows], separators=(",", ":")) + "\n"
    write_artifact(text, config.out, stream)
    return EXIT_OK
