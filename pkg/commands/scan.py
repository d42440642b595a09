from typing import TextIO

from commands.common import resolve_algebra, write_artifact
from core.acceptance import scan_on_worker, scan_response
from core.config import settings
from core.handlers import EXIT_OK
from schemas.run_config import RunConfig


def run(config: RunConfig, stream: TextIO) -> int:
    entry = resolve_algebra(config.target)
    if settings.USE_CELERY and entry.spec is not None:
        response = scan_on_worker(entry.spec.spec_string, config.seed)
    else:
        response = scan_response(entry.algebra, config.seed)
    write_artifact(response.model_dump_json() + "\n", config.out, stream)
    return EXIT_OK
