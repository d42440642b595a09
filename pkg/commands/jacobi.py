import json
from typing import TextIO

from commands.common import resolve_algebra, write_artifact
from core.handlers import EXIT_DOMAIN, EXIT_OK
from core.logging_config import get_logger
from core.superalgebra import check_superidentities
from schemas.roots import ViolationEntry
from schemas.run_config import RunConfig

jacobi_logger = get_logger("commands.jacobi")


def run(config: RunConfig, stream: TextIO) -> int:
    """Print "ok" for a Lie superalgebra, else the violations as JSON with exit code 1."""
    A = resolve_algebra(config.target).algebra
    violations = check_superidentities(A)
    if not violations:
        write_artifact("ok\n", config.out, stream)
        return EXIT_OK

    jacobi_logger.warning(f"{A.name}: {len(violations)} superidentity violations")
    payload = [ViolationEntry(kind=v.kind, indices=v.indices, detail=v.detail).model_dump() for v in violations]
    write_artifact(json.dumps(payload, separators=(",", ":")) + "\n", config.out, stream)
    return EXIT_DOMAIN
