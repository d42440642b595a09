from typing import TextIO

from commands.common import resolve_algebra
from core.handlers import EXIT_OK
from core.logging_config import get_logger
from core.serialization import write_entry
from schemas.run_config import RunConfig

construct_logger = get_logger("commands.construct")


def run(config: RunConfig, stream: TextIO) -> int:
    entry = resolve_algebra(config.target)
    write_entry(entry, config.out, stream)
    construct_logger.info(f"Constructed {entry.algebra.name} (dim {entry.algebra.dim})")
    return EXIT_OK
