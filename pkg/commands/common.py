from pathlib import Path
from typing import Optional, TextIO

from core.catalog import CatalogEntry, catalog_service
from core.exceptions import ArtifactIOError
from core.fixtures import is_fixture_name, load_fixture
from core.serialization import load_entry, write_text


def resolve_algebra(target: str) -> CatalogEntry:
    """An algebra named by ``fixture:NAME``, an existing JSON path, or a family spec string."""
    if is_fixture_name(target):
        return load_fixture(target)
    path = Path(target)
    if path.exists():
        return load_entry(path)
    if ":" in target:
        return catalog_service.construct_from_string(target)
    raise ArtifactIOError(f"no such file: {target}")


def write_artifact(text: str, out: Optional[Path], stream: TextIO) -> None:
    if out is None:
        stream.write(text)
    else:
        write_text(out, text)
