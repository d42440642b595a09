"""Reading and writing algebra documents and their label sidecars."""
from pathlib import Path
from typing import Optional, TextIO, Tuple

from pydantic import ValidationError

from core.catalog import CatalogEntry
from core.exceptions import ArtifactIOError, ParseError
from core.logging_config import get_logger
from core.superalgebra import SuperAlgebra
from schemas.algebra import AlgebraDocument, LabelMap

logger = get_logger(__name__)

SIDECAR_SUFFIX = ".labels.json"


def dump_algebra(A: SuperAlgebra) -> str:
    """Compact, canonical JSON with a trailing newline."""
    return AlgebraDocument.from_algebra(A).model_dump_json() + "\n"


def dump_labels(entry: CatalogEntry) -> str:
    return LabelMap(labels=entry.basis, cartan=list(entry.cartan)).model_dump_json() + "\n"


def parse_algebra(text: str, source: str = "<input>") -> AlgebraDocument:
    try:
        return AlgebraDocument.model_validate_json(text)
    except ValidationError as exc:
        first = exc.errors()[0]
        location = ".".join(str(part) for part in first["loc"])
        raise ParseError(f"{source}: malformed algebra document at {location or 'top level'}: {first['msg']}") from None


def sidecar_path(path: Path) -> Path:
    return path.with_name(path.name + SIDECAR_SUFFIX)


def _read_text(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ArtifactIOError(f"cannot read {path}: {exc.strerror or exc}") from None


def write_text(path: Path, text: str) -> None:
    try:
        path.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise ArtifactIOError(f"cannot write {path}: {exc.strerror or exc}") from None


def write_entry(entry: CatalogEntry, path: Optional[Path], stream: TextIO) -> None:
    """Write the algebra to ``path`` (plus its sidecar), or to ``stream`` when no path is given."""
    text = dump_algebra(entry.algebra)
    if path is None:
        stream.write(text)
        return
    write_text(path, text)
    write_text(sidecar_path(path), dump_labels(entry))
    logger.info(f"Wrote {entry.algebra.name} to {path}")


def _load_sidecar(path: Path) -> Optional[LabelMap]:
    sidecar = sidecar_path(path)
    if not sidecar.exists():
        return None
    try:
        return LabelMap.model_validate_json(_read_text(sidecar))
    except ValidationError:
        raise ParseError(f"{sidecar}: malformed label sidecar") from None


def load_entry(path: Path) -> CatalogEntry:
    """Algebra from a JSON document, with labels and Cartan indices from its sidecar when present.

    Without a recorded Cartan, basis vectors labelled ``h_...`` are taken.
    """
    document = parse_algebra(_read_text(path), source=str(path))
    sidecar = _load_sidecar(path)
    labels = sidecar.ordered_labels(document.dim) if sidecar else None
    algebra = document.to_algebra(labels)
    cartan: Tuple[int, ...] = ()
    if sidecar and sidecar.cartan:
        cartan = tuple(sidecar.cartan)
    elif labels:
        cartan = tuple(k for k, label in enumerate(labels) if label.startswith("h_"))
    return CatalogEntry(algebra, cartan)
