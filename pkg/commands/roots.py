from typing import TextIO

from commands.common import resolve_algebra, write_artifact
from core.exceptions import PreconditionError
from core.handlers import EXIT_OK
from core.root_tables import root_table
from core.roots import match_root_table, root_service
from schemas.roots import RootEntry, RootsResponse, ViolationEntry
from schemas.run_config import RunConfig


def run(config: RunConfig, stream: TextIO) -> int:
    entry = resolve_algebra(config.target)
    A = entry.algebra
    cartan = tuple(config.cartan) if config.cartan else entry.cartan
    if not cartan:
        raise PreconditionError(f"no Cartan subalgebra known for {A.name}; pass --cartan i,j,...")

    rd, violations = root_service.decompose(A, cartan)
    table_match = None
    if entry.spec is not None and entry.spec.is_basic and root_table(entry.spec) is not None:
        table_match = match_root_table(rd, entry.spec)

    response = RootsResponse(
        algebra=A.name,
        cartan_dim=len(rd.cartan),
        roots=[
            RootEntry(
                functional=list(root.functional),
                parity=root.parity,
                dim=root.dim,
                labels=[A.labels[k] for k in root.indices],
            )
            for root in rd.roots
        ],
        theorem2="ok" if not violations else [
            ViolationEntry(kind=v.kind, indices=v.indices, detail=v.detail) for v in violations
        ],
        table_match=table_match,
    )
    write_artifact(response.model_dump_json() + "\n", config.out, stream)
    return EXIT_OK
