from typing import TextIO

from commands.common import resolve_algebra, write_artifact
from core.deltader import derivation_service
from core.handlers import EXIT_OK
from schemas.derivation import DeriveResponse, SpaceAnalysisModel
from schemas.run_config import RunConfig


def run(config: RunConfig, stream: TextIO) -> int:
    A = resolve_algebra(config.target).algebra
    space, analysis = derivation_service.derive(A, config.delta)
    response = DeriveResponse(
        delta=space.delta,
        nullity=space.nullity,
        basis=[[value for row in phi.matrix for value in row] for phi in space.basis],
        analysis=SpaceAnalysisModel(
            grading_preserving=analysis.grading_preserving,
            scalar_line=analysis.scalar_line,
            inner_dim=analysis.inner_dim,
        ),
        outer_dim=analysis.outer_dim,
        algebra=A.name,
    )
    write_artifact(response.model_dump_json() + "\n", config.out, stream)
    return EXIT_OK
