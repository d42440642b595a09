from typing import List, Optional

from pydantic import BaseModel, Field

from schemas.common import RationalValue


class SpaceAnalysisModel(BaseModel):
    grading_preserving: bool
    scalar_line: bool
    inner_dim: Optional[int] = None


class DeriveResponse(BaseModel):
    delta: RationalValue
    nullity: int
    basis: List[List[RationalValue]]
    analysis: SpaceAnalysisModel
    outer_dim: Optional[int] = None
    algebra: str


class CriticalEntry(BaseModel):
    delta: RationalValue
    nullity: int


class ScanResponse(BaseModel):
    algebra: str
    generic_rank: int
    generic_nullity: int
    degenerate: bool
    critical: List[CriticalEntry]
    unresolved_factors: List[List[int]] = Field(
        default_factory=list, description="Coefficient arrays, lowest degree first"
    )
    probes: List[CriticalEntry] = Field(default_factory=list)


class ReportRow(BaseModel):
    family: str
    dims: str
    delta: RationalValue
    nullity: int
    scalar_line: bool
    grading_ok: bool

    def sort_key(self):
        return (self.family, self.delta)
