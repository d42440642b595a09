from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from core.linalg import Element
from core.superalgebra import SuperAlgebra
from schemas.common import RationalValue

BracketEntry = Tuple[int, int, List[Tuple[int, RationalValue]]]


class AlgebraDocument(BaseModel):
    """On-disk algebra: parity bits plus the sorted nonzero brackets [e_i, e_j], i <= j."""

    model_config = ConfigDict(extra="forbid")

    name: str
    dim: int = Field(..., ge=1)
    parity: List[int]
    brackets: List[BracketEntry]

    @model_validator(mode="after")
    def check_shape(self) -> "AlgebraDocument":
        if len(self.parity) != self.dim:
            raise ValueError(f"parity has {len(self.parity)} bits, dim is {self.dim}")
        if any(bit not in (0, 1) for bit in self.parity):
            raise ValueError("parity bits must be 0 or 1")
        for i, j, terms in self.brackets:
            if not (0 <= i <= j < self.dim):
                raise ValueError(f"bracket ({i}, {j}) must satisfy 0 <= i <= j < dim")
            if any(not (0 <= k < self.dim) for k, _ in terms):
                raise ValueError(f"bracket ({i}, {j}) references a basis index out of range")
        return self

    @classmethod
    def from_algebra(cls, A: SuperAlgebra) -> "AlgebraDocument":
        return cls(
            name=A.name,
            dim=A.dim,
            parity=list(A.parity),
            brackets=[(i, j, vector.sorted_items()) for i, j, vector in A.structure_constants],
        )

    def to_algebra(self, labels: Optional[List[str]] = None) -> SuperAlgebra:
        brackets = {(i, j): Element(terms) for i, j, terms in self.brackets}
        return SuperAlgebra(self.name, self.parity, brackets, labels)


class LabelMap(BaseModel):
    """Sidecar written next to an algebra document: label -> basis index, plus the Cartan indices."""

    labels: Dict[str, int]
    cartan: List[int] = Field(default_factory=list)

    def ordered_labels(self, dim: int) -> Optional[List[str]]:
        by_index = {index: label for label, index in self.labels.items()}
        if sorted(by_index) != list(range(dim)):
            return None
        return [by_index[k] for k in range(dim)]
