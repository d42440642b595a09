from typing import List, Literal, Optional, Tuple, Union

from pydantic import BaseModel

from schemas.common import RationalValue


class RootEntry(BaseModel):
    functional: List[RationalValue]
    parity: int
    dim: int
    labels: List[str] = []


class ViolationEntry(BaseModel):
    kind: str
    indices: Tuple[int, ...]
    detail: str = ""


class RootsResponse(BaseModel):
    algebra: str
    cartan_dim: int
    roots: List[RootEntry]
    theorem2: Union[Literal["ok"], List[ViolationEntry]]
    table_match: Optional[bool] = None
