from enum import Enum
from pathlib import Path
from typing import List, Literal, Optional

from pydantic import BaseModel, Field, PositiveInt, model_validator

from schemas.common import RationalValue


class Command(str, Enum):
    CONSTRUCT = "construct"
    JACOBI = "jacobi"
    ROOTS = "roots"
    DERIVE = "derive"
    SCAN = "scan"
    REPORT = "report"


class RunConfig(BaseModel):
    command: Command
    target: Optional[str] = Field(None, description="Family spec string, fixture:NAME, or algebra JSON path")
    delta: Optional[RationalValue] = None
    out: Optional[Path] = None
    format: Literal["json", "csv"] = "json"
    jobs: PositiveInt = 1
    seed: int = 0
    max_dim: PositiveInt = 40
    cartan: Optional[List[int]] = None

    @model_validator(mode="after")
    def check_command_arguments(self) -> "RunConfig":
        if self.command == Command.DERIVE and self.delta is None:
            raise ValueError("derive requires --delta")
        if self.command == Command.CONSTRUCT and not self.target:
            raise ValueError("construct requires a family spec")
        if self.command not in (Command.CONSTRUCT, Command.REPORT) and not self.target:
            raise ValueError(f"{self.command.value} requires an algebra (spec string, fixture or JSON path)")
        if self.format == "csv" and self.command != Command.REPORT:
            raise ValueError("csv output is only available for report")
        return self
