from enum import Enum
from fractions import Fraction
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from core.exceptions import InvalidSpecError, ParseError
from schemas.common import RationalValue


class Family(str, Enum):
    A = "A"
    AQQ = "Aqq"
    B = "B"
    C = "C"
    D = "D"
    P = "P"
    Q = "Q"
    D21 = "D21"


TWO_INDEX_FAMILIES = (Family.A, Family.B, Family.D)


class FamilySpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    family: Family
    m: int = Field(0, ge=0, description="First rank index (A, B, D)")
    n: int = Field(0, ge=0, description="Second rank index")
    alpha: Optional[RationalValue] = Field(None, description="Parameter of D(2,1;alpha)")

    @model_validator(mode="after")
    def check_family_invariants(self) -> "FamilySpec":
        family, m, n = self.family, self.m, self.n
        if family == Family.A and m == n:
            if m == 0:
                raise ValueError("A(0,0) = sl(1,1) is three-dimensional and nilpotent, not a classical superalgebra")
            raise ValueError(f"A({m},{n}) needs m != n; use Aqq:{n} for the quotient sl({n + 1},{n + 1})/<E>")
        if family == Family.AQQ and n == 0:
            raise ValueError("Aqq needs n > 0")
        if family == Family.B and n == 0:
            raise ValueError("B(m,n) needs n >= 1 (B(m,0) is the Lie algebra so(2m+1))")
        if family == Family.C and n < 2:
            raise ValueError("C(n) needs n >= 2")
        if family == Family.D and m < 2:
            raise ValueError("D(m,n) needs m >= 2")
        if family == Family.D and n == 0:
            raise ValueError("D(m,n) needs n >= 1 (D(m,0) is the Lie algebra so(2m))")
        if family in (Family.P, Family.Q) and n < 2:
            raise ValueError(f"{family.value}(n) needs n >= 2")
        if family == Family.D21:
            if self.alpha is None:
                raise ValueError("D21 needs a parameter alpha")
            if self.alpha in (Fraction(0), Fraction(-1)):
                raise ValueError("D(2,1;alpha) needs alpha not in {0, -1}")
        return self

    @property
    def is_basic(self) -> bool:
        if self.family in (Family.P, Family.Q):
            return False
        return not (self.family == Family.AQQ and self.n == 1)

    @property
    def spec_string(self) -> str:
        if self.family in TWO_INDEX_FAMILIES:
            return f"{self.family.value}:{self.m},{self.n}"
        if self.family == Family.D21:
            return f"D21:{self.alpha}"
        return f"{self.family.value}:{self.n}"

    @property
    def display_name(self) -> str:
        if self.family in TWO_INDEX_FAMILIES:
            return f"{self.family.value}({self.m},{self.n})"
        if self.family == Family.AQQ:
            return f"A({self.n},{self.n})"
        if self.family == Family.D21:
            return f"D(2,1;{self.alpha})"
        return f"{self.family.value}({self.n})"


def parse_spec_string(text: str) -> FamilySpec:
    """Parse "A:1,0", "Aqq:1", "C:2", "D21:2/3" and friends.

    Raises:
        ParseError: the string is not of the form FAMILY:ARGS.
        InvalidSpecError: the family invariants fail.
    """
    family_token, sep, args = text.strip().partition(":")
    if not sep:
        raise ParseError(f"spec string {text!r} must look like FAMILY:ARGS, e.g. A:1,0")
    try:
        family = Family(family_token)
    except ValueError:
        known = ", ".join(f.value for f in Family)
        raise ParseError(f"unknown family {family_token!r} (known: {known})") from None

    fields: dict = {"family": family}
    parts = [part.strip() for part in args.split(",")]
    try:
        if family in TWO_INDEX_FAMILIES:
            if len(parts) != 2:
                raise ParseError(f"{family.value} takes two indices, e.g. {family.value}:1,1")
            fields["m"], fields["n"] = int(parts[0]), int(parts[1])
        elif family == Family.D21:
            if len(parts) != 1:
                raise ParseError("D21 takes one rational parameter, e.g. D21:2/3")
            fields["alpha"] = parts[0]
        else:
            if len(parts) != 1:
                raise ParseError(f"{family.value} takes one index, e.g. {family.value}:2")
            fields["n"] = int(parts[0])
    except ValueError:
        raise ParseError(f"spec string {text!r} has a non-integer index") from None

    try:
        return FamilySpec(**fields)
    except ValidationError as exc:
        messages = [err["msg"].removeprefix("Value error, ") for err in exc.errors()]
        raise InvalidSpecError("; ".join(messages)) from None
