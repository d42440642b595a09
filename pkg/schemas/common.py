from fractions import Fraction
from typing import Annotated

from pydantic import BeforeValidator, PlainSerializer, WithJsonSchema

from core.exceptions import SuperderError
from core.exactnum import format_rational, parse_rational


def _coerce_rational(value) -> Fraction:
    try:
        return parse_rational(value)
    except SuperderError as exc:
        raise ValueError(exc.detail) from None


RationalValue = Annotated[
    Fraction,
    BeforeValidator(_coerce_rational),
    PlainSerializer(format_rational, return_type=str),
    WithJsonSchema({"type": "string", "pattern": r"^-?\d+/\d+$"}),
]
