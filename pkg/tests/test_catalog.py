from fractions import Fraction

import pytest

from core.catalog import format_weight, scalar_matrix_coordinates, special_linear
from core.exceptions import ConstructionError, InvalidSpecError, ParseError, PreconditionError
from core.family_constants import SUPERIDENTITY_SPECS
from core.linalg import Element
from core.matrices import MatrixElement, express_in_basis, matrix_superbracket
from core.serialization import dump_algebra
from core.superalgebra import EVEN, ODD, bracket, check_superidentities, is_simple
from schemas.family import Family, parse_spec_string


def elementary(size, r, c):
    return MatrixElement.elementary(size, r, c)


# ---------------- matrices ----------------

def test_matrix_superbracket_even():
    result = matrix_superbracket(elementary(2, 0, 1), elementary(2, 1, 0), EVEN, EVEN)
    assert result.entries == Element({(0, 0): Fraction(1), (1, 1): Fraction(-1)})


def test_matrix_superbracket_odd_is_anticommutator():
    x = MatrixElement.from_terms(3, {(0, 2): Fraction(1), (2, 0): Fraction(1)})
    result = matrix_superbracket(x, x, ODD, ODD)
    assert result.entries == Element({(0, 0): Fraction(2), (2, 2): Fraction(2)})


def test_matrix_superbracket_self_even_is_zero():
    x = MatrixElement.from_terms(2, {(0, 1): Fraction(3), (1, 1): Fraction(1)})
    assert matrix_superbracket(x, x, EVEN, EVEN).is_zero


def test_matrix_superbracket_size_mismatch():
    with pytest.raises(PreconditionError, match="size mismatch"):
        matrix_superbracket(elementary(2, 0, 1), elementary(3, 0, 1), EVEN, EVEN)


def test_express_in_basis():
    basis = [elementary(2, 0, 1), elementary(2, 1, 0), MatrixElement.from_terms(2, {(0, 0): 1, (1, 1): -1})]
    assert express_in_basis(basis[2], basis) == Element.unit(2)
    assert express_in_basis(MatrixElement(2, 2), basis) == Element()
    assert express_in_basis(basis[0] + basis[1], basis) == Element({0: Fraction(1), 1: Fraction(1)})
    with pytest.raises(ConstructionError, match="bracket left the subalgebra"):
        express_in_basis(elementary(2, 0, 0), basis)


def test_matrix_entries_out_of_range():
    with pytest.raises(PreconditionError):
        MatrixElement(2, 2, Element({(2, 0): Fraction(1)}))


# ---------------- spec strings ----------------

@pytest.mark.parametrize(
    "text,family,display",
    [
        ("A:1,0", Family.A, "A(1,0)"),
        ("Aqq:1", Family.AQQ, "A(1,1)"),
        ("C:2", Family.C, "C(2)"),
        ("D21:2/3", Family.D21, "D(2,1;2/3)"),
        ("Q:2", Family.Q, "Q(2)"),
    ],
)
def test_parse_spec_string(text, family, display):
    spec = parse_spec_string(text)
    assert spec.family == family
    assert spec.display_name == display
    assert spec.spec_string == text


@pytest.mark.parametrize(
    "text,message",
    [
        ("A:0,0", "nilpotent"),
        ("A:1,1", "Aqq:1"),
        ("D21:0", "alpha"),
        ("D21:-1", "alpha"),
        ("C:1", "n >= 2"),
        ("D:1,1", "m >= 2"),
        ("P:1", "n >= 2"),
    ],
)
def test_invalid_specs(text, message):
    with pytest.raises(InvalidSpecError, match=message):
        parse_spec_string(text)


@pytest.mark.parametrize("text", ["A10", "Z:1", "A:1", "B:x,1"])
def test_malformed_spec_strings(text):
    with pytest.raises(ParseError):
        parse_spec_string(text)


def test_basic_flag():
    assert parse_spec_string("A:1,0").is_basic
    assert parse_spec_string("Aqq:2").is_basic
    assert not parse_spec_string("Aqq:1").is_basic
    assert not parse_spec_string("P:2").is_basic
    assert not parse_spec_string("Q:2").is_basic


# ---------------- construction ----------------

@pytest.mark.parametrize(
    "text,dim,odd",
    [
        ("A:1,0", 8, 4),
        ("A:2,1", 24, 12),
        ("Aqq:1", 14, 8),
        ("B:0,1", 5, 2),
        ("B:1,1", 12, 6),
        ("C:2", 8, 4),
        ("D:2,1", 17, 8),
        ("P:2", 17, 9),
        ("Q:2", 16, 8),
        ("D21:2/3", 17, 8),
    ],
)
def test_dimensions(build, text, dim, odd):
    A = build(text).algebra
    assert A.dim == dim
    assert len(A.odd_indices) == odd


@pytest.mark.parametrize("text", SUPERIDENTITY_SPECS)
def test_catalog_superidentities_and_simplicity(build, text):
    A = build(text).algebra
    assert check_superidentities(A) == []
    assert is_simple(A)


def test_sl_odd_dimension_matches_blocks():
    for p, q in ((2, 1), (3, 1), (2, 3)):
        A = special_linear(p, q).algebra
        assert len(A.odd_indices) == 2 * p * q


def test_labels_are_root_labels(build):
    labels = build("A:1,0").basis
    assert {"g_{e1-e2}", "g_{e1-d1}", "g_{-e1+d1}", "h_{1}", "h_{2}"} <= set(labels)
    assert set(build("B:0,1").basis) == {"h_{d1}", "g_{2d1}", "g_{-2d1}", "g_{d1}", "g_{-d1}"}


def test_b01_odd_square_lands_on_long_root(build):
    entry = build("B:0,1")
    index = entry.basis
    square = bracket(entry.algebra, Element.unit(index["g_{d1}"]), Element.unit(index["g_{d1}"]))
    assert list(square) == [index["g_{2d1}"]]
    assert square[index["g_{2d1}"]] != 0


def test_queer_and_periplectic_labels(build):
    q = build("Q:2").basis
    assert "a_{1,1}" not in q and "a_{2,2}" in q and "c_{1,2}" in q and "b_{1,3}" in q
    p = build("P:2").basis
    assert {"h_{1}", "a_{1,2}", "b_{1,1}", "c_{1,2}"} <= set(p)


def test_d21_even_summands_commute(build):
    A = build("D21:1").algebra
    for first in range(3):
        for second in range(first + 1, 3):
            for i in range(3 * first, 3 * first + 3):
                for j in range(3 * second, 3 * second + 3):
                    assert not A.basis_bracket(i, j)


def test_d21_cartan_acts_by_sign(build):
    entry = build("D21:2")
    A = entry.algebra
    top = entry.basis["g_{e1+e2+e3}"]
    for h in entry.cartan:
        assert A.basis_bracket(h, top) == Element.unit(top)


def test_scalar_matrix_needs_matrices(build):
    with pytest.raises(ConstructionError):
        scalar_matrix_coordinates(build("D21:1"))


def test_construction_is_deterministic(build):
    first = dump_algebra(build("C:2").algebra)
    from core.catalog import _build

    second = dump_algebra(_build(parse_spec_string("C:2")).algebra)
    assert first == second


def test_format_weight():
    assert format_weight({("d", 1): -1, ("e", 1): 1}) == "e1-d1"
    assert format_weight({("e", 1): 2}) == "2e1"
    assert format_weight({}) == "0"
