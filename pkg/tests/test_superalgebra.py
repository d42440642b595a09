import random
from fractions import Fraction

import pytest

from core.exceptions import NotAnIdealError, NotGradedError, PreconditionError
from core.family_constants import SUPERIDENTITY_SPECS
from core.fixtures import special_linear_square
from core.linalg import Element, Subspace
from core.superalgebra import (
    EVEN,
    ODD,
    SuperAlgebra,
    bracket,
    check_superidentities,
    component,
    derived_odd,
    ideal_closure,
    is_simple,
    quotient,
)
from schemas.family import parse_spec_string

BASIC_SPECS = [text for text in SUPERIDENTITY_SPECS if parse_spec_string(text).is_basic]


def unit(k):
    return Element.unit(k)


def gl11() -> SuperAlgebra:
    """gl(1|1) on (E11, E22, E12, E21)."""
    return SuperAlgebra(
        "gl(1,1)",
        [EVEN, EVEN, ODD, ODD],
        {
            (0, 2): Element({2: Fraction(1)}),
            (0, 3): Element({3: Fraction(-1)}),
            (1, 2): Element({2: Fraction(-1)}),
            (1, 3): Element({3: Fraction(1)}),
            (2, 3): Element({0: Fraction(1), 1: Fraction(1)}),
        },
    )


def test_sl2_bracket(sl2_algebra):
    h, e, f = (sl2_algebra.label_map[name] for name in ("h", "e", "f"))
    assert bracket(sl2_algebra, unit(e), unit(f)) == unit(h)
    assert bracket(sl2_algebra, unit(h), unit(e)) == unit(e).scaled(2)
    assert bracket(sl2_algebra, unit(f), unit(e)) == unit(h).scaled(-1)
    assert bracket(sl2_algebra, unit(e), Element()) == Element()


def test_bracket_is_bilinear(sl2_algebra):
    x = Element({0: Fraction(1, 2), 1: Fraction(3)})
    x2 = Element({1: Fraction(-1), 2: Fraction(5, 7)})
    y = Element({0: Fraction(2), 2: Fraction(1)})
    assert bracket(sl2_algebra, x + x2, y) == bracket(sl2_algebra, x, y) + bracket(sl2_algebra, x2, y)


def random_element(rng: random.Random, dim: int) -> Element:
    return Element({k: Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for k in range(dim) if rng.random() < 0.5})


@pytest.mark.parametrize("seed", [1, 2])
@pytest.mark.parametrize("text", SUPERIDENTITY_SPECS)
def test_bracket_is_bilinear_on_random_vectors(build, text, seed):
    A = build(text).algebra
    rng = random.Random(seed)
    x, x2, y, y2 = (random_element(rng, A.dim) for _ in range(4))
    c = Fraction(rng.randint(-7, 7), rng.randint(1, 4))
    assert bracket(A, x + x2.scaled(c), y) == bracket(A, x, y) + bracket(A, x2, y).scaled(c)
    assert bracket(A, x, y + y2.scaled(c)) == bracket(A, x, y) + bracket(A, x, y2).scaled(c)


def test_bracket_rejects_bad_index(sl2_algebra):
    with pytest.raises(PreconditionError):
        bracket(sl2_algebra, unit(7), unit(0))


def test_superanticommutativity_on_odd_pairs():
    A = gl11()
    assert A.basis_bracket(3, 2) == A.basis_bracket(2, 3)
    assert A.basis_bracket(2, 0) == A.basis_bracket(0, 2).scaled(-1)


def test_superidentities_hold_on_gl11():
    assert check_superidentities(gl11()) == []


def test_superidentities_sl2_and_corrupted(sl2_algebra, corrupt_algebra):
    assert check_superidentities(sl2_algebra) == []
    violations = check_superidentities(corrupt_algebra)
    assert violations
    assert {v.kind for v in violations} == {"jacobi"}
    assert any(sorted(v.indices) == [0, 1, 2] for v in violations)


def test_grading_violation_is_reported():
    A = SuperAlgebra("mixed", [EVEN, ODD], {(0, 1): Element({0: Fraction(1)})})
    assert any(v.kind == "grading" for v in check_superidentities(A))


def test_ideal_closure_of_basis_vector_in_simple_algebra(sl2_algebra):
    assert ideal_closure(sl2_algebra, Subspace.coordinate(3, [1])).dim == 3
    assert ideal_closure(sl2_algebra, Subspace.zero(3)).dim == 0


def test_is_simple(sl2_algebra, build, abelian_algebra):
    assert is_simple(sl2_algebra)
    assert is_simple(build("A:1,0").algebra)
    with pytest.raises(PreconditionError):
        is_simple(abelian_algebra)


def test_sl22_has_scalar_ideal():
    entry, centre = special_linear_square(1)
    A = entry.algebra
    assert A.dim == 15
    assert ideal_closure(A, centre).dim == 1
    assert not is_simple(A)

    reduced = quotient(A, centre)
    assert reduced.dim == 14
    assert check_superidentities(reduced) == []
    assert is_simple(reduced)


def test_quotient_by_zero_is_identity(sl2_algebra):
    same = quotient(sl2_algebra, Subspace.zero(3))
    assert same.structure_constants == sl2_algebra.structure_constants
    assert same.labels == sl2_algebra.labels


def test_quotient_rejects_non_ideal(sl2_algebra):
    e = sl2_algebra.label_map["e"]
    with pytest.raises(NotAnIdealError, match="not an ideal"):
        quotient(sl2_algebra, Subspace.coordinate(3, [e]))


def test_quotient_rejects_ungraded_subspace():
    A = gl11()
    with pytest.raises(NotGradedError):
        quotient(A, Subspace(4, [Element({0: Fraction(1), 2: Fraction(1)})]))


def test_components_of_a10(build):
    A = build("A:1,0").algebra
    assert component(A, EVEN).dim + component(A, ODD).dim == 8
    assert component(A, ODD).dim == 4


def test_derived_odd_of_even_algebra_is_zero(sl2_algebra):
    assert derived_odd(sl2_algebra).dim == 0


@pytest.mark.parametrize("text", BASIC_SPECS)
def test_odd_part_generates_even_part(build, text):
    A = build(text).algebra
    assert derived_odd(A) == component(A, EVEN)


def test_rescaled_keeps_superidentities(build):
    A = build("B:0,1").algebra.rescaled(Fraction(3, 2))
    assert check_superidentities(A) == []
