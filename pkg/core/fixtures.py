"""Small algebras used as controls: sl2, abelian algebras, a corrupted sl2, and sl(n+1|n+1)."""
from fractions import Fraction
from typing import Callable, Dict, Tuple

from core.catalog import CatalogEntry, scalar_matrix_coordinates, special_linear
from core.exceptions import ParseError
from core.linalg import Element, Subspace
from core.matrices import MatrixElement, algebra_from_matrices
from core.superalgebra import EVEN, SuperAlgebra

FIXTURE_PREFIX = "fixture:"


def sl2() -> CatalogEntry:
    """sl2 with basis (h, e, f) = (e11 - e22, e12, e21)."""
    basis = [
        MatrixElement.from_terms(2, {(0, 0): Fraction(1), (1, 1): Fraction(-1)}),
        MatrixElement.elementary(2, 0, 1),
        MatrixElement.elementary(2, 1, 0),
    ]
    algebra = algebra_from_matrices("sl2", basis, [EVEN] * 3, ["h", "e", "f"])
    return CatalogEntry(algebra, (0,), matrices=tuple(basis))


def abelian(n: int) -> CatalogEntry:
    return CatalogEntry(SuperAlgebra(f"abelian{n}", [EVEN] * n, {}), ())


def sl2_corrupt() -> CatalogEntry:
    """sl2 with [e, f] = h + e; Jacobi fails on (h, e, f)."""
    brackets = {
        (0, 1): Element({1: Fraction(2)}),
        (0, 2): Element({2: Fraction(-2)}),
        (1, 2): Element({0: Fraction(1), 1: Fraction(1)}),
    }
    return CatalogEntry(SuperAlgebra("sl2-corrupt", [EVEN] * 3, brackets, ["h", "e", "f"]), (0,))


def special_linear_square(n: int) -> Tuple[CatalogEntry, Subspace]:
    """sl(n+1|n+1) before the quotient, with its centre of scalar matrices."""
    entry = special_linear(n + 1, n + 1)
    centre = Subspace(entry.algebra.dim, [scalar_matrix_coordinates(entry)])
    return entry, centre


FIXTURES: Dict[str, Callable[[], CatalogEntry]] = {
    "sl2": sl2,
    "abelian1": lambda: abelian(1),
    "sl2-corrupt": sl2_corrupt,
}


def is_fixture_name(text: str) -> bool:
    return text.startswith(FIXTURE_PREFIX)


def load_fixture(text: str) -> CatalogEntry:
    """Resolve ``fixture:NAME`` as accepted on the command line."""
    name = text[len(FIXTURE_PREFIX):] if is_fixture_name(text) else text
    builder = FIXTURES.get(name)
    if builder is None:
        raise ParseError(f"unknown fixture {name!r} (known: {', '.join(sorted(FIXTURES))})")
    return builder()
