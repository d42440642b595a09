"""Sparse rational supermatrices and the passage from matrix bases to structure constants."""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Sequence, Tuple

from core.exceptions import ConstructionError, PreconditionError
from core.linalg import Element, SpanSolver
from core.logging_config import get_logger
from core.superalgebra import SuperAlgebra

logger = get_logger(__name__)


@dataclass(frozen=True)
class MatrixElement:
    rows: int
    cols: int
    entries: Element = field(default_factory=Element)

    def __post_init__(self):
        entries = Element(self.entries)
        for r, c in entries:
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise PreconditionError(f"entry ({r}, {c}) outside a {self.rows}x{self.cols} matrix")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def elementary(cls, size: int, r: int, c: int) -> "MatrixElement":
        return cls(size, size, Element.unit((r, c)))

    @classmethod
    def from_terms(cls, size: int, terms: Mapping[Tuple[int, int], Fraction]) -> "MatrixElement":
        return cls(size, size, Element(terms))

    @property
    def is_zero(self) -> bool:
        return not self.entries

    @property
    def is_diagonal(self) -> bool:
        return all(r == c for r, c in self.entries)

    def __add__(self, other: "MatrixElement") -> "MatrixElement":
        return MatrixElement(self.rows, self.cols, self.entries + other.entries)

    def __sub__(self, other: "MatrixElement") -> "MatrixElement":
        return MatrixElement(self.rows, self.cols, self.entries - other.entries)

    def scaled(self, coef: Fraction) -> "MatrixElement":
        return MatrixElement(self.rows, self.cols, self.entries.scaled(coef))

    def __matmul__(self, other: "MatrixElement") -> "MatrixElement":
        if self.cols != other.rows:
            raise PreconditionError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        by_row: Dict[int, List[Tuple[int, Fraction]]] = {}
        for (k, c), b in other.entries.items():
            by_row.setdefault(k, []).append((c, b))
        product = Element()
        for (r, k), a in self.entries.items():
            for c, b in by_row.get(k, ()):
                product.iadd_coef(a * b, (((r, c), Fraction(1)),))
        return MatrixElement(self.rows, other.cols, product)

    def block_parity(self, even_size: int) -> int:
        """Parity in the supermatrix space whose first ``even_size`` indices are even.

        Raises:
            ConstructionError: entries lie in both diagonal and off-diagonal blocks.
        """
        bits = {int(r >= even_size) ^ int(c >= even_size) for r, c in self.entries}
        if len(bits) > 1:
            raise ConstructionError("matrix mixes diagonal and off-diagonal blocks")
        return bits.pop() if bits else 0


def matrix_superbracket(x: MatrixElement, y: MatrixElement, px: int, py: int) -> MatrixElement:
    """xy - (-1)^{px*py} yx"""
    if x.rows != x.cols or y.rows != y.cols or x.rows != y.rows:
        raise PreconditionError(
            f"size mismatch: superbracket needs square matrices of equal size, got {x.rows}x{x.cols} and {y.rows}x{y.cols}"
        )
    sign = -1 if px and py else 1
    return (x @ y) - (y @ x).scaled(sign)


def express_in_basis(x: MatrixElement, basis: Sequence[MatrixElement]) -> Element:
    """Exact coordinates of x over ``basis``."""
    return MatrixBasis(basis).express(x)


class MatrixBasis:
    def __init__(self, basis: Sequence[MatrixElement]):
        self.basis = list(basis)
        self._solver = SpanSolver([matrix.entries for matrix in self.basis])

    def express(self, x: MatrixElement) -> Element:
        coords = self._solver.solve(x.entries)
        if coords is None:
            raise ConstructionError("bracket left the subalgebra")
        return coords


def algebra_from_matrices(
    name: str,
    basis: Sequence[MatrixElement],
    parity: Sequence[int],
    labels: Sequence[str],
) -> SuperAlgebra:
    """Structure constants of the span of ``basis`` under the matrix superbracket."""
    if len(set(labels)) != len(labels):
        raise ConstructionError(f"{name}: basis labels are not unique")
    solver = MatrixBasis(basis)
    brackets: Dict[Tuple[int, int], Element] = {}
    for i in range(len(basis)):
        for j in range(i, len(basis)):
            product = matrix_superbracket(basis[i], basis[j], parity[i], parity[j])
            if product.is_zero:
                continue
            try:
                brackets[(i, j)] = solver.express(product)
            except ConstructionError:
                logger.error(f"{name}: [{labels[i]}, {labels[j]}] is not in the span of the basis")
                raise
    logger.debug(f"Built {name} from {len(basis)} matrices with {len(brackets)} nonzero brackets")
    return SuperAlgebra(name, parity, brackets, labels)
