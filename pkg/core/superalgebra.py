"""Finite-dimensional superalgebras given by parity labels and structure constants.

Only pairs i <= j are stored; [e_j, e_i] is derived on demand from
super-anticommutativity, [e_j, e_i] = -(-1)^{p(i)p(j)} [e_i, e_j].
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from core.exceptions import NotAnIdealError, NotGradedError, PreconditionError
from core.linalg import Element, Subspace, nullspace_basis
from core.logging_config import get_logger

logger = get_logger(__name__)

EVEN = 0
ODD = 1


@dataclass(frozen=True)
class Violation:
    kind: str
    indices: Tuple[int, ...]
    detail: str = ""


class SuperAlgebra:
    """A superalgebra G = G_0 + G_1 with a sparse structure-constant table.

    Args:
        name: display name, also written to the JSON document
        parity: one bit per basis vector
        brackets: (i, j) -> coordinates of [e_i, e_j], for i <= j only
        labels: optional basis labels; defaults to e0, e1, ...
    """

    def __init__(
        self,
        name: str,
        parity: Sequence[int],
        brackets: Mapping[Tuple[int, int], Mapping[int, Fraction]],
        labels: Optional[Sequence[str]] = None,
    ):
        self.name = name
        self.parity: Tuple[int, ...] = tuple(int(bit) for bit in parity)
        self.dim = len(self.parity)
        if any(bit not in (EVEN, ODD) for bit in self.parity):
            raise PreconditionError("parity bits must be 0 or 1")

        table: Dict[Tuple[int, int], Element] = {}
        for (i, j), coords in brackets.items():
            if not (0 <= i <= j < self.dim):
                raise PreconditionError(f"bracket entry ({i}, {j}) must satisfy 0 <= i <= j < {self.dim}")
            vector = Element(coords)
            if any(not (0 <= k < self.dim) for k in vector):
                raise PreconditionError(f"bracket entry ({i}, {j}) references a basis index out of range")
            if vector:
                table[(i, j)] = vector
        self._brackets = table

        if labels is None:
            labels = [f"e{k}" for k in range(self.dim)]
        if len(labels) != self.dim:
            raise PreconditionError(f"expected {self.dim} labels, got {len(labels)}")
        self.labels: Tuple[str, ...] = tuple(labels)

    def sign(self, i: int, j: int) -> int:
        """Factor s with [e_j, e_i] = s [e_i, e_j]."""
        return 1 if self.parity[i] and self.parity[j] else -1

    @cached_property
    def _table(self) -> Dict[Tuple[int, int], Element]:
        full: Dict[Tuple[int, int], Element] = {}
        for (i, j), vector in self._brackets.items():
            full[(i, j)] = vector
            if i != j:
                full[(j, i)] = vector.scaled(self.sign(i, j))
        return full

    def basis_bracket(self, i: int, j: int) -> Element:
        vector = self._table.get((i, j))
        return Element(vector) if vector else Element()

    @property
    def structure_constants(self) -> List[Tuple[int, int, Element]]:
        return [(i, j, Element(self._brackets[(i, j)])) for i, j in sorted(self._brackets)]

    @property
    def even_indices(self) -> List[int]:
        return [k for k, bit in enumerate(self.parity) if bit == EVEN]

    @property
    def odd_indices(self) -> List[int]:
        return [k for k, bit in enumerate(self.parity) if bit == ODD]

    @property
    def label_map(self) -> Dict[str, int]:
        return {label: index for index, label in enumerate(self.labels)}

    @property
    def is_abelian(self) -> bool:
        return not self._brackets

    def parity_of(self, vector: Element) -> Optional[int]:
        """Parity of a homogeneous vector, None for mixed ones (zero counts as even)."""
        bits = {self.parity[k] for k in vector}
        if not bits:
            return EVEN
        return bits.pop() if len(bits) == 1 else None

    def rescaled(self, factor: Fraction) -> "SuperAlgebra":
        return SuperAlgebra(
            f"{self.name}*{factor}",
            self.parity,
            {key: vector.scaled(factor) for key, vector in self._brackets.items()},
            self.labels,
        )

    @cached_property
    def superidentity_violations(self) -> Tuple[Violation, ...]:
        return tuple(_scan_superidentities(self))

    def __repr__(self) -> str:
        even = len(self.even_indices)
        return f"SuperAlgebra({self.name!r}, dim={self.dim}, even={even}, odd={self.dim - even})"


def _check_indices(A: SuperAlgebra, vector: Element) -> None:
    for key in vector:
        if not (isinstance(key, int) and 0 <= key < A.dim):
            raise PreconditionError(f"basis index {key!r} out of range for {A.name} (dim {A.dim})")


def bracket(A: SuperAlgebra, x: Element, y: Element) -> Element:
    """Bilinear extension of the structure-constant table."""
    _check_indices(A, x)
    _check_indices(A, y)
    result = Element()
    for i, a in x.items():
        for j, b in y.items():
            vector = A._table.get((i, j))
            if vector:
                result.iadd_coef(a * b, vector)
    return result


def _bracket_with_basis(A: SuperAlgebra, x: Element, k: int) -> Element:
    result = Element()
    for i, a in x.items():
        vector = A._table.get((i, k))
        if vector:
            result.iadd_coef(a, vector)
    return result


def jacobi_residual(A: SuperAlgebra, i: int, j: int, k: int) -> Element:
    """[[x,y],z] - [x,[y,z]] - (-1)^{p(y)p(z)} [[x,z],y] for x, y, z = e_i, e_j, e_k."""
    residual = _bracket_with_basis(A, A.basis_bracket(i, j), k)
    yz = A.basis_bracket(j, k)
    for l, c in yz.items():
        vector = A._table.get((i, l))
        if vector:
            residual.iadd_coef(-c, vector)
    sign = -1 if A.parity[j] and A.parity[k] else 1
    residual.iadd_coef(-sign, _bracket_with_basis(A, A.basis_bracket(i, k), j))
    return residual


def _scan_superidentities(A: SuperAlgebra) -> List[Violation]:
    violations: List[Violation] = []
    for i, j, vector in A.structure_constants:
        target = (A.parity[i] + A.parity[j]) % 2
        for k in sorted(vector):
            if A.parity[k] != target:
                violations.append(Violation("grading", (i, j, k), f"[{A.labels[i]}, {A.labels[j]}] has a component on {A.labels[k]}"))
        # [x, x] = -[x, x] for even x
        if i == j and A.parity[i] == EVEN:
            violations.append(Violation("anticommutativity", (i, i), f"[{A.labels[i]}, {A.labels[i]}] is nonzero"))

    for i in range(A.dim):
        for j in range(A.dim):
            for k in range(A.dim):
                residual = jacobi_residual(A, i, j, k)
                if residual:
                    violations.append(
                        Violation("jacobi", (i, j, k), f"residual on {len(residual)} basis vectors")
                    )
    if violations:
        logger.info(f"{A.name}: {len(violations)} superidentity violations")
    return violations


def check_superidentities(A: SuperAlgebra) -> List[Violation]:
    """Exhaustive check of super-anticommutativity on pairs and super Jacobi on triples.

    Returns:
        The violations found; an empty list means A is a Lie superalgebra.
    """
    return list(A.superidentity_violations)


def component(A: SuperAlgebra, parity: int) -> Subspace:
    return Subspace.coordinate(A.dim, (k for k in range(A.dim) if A.parity[k] == parity))


def derived_odd(A: SuperAlgebra) -> Subspace:
    """Span of [e_i, e_j] over all odd basis pairs."""
    odd = A.odd_indices
    return Subspace(A.dim, (A.basis_bracket(i, j) for pos, i in enumerate(odd) for j in odd[pos:]))


def ideal_closure(A: SuperAlgebra, seed: Subspace) -> Subspace:
    """Smallest subspace containing ``seed`` and closed under bracketing with the basis."""
    current = Subspace(A.dim, seed.rows)
    for _ in range(A.dim + 1):
        if current.dim in (0, A.dim):
            return current
        products = []
        for row in current.rows:
            homogeneous = A.parity_of(row) is not None
            for k in range(A.dim):
                products.append(_bracket_with_basis(A, row, k))
                if not homogeneous:
                    products.append(bracket(A, Element.unit(k), row))
        grown = current.extended(products)
        if grown.dim == current.dim:
            return grown
        current = grown
    return current


def center(A: SuperAlgebra) -> Subspace:
    """Elements z with [e_k, z] = 0 for every basis vector e_k."""
    rows: Dict[Tuple[int, int], Element] = {}
    for k in range(A.dim):
        for l in range(A.dim):
            for r, c in A.basis_bracket(k, l).items():
                rows.setdefault((k, r), Element()).iadd_coef(c, Element.unit(l))
    return Subspace(A.dim, nullspace_basis(rows.values(), list(range(A.dim))))


def is_simple(A: SuperAlgebra) -> bool:
    """True iff the bracket is nonzero, the centre vanishes and every basis vector generates A.

    Raises:
        PreconditionError: A has dimension below 2.
    """
    if A.dim < 2:
        raise PreconditionError(f"is_simple needs dim >= 2, {A.name} has dim {A.dim}")
    if A.is_abelian:
        return False
    if center(A).dim:
        return False
    for k in range(A.dim):
        if ideal_closure(A, Subspace.coordinate(A.dim, [k])).dim != A.dim:
            logger.debug(f"{A.name}: ideal generated by {A.labels[k]} is proper")
            return False
    return True


def quotient(A: SuperAlgebra, ideal: Subspace, name: Optional[str] = None) -> SuperAlgebra:
    """A / ideal on the complement spanned by the non-pivot basis vectors.

    Raises:
        NotGradedError: the ideal is not spanned by parity-homogeneous vectors.
        NotAnIdealError: some bracket with a basis vector leaves the subspace.
    """
    if ideal.ambient_dim != A.dim:
        raise PreconditionError(f"subspace lives in dimension {ideal.ambient_dim}, algebra has {A.dim}")
    rows = ideal.rows
    for row in rows:
        if A.parity_of(row) is None:
            raise NotGradedError("subspace is not graded: an echelon row mixes even and odd coordinates")
    for row in rows:
        for k in range(A.dim):
            if not ideal.contains(_bracket_with_basis(A, row, k)):
                raise NotAnIdealError(
                    f"subspace is not an ideal: bracketing with {A.labels[k]} leaves it"
                )

    pivots = set(ideal.pivots)
    keep = [k for k in range(A.dim) if k not in pivots]
    new_index = {old: new for new, old in enumerate(keep)}
    brackets: Dict[Tuple[int, int], Element] = {}
    for pos, a in enumerate(keep):
        for b in keep[pos:]:
            reduced = ideal.reduce(A.basis_bracket(a, b))
            if reduced:
                brackets[(new_index[a], new_index[b])] = Element(
                    (new_index[k], c) for k, c in reduced.items()
                )
    if name is None:
        name = A.name if ideal.dim == 0 else f"{A.name}/I{ideal.dim}"
    return SuperAlgebra(
        name,
        [A.parity[k] for k in keep],
        brackets,
        [A.labels[k] for k in keep],
    )
