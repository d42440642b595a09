"""delta-derivations: linear maps phi with phi([x,y]) = delta([phi(x), y] + [x, phi(y)]).

Unknowns are the entries of the matrix M of phi, M[k][l] = coefficient of e_k
in phi(e_l), flattened row-major (variable k*n + l).  Every equation is a
pencil ``constant + delta * slope`` over these variables, so one assembly
serves both the numeric solve at a fixed delta and the parametric scan.
"""
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from core.exactnum import RatFunction, format_rational
from core.exceptions import PreconditionError, SolverError
from core.linalg import Element, Subspace, rank_by_sparsest
from core.logging_config import get_logger, log_solve_event
from core.superalgebra import EVEN, ODD, SuperAlgebra, bracket, check_superidentities

logger = get_logger(__name__)

SYMBOLIC = "delta"

Pencil = Tuple[Element, Element]
SymbolicRow = Dict[int, RatFunction]


@dataclass(frozen=True)
class LinearMap:
    """n x n matrix; column l is the image of basis vector l."""

    matrix: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        n = len(self.matrix)
        if any(len(row) != n for row in self.matrix):
            raise PreconditionError("linear map matrix must be square")

    @classmethod
    def from_flat(cls, vector: Element, n: int) -> "LinearMap":
        rows = [[Fraction(0)] * n for _ in range(n)]
        for index, value in vector.items():
            k, l = divmod(index, n)
            rows[k][l] = value
        return cls(tuple(tuple(row) for row in rows))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Fraction]]) -> "LinearMap":
        return cls(tuple(tuple(Fraction(value) for value in row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> "LinearMap":
        return cls.from_flat(Element((k * n + k, Fraction(1)) for k in range(n)), n)

    @property
    def n(self) -> int:
        return len(self.matrix)

    def flat(self) -> Element:
        n = self.n
        return Element((k * n + l, value) for k, row in enumerate(self.matrix) for l, value in enumerate(row))

    def image(self, l: int) -> Element:
        return Element((k, self.matrix[k][l]) for k in range(self.n))

    def apply(self, x: Element) -> Element:
        result = Element()
        for l, coef in x.items():
            result.iadd_coef(coef, self.image(l))
        return result

    def scalar(self) -> Optional[Fraction]:
        """c if the map is c * identity, else None."""
        n = self.n
        c = self.matrix[0][0] if n else Fraction(0)
        for k in range(n):
            for l in range(n):
                if self.matrix[k][l] != (c if k == l else 0):
                    return None
        return c

    def preserves(self, A: SuperAlgebra, parity: int) -> bool:
        """phi(G_parity) is contained in G_parity."""
        for l in range(self.n):
            if A.parity[l] != parity:
                continue
            if any(self.matrix[k][l] and A.parity[k] != parity for k in range(self.n)):
                return False
        return True

    def to_json(self) -> List[str]:
        return [format_rational(value) for row in self.matrix for value in row]


@dataclass(frozen=True)
class DerivationSpace:
    delta: Fraction
    basis: Tuple[LinearMap, ...]
    algebra_name: str

    @property
    def nullity(self) -> int:
        return len(self.basis)


@dataclass(frozen=True)
class SpaceAnalysis:
    grading_preserving: bool
    per_map_grading: Tuple[bool, ...]
    scalar_line: bool
    inner_dim: Optional[int]
    outer_dim: Optional[int]
    inner_maps: Optional[Tuple[bool, ...]]


@dataclass
class NumericSystem:
    n: int
    delta: Fraction
    rows: List[Element]

    @property
    def columns(self) -> int:
        return self.n * self.n


@dataclass
class SymbolicSystem:
    n: int
    rows: List[SymbolicRow]

    @property
    def columns(self) -> int:
        return self.n * self.n


# ---------------- assembly ----------------

def equation_pairs(A: SuperAlgebra) -> List[Tuple[int, int]]:
    """Pairs i <= j, plus (j, i) whenever one of e_i, e_j is odd."""
    pairs = []
    for i in range(A.dim):
        for j in range(i, A.dim):
            pairs.append((i, j))
            if i != j and (A.parity[i] or A.parity[j]):
                pairs.append((j, i))
    return pairs


def _pencil_rows(A: SuperAlgebra) -> List[Pencil]:
    n = A.dim
    # right[j] = [(k, [e_k, e_j])], left[i] = [(k, [e_i, e_k])]
    right = {j: [(k, A.basis_bracket(k, j)) for k in range(n) if A.basis_bracket(k, j)] for j in range(n)}
    left = {i: [(k, A.basis_bracket(i, k)) for k in range(n) if A.basis_bracket(i, k)] for i in range(n)}

    rows: List[Pencil] = []
    for i, j in equation_pairs(A):
        by_coordinate: Dict[int, Pencil] = {}

        def entry(r: int) -> Pencil:
            if r not in by_coordinate:
                by_coordinate[r] = (Element(), Element())
            return by_coordinate[r]

        # phi([e_i, e_j]) at coordinate r is sum_s c^s_ij M[r][s]
        for s, c in A.basis_bracket(i, j).items():
            for r in range(n):
                entry(r)[0].iadd_coef(c, Element.unit(r * n + s))
        # -delta [phi(e_i), e_j]: M[k][i] [e_k, e_j]
        for k, vector in right[j]:
            for r, c in vector.items():
                entry(r)[1].iadd_coef(-c, Element.unit(k * n + i))
        # -delta [e_i, phi(e_j)]: M[k][j] [e_i, e_k]
        for k, vector in left[i]:
            for r, c in vector.items():
                entry(r)[1].iadd_coef(-c, Element.unit(k * n + j))

        for r in sorted(by_coordinate):
            constant, slope = by_coordinate[r]
            if constant or slope:
                rows.append((constant, slope))
    return rows


def assemble_system(A: SuperAlgebra, delta: Union[Fraction, int, str]) -> Union[NumericSystem, SymbolicSystem]:
    """Linear system of the delta-derivation condition in the n^2 entries of phi.

    Args:
        A: the algebra
        delta: a rational, or ``SYMBOLIC`` for entries in Q[delta]

    Returns:
        NumericSystem with Element rows, or SymbolicSystem with rows of degree <= 1 entries
    """
    pencils = _pencil_rows(A)
    if delta == SYMBOLIC:
        rows: List[SymbolicRow] = []
        for constant, slope in pencils:
            row = {}
            for var in set(constant) | set(slope):
                value = RatFunction.linear(constant[var], slope[var])
                if not value.is_zero:
                    row[var] = value
            if row:
                rows.append(row)
        return SymbolicSystem(A.dim, rows)

    delta = Fraction(delta)
    numeric = []
    for constant, slope in pencils:
        row = Element(constant).iadd_coef(delta, slope)
        if row:
            numeric.append(row)
    return NumericSystem(A.dim, delta, numeric)


def split_components(rows: Sequence[Iterable[int]]) -> List[Tuple[List[int], List[int]]]:
    """Connected components of the variables, linked when they share a row.

    Returns:
        (row positions, sorted variables) per component, ordered by smallest variable.
    """
    parent: Dict[int, int] = {}

    def find(x: int) -> int:
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    row_vars = [list(row) for row in rows]
    for variables in row_vars:
        for var in variables:
            parent.setdefault(var, var)
        for var in variables[1:]:
            a, b = find(variables[0]), find(var)
            if a != b:
                parent[max(a, b)] = min(a, b)

    blocks: Dict[int, Tuple[List[int], List[int]]] = {}
    for var in sorted(parent):
        blocks.setdefault(find(var), ([], []))[1].append(var)
    for position, variables in enumerate(row_vars):
        if variables:
            blocks[find(variables[0])][0].append(position)
    return [blocks[root] for root in sorted(blocks)]


# ---------------- numeric solve ----------------

def _block_nullspace(rows: Sequence[Element], variables: Sequence[int]) -> List[Element]:
    local = {var: pos for pos, var in enumerate(variables)}
    data = {
        i: {local[var]: QQ(value.numerator, value.denominator) for var, value in row.items()}
        for i, row in enumerate(rows)
    }
    reduced, pivots = DomainMatrix(data, (len(rows), len(variables)), QQ).rref()
    entries = reduced.to_sparse().rep
    pivot_rows = {column: row for row, column in enumerate(pivots)}

    basis = []
    for free, var in enumerate(variables):
        if free in pivot_rows:
            continue
        vector = Element.unit(var)
        for column, row in pivot_rows.items():
            value = entries.get(row, {}).get(free)
            if value:
                vector.iadd_coef(-Fraction(int(value.numerator), int(value.denominator)), Element.unit(variables[column]))
        basis.append(vector)
    return basis


def solve_nullspace(system: NumericSystem) -> Tuple[List[Element], int]:
    """Reduced echelon basis of the nullspace and the number of blocks solved."""
    columns = system.columns
    blocks = split_components([row.keys() for row in system.rows])
    covered = set()
    vectors: List[Element] = []
    for positions, variables in blocks:
        covered.update(variables)
        vectors.extend(_block_nullspace([system.rows[p] for p in positions], variables))
    vectors.extend(Element.unit(var) for var in range(columns) if var not in covered)
    return list(Subspace(columns, vectors).rows), len(blocks)


def verify_delta_derivation(A: SuperAlgebra, delta: Fraction, phi: LinearMap) -> List[Tuple[int, int]]:
    """Ordered basis pairs on which phi([x,y]) = delta([phi x, y] + [x, phi y]) fails."""
    failures = []
    images = [phi.image(l) for l in range(A.dim)]
    for i in range(A.dim):
        for j in range(A.dim):
            lhs = phi.apply(A.basis_bracket(i, j))
            rhs = bracket(A, images[i], Element.unit(j)) + bracket(A, Element.unit(i), images[j])
            if lhs != rhs.scaled(delta):
                failures.append((i, j))
    return failures


def is_superderivation(A: SuperAlgebra, phi: LinearMap, parity: int) -> bool:
    """phi([x,y]) = [phi x, y] + (-1)^{p(phi) p(x)} [x, phi y] on all basis pairs."""
    images = [phi.image(l) for l in range(A.dim)]
    for i in range(A.dim):
        sign = -1 if parity and A.parity[i] else 1
        for j in range(A.dim):
            lhs = phi.apply(A.basis_bracket(i, j))
            rhs = bracket(A, images[i], Element.unit(j)).iadd_coef(sign, bracket(A, Element.unit(i), images[j]))
            if lhs != rhs:
                return False
    return True


def ad_map(A: SuperAlgebra, i: int) -> LinearMap:
    n = A.dim
    return LinearMap.from_flat(
        Element((k * n + l, c) for l in range(n) for k, c in A.basis_bracket(i, l).items()),
        n,
    )


def derivation_space(A: SuperAlgebra, delta: Union[Fraction, int], strict: bool = False) -> DerivationSpace:
    """Exact space of delta-derivations of A, re-verified map by map.

    Args:
        A: the algebra
        delta: the fixed scalar
        strict: refuse algebras that fail the superidentity scan

    Raises:
        PreconditionError: strict is set and A is not a Lie superalgebra.
        SolverError: a solved map fails the independent re-check.
    """
    delta = Fraction(delta)
    if strict and check_superidentities(A):
        raise PreconditionError(f"{A.name} fails the superidentities")
    started = time.perf_counter()
    system = assemble_system(A, delta)
    vectors, blocks = solve_nullspace(system)
    basis = tuple(LinearMap.from_flat(vector, A.dim) for vector in vectors)
    for position, phi in enumerate(basis):
        failures = verify_delta_derivation(A, delta, phi)
        if failures:
            raise SolverError(
                f"{A.name}: basis map {position} at delta={format_rational(delta)} fails on pair {failures[0]}"
            )
    log_solve_event(
        logger,
        "derivation_space",
        A.name,
        delta=format_rational(delta),
        dim=A.dim,
        nullity=len(basis),
        rank=system.columns - len(basis),
        blocks=blocks,
        duration_ms=round((time.perf_counter() - started) * 1000, 2),
    )
    return DerivationSpace(delta, basis, A.name)


def oracle_nullity(A: SuperAlgebra, delta: Union[Fraction, int]) -> int:
    """Nullity by a second elimination order on the unsplit system."""
    system = assemble_system(A, Fraction(delta))
    return system.columns - rank_by_sparsest(system.rows)


# ---------------- analysis ----------------

def inner_span(A: SuperAlgebra) -> Subspace:
    return Subspace(A.dim * A.dim, (ad_map(A, i).flat() for i in range(A.dim)))


def analyze_space(A: SuperAlgebra, S: DerivationSpace) -> SpaceAnalysis:
    """Grading behaviour, scalar detection, and for delta = 1 the inner part of S."""
    if S.basis and S.basis[0].n != A.dim:
        raise PreconditionError(f"space has {S.basis[0].n}x{S.basis[0].n} maps, {A.name} has dim {A.dim}")
    per_map = tuple(phi.preserves(A, EVEN) and phi.preserves(A, ODD) for phi in S.basis)
    scalar_line = S.nullity == 1 and bool(S.basis[0].scalar())

    inner_dim = outer_dim = None
    inner_maps = None
    if S.delta == 1:
        inner = inner_span(A)
        space = Subspace(A.dim * A.dim, (phi.flat() for phi in S.basis))
        inner_dim = space.intersection_dim(inner)
        outer_dim = S.nullity - inner_dim
        inner_maps = tuple(inner.contains(phi.flat()) for phi in S.basis)
    return SpaceAnalysis(all(per_map), per_map, scalar_line, inner_dim, outer_dim, inner_maps)


class DerivationService:
    def derive(self, A: SuperAlgebra, delta: Fraction) -> Tuple[DerivationSpace, SpaceAnalysis]:
        space = derivation_space(A, delta)
        return space, analyze_space(A, space)


derivation_service = DerivationService()
