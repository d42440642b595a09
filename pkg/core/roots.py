"""Root-space decomposition with respect to a diagonal Cartan subalgebra."""
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from core.exceptions import ConstructionError, PreconditionError, RootBasisError
from core.linalg import Element, SpanSolver, Subspace
from core.logging_config import get_logger
from core.root_tables import RootTable, root_table
from core.superalgebra import SuperAlgebra, Violation, bracket
from schemas.family import FamilySpec

logger = get_logger(__name__)

Functional = Tuple[Fraction, ...]


@dataclass(frozen=True)
class RootSpace:
    functional: Functional
    parity: int
    indices: Tuple[int, ...]
    space: Subspace = field(compare=False)

    @property
    def dim(self) -> int:
        return self.space.dim


@dataclass(frozen=True)
class RootDatum:
    cartan: Tuple[int, ...]
    roots: Tuple[RootSpace, ...]
    zero_space: Subspace

    def lookup(self, functional: Functional, parity: int) -> Optional[RootSpace]:
        for root in self.roots:
            if root.functional == functional and root.parity == parity:
                return root
        return None

    @property
    def functionals(self) -> Counter:
        """Multiset of (functional, parity), counted with root-space dimension."""
        return Counter({(root.functional, root.parity): root.dim for root in self.roots})


def _is_zero(functional: Functional) -> bool:
    return all(value == 0 for value in functional)


def root_decompose(A: SuperAlgebra, cartan: Sequence[int]) -> RootDatum:
    """Group the basis by joint ad-eigenvalues of the Cartan basis vectors.

    Raises:
        PreconditionError: a Cartan index is out of range.
        RootBasisError: some ad h does not act diagonally on the basis.
    """
    cartan = tuple(cartan)
    for h in cartan:
        if not (0 <= h < A.dim):
            raise PreconditionError(f"Cartan index {h} out of range for {A.name} (dim {A.dim})")

    groups: Dict[Tuple[Functional, int], List[int]] = {}
    for b in range(A.dim):
        values = []
        for h in cartan:
            image = A.basis_bracket(h, b)
            if any(k != b for k in image):
                raise RootBasisError(
                    f"basis is not a root basis: [{A.labels[h]}, {A.labels[b]}] is not a multiple of {A.labels[b]}"
                )
            values.append(image[b])
        groups.setdefault((tuple(values), A.parity[b]), []).append(b)

    zero: List[int] = []
    roots: List[RootSpace] = []
    for (functional, parity), indices in sorted(groups.items()):
        if _is_zero(functional):
            zero.extend(indices)
            continue
        roots.append(RootSpace(functional, parity, tuple(indices), Subspace.coordinate(A.dim, indices)))
    logger.debug(f"{A.name}: {len(roots)} root spaces, zero space of dim {len(zero)}")
    return RootDatum(cartan, tuple(roots), Subspace.coordinate(A.dim, sorted(zero)))


def _space_bracket(A: SuperAlgebra, left: Sequence[int], right: Sequence[int]) -> List[Element]:
    return [bracket(A, Element.unit(i), Element.unit(j)) for i in left for j in right]


def verify_theorem2(A: SuperAlgebra, rd: RootDatum) -> List[Violation]:
    """Check G_0 = H, one-dimensional root spaces, and the bracket pattern between root spaces.

    Violation kinds: "zero_space", "dimension", "bracket" (nonzero exactly when
    alpha + beta is zero or a root fails), "closure" (a product leaves
    G_{alpha+beta}, or H when alpha + beta = 0).  Indices refer to positions in
    ``rd.roots``.
    """
    violations: List[Violation] = []
    if rd.zero_space != Subspace.coordinate(A.dim, rd.cartan):
        violations.append(
            Violation("zero_space", rd.cartan, f"zero weight space has dim {rd.zero_space.dim}, H has dim {len(rd.cartan)}")
        )
    for pos, root in enumerate(rd.roots):
        if root.dim != 1:
            violations.append(Violation("dimension", (pos,), f"root space has dim {root.dim}"))

    all_functionals = {root.functional for root in rd.roots}
    for a, alpha in enumerate(rd.roots):
        for b in range(a, len(rd.roots)):
            beta = rd.roots[b]
            total = tuple(x + y for x, y in zip(alpha.functional, beta.functional))
            products = [p for p in _space_bracket(A, alpha.indices, beta.indices) if p]
            expected = _is_zero(total) or total in all_functionals
            if bool(products) != expected:
                state = "nonzero" if products else "zero"
                violations.append(Violation("bracket", (a, b), f"bracket is {state} but alpha+beta in roots is {expected}"))
            if not products:
                continue
            if _is_zero(total):
                target = rd.zero_space
            else:
                space = rd.lookup(total, (alpha.parity + beta.parity) % 2)
                target = space.space if space else Subspace.zero(A.dim)
            if not all(target.contains(p) for p in products):
                violations.append(Violation("closure", (a, b), "product leaves the root space of alpha+beta"))
    if violations:
        logger.info(f"{A.name}: {len(violations)} root-structure violations")
    return violations


def _solve_in_simple_basis(table: RootTable) -> Optional[List[Tuple[Element, int]]]:
    simple = [Element(enumerate(vector)) for vector, _ in table.simple]
    try:
        solver = SpanSolver(simple)
    except ConstructionError:
        return None
    expressed = []
    for vector, parity in table.all_roots():
        coords = solver.solve(Element(enumerate(vector)))
        if coords is None:
            return None
        expressed.append((coords, parity))
    return expressed


def _image(coords: Element, assigned: Sequence[Functional]) -> Functional:
    width = len(assigned[0])
    total = [Fraction(0)] * width
    for position, coeff in coords.items():
        for k, value in enumerate(assigned[position]):
            total[k] += coeff * value
    return tuple(total)


def find_root_identification(rd: RootDatum, table: RootTable) -> Optional[List[Functional]]:
    """Images of the simple roots under an identification matching the full table, or None.

    Simple roots are assigned one at a time, candidates in lexicographic order;
    a partial assignment survives only if every table root supported on the
    assigned simple roots lands on a computed root of the same parity.
    """
    rank = len(rd.cartan)
    if table.rank != rank:
        return None
    expressed = _solve_in_simple_basis(table)
    if expressed is None:
        return None
    computed = rd.functionals
    present = set(computed)
    candidates: Dict[int, List[Functional]] = {}
    for functional, parity in sorted(present):
        candidates.setdefault(parity, []).append(functional)

    def consistent(assigned: List[Functional]) -> bool:
        span = Subspace(rank, [Element(enumerate(f)) for f in assigned])
        if span.dim != len(assigned):
            return False
        limit = len(assigned)
        for coords, parity in expressed:
            if all(position < limit for position in coords):
                if (_image(coords, assigned), parity) not in present:
                    return False
        return True

    def extend(assigned: List[Functional]) -> Optional[List[Functional]]:
        if len(assigned) == rank:
            predicted = Counter((_image(coords, assigned), parity) for coords, parity in expressed)
            return list(assigned) if predicted == computed else None
        parity = table.simple[len(assigned)][1]
        for functional in candidates.get(parity, ()):
            trial = assigned + [functional]
            if consistent(trial):
                found = extend(trial)
                if found is not None:
                    return found
        return None

    return extend([])


def match_root_table(rd: RootDatum, family: FamilySpec) -> bool:
    """True iff the computed roots equal the family's table under some linear identification."""
    table = root_table(family)
    if table is None:
        logger.info(f"{family.display_name}: no root table over independent coordinates")
        return False
    found = find_root_identification(rd, table) is not None
    logger.debug(f"{family.display_name}: root table match {found}")
    return found


class RootService:
    def decompose(self, A: SuperAlgebra, cartan: Sequence[int]) -> Tuple[RootDatum, List[Violation]]:
        rd = root_decompose(A, cartan)
        return rd, verify_theorem2(A, rd)


root_service = RootService()
