"""Matrix realizations of the classical Lie superalgebras.

Each builder returns a ``CatalogEntry``: the structure-constant algebra, the
indices of its diagonal (Cartan) basis vectors, and the spec it came from.
Root-vector labels carry their weight over the coordinates e1.., d1.. of the
diagonal matrices, e.g. ``g_{e1-d1}``; Cartan vectors are labelled ``h_{..}``.
"""
import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from core.exceptions import ConstructionError
from core.linalg import Element, Subspace, nullspace_basis
from core.logging_config import get_logger, log_solve_event
from core.matrices import MatrixElement, algebra_from_matrices, express_in_basis
from core.superalgebra import EVEN, ODD, SuperAlgebra, check_superidentities, is_simple, jacobi_residual, quotient
from schemas.family import Family, FamilySpec, parse_spec_string

logger = get_logger(__name__)

Coordinate = Tuple[str, int]
Weight = Dict[Coordinate, int]


@dataclass(frozen=True)
class CatalogEntry:
    algebra: SuperAlgebra
    cartan: Tuple[int, ...]
    spec: Optional[FamilySpec] = None
    # realizing matrices in basis order; empty for quotients and D(2,1;alpha)
    matrices: Tuple[MatrixElement, ...] = ()

    @property
    def basis(self) -> Dict[str, int]:
        return self.algebra.label_map


def _terms_matrix(size: int, terms: Dict[Tuple[int, int], int]) -> MatrixElement:
    return MatrixElement.from_terms(size, {key: Fraction(value) for key, value in terms.items()})


def format_weight(weight: Weight) -> str:
    terms = []
    for (letter, index), coeff in sorted(weight.items(), key=lambda item: (item[0][0] != "e", item[0][1])):
        if coeff == 0:
            continue
        sign = "-" if coeff < 0 else "+"
        size = "" if abs(coeff) == 1 else str(abs(coeff))
        terms.append(f"{sign}{size}{letter}{index}")
    text = "".join(terms).lstrip("+")
    return text or "0"


def _weight_difference(row: Weight, col: Weight) -> Weight:
    weight = dict(row)
    for coord, coeff in col.items():
        weight[coord] = weight.get(coord, 0) - coeff
    return {coord: coeff for coord, coeff in weight.items() if coeff}


def _ordered(
    name: str,
    matrices: Sequence[MatrixElement],
    parities: Sequence[int],
    labels: Sequence[str],
) -> CatalogEntry:
    """Order the basis as Cartan, even root vectors, odd root vectors and build the algebra."""
    cartan = [k for k, m in enumerate(matrices) if m.is_diagonal]
    even = [k for k, m in enumerate(matrices) if not m.is_diagonal and parities[k] == EVEN]
    odd = [k for k, m in enumerate(matrices) if parities[k] == ODD]
    order = cartan + even + odd
    ordered = tuple(matrices[k] for k in order)
    algebra = algebra_from_matrices(name, ordered, [parities[k] for k in order], [labels[k] for k in order])
    return CatalogEntry(algebra, tuple(range(len(cartan))), matrices=ordered)


# ---------------- sl(p|q) and A(n,n) ----------------

def _sl_weights(p: int, q: int) -> List[Weight]:
    return [{("e", i + 1): 1} for i in range(p)] + [{("d", j + 1): 1} for j in range(q)]


def special_linear(p: int, q: int, name: Optional[str] = None) -> CatalogEntry:
    """sl(p|q): supertraceless (p+q)x(p+q) matrices."""
    size = p + q
    weights = _sl_weights(p, q)
    matrices: List[MatrixElement] = []
    parities: List[int] = []
    labels: List[str] = []

    for k in range(size - 1):
        # supertrace zero: a difference inside a block, a sum across the boundary
        sign = 1 if k == p - 1 else -1
        matrices.append(_terms_matrix(size, {(k, k): 1, (k + 1, k + 1): sign}))
        parities.append(EVEN)
        labels.append(f"h_{{{k + 1}}}")

    for r in range(size):
        for c in range(size):
            if r == c:
                continue
            matrix = MatrixElement.elementary(size, r, c)
            matrices.append(matrix)
            parities.append(matrix.block_parity(p))
            labels.append(f"g_{{{format_weight(_weight_difference(weights[r], weights[c]))}}}")

    return _ordered(name or f"sl({p},{q})", matrices, parities, labels)


def scalar_matrix_coordinates(entry: CatalogEntry) -> Element:
    """Coordinates of the identity matrix over the realizing matrices of ``entry``.

    Raises:
        ConstructionError: the identity is not in the span (e.g. sl(p|q) with p != q).
    """
    if not entry.matrices:
        raise ConstructionError(f"{entry.algebra.name} carries no matrix realization")
    size = entry.matrices[0].rows
    identity = _terms_matrix(size, {(k, k): 1 for k in range(size)})
    return express_in_basis(identity, entry.matrices)


def _quotient_by_scalars(entry: CatalogEntry, identity: Element, name: str) -> CatalogEntry:
    A = entry.algebra
    ideal = Subspace(A.dim, [identity])
    reduced = quotient(A, ideal, name=name)
    index = reduced.label_map
    cartan = tuple(index[A.labels[k]] for k in entry.cartan if A.labels[k] in index)
    return CatalogEntry(reduced, cartan)


def projective_special_linear(n: int) -> CatalogEntry:
    """A(n,n) = sl(n+1|n+1) modulo its one-dimensional centre of scalar matrices."""
    entry = special_linear(n + 1, n + 1)
    identity = scalar_matrix_coordinates(entry)
    return _quotient_by_scalars(entry, identity, f"A({n},{n})")


# ---------------- orthosymplectic B, C, D ----------------

def orthosymplectic(orth_size: int, n: int, name: str) -> CatalogEntry:
    """osp(orth_size | 2n) in the split form, solved from X^st Omega + Omega X = 0."""
    m = orth_size // 2
    size = orth_size + 2 * n

    form: Dict[Tuple[int, int], int] = {}
    for k in range(m):
        form[(k, m + k)] = 1
        form[(m + k, k)] = 1
    if orth_size % 2:
        form[(2 * m, 2 * m)] = 1
    for j in range(n):
        form[(orth_size + j, orth_size + n + j)] = 1
        form[(orth_size + n + j, orth_size + j)] = -1

    by_column: Dict[int, List[Tuple[int, int]]] = {}
    by_row: Dict[int, List[Tuple[int, int]]] = {}
    for (r, c), value in form.items():
        by_column.setdefault(c, []).append((r, value))
        by_row.setdefault(r, []).append((c, value))

    def st_sign(a: int, b: int) -> int:
        return -1 if a < orth_size <= b else 1

    rows = []
    for a in range(size):
        for b in range(size):
            row = Element()
            for c, value in by_column.get(b, ()):
                row.iadd_coef(st_sign(a, c) * value, Element.unit((c, a)))
            for c, value in by_row.get(a, ()):
                row.iadd_coef(value, Element.unit((c, b)))
            if row:
                rows.append(row)

    columns = [(r, c) for r in range(size) for c in range(size)]
    weights: List[Weight] = []
    for k in range(orth_size):
        if k < m:
            weights.append({("e", k + 1): 1})
        elif k < 2 * m:
            weights.append({("e", k - m + 1): -1})
        else:
            weights.append({})
    for j in range(2 * n):
        weights.append({("d", j + 1): 1} if j < n else {("d", j - n + 1): -1})

    matrices: List[MatrixElement] = []
    parities: List[int] = []
    labels: List[str] = []
    for vector in nullspace_basis(rows, columns):
        first = vector.leading_key()
        if vector[first] < 0:
            vector = vector.scaled(-1)
        matrix = MatrixElement(size, size, vector)
        matrices.append(matrix)
        parities.append(matrix.block_parity(orth_size))
        if matrix.is_diagonal:
            labels.append(f"h_{{{format_weight(weights[first[0]])}}}")
        else:
            r, c = first
            labels.append(f"g_{{{format_weight(_weight_difference(weights[r], weights[c]))}}}")

    return _ordered(name, matrices, parities, labels)


# ---------------- strange series P, Q ----------------

def queer(n: int) -> CatalogEntry:
    """Q(n): {[[A,B],[B,A]] : tr B = 0} inside gl(n+1|n+1), modulo the identity."""
    block = n + 1
    size = 2 * block
    matrices: List[MatrixElement] = []
    parities: List[int] = []
    labels: List[str] = []

    def add(terms: Dict[Tuple[int, int], int], parity: int, label: str) -> None:
        matrices.append(_terms_matrix(size, terms))
        parities.append(parity)
        labels.append(label)

    for i in range(block):
        add({(i, i): 1, (block + i, block + i): 1}, EVEN, f"a_{{{i + 1},{i + 1}}}")
    for i in range(block):
        for j in range(block):
            if i != j:
                add({(i, j): 1, (block + i, block + j): 1}, EVEN, f"a_{{{i + 1},{j + 1}}}")
    for i in range(block):
        for j in range(block):
            if i != j:
                add({(i, block + j): 1, (block + i, j): 1}, ODD, f"b_{{{i + 1},{j + 1}}}")
    for i in range(n):
        add(
            {(i, block + i): 1, (block + i, i): 1, (i + 1, block + i + 1): -1, (block + i + 1, i + 1): -1},
            ODD,
            f"c_{{{i + 1},{i + 2}}}",
        )

    gl_type = CatalogEntry(
        algebra_from_matrices(f"Q({n})~", matrices, parities, labels),
        tuple(range(block)),
        matrices=tuple(matrices),
    )
    return _quotient_by_scalars(gl_type, scalar_matrix_coordinates(gl_type), f"Q({n})")


def periplectic(n: int) -> CatalogEntry:
    """P(n): {[[A,B],[C,-A^t]] : tr A = 0, B symmetric, C antisymmetric}."""
    block = n + 1
    size = 2 * block
    matrices: List[MatrixElement] = []
    parities: List[int] = []
    labels: List[str] = []

    def add(terms: Dict[Tuple[int, int], int], parity: int, label: str) -> None:
        # b_{i,i} doubles up on a single entry
        entries = Element()
        for key, value in terms.items():
            entries.iadd_coef(value, Element.unit(key))
        matrices.append(MatrixElement(size, size, entries))
        parities.append(parity)
        labels.append(label)

    for i in range(n):
        add(
            {(i, i): 1, (i + 1, i + 1): -1, (block + i + 1, block + i + 1): 1, (block + i, block + i): -1},
            EVEN,
            f"h_{{{i + 1}}}",
        )
    for i in range(block):
        for j in range(block):
            if i != j:
                add({(i, j): 1, (block + j, block + i): -1}, EVEN, f"a_{{{i + 1},{j + 1}}}")
    for i in range(block):
        for j in range(i, block):
            add({(i, block + j): 1, (j, block + i): 1}, ODD, f"b_{{{i + 1},{j + 1}}}")
    for i in range(block):
        for j in range(i + 1, block):
            add({(block + i, j): 1, (block + j, i): -1}, ODD, f"c_{{{i + 1},{j + 1}}}")

    algebra = algebra_from_matrices(f"P({n})", matrices, parities, labels)
    return CatalogEntry(algebra, tuple(range(n)), matrices=tuple(matrices))


# ---------------- D(2,1;alpha) ----------------

_SIGNS = (1, -1)
_ODD_VECTORS: Tuple[Tuple[int, int, int], ...] = tuple(product(_SIGNS, repeat=3))
_FIRST_ODD = 9


def _psi(s: int, t: int) -> int:
    """Invariant symplectic pairing on the 2-dimensional sl2-module, psi(v+, v-) = 1."""
    if s == t:
        return 0
    return 1 if s == 1 else -1


def _sl2_projection(s: int, t: int) -> Dict[str, int]:
    """(h, e, f) coordinates of w -> psi(v_t, w) v_s + psi(v_s, w) v_t."""
    column: Dict[Tuple[int, int], int] = {}
    for w in _SIGNS:
        for target, coeff in ((s, _psi(t, w)), (t, _psi(s, w))):
            if coeff:
                column[(target, w)] = column.get((target, w), 0) + coeff
    return {"h": column.get((1, 1), 0), "e": column.get((1, -1), 0), "f": column.get((-1, 1), 0)}


def _d21_brackets(sigma: Sequence[Fraction]) -> Dict[Tuple[int, int], Element]:
    brackets: Dict[Tuple[int, int], Element] = {}
    odd_index = {vector: _FIRST_ODD + pos for pos, vector in enumerate(_ODD_VECTORS)}

    for factor in range(3):
        h, e, f = 3 * factor, 3 * factor + 1, 3 * factor + 2
        brackets[(h, e)] = Element({e: Fraction(2)})
        brackets[(h, f)] = Element({f: Fraction(-2)})
        brackets[(e, f)] = Element({h: Fraction(1)})

        for vector, index in odd_index.items():
            s = vector[factor]
            brackets[(h, index)] = Element({index: Fraction(s)})
            flipped = odd_index[vector[:factor] + (-s,) + vector[factor + 1:]]
            if s == -1:
                brackets[(e, index)] = Element.unit(flipped)
            else:
                brackets[(f, index)] = Element.unit(flipped)

    for pos, u in enumerate(_ODD_VECTORS):
        for v in _ODD_VECTORS[pos:]:
            result = Element()
            for factor in range(3):
                pairing = 1
                for other in range(3):
                    if other != factor:
                        pairing *= _psi(u[other], v[other])
                if not pairing:
                    continue
                projection = _sl2_projection(u[factor], v[factor])
                for offset, key in enumerate(("h", "e", "f")):
                    if projection[key]:
                        result.iadd_coef(sigma[factor] * pairing * projection[key], Element.unit(3 * factor + offset))
            if result:
                brackets[(odd_index[u], odd_index[v])] = result
    return brackets


def _d21_labels() -> List[str]:
    labels = []
    for factor in range(1, 4):
        labels += [f"h_{{{factor}}}", f"g_{{2e{factor}}}", f"g_{{-2e{factor}}}"]
    for vector in _ODD_VECTORS:
        weight = {("e", k + 1): s for k, s in enumerate(vector)}
        labels.append(f"g_{{{format_weight(weight)}}}")
    return labels


@lru_cache(maxsize=1)
def d21_jacobi_normal() -> Tuple[Fraction, Fraction, Fraction]:
    """Normal c of the single linear condition c . sigma = 0 that Jacobi imposes on sigma."""
    parity = [EVEN] * 9 + [ODD] * 8
    units = []
    for factor in range(3):
        sigma = [Fraction(int(k == factor)) for k in range(3)]
        units.append(SuperAlgebra("D(2,1;unit)", parity, _d21_brackets(sigma)))

    constraints: List[Element] = []
    odd = range(_FIRST_ODD, _FIRST_ODD + len(_ODD_VECTORS))
    for i in odd:
        for j in odd:
            for k in odd:
                rows: Dict[int, Element] = {}
                for factor, algebra in enumerate(units):
                    for coord, value in jacobi_residual(algebra, i, j, k).items():
                        rows.setdefault(coord, Element()).iadd_coef(value, Element.unit(factor))
                constraints.extend(row for row in rows.values() if row)

    space = Subspace(3, constraints)
    if space.dim != 1:
        raise ConstructionError(f"Jacobi imposes {space.dim} conditions on the odd bracket coefficients, expected 1")
    normal = space.rows[0]
    coefficients = tuple(normal[factor] for factor in range(3))
    if any(c == 0 for c in coefficients):
        raise ConstructionError("Jacobi condition does not involve every sl2 factor")
    return coefficients


def exceptional_d21(alpha: Fraction) -> CatalogEntry:
    """D(2,1;alpha): sl2 + sl2 + sl2 acting on the triple tensor product of the 2-dimensional module."""
    normal = d21_jacobi_normal()
    targets = (Fraction(1), Fraction(alpha), -1 - Fraction(alpha))
    sigma = [targets[k] / normal[k] for k in range(3)]
    logger.debug(f"D(2,1;{alpha}): odd bracket coefficients {[str(s) for s in sigma]}")
    parity = [EVEN] * 9 + [ODD] * 8
    algebra = SuperAlgebra(f"D(2,1;{alpha})", parity, _d21_brackets(sigma), _d21_labels())
    return CatalogEntry(algebra, (0, 3, 6))


# ---------------- service ----------------

def _build(spec: FamilySpec) -> CatalogEntry:
    family, m, n = spec.family, spec.m, spec.n
    name = spec.display_name
    if family == Family.A:
        return special_linear(m + 1, n + 1, name=name)
    if family == Family.AQQ:
        return projective_special_linear(n)
    if family == Family.B:
        return orthosymplectic(2 * m + 1, n, name)
    if family == Family.C:
        return orthosymplectic(2, n - 1, name)
    if family == Family.D:
        return orthosymplectic(2 * m, n, name)
    if family == Family.P:
        return periplectic(n)
    if family == Family.Q:
        return queer(n)
    return exceptional_d21(spec.alpha)


class CatalogService:
    def construct(self, spec: FamilySpec, verify: bool = True) -> CatalogEntry:
        """Build the algebra named by ``spec``.

        Args:
            spec: validated family spec
            verify: run the superidentity scan and the simplicity check

        Returns:
            CatalogEntry with the algebra, its Cartan indices and the spec

        Raises:
            ConstructionError: the realization fails a superidentity or is not simple.
        """
        return _construct_cached(spec, verify)

    def construct_from_string(self, text: str, verify: bool = True) -> CatalogEntry:
        return self.construct(parse_spec_string(text), verify=verify)


@lru_cache(maxsize=64)
def _construct_cached(spec: FamilySpec, verify: bool) -> CatalogEntry:
    started = time.perf_counter()
    entry = _build(spec)
    algebra = entry.algebra
    if verify:
        violations = check_superidentities(algebra)
        if violations:
            first = violations[0]
            raise ConstructionError(
                f"{algebra.name}: {len(violations)} superidentity violations, first {first.kind} at {first.indices}"
            )
        if not is_simple(algebra):
            raise ConstructionError(f"{algebra.name} is not simple")
    log_solve_event(
        logger,
        "construct",
        algebra.name,
        dim=algebra.dim,
        duration_ms=round((time.perf_counter() - started) * 1000, 2),
    )
    return CatalogEntry(algebra, entry.cartan, spec, entry.matrices)


catalog_service = CatalogService()


def construct(spec: FamilySpec) -> CatalogEntry:
    return catalog_service.construct(spec)
