"""Sparse exact linear algebra over the rationals.

``Element`` is a sparse vector (key -> Fraction, zeros never stored).  Keys are
basis indices for algebra elements and (row, col) pairs for matrices; any
totally ordered key works.  ``Subspace`` keeps its basis in reduced echelon
form with the smallest key of each row as its pivot, which makes the basis
canonical for a fixed key order.
"""
from collections import Counter
from fractions import Fraction
from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Tuple, Union

from core.exceptions import ConstructionError

Scalar = Union[Fraction, int]


class Element(dict):
    """Sparse vector key -> Fraction.  Treated as immutable once built."""

    def __init__(self, data=()):
        super().__init__()
        self.iadd_coef(1, data)

    @classmethod
    def unit(cls, key: Hashable) -> "Element":
        return cls(((key, Fraction(1)),))

    def __getitem__(self, key):
        return self.get(key, Fraction(0))

    def iadd_coef(self, coef: Scalar, other) -> "Element":  # self += coef*other
        if coef == 0:
            return self
        items = other.items() if isinstance(other, dict) else other
        for key, value in items:
            if value == 0:
                continue
            value = Fraction(value) * coef
            total = self.get(key, 0) + value
            if total == 0:
                del self[key]
            else:
                self[key] = total
        return self

    def __add__(self, other: "Element") -> "Element":
        return Element(self).iadd_coef(1, other)

    def __sub__(self, other: "Element") -> "Element":
        return Element(self).iadd_coef(-1, other)

    def __neg__(self) -> "Element":
        return self.scaled(-1)

    def scaled(self, coef: Scalar) -> "Element":
        if coef == 0:
            return Element()
        return Element((key, value * coef) for key, value in self.items())

    def __mul__(self, coef: Scalar) -> "Element":
        return self.scaled(coef)

    def __rmul__(self, coef: Scalar) -> "Element":
        return self.scaled(coef)

    def leading_key(self):
        return min(self)

    def sorted_items(self) -> List[Tuple[Hashable, Fraction]]:
        return sorted(self.items())


class Subspace:
    """Subspace of a finite-dimensional coordinate space, in reduced echelon form."""

    def __init__(self, ambient_dim: int, vectors: Iterable[Element] = ()):
        self.ambient_dim = ambient_dim
        self._rows: Dict[Hashable, Element] = {}
        for vector in vectors:
            self._insert(vector)

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim)

    @classmethod
    def coordinate(cls, ambient_dim: int, keys: Iterable[Hashable]) -> "Subspace":
        return cls(ambient_dim, (Element.unit(key) for key in keys))

    def reduce(self, vector: Element) -> Element:
        """Residual of ``vector`` after elimination against the echelon rows."""
        residual = Element(vector)
        for pivot in [key for key in residual if key in self._rows]:
            residual.iadd_coef(-residual[pivot], self._rows[pivot])
        return residual

    def _insert(self, vector: Element) -> bool:
        residual = self.reduce(vector)
        if not residual:
            return False
        pivot = residual.leading_key()
        residual = residual.scaled(1 / residual[pivot])
        for row in self._rows.values():
            if pivot in row:
                row.iadd_coef(-row[pivot], residual)
        self._rows[pivot] = residual
        return True

    def contains(self, vector: Element) -> bool:
        return not self.reduce(vector)

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(row) for row in other.rows)

    def extended(self, vectors: Iterable[Element]) -> "Subspace":
        return Subspace(self.ambient_dim, list(self.rows) + list(vectors))

    def sum(self, other: "Subspace") -> "Subspace":
        return self.extended(other.rows)

    def intersection_dim(self, other: "Subspace") -> int:
        return self.dim + other.dim - self.sum(other).dim

    @property
    def dim(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> Tuple[Hashable, ...]:
        return tuple(sorted(self._rows))

    @property
    def rows(self) -> Tuple[Element, ...]:
        return tuple(Element(self._rows[pivot]) for pivot in self.pivots)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.rows == other.rows

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient_dim={self.ambient_dim}, pivots={list(self.pivots)})"


class SpanSolver:
    """Expresses vectors as exact combinations of a fixed linearly independent list."""

    def __init__(self, vectors: Sequence[Element]):
        self._rows: Dict[Hashable, Tuple[Element, Element]] = {}
        for index, vector in enumerate(vectors):
            reduced, combination = self._reduce(Element(vector), Element.unit(index))
            if not reduced:
                raise ConstructionError(f"basis vector {index} is linearly dependent on the previous ones")
            pivot = reduced.leading_key()
            scale = 1 / reduced[pivot]
            reduced, combination = reduced.scaled(scale), combination.scaled(scale)
            for row_vector, row_combination in self._rows.values():
                if pivot in row_vector:
                    coef = -row_vector[pivot]
                    row_vector.iadd_coef(coef, reduced)
                    row_combination.iadd_coef(coef, combination)
            self._rows[pivot] = (reduced, combination)

    def _reduce(self, vector: Element, combination: Element) -> Tuple[Element, Element]:
        for pivot in [key for key in vector if key in self._rows]:
            coef = vector[pivot]
            row_vector, row_combination = self._rows[pivot]
            vector.iadd_coef(-coef, row_vector)
            combination.iadd_coef(-coef, row_combination)
        return vector, combination

    def solve(self, target: Element) -> Optional[Element]:
        """Coordinates of ``target`` over the basis, or None if it is outside the span."""
        residual, combination = self._reduce(Element(target), Element())
        if residual:
            return None
        return combination.scaled(-1)


def nullspace_basis(rows: Iterable[Element], columns: Sequence[Hashable]) -> List[Element]:
    """Basis of {x : row . x = 0 for all rows}, one vector per free column.

    Free columns are visited in the order of ``columns``; each basis vector
    has coefficient 1 on its free column.
    """
    echelon = Subspace(len(columns), rows)
    echelon_rows = {pivot: row for pivot, row in zip(echelon.pivots, echelon.rows)}
    basis = []
    for free in columns:
        if free in echelon_rows:
            continue
        vector = Element.unit(free)
        for pivot, row in echelon_rows.items():
            if free in row:
                vector.iadd_coef(-row[free], Element.unit(pivot))
        basis.append(vector)
    return basis


def rank_by_sparsest(rows: Iterable[Element]) -> int:
    """Rank by Gauss-Jordan that always pivots on the sparsest remaining column.

    Ties go to the largest column key, so the elimination order differs from
    the leading-key order used by ``Subspace``.
    """
    active = [Element(row) for row in rows if row]
    rank = 0
    while active:
        counts = Counter(key for row in active for key in row)
        column = min(counts, key=lambda key: (counts[key], _Descending(key)))
        holders = [row for row in active if column in row]
        pivot_row = min(holders, key=len)
        remaining = []
        for row in active:
            if row is pivot_row:
                continue
            if column in row:
                row.iadd_coef(-row[column] / pivot_row[column], pivot_row)
            if row:
                remaining.append(row)
        active = remaining
        rank += 1
    return rank


class _Descending:
    __slots__ = ("key",)

    def __init__(self, key):
        self.key = key

    def __lt__(self, other: "_Descending") -> bool:
        return other.key < self.key

    def __eq__(self, other) -> bool:
        return self.key == other.key
