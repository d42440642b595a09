"""Root systems of the basic classical families over the e/d coordinates.

Each table lists the even roots, the odd roots and one simple system, as
integer vectors in the order of ``RootTable.coordinates``.  Coordinates are
("e", i) and ("d", j), matching the weight labels of the catalog.
"""
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from core.superalgebra import EVEN, ODD
from schemas.family import Family, FamilySpec

Coordinate = Tuple[str, int]
Vector = Tuple[int, ...]


@dataclass(frozen=True)
class RootTable:
    coordinates: Tuple[Coordinate, ...]
    even: Tuple[Vector, ...]
    odd: Tuple[Vector, ...]
    simple: Tuple[Tuple[Vector, int], ...]

    @property
    def rank(self) -> int:
        return len(self.simple)

    def all_roots(self) -> List[Tuple[Vector, int]]:
        return [(root, EVEN) for root in self.even] + [(root, ODD) for root in self.odd]


class _Builder:
    def __init__(self, coordinates: List[Coordinate]):
        self.coordinates = tuple(coordinates)
        self._position = {coord: k for k, coord in enumerate(coordinates)}
        self.even: List[Vector] = []
        self.odd: List[Vector] = []
        self.simple: List[Tuple[Vector, int]] = []

    def vector(self, terms: Dict[Coordinate, int]) -> Vector:
        values = [0] * len(self.coordinates)
        for coord, coeff in terms.items():
            values[self._position[coord]] += coeff
        return tuple(values)

    def pm(self, parity: int, *terms: Dict[Coordinate, int]) -> None:
        """Add +/- the root sum(terms)."""
        for root in terms:
            vec = self.vector(root)
            target = self.even if parity == EVEN else self.odd
            target.extend([vec, tuple(-c for c in vec)])

    def simple_root(self, parity: int, terms: Dict[Coordinate, int]) -> None:
        self.simple.append((self.vector(terms), parity))

    def table(self) -> RootTable:
        return RootTable(self.coordinates, tuple(self.even), tuple(self.odd), tuple(self.simple))


def _e(i: int) -> Coordinate:
    return ("e", i)


def _d(j: int) -> Coordinate:
    return ("d", j)


def _pairs(letter_a: str, count_a: int, letter_b: str, count_b: int, same: bool):
    for i in range(1, count_a + 1):
        for j in range(i + 1 if same else 1, count_b + 1):
            yield (letter_a, i), (letter_b, j)


def _table_a(m: int, n: int) -> RootTable:
    p, q = m + 1, n + 1
    b = _Builder([_e(i) for i in range(1, p + 1)] + [_d(j) for j in range(1, q + 1)])
    for x, y in _pairs("e", p, "e", p, same=True):
        b.pm(EVEN, {x: 1, y: -1})
    for x, y in _pairs("d", q, "d", q, same=True):
        b.pm(EVEN, {x: 1, y: -1})
    for x, y in _pairs("e", p, "d", q, same=False):
        b.pm(ODD, {x: 1, y: -1})
    for i in range(1, p):
        b.simple_root(EVEN, {_e(i): 1, _e(i + 1): -1})
    b.simple_root(ODD, {_e(p): 1, _d(1): -1})
    for j in range(1, q):
        b.simple_root(EVEN, {_d(j): 1, _d(j + 1): -1})
    return b.table()


def _symplectic_even(b: _Builder, letter: str, count: int) -> None:
    for j in range(1, count + 1):
        b.pm(EVEN, {(letter, j): 2})
    for x, y in _pairs(letter, count, letter, count, same=True):
        b.pm(EVEN, {x: 1, y: 1}, {x: 1, y: -1})


def _orthogonal_even(b: _Builder, count: int) -> None:
    for x, y in _pairs("e", count, "e", count, same=True):
        b.pm(EVEN, {x: 1, y: 1}, {x: 1, y: -1})


def _table_b(m: int, n: int) -> RootTable:
    b = _Builder([_e(i) for i in range(1, m + 1)] + [_d(j) for j in range(1, n + 1)])
    _orthogonal_even(b, m)
    for i in range(1, m + 1):
        b.pm(EVEN, {_e(i): 1})
    _symplectic_even(b, "d", n)
    for j in range(1, n + 1):
        b.pm(ODD, {_d(j): 1})
    for x, y in _pairs("e", m, "d", n, same=False):
        b.pm(ODD, {x: 1, y: 1}, {x: 1, y: -1})

    for j in range(1, n):
        b.simple_root(EVEN, {_d(j): 1, _d(j + 1): -1})
    if m == 0:
        b.simple_root(ODD, {_d(n): 1})
    else:
        b.simple_root(ODD, {_d(n): 1, _e(1): -1})
        for i in range(1, m):
            b.simple_root(EVEN, {_e(i): 1, _e(i + 1): -1})
        b.simple_root(EVEN, {_e(m): 1})
    return b.table()


def _table_c(n: int) -> RootTable:
    # osp(2|2n-2): one orthogonal coordinate e1, symplectic d1..d_{n-1}
    r = n - 1
    b = _Builder([_e(1)] + [_d(j) for j in range(1, r + 1)])
    _symplectic_even(b, "d", r)
    for j in range(1, r + 1):
        b.pm(ODD, {_e(1): 1, _d(j): 1}, {_e(1): 1, _d(j): -1})
    for j in range(1, r):
        b.simple_root(EVEN, {_d(j): 1, _d(j + 1): -1})
    b.simple_root(ODD, {_d(r): 1, _e(1): -1})
    b.simple_root(ODD, {_d(r): 1, _e(1): 1})
    return b.table()


def _table_d(m: int, n: int) -> RootTable:
    b = _Builder([_e(i) for i in range(1, m + 1)] + [_d(j) for j in range(1, n + 1)])
    _orthogonal_even(b, m)
    _symplectic_even(b, "d", n)
    for x, y in _pairs("e", m, "d", n, same=False):
        b.pm(ODD, {x: 1, y: 1}, {x: 1, y: -1})
    for i in range(1, m):
        b.simple_root(EVEN, {_e(i): 1, _e(i + 1): -1})
    b.simple_root(ODD, {_e(m): 1, _d(1): -1})
    for j in range(1, n):
        b.simple_root(EVEN, {_d(j): 1, _d(j + 1): -1})
    b.simple_root(EVEN, {_d(n): 2})
    return b.table()


def _table_d21() -> RootTable:
    b = _Builder([_e(1), _e(2), _e(3)])
    for i in (1, 2, 3):
        b.pm(EVEN, {_e(i): 2})
    for s2 in (1, -1):
        for s3 in (1, -1):
            b.pm(ODD, {_e(1): 1, _e(2): s2, _e(3): s3})
    b.simple_root(ODD, {_e(1): 1, _e(2): 1, _e(3): 1})
    b.simple_root(EVEN, {_e(1): -2})
    b.simple_root(EVEN, {_e(2): -2})
    return b.table()


def root_table(spec: FamilySpec) -> Optional[RootTable]:
    """Table for ``spec``, or None when the family has no table over independent coordinates."""
    if spec.family == Family.A:
        return _table_a(spec.m, spec.n)
    if spec.family == Family.B:
        return _table_b(spec.m, spec.n)
    if spec.family == Family.C:
        return _table_c(spec.n)
    if spec.family == Family.D:
        return _table_d(spec.m, spec.n)
    if spec.family == Family.D21:
        return _table_d21()
    return None
