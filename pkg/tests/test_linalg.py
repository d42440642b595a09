from fractions import Fraction

import pytest

from core.exceptions import ConstructionError
from core.linalg import Element, SpanSolver, Subspace, nullspace_basis, rank_by_sparsest


def vec(**coords):
    return Element((int(key[1:]), Fraction(value)) for key, value in coords.items())


def test_element_drops_zero_coefficients():
    x = Element({0: Fraction(1), 1: Fraction(2)})
    y = Element({1: Fraction(2)})
    assert x - y == Element({0: Fraction(1)})
    assert 1 not in (x - y)
    assert (x - x) == Element()


def test_subspace_is_reduced_echelon():
    space = Subspace(3, [vec(k0=1, k1=1), vec(k1=1, k2=1), vec(k0=1, k2=-1)])
    assert space.dim == 2
    assert space.pivots == (0, 1)
    first, second = space.rows
    assert first[0] == 1 and 1 not in first
    assert second[1] == 1 and 0 not in second


def test_subspace_equality_is_basis_independent():
    a = Subspace(3, [vec(k0=1, k1=2), vec(k2=3)])
    b = Subspace(3, [vec(k0=2, k1=4, k2=6), vec(k2=-1)])
    assert a == b
    assert a.contains(vec(k0=1, k1=2, k2=5))
    assert not a.contains(vec(k1=1))


def test_intersection_dim():
    a = Subspace.coordinate(4, [0, 1])
    b = Subspace(4, [vec(k1=1, k2=1), vec(k0=1)])
    assert a.intersection_dim(b) == 1


def test_span_solver_coordinates():
    solver = SpanSolver([vec(k0=1, k1=1), vec(k1=1)])
    assert solver.solve(vec(k0=2, k1=5)) == Element({0: Fraction(2), 1: Fraction(3)})
    assert solver.solve(vec(k2=1)) is None
    assert solver.solve(Element()) == Element()


def test_span_solver_rejects_dependent_vectors():
    with pytest.raises(ConstructionError, match="linearly dependent"):
        SpanSolver([vec(k0=1), vec(k0=2)])


def test_nullspace_basis_one_vector_per_free_column():
    rows = [vec(k0=1, k1=-1), vec(k1=1, k2=-1)]
    basis = nullspace_basis(rows, [0, 1, 2])
    assert basis == [Element({0: Fraction(1), 1: Fraction(1), 2: Fraction(1)})]


def test_rank_by_sparsest_agrees_with_subspace():
    rows = [vec(k0=1, k1=2, k3=1), vec(k1=1, k2=1), vec(k0=1, k1=3, k2=1, k3=1), vec(k3=4)]
    assert rank_by_sparsest(rows) == Subspace(4, rows).dim == 3
