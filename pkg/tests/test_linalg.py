from fractions import Fraction

import pytest
from hypothesis import given, strategies as st
from sympy import Matrix

from modules.disjoint_set import DisjointSet
from modules.errors import ValidationError
from modules.linalg import ExactMatrix, FieldSpec, SparseRowReducer, is_invertible, nullspace_dim, rank

small_matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r)))


def test_field_parse():
    assert FieldSpec.parse("Q") == FieldSpec(0)
    assert FieldSpec.parse("F_5") == FieldSpec(5)
    assert FieldSpec.parse(3) == FieldSpec(3)
    assert str(FieldSpec(7)) == "F_7"
    assert FieldSpec(0).adic_prime is None
    with pytest.raises(ValidationError):
        FieldSpec(4)
    with pytest.raises(ValidationError):
        FieldSpec.parse("reals")


def test_rank_depends_on_characteristic():
    rows = [[1, 1], [1, -1]]
    assert rank(ExactMatrix.from_rows(rows, FieldSpec(0))) == 2
    assert rank(ExactMatrix.from_rows(rows, FieldSpec(2))) == 1
    assert is_invertible(ExactMatrix.from_rows(rows, FieldSpec(3)))


@given(small_matrices)
def test_rational_rank_matches_sympy(rows):
    m = ExactMatrix.from_rows(rows, FieldSpec(0))
    assert rank(m) == Matrix(rows).rank()
    assert nullspace_dim(m) == len(rows[0]) - rank(m)


@given(small_matrices, st.sampled_from([0, 2, 3, 7]))
def test_sparse_reducer_matches_dense(rows, char):
    field = FieldSpec(char)
    reducer = SparseRowReducer(field, len(rows[0]))
    for row in rows:
        reducer.add_row((j, x) for j, x in enumerate(row) if x)
    assert reducer.rank == rank(ExactMatrix.from_rows(rows, field))
    for row in rows:
        assert reducer.contains(enumerate(row))


def test_reducer_reports_growth():
    reducer = SparseRowReducer(FieldSpec(0), 2)
    assert reducer.add_row([(0, 1), (1, 1)])
    assert not reducer.add_row([(0, 2), (1, 2)])
    assert reducer.add_row([(1, 1)])
    assert reducer.full


def test_matrix_product_and_permutation():
    field = FieldSpec(0)
    p = ExactMatrix.from_rows([[0, 1], [1, 0]], field)
    assert p.is_permutation()
    assert (p @ p) == ExactMatrix.identity(2, field)
    assert not ExactMatrix.from_rows([[2, 0], [0, 1]], field).is_permutation()
    assert ExactMatrix.zeros(2, 3, field).transpose().rows == 3


def test_dump_load():
    m = ExactMatrix.from_rows([[Fraction(1, 2), 0], [3, -1]], FieldSpec(0))
    assert ExactMatrix.load(m.dump(), FieldSpec(0)) == m
    with pytest.raises(ValidationError):
        ExactMatrix.load("2 2\n1 0\n", FieldSpec(0))
    with pytest.raises(ValidationError):
        ExactMatrix.load("1 1\n1/2\n", FieldSpec(5))


def test_disjoint_set():
    forest = DisjointSet(5)
    assert forest.unite(0, 3)
    assert not forest.unite(3, 0)
    forest.unite(1, 4)
    assert forest.groups == 3
    assert forest.same(4, 1)
    assert forest.labels() == [0, 1, 2, 0, 1]
    assert sorted(map(sorted, forest.to_list())) == [[0, 3], [1, 4], [2]]
