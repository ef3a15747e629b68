import warnings

import pytest

from modules.adic import simple_dim_tl
from modules.cells import green_cells
from modules.diagram import FamilyId
from modules.errors import UnsupportedError
from modules.families import FamilyInstance, cyclic_monoid, family_monoid, family_truncation, j_class_of_width, widths
from modules.linalg import FieldSpec, rank
from modules.representations import (annihilator, apex, cell_module, count_simples, defining_representation,
                                     diagram_gram_matrix, gram_matrix, gram_rank_dim, is_faithful, is_trivial_sum,
                                     regular_partition_count, regular_representation, ssdim, trivial_reps)

Q = FieldSpec(0)


def test_cell_module(tl4):
    cells = green_cells(tl4)
    j = j_class_of_width(tl4, cells, 2)
    rep = cell_module(tl4, cells.l_classes_in(j)[0], Q, cells)
    assert rep.dim == 3
    assert rep.is_homomorphism()
    assert apex(rep, cells) == j
    assert not is_trivial_sum(rep, cells)
    assert set(annihilator(rep)) >= set(cells.j_members(j_class_of_width(tl4, cells, 0)))


def test_trivial_representations(tl3):
    cells = green_cells(tl3)
    bottom, top = trivial_reps(tl3, Q, cells)
    assert bottom.is_homomorphism() and top.is_homomorphism()
    assert apex(bottom, cells) == cells.bottom_j
    assert apex(top, cells) == cells.top_j
    assert is_trivial_sum(bottom, cells) and is_trivial_sum(top, cells)


def test_faithful_representations(t3):
    defining = defining_representation(t3, Q)
    assert defining.dim == 3
    assert defining.is_homomorphism()
    assert is_faithful(defining)
    regular = regular_representation(cyclic_monoid(1, 2), FieldSpec(2))
    assert regular.is_homomorphism() and is_faithful(regular)
    assert not is_faithful(trivial_reps(t3, Q)[1])


def test_defining_representation_needs_maps(tl3):
    with pytest.raises(UnsupportedError):
        defining_representation(tl3, Q)


def test_planar_rook_gram_is_identity():
    monoid = family_monoid(FamilyInstance(FamilyId.PLANAR_ROOK, 3))
    cells = green_cells(monoid)
    p = gram_matrix(monoid, j_class_of_width(monoid, cells, 1), Q, cells)
    assert p.entries == ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def test_tl3_gram(tl3):
    cells = green_cells(tl3)
    p = gram_matrix(tl3, cells.top_j, Q, cells)
    assert p.rows == 2
    assert rank(p) == 1


def test_gram_needs_trivial_h(br4):
    cells = green_cells(br4)
    with pytest.raises(UnsupportedError):
        gram_matrix(br4, j_class_of_width(br4, cells, 2), Q, cells)
    with pytest.raises(UnsupportedError):
        diagram_gram_matrix(FamilyId.BRAUER, 4, 2)


@pytest.mark.parametrize("char", [0, 2, 3])
def test_gram_ranks_agree(tl5, char):
    field = FieldSpec(char)
    cells = green_cells(tl5)
    for k in widths(FamilyId.TL, 5):
        from_table = rank(gram_matrix(tl5, j_class_of_width(tl5, cells, k), field, cells))
        from_halves = rank(diagram_gram_matrix(FamilyId.TL, 5, k, field))
        assert from_table == from_halves == simple_dim_tl(5, k, field.adic_prime)


@pytest.mark.slow
def test_gram_oracle_up_to_ten():
    for char in (0, 2, 3):
        for n in range(1, 11):
            for k in range(n % 2, n + 1, 2):
                r = rank(diagram_gram_matrix(FamilyId.TL, n, k, FieldSpec(char)))
                assert r == simple_dim_tl(n, k, None if char == 0 else char), (char, n, k)


def test_ssdim():
    assert ssdim(FamilyId.TL, 6, 2) == 9
    assert ssdim(FamilyId.BRAUER, 4, 2) == 6
    assert ssdim(FamilyId.PLANAR_ROOK, 5, 2) == 10


def test_count_simples(t3, br4):
    cells = green_cells(t3)
    order = cells.ordered_js()
    for char, expected in ((0, [3, 2, 1]), (2, [2, 1, 1]), (3, [2, 2, 1])):
        counts = count_simples(t3, char, cells)
        assert [counts[j] for j in order] == expected
    br_cells = green_cells(br4)
    assert count_simples(br4, 0, br_cells)[j_class_of_width(br4, br_cells, 2)] == 2
    assert regular_partition_count(4, 2) == 2


@pytest.mark.parametrize('n', [4, 5, 6])
@pytest.mark.parametrize('p', [0, 2, 3])
def test_truncation_keeps_simple_dims(n, p):
    fi = FamilyInstance(FamilyId.TL, n)
    field = FieldSpec(p)
    full = family_monoid(fi)
    full_cells = green_cells(full)
    t = family_truncation(fi, max_width=n - 2)
    cells = green_cells(t.result)
    for k in widths(FamilyId.TL, n):
        if k > n - 2:
            continue
        before = gram_rank_dim(full, j_class_of_width(full, full_cells, k), field, full_cells)
        after = gram_rank_dim(t.result, j_class_of_width(t.result, cells, k), field, cells)
        assert before == after


def test_count_simples_warns_nothing(t3):
    cells = green_cells(t3)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        counts = count_simples(t3, 0, cells)
    assert sorted(counts.values(), reverse=True) == [3, 2, 1]
