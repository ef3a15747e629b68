import logging
from functools import lru_cache

import pytest

from modules.cells import (cell_sizes, cl, green_cells, index_period, invertible_elements, is_admissible,
                           linear_character_count, trivial_faithful_possible, truncate, units)
from modules.diagram import Diagram, FamilyId, cup_cap, star, transposition
from modules.errors import ValidationError
from modules.families import (FamilyInstance, cyclic_monoid, family_monoid, family_truncation, j_class_of_width,
                              widths)


def _sizes(monoid):
    cells = green_cells(monoid)
    return [len(cells.j_members(j)) for j in cells.ordered_js()]


def test_j_cell_sizes(tl3, tl4, t3):
    assert _sizes(tl3) == [1, 4]
    assert _sizes(tl4) == [1, 9, 4]
    assert _sizes(t3) == [6, 18, 3]


def test_tl_order_is_total(tl5):
    cells = green_cells(tl5)
    assert cells.n_j == 3
    assert cells.j_order_is_total()
    assert cells.idempotent_js == sorted(range(3))
    top = cells.top_j
    assert tl5.elements[cells.j_members(top)[0]].width == 1


FAMILY_CELLS = [(FamilyId.TL, 5), (FamilyId.MOTZKIN, 3), (FamilyId.BRAUER, 4), (FamilyId.PLANAR_ROOK, 3),
                (FamilyId.ROOK, 3), (FamilyId.ROOK_BRAUER, 3), (FamilyId.PLANAR_PARTITION, 3),
                (FamilyId.PARTITION, 2), (FamilyId.SYMMETRIC, 3)]


@lru_cache(maxsize=None)
def _family_cells(family, n):
    monoid = family_monoid(FamilyInstance(family, n))
    return monoid, green_cells(monoid)


@pytest.mark.parametrize("family,n", FAMILY_CELLS)
def test_j_order_is_total(family, n):
    _, cells = _family_cells(family, n)
    assert cells.j_order_is_total()


@pytest.mark.parametrize("family,n", FAMILY_CELLS)
def test_j_cells_are_widths(family, n):
    monoid, cells = _family_cells(family, n)
    cell_widths = [{monoid.elements[x].width for x in cells.j_members(j)} for j in cells.ordered_js()]
    assert all(len(w) == 1 for w in cell_widths)
    # the unit cell has every strand, the top cell the fewest
    assert [w.pop() for w in cell_widths] == sorted(widths(family, n), reverse=True)


@pytest.mark.parametrize("family,n", FAMILY_CELLS)
def test_star_swaps_left_and_right_cells(family, n):
    monoid, cells = _family_cells(family, n)
    r_cells = {frozenset(cells.members(cells.r_class, r)) for r in set(cells.r_class.tolist())}
    for l in set(cells.l_class.tolist()):
        image = frozenset(monoid.index_of(star(monoid.elements[x])) for x in cells.members(cells.l_class, l))
        assert image in r_cells


def test_units(t3, br4):
    assert len(units(t3)) == 6
    assert sorted(units(t3)) == sorted(invertible_elements(t3))
    assert len(units(br4)) == 24


def test_brauer_h_cells(br4):
    cells = green_cells(br4)
    assert cells.h_size(j_class_of_width(br4, cells, 2)) == 2
    assert cells.h_size(j_class_of_width(br4, cells, 0)) == 1
    e = br4.index_of(cup_cap(4, 0))
    assert cells.group_of(e).is_group()
    with pytest.raises(ValidationError):
        cells.group_of(br4.index_of(transposition(4, 0)))


def test_cell_size_identity(t3, caplog):
    with caplog.at_level(logging.WARNING, logger='cellgap'):
        sizes = cell_sizes(green_cells(t3))
    middle = [s for s in sizes if s.size == 18][0]
    assert (middle.l_count, middle.r_count, middle.h_size) == (3, 3, 2)
    assert middle.l_size * middle.r_size == 36
    assert "|L|*|R| = 36" in caplog.text
    assert "violates" not in caplog.text


def test_linear_characters(t3, br4):
    cells = green_cells(t3)
    assert linear_character_count(cells.group_of(t3.unit)) == 2
    assert linear_character_count(cyclic_monoid(0, 12)) == 12
    assert linear_character_count(green_cells(br4).group_of(br4.unit)) == 2


def test_class_number(t3, tl4):
    # S_3, S_2 and the trivial group
    assert cl(t3) == 3 + 2 + 1
    assert cl(tl4) == 3
    assert trivial_faithful_possible(family_monoid(FamilyInstance(FamilyId.TL, 2)))
    assert not trivial_faithful_possible(tl4)


def test_admissible(tl4, t3):
    assert is_admissible(tl4, side='both')
    assert is_admissible(cyclic_monoid(0, 5))
    with pytest.raises(ValidationError):
        is_admissible(t3, side='up')


def test_index_period():
    c = cyclic_monoid(3, 2)
    info = index_period(c, c.index_of(1))
    assert (info.index, info.period, info.h_order) == (3, 2, 2)
    assert info.divides
    assert c.labels[info.idempotent] == "a^4"


def test_index_period_in_brauer(br4):
    cycle = Diagram.from_blocks(4, [(0, 5), (1, 6), (2, 7), (3, 4)])
    info = index_period(br4, br4.index_of(cycle))
    assert (info.index, info.period, info.h_order) == (1, 4, 24)


def test_truncation_keeps_upper_cells():
    fi = FamilyInstance(FamilyId.TL, 5)
    t = family_truncation(fi, max_width=3)
    assert t.result.size == 41 + 1
    assert t.zero is None and t.adjoined_unit == t.result.size - 1
    assert t.result.labels[t.adjoined_unit] == "1′"
    assert t.result.check_associative()
    assert t.result.name == "TL_5,<=3"
    assert t.image(t.kept[5]) == 5


def test_truncation_with_zero():
    t = family_truncation(FamilyInstance(FamilyId.TL, 5), max_width=3, min_width=3)
    # the 16 diagrams of width 3, a zero and a unit
    assert t.result.size == 18
    assert t.result.labels[t.zero] == "0"
    zero = t.zero
    assert all(t.result.mul(zero, x) == zero for x in range(t.result.size))
    assert _sizes(t.result)[0] == 1


def test_truncation_rejects_bad_bounds(tl4):
    cells = green_cells(tl4)
    with pytest.raises(ValidationError):
        truncate(tl4, low=cells.bottom_j)
    with pytest.raises(ValidationError):
        truncate(tl4, low=cells.n_j)
    with pytest.raises(ValidationError):
        truncate(tl4, low=cells.top_j, high=j_class_of_width(tl4, cells, 2))
