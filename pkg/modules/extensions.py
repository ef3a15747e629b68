"""Roundedness, additive characters and extensions between the trivial representations"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional

import numpy as np

from modules.cells import CellStructure, green_cells, units
from modules.disjoint_set import DisjointSet
from modules.errors import ValidationError
from modules.linalg import FieldSpec, SparseRowReducer
from modules.monoid import FiniteMonoid

logger = logging.getLogger('cellgap')


@dataclass(frozen=True)
class Roundedness:
    left: bool
    right: bool
    null: bool
    left_classes: int
    right_classes: int

    @property
    def well(self) -> bool:
        return self.left and self.right and self.null


def _rounding_classes(table: np.ndarray, non_units: List[int]) -> int:
    """Classes of the closure of {ba ~ a : a, b non-units} on the non-units."""
    position = {x: i for i, x in enumerate(non_units)}
    forest = DisjointSet(len(non_units))
    cols = np.array(non_units)
    for a in non_units:
        for product in np.unique(table[cols, a]):
            forest.unite(position[int(product)], position[a])
    return forest.groups


def roundedness(monoid: FiniteMonoid, cells: Optional[CellStructure] = None) -> Roundedness:
    group = set(units(monoid, cells))
    non_units = [x for x in range(monoid.size) if x not in group]
    if not non_units:
        return Roundedness(True, True, True, 0, 0)
    t = monoid.table
    left_classes = _rounding_classes(t, non_units)
    right_classes = _rounding_classes(t.T, non_units)
    idx = np.array(non_units)
    products = np.unique(t[np.ix_(idx, idx)])
    null = bool(np.all(np.isin(idx, products)))
    return Roundedness(left_classes == 1, right_classes == 1, null, left_classes, right_classes)


class ExtCase(Enum):
    """Which trivial representation sits on each side of the extension."""
    TT = 'tt'
    BT = 'bt'
    TB = 'tb'
    BB = 'bb'


def _cocycle_rank(monoid: FiniteMonoid, field: FieldSpec, left: np.ndarray, right: np.ndarray) -> int:
    """
    Rank of the system f(xy) = left(x) f(y) + f(x) right(y) in the unknowns
    f(s), one row per pair (x, y).
    """
    m = monoid.size
    reducer = SparseRowReducer(field, m)
    t = monoid.table
    for x in range(m):
        for y in range(m):
            row = [(int(t[x, y]), 1)]
            if left[x]:
                row.append((y, -1))
            if right[y]:
                row.append((x, -1))
            reducer.add_row(row)
            if reducer.full:
                return reducer.rank
    return reducer.rank


def additive_hom_dim(monoid: FiniteMonoid, field: FieldSpec) -> int:
    """dim of {f : S -> K | f(ab) = f(a) + f(b)}."""
    ones = np.ones(monoid.size, dtype=bool)
    return monoid.size - _cocycle_rank(monoid, field, ones, ones)


def ext_dim(monoid: FiniteMonoid, field: FieldSpec, case: ExtCase,
            cells: Optional[CellStructure] = None) -> int:
    """
    dim Ext^1 between trivial representations: cocycles of the twisted
    equation modulo the coboundaries c (d_left - d_right), where d is the
    character of 1_b (tt uses 1_t on both sides).
    """
    if not isinstance(case, ExtCase):
        try:
            case = ExtCase(str(case).lower())
        except ValueError as e:
            raise ValidationError(f"Unknown Ext case: {case}") from e
    cells = cells or green_cells(monoid)
    bottom = np.zeros(monoid.size, dtype=bool)
    bottom[units(monoid, cells)] = True
    ones = np.ones(monoid.size, dtype=bool)
    left = bottom if case in (ExtCase.TB, ExtCase.BB) else ones
    right = bottom if case in (ExtCase.BT, ExtCase.BB) else ones
    cocycles = monoid.size - _cocycle_rank(monoid, field, left, right)
    coboundaries = int(np.any(left != right))
    logger.debug(f"{monoid.name} {case.value}: {cocycles} cocycles, {coboundaries} coboundaries")
    return cocycles - coboundaries
