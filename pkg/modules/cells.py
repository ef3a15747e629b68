"""Green's relations and cell structure of finite monoids"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Tuple

import numpy as np

from modules.disjoint_set import DisjointSet
from modules.errors import AmbiguityError, ValidationError
from modules.monoid import FiniteMonoid

logger = logging.getLogger('cellgap')


def _class_ids(keys: List[bytes]) -> np.ndarray:
    seen: Dict[bytes, int] = {}
    return np.array([seen.setdefault(key, len(seen)) for key in keys], dtype=np.int64)


def _first_occurrence(labels: List[int]) -> np.ndarray:
    seen: Dict[int, int] = {}
    return np.array([seen.setdefault(x, len(seen)) for x in labels], dtype=np.int64)


@dataclass(frozen=True, eq=False)
class CellStructure:
    """
    Class ids per element for the four Green's relations of a monoid.

    j_leq[i, k] is True iff J-class i lies below J-class k, where the unit
    generates the bottom class and a <= b means b is in SaS.
    """
    monoid: FiniteMonoid
    l_class: np.ndarray
    r_class: np.ndarray
    j_class: np.ndarray
    h_class: np.ndarray
    j_leq: np.ndarray
    idempotent: np.ndarray

    @property
    def n_j(self) -> int:
        return int(self.j_class.max()) + 1

    def members(self, labels: np.ndarray, cls: int) -> List[int]:
        return [int(x) for x in np.nonzero(labels == cls)[0]]

    def j_members(self, j: int) -> List[int]:
        return self.members(self.j_class, j)

    def h_members(self, x: int) -> List[int]:
        return self.members(self.h_class, int(self.h_class[x]))

    def l_classes_in(self, j: int) -> List[int]:
        return sorted({int(self.l_class[x]) for x in self.j_members(j)})

    def r_classes_in(self, j: int) -> List[int]:
        return sorted({int(self.r_class[x]) for x in self.j_members(j)})

    def j_lt(self, i: int, k: int) -> bool:
        return i != k and bool(self.j_leq[i, k])

    @cached_property
    def idempotent_js(self) -> List[int]:
        return sorted({int(self.j_class[e]) for e in np.nonzero(self.idempotent)[0]})

    def is_idempotent_j(self, j: int) -> bool:
        return j in self.idempotent_js

    def idempotent_in(self, j: int) -> int:
        for x in self.j_members(j):
            if self.idempotent[x]:
                return x
        raise ValidationError(f"J-class {j} contains no idempotent")

    @property
    def bottom_j(self) -> int:
        return int(self.j_class[self.monoid.unit])

    @cached_property
    def top_j(self) -> int:
        tops = [j for j in range(self.n_j) if not any(self.j_lt(j, k) for k in range(self.n_j))]
        if len(tops) != 1:
            raise AmbiguityError(f"{self.monoid.name} has {len(tops)} maximal J-classes")
        return tops[0]

    def ordered_js(self) -> List[int]:
        """J-classes from the bottom up, by the number of classes below them."""
        return sorted(range(self.n_j), key=lambda j: (int(self.j_leq[:, j].sum()), j))

    def j_order_is_total(self) -> bool:
        return bool(np.all(self.j_leq | self.j_leq.T))

    def j_of(self, x: int) -> int:
        return int(self.j_class[x])

    def group_of(self, e: int) -> FiniteMonoid:
        """The maximal subgroup H(e) as its own table."""
        if not self.idempotent[e]:
            raise ValidationError(f"{self.monoid.labels[e]} is not idempotent")
        return self.monoid.submonoid_table(self.h_members(e), e, f"H({self.monoid.labels[e]})")

    def h_size(self, j: int) -> int:
        x = self.j_members(j)[0]
        return len(self.h_members(x))

    def describe(self, j: int) -> str:
        x = self.j_members(j)[0]
        return self.monoid.labels[x]


def green_cells(monoid: FiniteMonoid) -> CellStructure:
    t = monoid.table
    m = monoid.size

    def mask_key(values: np.ndarray) -> bytes:
        mask = np.zeros(m, dtype=bool)
        mask[values] = True
        return np.packbits(mask).tobytes()

    # a L b iff Sa = Sb; a R b iff aS = bS
    l_class = _class_ids([mask_key(t[:, a]) for a in range(m)])
    r_class = _class_ids([mask_key(t[a, :]) for a in range(m)])

    # D = J in a finite monoid
    forest = DisjointSet(m)
    first_l: Dict[int, int] = {}
    first_r: Dict[int, int] = {}
    for a in range(m):
        forest.unite(a, first_l.setdefault(int(l_class[a]), a))
        forest.unite(a, first_r.setdefault(int(r_class[a]), a))
    j_class = _first_occurrence(forest.labels())

    h_keys: Dict[Tuple[int, int], int] = {}
    h_class = np.array([h_keys.setdefault((int(l_class[a]), int(r_class[a])), len(h_keys))
                        for a in range(m)], dtype=np.int64)

    n_j = int(j_class.max()) + 1
    ideals = np.zeros((n_j, m), dtype=bool)
    for j in range(n_j):
        a = int(np.nonzero(j_class == j)[0][0])
        left = np.unique(t[:, a])
        ideals[j, np.unique(t[left, :])] = True
    # outside[k, i] = |ideal_k minus ideal_i|
    outside = ideals.astype(np.int64) @ (~ideals).T.astype(np.int64)
    j_leq = (outside == 0).T

    idempotent = t[np.arange(m), np.arange(m)] == np.arange(m)
    logger.debug(f"{monoid.name}: {n_j} J-classes, {len(h_keys)} H-classes")
    return CellStructure(monoid, l_class, r_class, j_class, h_class, j_leq, idempotent)


def units(monoid: FiniteMonoid, cells: Optional[CellStructure] = None) -> List[int]:
    cells = cells or green_cells(monoid)
    return cells.j_members(cells.bottom_j)


def invertible_elements(monoid: FiniteMonoid) -> List[int]:
    """{g : gh = hg = 1 for some h}, straight from the table."""
    t = monoid.table
    return [g for g in range(monoid.size)
            if np.any((t[g, :] == monoid.unit) & (t[:, g] == monoid.unit))]


def _inverses(group: FiniteMonoid) -> np.ndarray:
    return np.argmax(group.table == group.unit, axis=1)


def conjugacy_class_count(group: FiniteMonoid) -> int:
    t = group.table
    size = group.size
    inverse = [int(i) for i in _inverses(group)]
    forest = DisjointSet(size)
    for g in range(size):
        for x in range(size):
            forest.unite(x, int(t[t[g, x], inverse[g]]))
    return forest.groups


def linear_character_count(group: FiniteMonoid) -> int:
    """|G / [G, G]|, the number of one-dimensional complex representations of a group."""
    t = group.table
    inverse = _inverses(group)
    commutators = {int(c) for c in np.unique(t[t[t, inverse[:, None]], inverse[None, :]])}
    derived = {group.unit} | commutators
    frontier = list(derived)
    while frontier:
        reached = []
        for a in frontier:
            for c in commutators:
                b = int(t[a, c])
                if b not in derived:
                    derived.add(b)
                    reached.append(b)
        frontier = reached
    return group.size // len(derived)


def is_abelian(group: FiniteMonoid) -> bool:
    return bool(np.array_equal(group.table, group.table.T))


@dataclass(frozen=True)
class PeriodInfo:
    index: int
    period: int
    h_cell: Tuple[int, ...]
    idempotent: int

    @property
    def h_order(self) -> int:
        return len(self.h_cell)

    @property
    def divides(self) -> bool:
        return self.h_order % self.period == 0


def index_period(monoid: FiniteMonoid, a: int, cells: Optional[CellStructure] = None) -> PeriodInfo:
    """
    Index and period of a, plus the idempotent H-cell containing the
    eventual powers a^s, s >= index.
    """
    cells = cells or green_cells(monoid)
    seen: Dict[int, int] = {}
    x, s = a, 1
    while x not in seen:
        seen[x] = s
        x = monoid.mul(x, a)
        s += 1
    index = seen[x]
    period = s - index
    # the unique idempotent among a^index .. a^(index+period-1)
    k = index + (-index) % period
    e = monoid.power(a, k)
    info = PeriodInfo(index, period, tuple(cells.h_members(e)), e)
    if not info.divides:
        logger.error(f"Period {period} of {monoid.labels[a]} does not divide |H(e)| = {info.h_order}")
    return info


def is_admissible(monoid: FiniteMonoid, cells: Optional[CellStructure] = None, side: str = 'left') -> bool:
    """
    Left: any two elements a, b of one L-class satisfy a = cb for some c in
    their J-cell. Right is the mirror statement on R-classes; 'both' asks for both.
    """
    if side == 'both':
        return is_admissible(monoid, cells, 'left') and is_admissible(monoid, cells, 'right')
    if side not in ('left', 'right'):
        raise ValidationError(f"Unknown admissibility side: {side}")
    cells = cells or green_cells(monoid)
    t = monoid.table if side == 'left' else monoid.table.T
    labels = cells.l_class if side == 'left' else cells.r_class
    for j in range(cells.n_j):
        j_elems = np.array(cells.j_members(j))
        classes = cells.l_classes_in(j) if side == 'left' else cells.r_classes_in(j)
        for cls in classes:
            members = np.nonzero(labels == cls)[0]
            for b in members:
                if not np.all(np.isin(members, t[j_elems, b])):
                    return False
    return True


def cl(monoid: FiniteMonoid, cells: Optional[CellStructure] = None) -> int:
    """Sum over idempotent J-cells of the class number of H(e)."""
    cells = cells or green_cells(monoid)
    return sum(conjugacy_class_count(cells.group_of(cells.idempotent_in(j))) for j in cells.idempotent_js)


def trivial_faithful_possible(monoid: FiniteMonoid, cells: Optional[CellStructure] = None) -> bool:
    cells = cells or green_cells(monoid)
    if len(cells.idempotent_js) > 2:
        return False
    return all(cells.h_size(j) == 1 for j in cells.idempotent_js)


@dataclass(frozen=True)
class CellSize:
    j: int
    l_count: int
    r_count: int
    h_size: int
    size: int

    @property
    def l_size(self) -> int:
        return self.r_count * self.h_size

    @property
    def r_size(self) -> int:
        return self.l_count * self.h_size


def cell_sizes(cells: CellStructure) -> List[CellSize]:
    """
    Per J-class counts. The identity |J| = #L * #R * |H| is checked; the
    product |L| * |R| only equals |J| when H is trivial and is reported
    when it does not.
    """
    out = []
    for j in range(cells.n_j):
        entry = CellSize(j, len(cells.l_classes_in(j)), len(cells.r_classes_in(j)),
                         cells.h_size(j), len(cells.j_members(j)))
        if entry.l_count * entry.r_count * entry.h_size != entry.size:
            logger.error(f"{cells.monoid.name}: J-class {j} violates |J| = #L*#R*|H|")
        if entry.l_size * entry.r_size != entry.size:
            logger.warning(f"{cells.monoid.name}: J-class {j} has |L|*|R| = {entry.l_size * entry.r_size}"
                           f" but |J| = {entry.size}")
        out.append(entry)
    return out


@dataclass(frozen=True)
class Truncation:
    base: FiniteMonoid
    low: Optional[int]
    high: Optional[int]
    result: FiniteMonoid
    kept: Tuple[int, ...]  # base index of each kept result element
    zero: Optional[int]
    adjoined_unit: Optional[int]

    def image(self, x: int) -> int:
        """Result index of a base element that survived."""
        return self.kept.index(x)


def truncate(monoid: FiniteMonoid, low: Optional[int] = None, high: Optional[int] = None,
             cells: Optional[CellStructure] = None) -> Truncation:
    """
    Keep the elements whose J-class is >= low, send the classes strictly
    above high to an adjoined zero, and adjoin a fresh unit when low is set.
    New elements are appended after the kept ones, zero first.
    """
    if low is None and high is None:
        return Truncation(monoid, None, None, monoid, tuple(range(monoid.size)), None, None)
    cells = cells or green_cells(monoid)
    for cls in (low, high):
        if cls is not None and not 0 <= cls < cells.n_j:
            raise ValidationError(f"No J-class {cls} in {monoid.name}")
    if low is not None and low == cells.bottom_j:
        raise ValidationError("The lower J-class must not contain the unit")
    if low is not None and high is not None and not cells.j_leq[low, high]:
        raise ValidationError(f"J-class {low} is not below J-class {high}")

    j = cells.j_class
    keep = np.ones(monoid.size, dtype=bool)
    if low is not None:
        keep &= cells.j_leq[low, j]
    collapsed = np.zeros(monoid.size, dtype=bool)
    if high is not None:
        collapsed = cells.j_leq[high, j] & (j != high)
    kept = [int(x) for x in np.nonzero(keep & ~collapsed)[0]]

    size = len(kept)
    zero = size if high is not None else None
    unit = size + (zero is not None) if low is not None else None
    total = size + (zero is not None) + (unit is not None)

    position = np.full(monoid.size, -1, dtype=np.int64)
    position[kept] = np.arange(size)
    if zero is not None:
        position[collapsed] = zero

    table = np.empty((total, total), dtype=np.int64)
    if size:
        table[:size, :size] = position[monoid.table[np.ix_(kept, kept)]]
    if zero is not None:
        table[zero, :] = zero
        table[:, zero] = zero
    if unit is not None:
        table[unit, :] = np.arange(total)
        table[:, unit] = np.arange(total)
    if np.any(table < 0):
        raise ValidationError("Truncation is not closed under multiplication")

    labels = [monoid.labels[x] for x in kept]
    if zero is not None:
        labels.append('0')
    if unit is not None:
        labels.append('1′')
    else:
        unit_index = int(position[monoid.unit])
    elements = None
    if monoid.elements is not None:
        elements = tuple(monoid.elements[x] for x in kept) + (('0',) if zero is not None else ()) \
            + (('1′',) if unit is not None else ())
    bounds = f"{'' if low is None else f'>={low}'}{'' if high is None else f'<={high}'}"
    result = FiniteMonoid(table, unit if unit is not None else unit_index, tuple(labels),
                          f"{monoid.name}[{bounds}]", elements)
    return Truncation(monoid, low, high, result, tuple(kept), zero, unit)
