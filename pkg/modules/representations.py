"""Matrix representations of finite monoids and the cell-theoretic dimension data"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from math import factorial
from typing import Dict, List, Optional, Sequence, Tuple

from sympy.functions.combinatorial.numbers import partition
from sympy.utilities.iterables import partitions

from modules.cells import CellStructure, conjugacy_class_count, green_cells, is_abelian, units
from modules.diagram import FAMILY_RULES, Diagram, FamilyId, star
from modules.errors import AmbiguityError, UnsupportedError, ValidationError
from modules.families import h_class_size, half_diagrams, l_class_size, pair_halves
from modules.linalg import ExactMatrix, FieldSpec, rank
from modules.monoid import FiniteMonoid

logger = logging.getLogger('cellgap')


@dataclass(frozen=True, eq=False)
class Representation:
    monoid: FiniteMonoid
    field: FieldSpec
    dim: int
    matrices: Tuple[ExactMatrix, ...]  # one per element, in monoid order

    def __post_init__(self) -> None:
        if len(self.matrices) != self.monoid.size:
            raise ValidationError(f"Expected {self.monoid.size} matrices, got {len(self.matrices)}")

    def act(self, s: int) -> ExactMatrix:
        return self.matrices[s]

    def is_homomorphism(self) -> bool:
        """rho(1) = I and rho(ab) = rho(a) rho(b) for all pairs."""
        if self.matrices[self.monoid.unit] != ExactMatrix.identity(self.dim, self.field):
            return False
        m = self.monoid.size
        for a in range(m):
            for b in range(m):
                if self.matrices[self.monoid.mul(a, b)] != self.matrices[a] @ self.matrices[b]:
                    return False
        return True


def _action_matrix(images: Sequence[Optional[int]], dim: int, field: FieldSpec) -> ExactMatrix:
    """Column j carries a 1 in row images[j], or is zero when images[j] is None."""
    rows = [[0] * dim for _ in range(dim)]
    for j, i in enumerate(images):
        if i is not None:
            rows[i][j] = 1
    return ExactMatrix.from_rows(rows, field, cols=dim)


def cell_module(monoid: FiniteMonoid, l_class: int, field: FieldSpec,
                cells: Optional[CellStructure] = None) -> Representation:
    """Basis the L-class; s.l = sl when sl stays in the class, 0 otherwise."""
    cells = cells or green_cells(monoid)
    basis = cells.members(cells.l_class, l_class)
    if not basis:
        raise ValidationError(f"No L-class {l_class} in {monoid.name}")
    position = {x: i for i, x in enumerate(basis)}
    matrices = tuple(
        _action_matrix([position.get(monoid.mul(s, l)) for l in basis], len(basis), field)
        for s in range(monoid.size)
    )
    return Representation(monoid, field, len(basis), matrices)


def regular_representation(monoid: FiniteMonoid, field: FieldSpec) -> Representation:
    m = monoid.size
    matrices = tuple(_action_matrix([monoid.mul(s, x) for x in range(m)], m, field) for s in range(m))
    return Representation(monoid, field, m, matrices)


def defining_representation(monoid: FiniteMonoid, field: FieldSpec) -> Representation:
    """Maps of {0..n-1} acting on the basis vectors e_x -> e_f(x)."""
    if not monoid.elements or not all(isinstance(f, tuple) for f in monoid.elements):
        raise UnsupportedError(f"{monoid.name} is not given by maps of a finite set")
    n = len(monoid.elements[0])
    matrices = tuple(_action_matrix(list(f), n, field) for f in monoid.elements)
    return Representation(monoid, field, n, matrices)


def trivial_reps(monoid: FiniteMonoid, field: FieldSpec,
                 cells: Optional[CellStructure] = None) -> Tuple[Representation, Representation]:
    """(1_b, 1_t): units act by 1 in both, everything else by 0 in 1_b and 1 in 1_t."""
    group = set(units(monoid, cells))
    one = ExactMatrix.from_rows([[1]], field)
    zero = ExactMatrix.from_rows([[0]], field)
    bottom = tuple(one if s in group else zero for s in range(monoid.size))
    top = tuple(one for _ in range(monoid.size))
    return Representation(monoid, field, 1, bottom), Representation(monoid, field, 1, top)


def annihilator(rep: Representation) -> List[int]:
    return [s for s in range(rep.monoid.size) if rep.act(s).is_zero()]


def apex(rep: Representation, cells: Optional[CellStructure] = None) -> int:
    """The unique maximal J-class whose elements do not all act by zero."""
    cells = cells or green_cells(rep.monoid)
    killed = set(annihilator(rep))
    alive = [j for j in range(cells.n_j) if any(x not in killed for x in cells.j_members(j))]
    maximal = [j for j in alive if not any(cells.j_lt(j, k) for k in alive)]
    if len(maximal) != 1:
        raise AmbiguityError(f"Representation has {len(maximal)} maximal non-annihilating J-classes")
    return maximal[0]


def is_trivial_sum(rep: Representation, cells: Optional[CellStructure] = None) -> bool:
    """Units act as the identity and all other elements as one common idempotent."""
    group = set(units(rep.monoid, cells))
    identity = ExactMatrix.identity(rep.dim, rep.field)
    if any(rep.act(g) != identity for g in group):
        return False
    others = [rep.act(s) for s in range(rep.monoid.size) if s not in group]
    if not others:
        return True
    e = others[0]
    return all(x == e for x in others) and e @ e == e


def is_faithful(rep: Representation) -> bool:
    seen = set()
    for matrix in rep.matrices:
        if matrix.entries in seen:
            return False
        seen.add(matrix.entries)
    return True


def ssdim(family: FamilyId, n: int, k: int) -> int:
    """|L| / |H| for the J-cell with k through strands."""
    return l_class_size(family, n, k) // h_class_size(family, n, k)


# --- Gram matrices ----------------------------------------------------------

def _symmetric_idempotent(monoid: FiniteMonoid, cells: CellStructure, j: int) -> int:
    candidates = [x for x in cells.j_members(j) if cells.idempotent[x]]
    if not candidates:
        raise ValidationError(f"J-class {j} of {monoid.name} is not idempotent")
    if monoid.elements is not None and isinstance(monoid.elements[candidates[0]], Diagram):
        for e in candidates:
            if star(monoid.elements[e]) == monoid.elements[e]:
                return e
    return candidates[0]


def gram_matrix(monoid: FiniteMonoid, j: int, field: FieldSpec = FieldSpec(0),
                cells: Optional[CellStructure] = None) -> ExactMatrix:
    """
    P[i][k] = 1 iff r_i l_k lies in H(e), with l_k running over L(e) and r_i
    over R(e). For diagram monoids r_i is the reflection of l_i, so P is
    symmetric.
    """
    cells = cells or green_cells(monoid)
    e = _symmetric_idempotent(monoid, cells, j)
    if cells.h_size(j) != 1:
        raise UnsupportedError(f"Gram matrices need a trivial H-cell; J-class {j} has |H| = {cells.h_size(j)}")
    cols = cells.members(cells.l_class, int(cells.l_class[e]))
    if monoid.elements is not None and isinstance(monoid.elements[e], Diagram):
        rows = [monoid.index_of(star(monoid.elements[x])) for x in cols]
    else:
        rows = cells.members(cells.r_class, int(cells.r_class[e]))
    h_cell = int(cells.h_class[e])
    entries = [[int(cells.h_class[monoid.mul(r, l)] == h_cell) for l in cols] for r in rows]
    return ExactMatrix.from_rows(entries, field, cols=len(cols))


def diagram_gram_matrix(family: FamilyId, n: int, k: int, field: FieldSpec = FieldSpec(0)) -> ExactMatrix:
    """
    Gram matrix straight from the halves with k through strands: entry (i, j)
    is 1 when gluing half j below half i joins the strands in order.
    Closed components are allowed.
    """
    if not FAMILY_RULES[family].planar:
        raise UnsupportedError(f"The half-diagram Gram matrix needs a planar family, got {family.value}")
    halves = half_diagrams(family, n, k)
    if not halves:
        raise ValidationError(f"No halves with {k} through strands on {n} points")
    size = len(halves)
    entries = [[0] * size for _ in range(size)]
    for i in range(size):
        entries[i][i] = int(pair_halves(halves[i], halves[i])[0])
    for i, j in combinations(range(size), 2):
        value = int(pair_halves(halves[j], halves[i])[0])
        entries[i][j] = entries[j][i] = value
    return ExactMatrix.from_rows(entries, field, cols=size)


def gram_rank_dim(monoid: FiniteMonoid, j: int, field: FieldSpec = FieldSpec(0),
                  cells: Optional[CellStructure] = None) -> int:
    """Dimension of the simple representation with apex j (trivial H-cell)."""
    return rank(gram_matrix(monoid, j, field, cells))


# --- simple counts ----------------------------------------------------------

def regular_partition_count(k: int, p: int) -> int:
    """Partitions of k in which no part is repeated p or more times."""
    if k == 0:
        return 1
    return sum(1 for part in partitions(k) if all(mult < p for mult in part.values()))


def _p_prime_part(order: int, p: int) -> int:
    while order % p == 0:
        order //= p
    return order


def _symmetric_degree(group: FiniteMonoid, classes: int) -> Optional[int]:
    """k with |S_k| = |group| and matching class number, if any."""
    k = 0
    while factorial(k) < group.size:
        k += 1
    if factorial(k) == group.size and int(partition(k)) == classes:
        return k
    return None


def count_simples(monoid: FiniteMonoid, char: int = 0,
                  cells: Optional[CellStructure] = None) -> Dict[int, int]:
    """
    Number of simple representations per apex: per idempotent J-cell, the
    simples of H(e). Abelian H(e) is counted over a splitting field.
    Symmetric groups are recognised by order and class number only.
    """
    cells = cells or green_cells(monoid)
    out: Dict[int, int] = {}
    for j in cells.idempotent_js:
        group = cells.group_of(cells.idempotent_in(j))
        if group.size == 1:
            out[j] = 1
        elif is_abelian(group):
            out[j] = group.size if char == 0 else _p_prime_part(group.size, char)
        else:
            k = _symmetric_degree(group, conjugacy_class_count(group))
            if k is None:
                raise UnsupportedError(f"Cannot identify the group H(e) of order {group.size} in J-class {j}")
            logger.debug(f"H(e) in J-class {j} taken to be S_{k}")
            out[j] = int(partition(k)) if char == 0 else regular_partition_count(k, char)
    return out
