"""Diagram families: enumeration, generators, cardinalities and pairing graphs"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from itertools import combinations, permutations, product
from math import comb, factorial
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

import numpy as np
from sympy import bell, catalan, factorial2
from sympy.functions.combinatorial.numbers import stirling

from modules.adic import cell_module_dim
from modules.cells import CellStructure, Truncation, green_cells, truncate
from modules.diagram import (FAMILY_RULES, Diagram, FamilyId, HalfDiagram, compose, cup_cap,
                             delete_strand, identity, is_member, merge_strands, reassemble,
                             shift_strand, star, transposition)
from modules.disjoint_set import DisjointSet
from modules.errors import ResourceGuardError, UnsupportedError, ValidationError
from modules.monoid import FiniteMonoid
from modules.settings import Settings

logger = logging.getLogger('cellgap')

settings = Settings()

SHORT_NAMES: Dict[FamilyId, str] = {
    FamilyId.TL: 'TL',
    FamilyId.MOTZKIN: 'Mo',
    FamilyId.BRAUER: 'Br',
    FamilyId.PLANAR_ROOK: 'pRo',
    FamilyId.ROOK: 'Ro',
    FamilyId.ROOK_BRAUER: 'RoBr',
    FamilyId.PLANAR_PARTITION: 'pPa',
    FamilyId.PARTITION: 'Pa',
    FamilyId.SYMMETRIC: 'S',
}

# families whose H-cells are symmetric groups S_k
SYMMETRIC_TYPE = frozenset({FamilyId.BRAUER, FamilyId.ROOK, FamilyId.ROOK_BRAUER,
                            FamilyId.PARTITION, FamilyId.SYMMETRIC})


@dataclass(frozen=True)
class FamilyInstance:
    family: FamilyId
    n: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValidationError(f"Strand count must be nonnegative, got {self.n}")

    @property
    def label(self) -> str:
        return f"{SHORT_NAMES[self.family]}_{self.n}"

    def __str__(self) -> str:
        return self.label


def widths(family: FamilyId, n: int) -> List[int]:
    """Through-strand counts that occur in the family, ascending."""
    if family in (FamilyId.TL, FamilyId.BRAUER):
        return list(range(n % 2, n + 1, 2))
    if family == FamilyId.SYMMETRIC:
        return [n]
    return list(range(n + 1))


def check_width(family: FamilyId, n: int, k: int) -> None:
    if k not in widths(family, n):
        raise ValidationError(f"{SHORT_NAMES[family]}_{n} has no cell with {k} through strands")


# --- half diagrams ---------------------------------------------------------

def _planar_halves(n: int, caps: bool, dots: bool) -> Iterator[Tuple[List[Tuple[int, ...]], List[int]]]:
    """Non-crossing halves built with a stack of open caps; yields (blocks, through points)."""
    def walk(i: int, stack: List[int], blocks: List[Tuple[int, ...]], through: List[int]):
        if len(stack) > n - i:
            return
        if i == n:
            yield list(blocks), list(through)
            return
        if not stack:
            through.append(i)
            blocks.append((i,))
            yield from walk(i + 1, stack, blocks, through)
            blocks.pop()
            through.pop()
        if dots:
            blocks.append((i,))
            yield from walk(i + 1, stack, blocks, through)
            blocks.pop()
        if caps:
            stack.append(i)
            yield from walk(i + 1, stack, blocks, through)
            stack.pop()
            if stack:
                left = stack.pop()
                blocks.append((left, i))
                yield from walk(i + 1, stack, blocks, through)
                blocks.pop()
                stack.append(left)

    yield from walk(0, [], [], [])


def _set_partitions(n: int, max_block: Optional[int]) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    """Restricted-growth enumeration; blocks come out sorted by their minimum."""
    blocks: List[List[int]] = []

    def walk(i: int):
        if i == n:
            yield tuple(tuple(b) for b in blocks)
            return
        for b in blocks:
            if max_block is None or len(b) < max_block:
                b.append(i)
                yield from walk(i + 1)
                b.pop()
        blocks.append([i])
        yield from walk(i + 1)
        blocks.pop()

    yield from walk(0)


def _is_valid_half(family: FamilyId, half: HalfDiagram) -> bool:
    return is_member(reassemble(half, tuple(range(half.m)), half), family)


def half_diagrams(family: FamilyId, n: int, m: Optional[int] = None) -> List[HalfDiagram]:
    """
    All halves of the family on n points, optionally only those with m
    through strands, sorted by serialization.
    """
    out: List[HalfDiagram] = []
    if family in (FamilyId.TL, FamilyId.MOTZKIN, FamilyId.PLANAR_ROOK):
        caps = family != FamilyId.PLANAR_ROOK
        dots = family != FamilyId.TL
        for blocks, through_points in _planar_halves(n, caps, dots):
            blocks = sorted(blocks, key=lambda b: b[0])
            marks = set(through_points)
            through = tuple(idx for idx, b in enumerate(blocks) if len(b) == 1 and b[0] in marks)
            out.append(HalfDiagram(n, tuple(blocks), through))
    else:
        rules = FAMILY_RULES[family]
        if rules.block_sizes is None:
            cap = None
        else:
            cap = 1 if rules.propagating_pairs else max(rules.block_sizes)
        for blocks in _set_partitions(n, cap):
            for k in range(len(blocks) + 1):
                if m is not None and k != m:
                    continue
                for through in combinations(range(len(blocks)), k):
                    half = HalfDiagram(n, blocks, through)
                    if _is_valid_half(family, half):
                        out.append(half)
    if m is not None:
        out = [h for h in out if h.m == m]
    out.sort(key=lambda h: h.serialize())
    return out


# --- enumeration -----------------------------------------------------------

def _check_guard(family: FamilyId, n: int) -> None:
    limit = settings.guard(family.value)
    if n > limit:
        raise ResourceGuardError(f"{SHORT_NAMES[family]}_{n} is above the enumeration guard n <= {limit}")


def enumerate_family(fi: FamilyInstance) -> List[Diagram]:
    """Every diagram of the family, sorted by serialization."""
    _check_guard(fi.family, fi.n)
    planar = FAMILY_RULES[fi.family].planar
    n = fi.n
    halves = half_diagrams(fi.family, n)
    by_width: Dict[int, List[HalfDiagram]] = {}
    for h in halves:
        by_width.setdefault(h.m, []).append(h)

    out: List[Diagram] = []
    for k, group in by_width.items():
        perms = [tuple(range(k))] if planar else list(permutations(range(k)))
        for bottom, top in product(group, repeat=2):
            for sigma in perms:
                out.append(reassemble(bottom, sigma, top))
    out.sort(key=lambda d: d.serialize())
    logger.debug(f"Enumerated {len(out)} diagrams of {fi}")
    return out


def cardinality(fi: FamilyInstance) -> int:
    n = fi.n
    f = fi.family
    if f == FamilyId.TL:
        return int(catalan(n))
    if f == FamilyId.PLANAR_PARTITION:
        return int(catalan(2 * n))
    if f == FamilyId.PLANAR_ROOK:
        return comb(2 * n, n)
    if f == FamilyId.MOTZKIN:
        return sum(comb(2 * n, 2 * k) * int(catalan(k)) for k in range(n + 1))
    if f == FamilyId.BRAUER:
        return int(factorial2(2 * n - 1))
    if f == FamilyId.ROOK:
        return sum(factorial(k) * comb(n, k) ** 2 for k in range(n + 1))
    if f == FamilyId.ROOK_BRAUER:
        return sum(comb(2 * n, 2 * k) * int(factorial2(2 * k - 1)) for k in range(n + 1))
    if f == FamilyId.PARTITION:
        return int(bell(2 * n))
    if f == FamilyId.SYMMETRIC:
        return factorial(n)
    raise UnsupportedError(f"No cardinality formula for {f.value}")


def printed_rookbrauer_count(n: int) -> int:
    """The closed form Σ (2k)!! binom(2n, 2k) as it appears in the literature."""
    return sum(int(factorial2(2 * k)) * comb(2 * n, 2 * k) for k in range(n + 1))


def verify_cardinality(fi: FamilyInstance) -> bool:
    """Enumeration against the closed form; RookBrauer also against the printed sum."""
    counted = len(enumerate_family(fi))
    expected = cardinality(fi)
    if counted != expected:
        logger.error(f"{fi}: enumerated {counted} elements, closed form gives {expected}")
    if fi.family == FamilyId.ROOK_BRAUER:
        printed = printed_rookbrauer_count(fi.n)
        if printed != counted:
            logger.warning(f"{fi}: printed count {printed} differs from enumerated {counted}")
    return counted == expected


# --- generators ------------------------------------------------------------

def generators(fi: FamilyInstance) -> List[Diagram]:
    n, f = fi.n, fi.family
    cups = [cup_cap(n, i) for i in range(n - 1)]
    swaps = [transposition(n, i) for i in range(n - 1)]
    cut = [delete_strand(n, 0)] if n >= 1 else []
    shifts = [shift_strand(n, i) for i in range(n - 1)]
    planar_rook = shifts + [star(s) for s in shifts] + cut

    if f == FamilyId.TL:
        return cups
    if f == FamilyId.SYMMETRIC:
        return swaps
    if f == FamilyId.BRAUER:
        return cups + swaps
    if f == FamilyId.ROOK:
        return swaps + cut
    if f == FamilyId.PLANAR_ROOK:
        return planar_rook
    if f == FamilyId.MOTZKIN:
        return cups + planar_rook
    if f == FamilyId.ROOK_BRAUER:
        return cups + swaps + cut
    if f == FamilyId.PARTITION:
        return swaps + cut + ([merge_strands(n, 0)] if n >= 2 else [])
    raise UnsupportedError(f"No generating set implemented for the {FAMILY_RULES[f].display_name} monoid")


def closure(gens: Sequence[Diagram], n: int) -> List[Diagram]:
    """The submonoid generated by gens, sorted by serialization."""
    one = identity(n)
    seen = {one}
    frontier = [one]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(seen, key=lambda d: d.serialize())


def family_monoid(fi: FamilyInstance) -> FiniteMonoid:
    """Multiplication table of the family, filled along generators when a generating set exists."""
    elements = enumerate_family(fi)
    try:
        gens = generators(fi)
    except UnsupportedError:
        gens = []
    return FiniteMonoid.from_diagrams(elements, fi.label, gens or None)


# --- cell sizes ------------------------------------------------------------

def _odd_double_factorial(x: int) -> int:
    return int(factorial2(x)) if x >= -1 else 0


def l_class_size(family: FamilyId, n: int, k: int) -> int:
    """Size of one L-class in the J-cell with k through strands."""
    check_width(family, n, k)
    if family == FamilyId.TL:
        return cell_module_dim(n, k)
    if family == FamilyId.PLANAR_PARTITION:
        return cell_module_dim(2 * n, 2 * k)
    if family == FamilyId.PLANAR_ROOK:
        return comb(n, k)
    if family == FamilyId.MOTZKIN:
        total = 0
        for t in range((n - k) // 2 + 1):
            total += (k + 1) * comb(n, k + 2 * t) * comb(k + 2 * t, t) // (k + t + 1)
        return total
    if family == FamilyId.BRAUER:
        return factorial(k) * comb(n, k) * _odd_double_factorial(n - k - 1)
    if family == FamilyId.ROOK:
        return factorial(k) * comb(n, k)
    if family == FamilyId.ROOK_BRAUER:
        return factorial(k) * sum(comb(n, k) * comb(n - k, 2 * t) * _odd_double_factorial(2 * t - 1)
                                  for t in range((n - k) // 2 + 1))
    if family == FamilyId.PARTITION:
        return factorial(k) * sum(int(stirling(n, t)) * comb(t, k) for t in range(k, n + 1))
    if family == FamilyId.SYMMETRIC:
        return factorial(n)
    raise UnsupportedError(f"No cell size formula for {family.value}")


def h_class_size(family: FamilyId, n: int, k: int) -> int:
    check_width(family, n, k)
    return factorial(k) if family in SYMMETRIC_TYPE else 1


def j_class_size(family: FamilyId, n: int, k: int) -> int:
    return l_class_size(family, n, k) ** 2 // h_class_size(family, n, k)


# --- pairing graphs --------------------------------------------------------

class GraphKind(Enum):
    VERTICAL = 'vertical'
    WEAKLY_VERTICAL = 'weakly-vertical'
    FLIP = 'flip'


@dataclass(frozen=True)
class PairGraph:
    kind: GraphKind
    m: int
    n: int
    vertices: Tuple[HalfDiagram, ...]
    edges: FrozenSet[Tuple[int, int]]


def pair_halves(a: HalfDiagram, b: HalfDiagram) -> Tuple[bool, int]:
    """
    Glue two halves along their n points.

    Returns:
        Whether the through strands of a are joined to those of b in order
        (and to nothing else), and the number of closed components
    """
    if a.n != b.n or a.m != b.m:
        raise ValidationError(f"Cannot pair halves {a} and {b}")
    n, m = a.n, a.m
    forest = DisjointSet(n + 2 * m)
    for half, offset in ((a, n), (b, n + m)):
        for block in half.blocks:
            for p in block[1:]:
                forest.unite(block[0], p)
        for t, idx in enumerate(half.through):
            forest.unite(offset + t, half.blocks[idx][0])

    ends = [forest.find(n + t) for t in range(m)]
    matched = (all(ends[t] == forest.find(n + m + t) for t in range(m))
               and len(set(ends)) == m)
    open_components = len({forest.find(x) for x in range(n, n + 2 * m)})
    return matched, forest.groups - open_components


def is_nonempty(m: int, n: int) -> bool:
    return 0 <= m <= n and (n - m) % 2 == 0


def _flip_neighbours(a: HalfDiagram) -> Iterator[HalfDiagram]:
    cups = [b for idx, b in enumerate(a.blocks) if idx not in set(a.through)]
    outer = [c for c in cups if not any(d[0] < c[0] and c[1] < d[1] for d in cups)]
    through_points = [a.blocks[idx][0] for idx in a.through]
    for c in outer:
        for s, u in zip(through_points, through_points[1:]):
            if s < c[0] < u:
                continue
            blocks = [b for b in a.blocks if b != c and b not in ((s,), (u,))]
            blocks += [(c[0],), (c[1],), (s, u)]
            blocks.sort(key=lambda b: b[0])
            new_through = {c[0], c[1]} | (set(through_points) - {s, u})
            through = tuple(idx for idx, b in enumerate(blocks) if len(b) == 1 and b[0] in new_through)
            yield HalfDiagram(a.n, tuple(blocks), through)


def build_graph(kind: GraphKind, m: int, n: int) -> PairGraph:
    """Graph on the TL halves with m through strands on n points."""
    vertices = tuple(half_diagrams(FamilyId.TL, n, m)) if is_nonempty(m, n) else ()
    edges = set()
    if kind == GraphKind.FLIP:
        position = {v: i for i, v in enumerate(vertices)}
        for i, v in enumerate(vertices):
            for w in _flip_neighbours(v):
                j = position.get(w)
                if j is None:
                    logger.debug(f"Flip of {v} left the vertex set: {w}")
                elif j != i:
                    edges.add((min(i, j), max(i, j)))
    else:
        for i, j in combinations(range(len(vertices)), 2):
            matched, loops = pair_halves(vertices[i], vertices[j])
            if matched and (kind == GraphKind.WEAKLY_VERTICAL or loops == 0):
                edges.add((i, j))
    return PairGraph(kind, m, n, vertices, frozenset(edges))


def is_connected(g: PairGraph) -> bool:
    if not g.vertices:
        return True
    forest = DisjointSet(len(g.vertices))
    for i, j in g.edges:
        forest.unite(i, j)
    return forest.groups == 1


# --- non-diagram fixtures --------------------------------------------------

def transformation_monoid(n: int) -> FiniteMonoid:
    """All maps {1..n} -> {1..n}; the product fg is f after g."""
    if n < 0:
        raise ValidationError(f"n must be nonnegative, got {n}")
    limit = settings.guard('transformation')
    if n > limit:
        raise ResourceGuardError(f"T_{n} has {n ** n} elements, above the guard n <= {limit}")
    maps = list(product(range(n), repeat=n))

    def after(f, g):
        return tuple(f[g[x]] for x in range(n))

    labels = ["[" + ",".join(str(v + 1) for v in f) + "]" for f in maps]
    return FiniteMonoid.from_function(maps, after, tuple(range(n)), f"T_{n}", labels)


def cyclic_monoid(index: int, period: int) -> FiniteMonoid:
    """<a | a^(index+period) = a^index> on 1, a, ..., a^(index+period-1)."""
    if index < 0 or period < 1:
        raise ValidationError(f"Need index >= 0 and period >= 1, got ({index}, {period})")
    size = index + period

    def reduce(exponent: int) -> int:
        return exponent if exponent < size else index + (exponent - index) % period

    table = np.array([[reduce(s + t) for t in range(size)] for s in range(size)], dtype=np.int64)
    labels = tuple('1' if s == 0 else ('a' if s == 1 else f"a^{s}") for s in range(size))
    return FiniteMonoid(table, 0, labels, f"C({index},{period})", tuple(range(size)))


# --- truncations -----------------------------------------------------------

def j_class_of_width(monoid: FiniteMonoid, cells: CellStructure, width: int) -> int:
    for i, d in enumerate(monoid.elements or ()):
        if isinstance(d, Diagram) and d.width == width:
            return cells.j_of(i)
    raise ValidationError(f"{monoid.name} has no diagram with {width} through strands")


def family_truncation(fi: FamilyInstance, max_width: Optional[int] = None,
                      min_width: Optional[int] = None) -> Truncation:
    """
    Diagrams with at most max_width through strands plus a fresh unit;
    diagrams with fewer than min_width through strands collapse to zero.
    """
    monoid = family_monoid(fi)
    cells = green_cells(monoid)
    low = j_class_of_width(monoid, cells, max_width) if max_width is not None else None
    high = j_class_of_width(monoid, cells, min_width) if min_width is not None else None
    result = truncate(monoid, low, high, cells)
    bounds = ("" if max_width is None else f",<={max_width}") + ("" if min_width is None else f",>={min_width}")
    renamed = FiniteMonoid(result.result.table, result.result.unit, result.result.labels,
                           f"{fi.label}{bounds}", result.result.elements)
    return Truncation(result.base, result.low, result.high, renamed, result.kept, result.zero, result.adjoined_unit)
