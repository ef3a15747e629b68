"""Partition diagrams on n bottom and n top points

Points 0..n-1 sit on the bottom boundary (left to right) and n..2n-1 on the
top boundary, top point n+i directly above bottom point i. A diagram is
stored as a canonical set partition: every block sorted, blocks sorted by
their minimum.

compose(a, b) reads as "a after b": b is glued below a.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from modules.disjoint_set import DisjointSet
from modules.errors import SizeMismatchError, ValidationError

logger = logging.getLogger('cellgap')

Block = Tuple[int, ...]


class FamilyId(Enum):
    TL = 'tl'
    MOTZKIN = 'motzkin'
    BRAUER = 'brauer'
    PLANAR_ROOK = 'prook'
    ROOK = 'rook'
    ROOK_BRAUER = 'rookbrauer'
    PLANAR_PARTITION = 'ppartition'
    PARTITION = 'partition'
    SYMMETRIC = 'sym'

    @classmethod
    def parse(cls, name: str) -> "FamilyId":
        key = name.strip().lower().replace('-', '').replace('_', '')
        for member in cls:
            if key == member.value:
                return member
        aliases = {
            'temperleylieb': cls.TL, 'mo': cls.MOTZKIN, 'br': cls.BRAUER,
            'pro': cls.PLANAR_ROOK, 'planarrook': cls.PLANAR_ROOK, 'ro': cls.ROOK,
            'robr': cls.ROOK_BRAUER, 'ppa': cls.PLANAR_PARTITION, 'planarpartition': cls.PLANAR_PARTITION,
            'pa': cls.PARTITION, 'symmetric': cls.SYMMETRIC,
        }
        if key in aliases:
            return aliases[key]
        raise ValidationError(f"Unknown diagram family: {name}")


@dataclass(frozen=True)
class FamilyRules:
    """Membership rules of a diagram family"""
    display_name: str
    block_sizes: Optional[frozenset]  # None means any size
    propagating_pairs: bool  # every 2-block joins one bottom and one top point
    planar: bool


FAMILY_RULES: Dict[FamilyId, FamilyRules] = {
    FamilyId.TL: FamilyRules('Temperley-Lieb', frozenset({2}), False, True),
    FamilyId.MOTZKIN: FamilyRules('Motzkin', frozenset({1, 2}), False, True),
    FamilyId.BRAUER: FamilyRules('Brauer', frozenset({2}), False, False),
    FamilyId.PLANAR_ROOK: FamilyRules('planar rook', frozenset({1, 2}), True, True),
    FamilyId.ROOK: FamilyRules('rook', frozenset({1, 2}), True, False),
    FamilyId.ROOK_BRAUER: FamilyRules('rook-Brauer', frozenset({1, 2}), False, False),
    FamilyId.PLANAR_PARTITION: FamilyRules('planar partition', None, False, True),
    FamilyId.PARTITION: FamilyRules('partition', None, False, False),
    FamilyId.SYMMETRIC: FamilyRules('symmetric', frozenset({2}), True, False),
}


def _canonical(blocks: Iterable[Iterable[int]]) -> Tuple[Block, ...]:
    return tuple(sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0]))


@dataclass(frozen=True)
class Diagram:
    """A set partition of the 2n boundary points; build with from_blocks or parse."""
    n: int
    blocks: Tuple[Block, ...]

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[int]]) -> "Diagram":
        if n < 0:
            raise ValidationError(f"Strand count must be nonnegative, got {n}")
        raw = [tuple(b) for b in blocks]
        if any(len(block) == 0 for block in raw):
            raise ValidationError("Diagram blocks must be nonempty")
        canonical = _canonical(raw)
        seen = [p for block in canonical for p in block]
        if sorted(seen) != list(range(2 * n)):
            raise ValidationError(f"Blocks do not partition the points 0..{2 * n - 1}: {canonical}")
        return cls(n, canonical)

    @classmethod
    def parse(cls, text: str) -> "Diagram":
        """Read the `n;block|block|...` serialization, e.g. `3;0,1|2,5|3,4`."""
        try:
            head, _, body = text.strip().partition(';')
            n = int(head)
            blocks = [[int(p) for p in part.split(',')] for part in body.split('|') if part.strip()]
        except ValueError as e:
            raise ValidationError(f"Malformed diagram '{text}': {e}") from e
        return cls.from_blocks(n, blocks)

    def serialize(self) -> str:
        return f"{self.n};" + "|".join(",".join(str(p) for p in block) for block in self.blocks)

    def __str__(self) -> str:
        return self.serialize()

    @cached_property
    def point_block(self) -> Tuple[int, ...]:
        """Index of the block containing each point."""
        labels = [0] * (2 * self.n)
        for idx, block in enumerate(self.blocks):
            for p in block:
                labels[p] = idx
        return tuple(labels)

    @cached_property
    def width(self) -> int:
        return sum(1 for block in self.blocks if block[0] < self.n <= block[-1])

    def __mul__(self, other: "Diagram") -> "Diagram":
        return compose(self, other)


def identity(n: int) -> Diagram:
    return Diagram(n, tuple((i, n + i) for i in range(n)))


def _patched(n: int, touched: Sequence[int], extra: List[List[int]]) -> Diagram:
    """Identity on the untouched strands plus the given blocks."""
    blocks = [[i, n + i] for i in range(n) if i not in touched]
    return Diagram.from_blocks(n, blocks + extra)


def _check_index(n: int, i: int, span: int) -> None:
    if not 0 <= i <= n - span:
        raise ValidationError(f"Strand index {i} out of range for n={n}")


def cup_cap(n: int, i: int) -> Diagram:
    """The Temperley-Lieb generator joining strands i and i+1 by a cap and a cup."""
    _check_index(n, i, 2)
    return _patched(n, (i, i + 1), [[i, i + 1], [n + i, n + i + 1]])


def transposition(n: int, i: int) -> Diagram:
    _check_index(n, i, 2)
    return _patched(n, (i, i + 1), [[i, n + i + 1], [i + 1, n + i]])


def delete_strand(n: int, i: int) -> Diagram:
    """Identity with strand i cut into two singletons."""
    _check_index(n, i, 1)
    return _patched(n, (i,), [[i], [n + i]])


def shift_strand(n: int, i: int) -> Diagram:
    """Planar rook element moving strand i one step to the right, bottom i+1 and top i left unmatched."""
    _check_index(n, i, 2)
    return _patched(n, (i, i + 1), [[i, n + i + 1], [i + 1], [n + i]])


def merge_strands(n: int, i: int) -> Diagram:
    """Partition element joining strands i and i+1 into one block."""
    _check_index(n, i, 2)
    return _patched(n, (i, i + 1), [[i, i + 1, n + i, n + i + 1]])


def glue(a: Diagram, b: Diagram) -> Tuple[Diagram, int]:
    """
    Stack b below a.

    Returns:
        The composite diagram and the number of components that lived
        entirely in the middle row (discarded from the result)
    """
    if a.n != b.n:
        raise SizeMismatchError(f"Cannot compose diagrams on {a.n} and {b.n} strands")
    n = a.n
    offset = len(b.blocks)
    forest = DisjointSet(offset + len(a.blocks))
    below, above = b.point_block, a.point_block
    for i in range(n):
        forest.unite(below[n + i], offset + above[i])

    groups: Dict[int, List[int]] = {}
    for p in range(n):
        groups.setdefault(forest.find(below[p]), []).append(p)
    for p in range(n, 2 * n):
        groups.setdefault(forest.find(offset + above[p]), []).append(p)

    # points are visited in increasing order, so the blocks come out canonical
    result = Diagram(n, tuple(tuple(group) for group in groups.values()))
    return result, forest.groups - len(groups)


def compose(a: Diagram, b: Diagram) -> Diagram:
    return glue(a, b)[0]


def star(a: Diagram) -> Diagram:
    """Reflect in a horizontal axis."""
    n = a.n
    return Diagram(n, _canonical(tuple(p + n if p < n else p - n for p in block) for block in a.blocks))


def width(a: Diagram) -> int:
    return a.width


def is_planar(a: Diagram) -> bool:
    """Non-crossing test in the cyclic order: bottom left to right, then top right to left."""
    n = a.n
    label = a.point_block
    remaining = [len(block) for block in a.blocks]
    stack: List[int] = []
    for p in list(range(n)) + list(range(2 * n - 1, n - 1, -1)):
        blk = label[p]
        first_visit = remaining[blk] == len(a.blocks[blk])
        remaining[blk] -= 1
        if first_visit:
            if remaining[blk] > 0:
                stack.append(blk)
            continue
        if not stack or stack[-1] != blk:
            return False
        if remaining[blk] == 0:
            stack.pop()
    return True


def is_member(a: Diagram, family: FamilyId) -> bool:
    rules = FAMILY_RULES[family]
    n = a.n
    for block in a.blocks:
        if rules.block_sizes is not None and len(block) not in rules.block_sizes:
            return False
        if rules.propagating_pairs and len(block) == 2 and not block[0] < n <= block[1]:
            return False
    return not rules.planar or is_planar(a)


@dataclass(frozen=True)
class HalfDiagram:
    """
    One side of a diagram: a partition of n points in which the blocks
    listed in `through` continue to the other side (left to right).
    """
    n: int
    blocks: Tuple[Block, ...]
    through: Tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.through)

    def serialize(self) -> str:
        marked = set(self.through)
        parts = (",".join(str(p) for p in block) + ("*" if idx in marked else "")
                 for idx, block in enumerate(self.blocks))
        return f"{self.n};" + "|".join(parts)

    def __str__(self) -> str:
        return self.serialize()


@dataclass(frozen=True)
class Factorization:
    """a = top_half o middle_perm o bottom_half"""
    width: int
    bottom_half: HalfDiagram
    middle_perm: Tuple[int, ...]
    top_half: HalfDiagram


def _sorted_half(n: int, parts: List[Block], marks: List[Optional[int]]) -> Tuple[HalfDiagram, Dict[int, int]]:
    order = sorted(range(len(parts)), key=lambda idx: parts[idx][0])
    position = {old: new for new, old in enumerate(order)}
    blocks = tuple(parts[idx] for idx in order)
    through = tuple(sorted(position[idx] for idx, mark in enumerate(marks) if mark is not None))
    # mark -> index of the block inside the half
    tagged = {mark: position[idx] for idx, mark in enumerate(marks) if mark is not None}
    return HalfDiagram(n, blocks, through), tagged


def factorize(a: Diagram) -> Factorization:
    n = a.n
    lows: List[Block] = []
    highs: List[Block] = []
    low_marks: List[Optional[int]] = []
    high_marks: List[Optional[int]] = []
    strand = 0
    for block in a.blocks:
        low = tuple(p for p in block if p < n)
        high = tuple(p - n for p in block if p >= n)
        mark = None
        if low and high:
            mark = strand
            strand += 1
        if low:
            lows.append(low)
            low_marks.append(mark)
        if high:
            highs.append(high)
            high_marks.append(mark)

    bottom, bottom_tags = _sorted_half(n, lows, low_marks)
    top, top_tags = _sorted_half(n, highs, high_marks)
    top_rank = {blk: i for i, blk in enumerate(top.through)}
    bottom_mark = {blk: mark for mark, blk in bottom_tags.items()}
    perm = tuple(top_rank[top_tags[bottom_mark[blk]]] for blk in bottom.through)
    return Factorization(strand, bottom, perm, top)


def reassemble(bottom: HalfDiagram, perm: Sequence[int], top: HalfDiagram) -> Diagram:
    if bottom.n != top.n:
        raise SizeMismatchError(f"Halves on {bottom.n} and {top.n} points")
    if bottom.m != top.m or sorted(perm) != list(range(bottom.m)):
        raise ValidationError(f"Permutation {tuple(perm)} does not match {bottom.m} and {top.m} through strands")
    n = bottom.n
    bottom_through = set(bottom.through)
    top_through = set(top.through)
    blocks: List[Tuple[int, ...]] = [blk for idx, blk in enumerate(bottom.blocks) if idx not in bottom_through]
    blocks += [tuple(p + n for p in blk) for idx, blk in enumerate(top.blocks) if idx not in top_through]
    for i, idx in enumerate(bottom.through):
        blocks.append(bottom.blocks[idx] + tuple(p + n for p in top.blocks[top.through[perm[i]]]))
    return Diagram(n, _canonical(blocks))


def reassemble_factorization(f: Factorization) -> Diagram:
    return reassemble(f.bottom_half, f.middle_perm, f.top_half)
