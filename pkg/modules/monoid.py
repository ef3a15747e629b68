"""Finite monoids given by multiplication tables"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Dict, Optional, Sequence, Tuple

import numpy as np

from modules.diagram import Diagram, compose, identity
from modules.errors import ResourceGuardError, ValidationError
from modules.settings import Settings

logger = logging.getLogger('cellgap')

settings = Settings()


@dataclass(frozen=True, eq=False)
class FiniteMonoid:
    """
    A monoid on the indices 0..size-1.

    table[a, b] is the index of the product ab. `elements` holds the
    underlying objects (diagrams, maps) when the monoid was built from them.
    """
    table: np.ndarray
    unit: int
    labels: Tuple[str, ...] = ()
    name: str = 'M'
    elements: Optional[Tuple[Any, ...]] = field(default=None, repr=False)

    def __post_init__(self) -> None:
        table = self.table
        if table.ndim != 2 or table.shape[0] != table.shape[1]:
            raise ValidationError(f"Multiplication table must be square, got shape {table.shape}")
        m = table.shape[0]
        if m == 0:
            raise ValidationError("A monoid needs at least its unit")
        if table.min() < 0 or table.max() >= m:
            raise ValidationError("Multiplication table entries out of range")
        if not 0 <= self.unit < m:
            raise ValidationError(f"Unit index {self.unit} out of range")
        everything = np.arange(m)
        if not (np.array_equal(table[self.unit], everything) and np.array_equal(table[:, self.unit], everything)):
            raise ValidationError(f"Element {self.unit} is not a two-sided unit")
        table.flags.writeable = False
        if not self.labels:
            object.__setattr__(self, 'labels', tuple(str(i) for i in range(m)))

    @property
    def size(self) -> int:
        return self.table.shape[0]

    def __len__(self) -> int:
        return self.size

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def product(self, word: Sequence[int]) -> int:
        out = self.unit
        for x in word:
            out = int(self.table[out, x])
        return out

    def power(self, a: int, k: int) -> int:
        """a**k by square-and-multiply (k >= 0)."""
        result, base = self.unit, a
        while k > 0:
            if k & 1:
                result = int(self.table[result, base])
            base = int(self.table[base, base])
            k >>= 1
        return result

    @cached_property
    def _index(self) -> Dict[Any, int]:
        if self.elements is None:
            return {}
        return {x: i for i, x in enumerate(self.elements)}

    def index_of(self, element: Any) -> int:
        try:
            return self._index[element]
        except KeyError:
            raise ValidationError(f"{element} is not an element of {self.name}") from None

    def opposite(self) -> "FiniteMonoid":
        return FiniteMonoid(self.table.T.copy(), self.unit, self.labels, f"{self.name}^op", self.elements)

    def is_group(self) -> bool:
        # every row of a finite group table is a permutation
        return bool(np.all(np.sort(self.table, axis=1) == np.arange(self.size)))

    def check_associative(self) -> bool:
        """Exhaustive up to the configured size, sampled above it."""
        t = self.table
        m = self.size
        if m <= settings.get('associativity_exhaustive_limit'):
            for a in range(m):
                if not np.array_equal(t[t[a], :], t[a][t]):
                    return False
            return True
        rng = np.random.default_rng(0)
        a, b, c = rng.integers(0, m, size=(3, settings.get('associativity_samples')))
        return bool(np.all(t[t[a, b], c] == t[a, t[b, c]]))

    def submonoid_table(self, members: Sequence[int], unit: int, name: str) -> "FiniteMonoid":
        """Restrict the table to a subset closed under multiplication, with its own unit."""
        position = {x: i for i, x in enumerate(members)}
        try:
            rows = [[position[int(self.table[a, b])] for b in members] for a in members]
        except KeyError as e:
            raise ValidationError(f"Subset of {self.name} is not closed under multiplication") from e
        return FiniteMonoid(np.array(rows, dtype=np.int64), position[unit],
                            tuple(self.labels[x] for x in members), name)

    def dump(self) -> str:
        """First line `m unit`, then m rows of m space-separated indices."""
        lines = [f"{self.size} {self.unit}"]
        lines += [" ".join(str(int(x)) for x in row) for row in self.table]
        return "\n".join(lines) + "\n"

    @classmethod
    def load(cls, text: str, name: str = 'M', check: bool = True) -> "FiniteMonoid":
        lines = [line for line in text.strip().splitlines() if line.strip()]
        try:
            m, unit = (int(x) for x in lines[0].split())
            rows = [[int(x) for x in line.split()] for line in lines[1:]]
        except (IndexError, ValueError) as e:
            raise ValidationError(f"Malformed multiplication table: {e}") from e
        if len(rows) != m or any(len(row) != m for row in rows):
            raise ValidationError(f"Table header declares {m} elements but the body does not match")
        monoid = cls(np.array(rows, dtype=np.int64), unit, name=name)
        if check and not monoid.check_associative():
            raise ValidationError(f"Multiplication table of {name} is not associative")
        return monoid

    @classmethod
    def from_function(cls, elements: Sequence[Any], multiply, unit: Any, name: str,
                      labels: Optional[Sequence[str]] = None) -> "FiniteMonoid":
        _check_table_guard(len(elements), name)
        index = {x: i for i, x in enumerate(elements)}
        table = np.empty((len(elements), len(elements)), dtype=np.int64)
        for i, a in enumerate(elements):
            for j, b in enumerate(elements):
                table[i, j] = index[multiply(a, b)]
        shown = tuple(labels) if labels is not None else tuple(str(x) for x in elements)
        return cls(table, index[unit], shown, name, tuple(elements))

    @classmethod
    def from_diagrams(cls, diagrams: Sequence[Diagram], name: str,
                      generators: Optional[Sequence[Diagram]] = None) -> "FiniteMonoid":
        """
        Multiplication table of a closed set of diagrams.

        With generators, only products with a generator are composed: the
        table is filled column by column along a right Cayley graph.
        """
        if not diagrams:
            raise ValidationError("No diagrams given")
        n = diagrams[0].n
        one = identity(n)
        if generators is None:
            return cls.from_function(diagrams, compose, one, name, [d.serialize() for d in diagrams])

        _check_table_guard(len(diagrams), name)
        index = {d: i for i, d in enumerate(diagrams)}
        if one not in index:
            raise ValidationError(f"{name} does not contain the identity")
        m = len(diagrams)
        right = np.empty((m, len(generators)), dtype=np.int64)
        try:
            for i, d in enumerate(diagrams):
                for j, g in enumerate(generators):
                    right[i, j] = index[compose(d, g)]
        except KeyError as e:
            raise ValidationError(f"Diagrams of {name} are not closed under composition") from e

        start = index[one]
        parent: Dict[int, Optional[Tuple[int, int]]] = {start: None}
        order = [start]
        for x in order:
            for j in range(len(generators)):
                y = int(right[x, j])
                if y not in parent:
                    parent[y] = (x, j)
                    order.append(y)
        if len(order) != m:
            raise ValidationError(f"Generators reach {len(order)} of the {m} elements of {name}")

        table = np.empty((m, m), dtype=np.int64)
        table[:, start] = np.arange(m)
        for y in order[1:]:
            x, j = parent[y]
            table[:, y] = right[table[:, x], j]
        return cls(table, start, tuple(d.serialize() for d in diagrams), name, tuple(diagrams))


def _check_table_guard(size: int, name: str) -> None:
    limit = settings.get('table_max_size')
    if size > limit:
        raise ResourceGuardError(f"{name} has {size} elements, above table_max_size={limit}")


def trivial_monoid() -> FiniteMonoid:
    return FiniteMonoid(np.zeros((1, 1), dtype=np.int64), 0, ('1',), 'trivial')
