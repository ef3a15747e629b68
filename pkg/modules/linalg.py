"""Exact linear algebra over Q and F_p with interchangeable backends"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, Iterable, Sequence, Tuple

from sympy import isprime

from modules.errors import ValidationError
from services.prime_field import PrimeFieldBackend
from services.rational_field import RationalBackend

logger = logging.getLogger('cellgap')


@dataclass(frozen=True)
class FieldSpec:
    """The rationals (char 0) or a prime field F_p."""
    char: int

    def __post_init__(self) -> None:
        if self.char != 0 and not isprime(self.char):
            raise ValidationError(f"Characteristic must be 0 or a prime, got {self.char}")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(0)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(p)

    @classmethod
    def parse(cls, text: Any) -> "FieldSpec":
        key = str(text).strip().lower()
        if key in ('0', 'q', 'qq', 'inf', 'infinity', 'rationals'):
            return cls(0)
        key = key.removeprefix('f_').removeprefix('f').removeprefix('gf')
        try:
            return cls(int(key))
        except ValueError as e:
            raise ValidationError(f"Unknown field: {text}") from e

    @property
    def kind(self) -> str:
        return 'rationals' if self.char == 0 else 'prime'

    @property
    def adic_prime(self):
        """The p of (3,p)-adic combinatorics; None encodes p = infinity."""
        return None if self.char == 0 else self.char

    def __str__(self) -> str:
        return 'Q' if self.char == 0 else f"F_{self.char}"


@lru_cache(maxsize=None)
def get_backend(field: FieldSpec):
    """
    Factory function returning the arithmetic backend of a field

    Args:
        field: Field specification

    Returns:
        Backend instance exposing scalar operations and dense rank

    Raises:
        ValidationError: If the field kind is unknown
    """
    if field.kind == 'rationals':
        return RationalBackend()
    elif field.kind == 'prime':
        try:
            return PrimeFieldBackend(field.char)
        except ValueError as e:
            raise ValidationError(str(e)) from e
    else:
        raise ValidationError(f"Unknown field kind: {field.kind}")


@dataclass(frozen=True)
class ExactMatrix:
    rows: int
    cols: int
    entries: Tuple[Tuple[Any, ...], ...]
    field: FieldSpec

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows or any(len(row) != self.cols for row in self.entries):
            raise ValidationError(f"Entries do not form a {self.rows}x{self.cols} matrix")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]], field: FieldSpec, cols: int = None) -> "ExactMatrix":
        backend = get_backend(field)
        try:
            data = tuple(tuple(backend.convert(x) for x in row) for row in rows)
        except (ValueError, ZeroDivisionError) as e:
            raise ValidationError(f"Entry not representable over {field}: {e}") from e
        width = cols if cols is not None else (len(data[0]) if data else 0)
        return cls(len(data), width, data, field)

    @classmethod
    def identity(cls, size: int, field: FieldSpec) -> "ExactMatrix":
        return cls.from_rows([[int(i == j) for j in range(size)] for i in range(size)], field, cols=size)

    @classmethod
    def zeros(cls, rows: int, cols: int, field: FieldSpec) -> "ExactMatrix":
        return cls.from_rows([[0] * cols for _ in range(rows)], field, cols=cols)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows or self.field != other.field:
            raise ValidationError(f"Cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        backend = get_backend(self.field)
        out = []
        for row in self.entries:
            new_row = []
            for j in range(other.cols):
                acc = backend.zero
                for k, x in enumerate(row):
                    if x:
                        acc = backend.add(acc, backend.mul(x, other.entries[k][j]))
                new_row.append(acc)
            out.append(tuple(new_row))
        return ExactMatrix(self.rows, other.cols, tuple(out), self.field)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else (), self.field)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def is_permutation(self) -> bool:
        if self.rows != self.cols:
            return False
        col_hits = [0] * self.cols
        for row in self.entries:
            ones = [j for j, x in enumerate(row) if x != 0]
            if len(ones) != 1 or row[ones[0]] != 1:
                return False
            col_hits[ones[0]] += 1
        return all(h == 1 for h in col_hits)

    def dump(self) -> str:
        """`rows cols` header, then row-major entries (`a/b` for rationals)."""
        backend = get_backend(self.field)
        lines = [f"{self.rows} {self.cols}"]
        lines += [" ".join(backend.format(x) for x in row) for row in self.entries]
        return "\n".join(lines) + "\n"

    @classmethod
    def load(cls, text: str, field: FieldSpec) -> "ExactMatrix":
        lines = [line for line in text.strip().splitlines() if line.strip()]
        try:
            rows, cols = (int(x) for x in lines[0].split())
            data = [line.split() for line in lines[1:]]
        except (IndexError, ValueError) as e:
            raise ValidationError(f"Malformed matrix dump: {e}") from e
        if len(data) != rows:
            raise ValidationError(f"Matrix dump declares {rows} rows but has {len(data)}")
        return cls.from_rows(data, field, cols=cols)


def rank(a: ExactMatrix) -> int:
    if a.rows == 0 or a.cols == 0:
        return 0
    return get_backend(a.field).rank(a.entries)


def nullspace_dim(a: ExactMatrix) -> int:
    return a.cols - rank(a)


def is_invertible(a: ExactMatrix) -> bool:
    if a.rows != a.cols:
        raise ValidationError(f"Invertibility needs a square matrix, got {a.rows}x{a.cols}")
    return rank(a) == a.rows


class SparseRowReducer:
    """
    Incremental echelon form for tall sparse systems.

    Rows are dicts column -> nonzero value. Each pivot row is normalized to
    1 at its leading column.
    """

    def __init__(self, field: FieldSpec, cols: int):
        self.field = field
        self.cols = cols
        self.backend = get_backend(field)
        self.pivots: Dict[int, Dict[int, Any]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def full(self) -> bool:
        return len(self.pivots) == self.cols

    def add_row(self, entries: Iterable[Tuple[int, Any]]) -> bool:
        """
        Reduce a row against the current pivots and keep it if independent.

        Returns:
            True if the rank grew
        """
        b = self.backend
        row: Dict[int, Any] = {}
        for col, value in entries:
            row[col] = b.add(row.get(col, b.zero), b.convert(value))
        row = {c: v for c, v in row.items() if v != 0}
        while row:
            lead = min(row)
            pivot = self.pivots.get(lead)
            if pivot is None:
                scale = b.inv(row[lead])
                self.pivots[lead] = {c: b.mul(v, scale) for c, v in row.items()}
                return True
            factor = row[lead]
            for c, v in pivot.items():
                updated = b.sub(row.get(c, b.zero), b.mul(factor, v))
                if updated == 0:
                    row.pop(c, None)
                else:
                    row[c] = updated
        return False

    def nullspace_dim(self) -> int:
        return self.cols - self.rank

    def contains(self, entries: Iterable[Tuple[int, Any]]) -> bool:
        """Whether a row lies in the span of the rows added so far."""
        trial = SparseRowReducer(self.field, self.cols)
        trial.pivots = {c: dict(r) for c, r in self.pivots.items()}
        return not trial.add_row(entries)
