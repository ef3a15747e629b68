"""Prime Field Backend Implementation"""
import logging
from fractions import Fraction
from typing import Any, Sequence

import numpy as np

logger = logging.getLogger('cellgap')

# Residues are multiplied in int64 before reduction
MAX_PRIME = 2 ** 31


class PrimeFieldBackend:
    """Arithmetic over F_p with 64-bit residues."""

    def __init__(self, p: int):
        if p >= MAX_PRIME:
            raise ValueError(f"Prime {p} too large for 64-bit residue arithmetic")
        self.p = p
        self.char = p
        self.name = f"F_{p}"

    def convert(self, value: Any) -> int:
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ValueError(f"{value} is not defined modulo {self.p}")
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        return int(value) % self.p

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def add(self, x: int, y: int) -> int:
        return (x + y) % self.p

    def sub(self, x: int, y: int) -> int:
        return (x - y) % self.p

    def mul(self, x: int, y: int) -> int:
        return x * y % self.p

    def inv(self, x: int) -> int:
        if x % self.p == 0:
            raise ZeroDivisionError("Zero has no inverse")
        return pow(x, -1, self.p)

    def format(self, x: int) -> str:
        return str(x)

    def rank(self, rows: Sequence[Sequence[int]]) -> int:
        """Gaussian elimination mod p, pivoting on the first nonzero entry of each column."""
        if not rows or not rows[0]:
            return 0
        p = self.p
        a = np.array(rows, dtype=np.int64) % p
        n_rows, n_cols = a.shape
        r = 0
        for col in range(n_cols):
            if r == n_rows:
                break
            nonzero = np.nonzero(a[r:, col])[0]
            if nonzero.size == 0:
                continue
            pivot = r + int(nonzero[0])
            if pivot != r:
                a[[r, pivot]] = a[[pivot, r]]
            a[r] = a[r] * pow(int(a[r, col]), -1, p) % p
            others = np.nonzero(a[:, col])[0]
            others = others[others != r]
            if others.size:
                a[others] = (a[others] - np.outer(a[others, col], a[r]) % p) % p
            r += 1
        return r
