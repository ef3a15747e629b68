"""Rational Field Backend Implementation"""
import logging
from fractions import Fraction
from typing import Any, List, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

logger = logging.getLogger('cellgap')


class RationalBackend:
    """Exact arithmetic over Q: Fraction scalars, DomainMatrix for dense rank."""

    char = 0
    name = 'Q'

    def convert(self, value: Any) -> Fraction:
        return value if isinstance(value, Fraction) else Fraction(value)

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def add(self, x: Fraction, y: Fraction) -> Fraction:
        return x + y

    def sub(self, x: Fraction, y: Fraction) -> Fraction:
        return x - y

    def mul(self, x: Fraction, y: Fraction) -> Fraction:
        return x * y

    def inv(self, x: Fraction) -> Fraction:
        if x == 0:
            raise ZeroDivisionError("Zero has no inverse")
        return 1 / x

    def format(self, x: Fraction) -> str:
        return str(x)

    def rank(self, rows: Sequence[Sequence[Fraction]]) -> int:
        """
        Exact rank by elimination over QQ.

        Args:
            rows: Dense rows, all of equal length

        Returns:
            The rank of the matrix
        """
        if not rows or not rows[0]:
            return 0
        data: List[List[Any]] = [[QQ(x.numerator, x.denominator) for x in row] for row in rows]
        matrix = DomainMatrix(data, (len(data), len(data[0])), QQ)
        return int(matrix.rank())
