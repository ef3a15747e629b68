"""(3,p)-adic combinatorics and simple Temperley-Lieb dimensions

p = None stands for p = infinity, the characteristic 0 case. A number x is
written x = x_0 + sum_{i>=1} 3 p^(i-1) x_i with x_0 in {0,1,2} and
x_i in {0..p-1}; for p = infinity there is a single upper digit x_1 = x // 3.

Valuations follow a shifted convention: nu_3p(x) = -1 when 3 does not divide
x, else nu_p(x / 3). The digit singled out by nu_3p(x) is then x_(nu+1).
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, inf
from typing import Optional, Tuple

from sympy import isprime

from modules.errors import ValidationError

logger = logging.getLogger('cellgap')


def _check_prime(p: Optional[int]) -> None:
    if p is not None and not isprime(p):
        raise ValidationError(f"Expected a prime or infinity, got {p}")


@dataclass(frozen=True)
class AdicExpansion:
    x: int
    p: Optional[int]
    digits: Tuple[int, ...]  # x_0, x_1, ...

    def digit(self, i: int) -> int:
        return self.digits[i] if i < len(self.digits) else 0

    def value(self) -> int:
        total = self.digit(0)
        for i, d in enumerate(self.digits[1:], start=1):
            total += 3 * (1 if self.p is None else self.p ** (i - 1)) * d
        return total

    def __str__(self) -> str:
        return "[" + ",".join(str(d) for d in reversed(self.digits)) + "]"


def adic(x: int, p: Optional[int] = None) -> AdicExpansion:
    if x < 0:
        raise ValidationError(f"Expansions are defined for x >= 0, got {x}")
    _check_prime(p)
    x0 = x % 3
    rest = (x - x0) // 3
    if p is None:
        digits = [x0, rest]
    else:
        digits = [x0]
        while rest:
            digits.append(rest % p)
            rest //= p
    while len(digits) > 1 and digits[-1] == 0:
        digits.pop()
    return AdicExpansion(x, p, tuple(digits))


def nu_p(x: int, p: Optional[int] = None) -> float:
    """p-adic valuation; every nonzero x has valuation 0 at infinity."""
    if x == 0:
        return inf
    if p is None:
        return 0
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def nu_3p(x: int, p: Optional[int] = None) -> float:
    if x % 3:
        return -1
    return nu_p(x // 3, p)


def digit_leq(x: int, y: int, p: Optional[int] = None) -> bool:
    """x is digit-wise at most y."""
    a, b = adic(x, p), adic(y, p)
    return all(a.digit(i) <= b.digit(i) for i in range(max(len(a.digits), len(b.digits))))


def digit_leq_strict(x: int, y: int, p: Optional[int] = None) -> bool:
    """digit_leq, equal nu_3p, and the digit picked out by nu_3p agrees."""
    if not digit_leq(x, y, p):
        return False
    v = nu_3p(x, p)
    if v != nu_3p(y, p):
        return False
    if v == inf:
        return True
    i = int(v) + 1
    return adic(x, p).digit(i) == adic(y, p).digit(i)


def e_number(n: int, k: int, p: Optional[int] = None) -> int:
    if n < 0 or k < 0:
        raise ValidationError(f"Need n, k >= 0, got ({n}, {k})")
    if (n - k) % 2:
        return 0
    mid = (n + k) // 2
    if nu_3p(k, p) == nu_3p(mid, p) and digit_leq_strict(k, mid, p):
        return 1
    if nu_3p(k, p) < nu_3p(mid, p) and mid >= 1 and digit_leq(k, mid - 1, p):
        return -1
    return 0


def e_coefficient(n: int, k: int, p: Optional[int] = None) -> int:
    """Entry (n, k) of the coefficient matrix; rows and columns start at 0."""
    return e_number(n + 2, k + 2, p)


def cell_module_dim(n: int, k: int) -> int:
    """binom(n, c) - binom(n, c - 1) with c = (n - k) / 2 cups; 0 off parity."""
    if k < 0 or k > n or (n - k) % 2:
        return 0
    c = (n - k) // 2
    return comb(n, c) - (comb(n, c - 1) if c >= 1 else 0)


def _check_tl_apex(n: int, k: int) -> None:
    if n < 0 or not 0 <= k <= n:
        raise ValidationError(f"Need 0 <= k <= n, got n={n}, k={k}")
    if (n - k) % 2:
        raise ValidationError(f"TL_{n} has no cell with {k} through strands (parity)")


@lru_cache(maxsize=4096)
def simple_dim_tl(n: int, k: int, p: Optional[int] = None) -> int:
    """Dimension of the simple TL_n-representation with apex J_k in characteristic p."""
    _check_tl_apex(n, k)
    _check_prime(p)
    c = (n - k) // 2
    return sum(e_number(n - 2 * r + 1, k + 1, p) * cell_module_dim(n, n - 2 * r) for r in range(c + 1))


def simple_dims_tl(n: int, p: Optional[int] = None) -> Tuple[int, ...]:
    """All simple dimensions of TL_n, ordered by k ascending."""
    return tuple(simple_dim_tl(n, k, p) for k in range(n % 2, n + 1, 2))


def tl_lower_bound(n: int, k: int) -> Fraction:
    """binom(n, c) / ((n - c + 1)(n - c + 2)), valid in every characteristic for k not in {0, 1}."""
    _check_tl_apex(n, k)
    if k in (0, 1):
        return Fraction(1)
    c = (n - k) // 2
    return Fraction(comb(n, c), (n - c + 1) * (n - c + 2))
