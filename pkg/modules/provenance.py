from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Optional

from sympy import N, sympify


class Status(Enum):
    EXACT = 'exact'
    LOWER_BOUND = 'lower-bound'
    UNKNOWN = 'unknown'
    HEURISTIC = 'heuristic'


@dataclass(frozen=True)
class SourceConfig:
    description: str
    status: Status  # what a value from this source certifies
    note: str = ''


SOURCES: Dict[str, SourceConfig] = {
    'tl-simple-dims': SourceConfig(
        description="Simple TL dimensions from the (3,p)-adic alternating sum",
        status=Status.EXACT,
    ),
    'gram-rank': SourceConfig(
        description="Rank of the Gram matrix of an idempotent J-cell with trivial H-cell",
        status=Status.EXACT,
    ),
    'ext-vanishing': SourceConfig(
        description="Simple dimensions plus Ext between the trivial representations",
        status=Status.EXACT,
        note="a nonsplit extension of 1_b and 1_t caps the gap at 2",
    ),
    'prook-semisimple': SourceConfig(
        description="Planar rook monoids are semisimple with simple dimensions binom(n, k)",
        status=Status.EXACT,
    ),
    'tl-small-k': SourceConfig(
        description="TL truncations with at most 2*sqrt(n) through strands",
        status=Status.LOWER_BOUND,
        note="gap bound in characteristic 0 only",
    ),
    'tl-large-k': SourceConfig(
        description="TL truncations with 2*sqrt(n) <= k <= n - sqrt(n)",
        status=Status.LOWER_BOUND,
        note="gap bound in characteristic 0 only",
    ),
    'prook-truncation': SourceConfig(
        description="Planar rook Rees truncations around 2*sqrt(n) through strands",
        status=Status.LOWER_BOUND,
    ),
    'motzkin-via-tl': SourceConfig(
        description="Embedding of TL_(n-1) into the Motzkin monoid",
        status=Status.LOWER_BOUND,
        note="the gap value is expected but not established",
    ),
    'brauer-via-tl': SourceConfig(
        description="Embedding of TL_n into the Brauer monoid (char != 2)",
        status=Status.LOWER_BOUND,
    ),
    'rook-via-prook': SourceConfig(
        description="Embedding of the planar rook monoid (char not dividing n!)",
        status=Status.LOWER_BOUND,
    ),
    'rookbrauer-via-motzkin': SourceConfig(
        description="Embedding of the Motzkin monoid into the rook-Brauer monoid",
        status=Status.LOWER_BOUND,
    ),
    'partition-via-planar': SourceConfig(
        description="Embedding of the planar partition monoid, computed through TL_2n",
        status=Status.LOWER_BOUND,
    ),
    'cell-size': SourceConfig(
        description="Semisimple dimension |L| / |H| of the idempotent J-cells",
        status=Status.EXACT,
    ),
    'burnside-brauer': SourceConfig(
        description="Root of the largest simple dimension by cl(M) - 1",
        status=Status.LOWER_BOUND,
    ),
    'burnside-brauer-proxy': SourceConfig(
        description="Burnside-Brauer root taken of the largest semisimple dimension",
        status=Status.HEURISTIC,
        note="the semisimple dimension only bounds the simple dimension from above",
    ),
    'cyclic-group': SourceConfig(
        description="Cyclotomic decomposition of the group algebra of Z/nZ",
        status=Status.EXACT,
    ),
    'unavailable': SourceConfig(
        description="No established value",
        status=Status.UNKNOWN,
    ),
}


@dataclass(frozen=True)
class Evidence:
    """A value together with what certifies it; value None means unknown or unbounded."""
    value: Any
    status: Status
    source: str

    def __post_init__(self) -> None:
        if self.source not in SOURCES:
            raise KeyError(f"Unknown provenance source: {self.source}")

    @classmethod
    def of(cls, value: Any, source: str, status: Optional[Status] = None) -> "Evidence":
        return cls(value, status or SOURCES[source].status, source)

    @classmethod
    def unknown(cls) -> "Evidence":
        return cls(None, Status.UNKNOWN, 'unavailable')

    @property
    def known(self) -> bool:
        return self.value is not None

    def exact_text(self) -> str:
        return '-' if self.value is None else str(sympify(self.value))

    def decimal_text(self, digits: int = 6) -> str:
        if self.value is None:
            return '-'
        value = sympify(self.value)
        if value.is_Integer:
            return str(value)
        return str(N(value, digits))

    def to_dict(self) -> Dict[str, Any]:
        value = None if self.value is None else sympify(self.value)
        return {
            'value': None if value is None else str(value),
            'decimal': self.decimal_text(),
            'status': self.status.value,
            'source': self.source,
        }
