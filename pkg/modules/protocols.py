"""Key exchange over finite monoids: commuting-sets (Shpilrain-Ushakov) and Stickel"""
from __future__ import annotations

import json
import logging
import random
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

from sympy import primefactors

from modules.cells import CellStructure, index_period
from modules.diagram import Diagram, FamilyId, compose, cup_cap, identity, transposition
from modules.errors import ConfigurationError, ProtocolError, ValidationError
from modules.families import FamilyInstance, generators
from modules.monoid import FiniteMonoid
from modules.settings import Settings

logger = logging.getLogger('cellgap')

settings = Settings()

SCHEMA_VERSION = 1


class DiagramPlatform:
    """
    A diagram monoid acting on the ideal of diagrams with at most max_width
    through strands. Secrets are words in the family generators; public
    elements are drawn from the ideal.
    """

    def __init__(self, fi: FamilyInstance, max_width: Optional[int] = None,
                 gens: Optional[Sequence[Diagram]] = None):
        if max_width is not None and not 0 <= max_width < fi.n:
            raise ValidationError(f"Truncation width must lie in [0, {fi.n}), got {max_width}")
        self.instance = fi
        self.max_width = max_width
        self.gens: List[Diagram] = list(gens) if gens is not None else generators(fi)
        self.one = identity(fi.n)

    @property
    def description(self) -> str:
        return self.instance.label + ("" if self.max_width is None else f",>=J_{self.max_width}")

    def mul(self, x: Diagram, y: Diagram) -> Diagram:
        return compose(x, y)

    def in_ideal(self, x: Diagram) -> bool:
        return self.max_width is None or x.width <= self.max_width

    def serialize(self, x: Diagram) -> str:
        return x.serialize()


class TablePlatform:
    """A FiniteMonoid given by its table; elements are indices."""

    def __init__(self, monoid: FiniteMonoid, gens: Optional[Sequence[int]] = None):
        self.monoid = monoid
        self.gens: List[int] = list(gens) if gens is not None else \
            [x for x in range(monoid.size) if x != monoid.unit]
        self.one = monoid.unit

    @property
    def description(self) -> str:
        return self.monoid.name

    def mul(self, x: int, y: int) -> int:
        return self.monoid.mul(x, y)

    def in_ideal(self, x: int) -> bool:
        return True

    def serialize(self, x: int) -> str:
        return self.monoid.labels[x]


def product(platform, word: Sequence[Any]):
    out = platform.one
    for x in word:
        out = platform.mul(out, x)
    return out


def power(platform, x, e: int):
    """x^e by square-and-multiply; x^0 is the unit."""
    if e < 0:
        raise ValidationError(f"Exponent must be nonnegative, got {e}")
    result, base = platform.one, x
    while e:
        if e & 1:
            result = platform.mul(result, base)
        base = platform.mul(base, base)
        e >>= 1
    return result


def random_word(platform, gens: Sequence[Any], rng: random.Random, max_length: int):
    """Product of a uniformly random word of length 1..max_length; the unit when gens is empty."""
    if not gens:
        return platform.one
    length = rng.randint(1, max(1, max_length))
    return product(platform, [rng.choice(gens) for _ in range(length)])


def random_public(platform, rng: random.Random, max_length: int, attempts: int = 1000):
    """Random word in the generators, extended until it falls into the ideal."""
    if not platform.gens:
        raise ConfigurationError(f"{platform.description} has no generators to sample from")
    for _ in range(attempts):
        x = random_word(platform, platform.gens, rng, max_length)
        for _ in range(8 * max(1, max_length)):
            if platform.in_ideal(x):
                return x
            x = platform.mul(x, rng.choice(platform.gens))
    raise ConfigurationError(f"No element of the ideal found in {platform.description}")


def commuting_generator_sets(fi: FamilyInstance, a_count: int, b_count: int) -> Tuple[List[Diagram], List[Diagram]]:
    """
    A uses the generators at strand positions 0..a_count-1, B the last
    b_count positions. Positions at distance >= 2 commute, so at least one
    position separates the two ranges.
    """
    positions = fi.n - 1
    if a_count < 0 or b_count < 0 or a_count + b_count + 1 > positions:
        raise ConfigurationError(f"{a_count} + {b_count} generators do not fit with a gap into {positions} positions")
    if fi.family == FamilyId.TL:
        make = [lambda i: cup_cap(fi.n, i)]
    elif fi.family == FamilyId.BRAUER:
        make = [lambda i: cup_cap(fi.n, i), lambda i: transposition(fi.n, i)]
    elif fi.family == FamilyId.SYMMETRIC:
        make = [lambda i: transposition(fi.n, i)]
    else:
        raise ConfigurationError(f"No far-commuting generators defined for {fi.family.value}")
    a = [f(i) for i in range(a_count) for f in make]
    b = [f(i) for i in range(positions - b_count, positions) for f in make]
    return a, b


@dataclass(frozen=True)
class Transcript:
    protocol: str
    platform: str
    seed: int
    public: Dict[str, str]
    messages: Dict[str, str]
    secrets: Tuple[str, str]

    @property
    def equal(self) -> bool:
        return self.secrets[0] == self.secrets[1]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'schema_version': SCHEMA_VERSION,
            'protocol': self.protocol,
            'monoid': self.platform,
            'seed': self.seed,
            'public': self.public,
            'messages': self.messages,
            'secrets': {'alice': self.secrets[0], 'bob': self.secrets[1]},
            'equal': self.equal,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def _check_commuting(platform, a: Sequence[Any], b: Sequence[Any]) -> None:
    for x in a:
        for y in b:
            if platform.mul(x, y) != platform.mul(y, x):
                raise ConfigurationError(f"Generators {platform.serialize(x)} and {platform.serialize(y)} do not commute")


def _agreed(transcript: Transcript) -> Transcript:
    if not transcript.equal:
        alice, bob = transcript.secrets
        raise ProtocolError(f"{transcript.protocol} on {transcript.platform} with seed {transcript.seed}: "
                            f"secrets differ ({alice} vs {bob})", transcript)
    return transcript


def run_su(platform, a_gens: Sequence[Any], b_gens: Sequence[Any], seed: Optional[int] = None,
           g: Any = None, word_length: Optional[int] = None) -> Transcript:
    """
    Commuting-sets exchange: Alice sends a g a', Bob sends b g b', both
    arrive at a b g b' a'. Raises ProtocolError if the secrets differ,
    which needs a non-associative platform.
    """
    seed = settings.get('protocol_default_seed') if seed is None else seed
    word_length = word_length or settings.get('protocol_word_length')
    _check_commuting(platform, a_gens, b_gens)
    rng = random.Random(seed)
    if g is None:
        g = random_public(platform, rng, word_length)

    a, a2 = (random_word(platform, a_gens, rng, word_length) for _ in range(2))
    b, b2 = (random_word(platform, b_gens, rng, word_length) for _ in range(2))
    to_bob = product(platform, [a, g, a2])
    to_alice = product(platform, [b, g, b2])
    alice = product(platform, [a, to_alice, a2])
    bob = product(platform, [b, to_bob, b2])
    s = platform.serialize
    return _agreed(Transcript('su', platform.description, seed, {'g': s(g)},
                              {'alice': s(to_bob), 'bob': s(to_alice)}, (s(alice), s(bob))))


def noncommuting_pair(platform, rng: random.Random, word_length: int, attempts: int = 1000):
    for _ in range(attempts):
        g = random_public(platform, rng, word_length)
        h = random_public(platform, rng, word_length)
        if platform.mul(g, h) != platform.mul(h, g):
            return g, h
    raise ConfigurationError(f"No noncommuting pair found in {platform.description}")


def run_stickel(platform, seed: Optional[int] = None, g: Any = None, h: Any = None,
                max_exponent: int = 256, word_length: Optional[int] = None) -> Transcript:
    """
    Stickel's exchange: Alice sends g^a h^a', Bob sends g^b h^b', both
    arrive at g^(a+b) h^(a'+b'). Raises ProtocolError if the secrets differ.
    """
    seed = settings.get('protocol_default_seed') if seed is None else seed
    word_length = word_length or settings.get('protocol_word_length')
    rng = random.Random(seed)
    if g is None or h is None:
        g, h = noncommuting_pair(platform, rng, word_length)
    elif platform.mul(g, h) == platform.mul(h, g):
        raise ConfigurationError("Stickel's protocol needs gh != hg")

    a, a2, b, b2 = (rng.randint(0, max_exponent) for _ in range(4))
    to_bob = platform.mul(power(platform, g, a), power(platform, h, a2))
    to_alice = platform.mul(power(platform, g, b), power(platform, h, b2))
    alice = product(platform, [power(platform, g, a), to_alice, power(platform, h, a2)])
    bob = product(platform, [power(platform, g, b), to_bob, power(platform, h, b2)])
    s = platform.serialize
    return _agreed(Transcript('stickel', platform.description, seed, {'g': s(g), 'h': s(h)},
                              {'alice': s(to_bob), 'bob': s(to_alice)}, (s(alice), s(bob))))


@dataclass(frozen=True)
class DhReport:
    element: str
    index: int
    period: int
    largest_prime: int  # 1 for period 1
    h_order: int
    divides: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            'element': self.element,
            'index': self.index,
            'period': self.period,
            'largest_prime_factor': self.largest_prime,
            'h_order': self.h_order,
            'divides': self.divides,
        }


def dh_suitability(monoid: FiniteMonoid, a: int, cells: Optional[CellStructure] = None) -> DhReport:
    info = index_period(monoid, a, cells)
    largest = max(primefactors(info.period), default=1)
    return DhReport(monoid.labels[a], info.index, info.period, int(largest), info.h_order, info.divides)
