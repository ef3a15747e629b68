import json
import random

import pytest

from modules.diagram import Diagram, FamilyId, compose, cup_cap
from modules.errors import ConfigurationError, ProtocolError, ValidationError
from modules.families import FamilyInstance, cyclic_monoid
from modules.protocols import (DiagramPlatform, TablePlatform, commuting_generator_sets, dh_suitability, power,
                               random_public, run_stickel, run_su)

TL10 = FamilyInstance(FamilyId.TL, 10)


@pytest.fixture(scope="module")
def tl_platform():
    return DiagramPlatform(TL10, max_width=4)


@pytest.fixture(scope="module")
def brauer_platform():
    return DiagramPlatform(FamilyInstance(FamilyId.BRAUER, 5))


def test_commuting_sets_commute():
    a, b = commuting_generator_sets(TL10, 2, 3)
    assert len(a) == 2 and len(b) == 3
    assert all(compose(x, y) == compose(y, x) for x in a for y in b)
    a, b = commuting_generator_sets(FamilyInstance(FamilyId.BRAUER, 6), 2, 2)
    assert len(a) == 4 and len(b) == 4
    with pytest.raises(ConfigurationError):
        commuting_generator_sets(TL10, 5, 4)
    with pytest.raises(ConfigurationError):
        commuting_generator_sets(FamilyInstance(FamilyId.MOTZKIN, 6), 1, 1)


def test_public_element_lies_in_ideal(tl_platform):
    rng = random.Random(3)
    for _ in range(20):
        assert random_public(tl_platform, rng, 6).width <= 4


@pytest.mark.parametrize("seed", range(100))
def test_su_secrets_agree(tl_platform, seed):
    a, b = commuting_generator_sets(TL10, 2, 3)
    assert run_su(tl_platform, a, b, seed=seed).equal


@pytest.mark.parametrize("seed", range(100))
def test_stickel_secrets_agree(brauer_platform, seed):
    assert run_stickel(brauer_platform, seed=seed).equal


def test_runs_are_reproducible(tl_platform):
    a, b = commuting_generator_sets(TL10, 2, 3)
    assert run_su(tl_platform, a, b, seed=11).to_dict() == run_su(tl_platform, a, b, seed=11).to_dict()


def test_empty_secret_sets_share_g(tl_platform):
    g = Diagram.parse("10;0,1|2,3|4,5|6,7|8,9|10,11|12,13|14,15|16,17|18,19")
    transcript = run_su(tl_platform, [], [], seed=0, g=g)
    assert transcript.secrets == (g.serialize(), g.serialize())


def test_zero_exponents_give_the_unit(brauer_platform):
    transcript = run_stickel(brauer_platform, seed=1, max_exponent=0)
    assert transcript.equal
    assert transcript.messages['alice'] == brauer_platform.one.serialize()


def test_protocols_reject_bad_inputs(tl_platform, brauer_platform):
    with pytest.raises(ConfigurationError):
        run_su(tl_platform, [cup_cap(10, 0)], [cup_cap(10, 1)], seed=0)
    e = cup_cap(5, 0)
    with pytest.raises(ConfigurationError):
        run_stickel(brauer_platform, seed=0, g=e, h=e)
    with pytest.raises(ValidationError):
        DiagramPlatform(TL10, max_width=10)
    with pytest.raises(ValidationError):
        power(brauer_platform, e, -1)


def test_transcript_json(tl_platform):
    a, b = commuting_generator_sets(TL10, 2, 3)
    payload = json.loads(run_su(tl_platform, a, b, seed=5).to_json())
    assert payload['schema_version'] == 1
    assert payload['protocol'] == 'su'
    assert payload['monoid'] == "TL_10,>=J_4"
    assert payload['equal'] is True


def test_table_platform():
    monoid = cyclic_monoid(2, 6)
    platform = TablePlatform(monoid)
    assert run_su(platform, [1], [1], seed=2).equal


def test_dh_suitability(br4):
    c = cyclic_monoid(3, 2)
    report = dh_suitability(c, c.index_of(1))
    assert (report.index, report.period, report.largest_prime, report.h_order) == (3, 2, 2, 2)
    cycle = br4.index_of(Diagram.from_blocks(4, [(0, 5), (1, 6), (2, 7), (3, 4)]))
    report = dh_suitability(br4, cycle)
    assert (report.period, report.largest_prime, report.h_order, report.divides) == (4, 2, 24, True)
    idempotent = dh_suitability(br4, br4.index_of(cup_cap(4, 1)))
    assert idempotent.period == 1 and idempotent.largest_prime == 1


class MidpointPlatform:
    """(x + y) // 2 on integers: commutative, not associative."""
    description = "midpoint"
    one = 0
    gens = [8, 0]

    def mul(self, x, y):
        return (x + y) // 2

    def in_ideal(self, x):
        return True

    def serialize(self, x):
        return str(x)


def test_disagreeing_secrets_raise():
    with pytest.raises(ProtocolError) as info:
        run_su(MidpointPlatform(), [8], [0], seed=1, g=16, word_length=1)
    transcript = info.value.transcript
    assert transcript.secrets == ('3', '1')
    assert not transcript.equal
