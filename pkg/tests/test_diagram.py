import pytest
from hypothesis import given, strategies as st

from modules.diagram import (Diagram, FamilyId, compose, cup_cap, delete_strand, factorize, glue, identity,
                             is_member, is_planar, merge_strands, reassemble_factorization, shift_strand, star,
                             transposition)
from modules.errors import SizeMismatchError, ValidationError
from modules.families import FamilyInstance, enumerate_family

BRAUER_3 = enumerate_family(FamilyInstance(FamilyId.BRAUER, 3))
PARTITION_2 = enumerate_family(FamilyInstance(FamilyId.PARTITION, 2))
MOTZKIN_3 = enumerate_family(FamilyInstance(FamilyId.MOTZKIN, 3))

diagrams = st.sampled_from(BRAUER_3 + MOTZKIN_3)


def test_parse_serialize():
    d = Diagram.parse("3;0,1|2,5|3,4")
    assert d.n == 3
    assert d.width == 1
    assert d.serialize() == "3;0,1|2,5|3,4"
    assert Diagram.parse(" 3;3,4|2,5|1,0 ") == d


@pytest.mark.parametrize("text", ["", "x;0,1", "2;0,1|2", "2;0,1|1,2|3", "2;0,1|2,3|4,5"])
def test_parse_rejects(text):
    with pytest.raises(ValidationError):
        Diagram.parse(text)


def test_family_aliases():
    assert FamilyId.parse("Temperley-Lieb") == FamilyId.TL
    assert FamilyId.parse("pRo") == FamilyId.PLANAR_ROOK
    assert FamilyId.parse("RoBr") == FamilyId.ROOK_BRAUER
    with pytest.raises(ValidationError):
        FamilyId.parse("braid")


def test_cup_cap_relations():
    e0, e1 = cup_cap(4, 0), cup_cap(4, 1)
    square, loops = glue(e0, e0)
    assert square == e0 and loops == 1
    assert glue(compose(e0, e1), e0) == (e0, 0)
    assert compose(e0, cup_cap(4, 2)) == compose(cup_cap(4, 2), e0)


def test_generator_shapes():
    assert transposition(3, 0).width == 3
    assert delete_strand(3, 1).width == 2
    assert shift_strand(3, 0).width == 2
    assert merge_strands(3, 0).width == 2
    assert not is_planar(transposition(3, 0))
    assert is_planar(cup_cap(3, 1))
    assert is_member(shift_strand(3, 0), FamilyId.PLANAR_ROOK)
    assert not is_member(cup_cap(3, 0), FamilyId.PLANAR_ROOK)
    assert is_member(merge_strands(3, 0), FamilyId.PLANAR_PARTITION)
    assert not is_member(merge_strands(3, 0), FamilyId.BRAUER)


def test_strand_index_checked():
    with pytest.raises(ValidationError):
        cup_cap(3, 2)


def test_size_mismatch():
    with pytest.raises(SizeMismatchError):
        compose(identity(2), identity(3))


@given(diagrams)
def test_identity_is_neutral(a):
    one = identity(a.n)
    assert compose(a, one) == a
    assert compose(one, a) == a


@given(diagrams, diagrams, diagrams)
def test_composition_associative(a, b, c):
    if a.n == b.n == c.n:
        assert compose(compose(a, b), c) == compose(a, compose(b, c))


@given(diagrams, diagrams)
def test_star_reverses_products(a, b):
    if a.n == b.n:
        assert star(compose(a, b)) == compose(star(b), star(a))
        assert star(star(a)) == a


def test_width_never_grows():
    for a in PARTITION_2:
        for b in PARTITION_2:
            assert compose(a, b).width <= min(a.width, b.width)


def test_factorization_reassembles():
    for d in PARTITION_2 + BRAUER_3:
        f = factorize(d)
        assert f.width == d.width
        assert f.bottom_half.m == f.top_half.m == d.width
        assert reassemble_factorization(f) == d
