import numpy as np
import pytest

from modules import monoid as monoid_module
from modules.errors import ResourceGuardError, ValidationError
from modules.families import cyclic_monoid, transformation_monoid
from modules.monoid import FiniteMonoid, trivial_monoid


def test_cyclic_monoid_powers():
    c = cyclic_monoid(2, 3)
    a = c.index_of(1)
    assert c.size == 5
    assert c.power(a, 0) == c.unit
    assert c.power(a, 5) == c.power(a, 2)
    assert c.product([a, a, a]) == c.power(a, 3)
    assert c.check_associative()
    assert not c.is_group()
    assert cyclic_monoid(0, 4).is_group()


def test_transformation_monoid(t3):
    assert len(t3) == 27
    assert t3.check_associative()
    constant = t3.index_of((0, 0, 0))
    swap = t3.index_of((1, 0, 2))
    assert t3.mul(constant, swap) == constant
    assert t3.mul(swap, constant) == t3.index_of((1, 1, 1))


def test_opposite_transposes(t3):
    op = t3.opposite()
    assert op.mul(1, 5) == t3.mul(5, 1)
    assert op.name == "T_3^op"


def test_unit_is_validated():
    with pytest.raises(ValidationError):
        FiniteMonoid(np.array([[0, 0], [0, 1]]), 1)
    with pytest.raises(ValidationError):
        FiniteMonoid(np.array([[0, 2], [1, 1]]), 0)


def test_dump_load():
    c = cyclic_monoid(1, 2)
    again = FiniteMonoid.load(c.dump(), name="C")
    assert np.array_equal(again.table, c.table)
    assert again.unit == c.unit


def test_load_rejects_nonassociative():
    # 0 unit, 1*1 = 2, 1*2 = 1, 2*1 = 2, 2*2 = 2
    text = "3 0\n0 1 2\n1 2 1\n2 2 2\n"
    with pytest.raises(ValidationError):
        FiniteMonoid.load(text)
    with pytest.raises(ValidationError):
        FiniteMonoid.load("2 0\n0 1\n")


def test_submonoid_table():
    c = cyclic_monoid(1, 2)
    sub = c.submonoid_table([1, 2], 2, "H")
    assert sub.is_group()
    with pytest.raises(ValidationError):
        c.submonoid_table([0, 1], 0, "bad")


def test_table_guard(monkeypatch):
    monkeypatch.setattr(monoid_module.settings, 'get',
                        lambda key: 10 if key == 'table_max_size' else None)
    with pytest.raises(ResourceGuardError):
        transformation_monoid(3)


def test_trivial_monoid():
    one = trivial_monoid()
    assert one.size == 1 and one.is_group()
