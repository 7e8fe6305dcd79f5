import pytest

from affschur import relations
from affschur.aschur import Morphism

QUICK = {
    "secondone": {}, "zeroforks": {"a": 2}, "assrel": {"a": 1, "b": 2, "c": 1}, "mergesplit": {"a": 2, "b": 1},
    "tourists": {"a": 2, "b": 1}, "sliders": {"a": 1, "b": 1, "c": 2}, "symmetric": {"a": 1, "b": 2, "c": 1},
    "swallows": {"a": 2, "b": 2}, "squareswitch1": {"a": 2, "b": 1, "c": 1, "d": 1},
    "squareswitch2": {"a": 2, "b": 1, "c": 1, "d": 1}, "jonrel": {"a": 2, "b": 2, "d": 1},
    "otherjon": {"a": 2, "b": 1, "d": 1}, "bingley": {"a": 2, "b": 1}, "rome": {"a": 1, "b": 2},
    "averagedotslide": {"r": 2}, "skiving": {"r": 2}, "skiving2": {"r": 2}, "crazy": {"a": 2, "b": 1},
}


@pytest.mark.parametrize("name", sorted(QUICK))
def test_relation_instance(name):
    assert relations.verify_relation(name, N=4, **QUICK[name])


def test_every_relation_has_a_grid():
    for name in relations.RELATIONS:
        assert next(iter(relations.relation_grid(name, 1, 1)), None) is not None


def test_negative_control_detects_a_broken_side():
    results = relations.relation_sides("jonrel", a=2, b=2, d=1)
    label, lhs, rhs = results[0]
    assert relations.sides_agree(lhs, rhs)
    assert not relations.sides_agree(lhs, rhs * 2)


def test_generalized_binomial():
    assert relations.generalized_binomial(4, 2) == 6
    assert relations.generalized_binomial(-1, 2) == 1
    assert relations.generalized_binomial(3, -1) == 0
