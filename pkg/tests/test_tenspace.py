from affschur.combinat import Permutation, standard_word
from affschur.daha import AHElement
from affschur.polyring import Poly
from affschur.tenspace import InducedVector, TensorVector, normalize, project, right_act, ytt_act


def test_generator_and_terms():
    v = InducedVector.generator((1, 1))
    assert v.terms == {Permutation((1, 2)): Poly.one(2)}


def test_right_action_matches_algebra_product():
    v = InducedVector.generator((1, 1, 1))
    a, b = AHElement.simple(1, 3), AHElement.x(2, 3) * AHElement.simple(2, 3)
    assert right_act(right_act(v, a), b) == right_act(v, a * b)


def test_young_subgroup_absorbed():
    v = InducedVector.generator((2,))
    assert v.right_simple(1) == v
    assert normalize((2,), Permutation((2, 1)), Poly.one(2)) == v


def test_ytt_single_strand():
    tv = TensorVector.basis(1, (1,))
    series = ytt_act(1, 1, tv, 3)
    proj = [project(series[d]) for d in range(4)]
    x1 = Poly.variable(1, 1)
    expected = [Poly.one(1), Poly.one(1), x1, x1 ** 2]
    for d, f in enumerate(expected):
        assert proj[d][(1,)] == InducedVector.from_terms((1,), {Permutation((1,)): f})


def test_ytt_off_diagonal_moves_weight():
    tv = TensorVector.basis(2, standard_word((0, 1)))
    series = ytt_act(1, 2, tv, 2)
    assert set(project(series[1])) == {(1, 0)}
    assert series[0].is_zero()
