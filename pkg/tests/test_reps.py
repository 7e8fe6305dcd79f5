import pytest
import sympy

from affschur import reps
from affschur.reps import u


def test_sequence_validation():
    assert reps.validate_sequence(reps.PolySequence([u - 3, 1]), 1)
    s = reps.PolySequence.parse("(u-1)^2, (u-1)")
    assert reps.validate_sequence(s, 3)
    assert [p.as_expr() for p in reps.drinfeld_polys(s)] == [u - 1]
    assert not reps.validate_sequence(reps.PolySequence.parse("u-1, u-2"))
    assert not reps.validate_sequence(reps.PolySequence([2 * u, 1]))


def test_irrational_roots_rejected():
    with pytest.raises(reps.IrrationalRoot):
        reps.segments_from_sequence(reps.PolySequence([u**2 - 2, 1]))


@pytest.mark.parametrize("text,expected", [
    ("(u-1)^2, (u-1)", [(1, 2), (1, 1)]),
    ("u-5, 1", [(5, 5)]),
    ("u, u, u", [(0, 2)]),
    ("u*(u-1), 1", [(1, 1), (0, 0)]),
])
def test_segments(text, expected):
    segs = reps.segments_from_sequence(reps.PolySequence.parse(text))
    assert [(s.b, s.a) for s in segs] == expected
    assert reps.is_dominant(segs)


def test_evaluation_module():
    M = reps.evaluation_module(2, 1, 3)
    assert M.dim == 3 and reps.rtt_holds(M)
    v, values = reps.highest_weight(M)
    assert [sympy.simplify(a) for a in values] == [sympy.simplify((u - 1) / (u - 2)), 1, 1]
    W = reps.evaluation_module(0, 2, 3)
    assert W.dim == 3
    _, values = reps.highest_weight(W)
    assert [sympy.cancel(a) for a in values] == [(u + 1) / u, (u + 1) / u, 1]


def test_standard_module_dimensions_and_rtt():
    segs = reps.make_segments([(1, 1), (0, 0)])
    M = reps.standard_module(segs, 2)
    assert M.dim == 4 and reps.rtt_holds(M)
    assert reps.irreducible_quotient(M).dim == 3


def test_trivial_module():
    M = reps.standard_module([], 2)
    assert M.dim == 1
    _, values = reps.highest_weight(M)
    assert values == [1, 1]


def test_weight_spaces_are_natural():
    M = reps.standard_module(reps.make_segments([(0, 1), (2, 2)]), 3)
    spaces = reps.weight_spaces(M)
    assert all(sum(w) == 3 for w in spaces)
    assert sum(len(b) for b in spaces.values()) == M.dim


def test_d_acts_as_t_on_singular_vectors():
    M = reps.standard_module(reps.make_segments([(1, 2), (0, 0)]), 2)
    v, values = reps.highest_weight(M)
    for D, a in zip(reps.drinfeld_d_action(M), values):
        assert (D * v - a * v).applyfunc(sympy.cancel).is_zero_matrix


def test_sequence_from_eigenvalues():
    s = reps.PolySequence.parse("(u-1)^2*(u-2), (u-1)")
    values = [sympy.cancel(p.as_expr().subs(u, u + 1) / p.as_expr()) for p in s.polys]
    assert reps.sequence_from_eigenvalues(values) == s
    with pytest.raises(reps.NotHighestWeight):
        reps.sequence_from_eigenvalues([(u + 2) / u * 2])


def test_round_trip_example():
    rt = reps.round_trip(reps.PolySequence.parse("(u-1)^2, (u-1)"))
    assert rt.ok and rt.module_dim == 2 and rt.head_dim == 2


@pytest.mark.parametrize("b,r,n", [(0, 1, 2), (1, 2, 2), (2, 2, 3)])
def test_segment_module_matches_evaluation_module(b, r, n):
    via_tensor_space = reps.segment_module_via_tensor_space(b, r, n, 3)
    E = reps.evaluation_module(b, r, n)
    for key, mats in via_tensor_space.items():
        assert mats == E.coefficients(*key, 3)


def test_single_segments_are_irreducible():
    for b, k in [(0, 1), (1, 2), (2, 3)]:
        assert reps.is_irreducible(reps.standard_module(reps.make_segments([(b, b + k - 1)]), 3))
