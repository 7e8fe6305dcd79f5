from fractions import Fraction

import pytest

from affschur.combinat import Permutation
from affschur.polyring import (
    Poly, USeries, coproduct_split, deformed_power_sum_closed, demazure, diamond, format_poly, orbit_coordinates,
    parse_poly, ratio_series, sym_family,
)


def x(i, r):
    return Poly.variable(i, r)


def test_arithmetic_and_degree():
    p = (x(1, 2) + x(2, 2)) ** 2
    assert p == x(1, 2) ** 2 + x(1, 2) * x(2, 2) * 2 + x(2, 2) ** 2
    assert p.degree() == 2 and p.is_homogeneous()


def test_demazure_examples():
    assert demazure(1, x(1, 2) ** 2) == x(1, 2) + x(2, 2)
    assert demazure(1, x(1, 2) * x(2, 2)) == Poly.zero(2)


def test_diamond_is_an_action():
    s1 = Permutation.simple(1, 2)
    assert diamond(s1, x(1, 2)) == x(2, 2) + 1
    assert diamond(s1, x(2, 2)) == x(1, 2) - 1
    f = x(1, 3) ** 2 * x(3, 3)
    for i in (1, 2):
        s = Permutation.simple(i, 3)
        assert diamond(s, diamond(s, f)) == f


def test_newton_and_deformed_power_sums():
    r = 3
    assert sym_family("p", 2, r) == sum((x(i, r) ** 2 for i in range(1, 4)), Poly.zero(r))
    assert sym_family("tilde_p", 2, 2) == x(1, 2) ** 2 + x(2, 2) ** 2 + x(1, 2) + x(2, 2)
    for d in range(5):
        assert sym_family("tilde_p", d, r) == deformed_power_sum_closed(d, range(1, r + 1), r)
        assert sym_family("tilde_p", d, r) == ratio_series([1, 2, 3], 1, 0, r, 6)[d + 1]


def test_format_parse_round_trip():
    p = x(1, 3) ** 2 * Fraction(-3, 2) + x(2, 3) * x(3, 3) + 5
    text = format_poly(p)
    assert parse_poly(text, 3) == p
    with pytest.raises(ValueError):
        parse_poly("x4", 3)


def test_coproduct_split_recombines():
    f = sym_family("e", 2, 3)
    total = Poly.zero(3)
    for f1, f2 in coproduct_split(f, 1, 2):
        total = total + f1.embed(0, 3) * f2.embed(1, 3)
    assert total == f


def test_orbit_coordinates_of_symmetric_poly():
    f = sym_family("p", 2, 2)
    assert orbit_coordinates(f, (2,)) == {(2, 0): 1}


def test_series_invert_and_translate():
    one = Poly.one(1)
    s = USeries([one, x(1, 1), x(1, 1) ** 2, Poly.zero(1)])
    inv = s.invert(one)
    prod = s * inv
    assert prod[0] == one and all(prod[d].is_zero() for d in range(1, 4))
    assert s.translate(0) == s
    # 1/(u - x) at u + 1 is 1/(u - (x - 1))
    shifted = ratio_series([1], 1, 0, 1, 4).translate(1)
    assert shifted == ratio_series([1], 2, 1, 1, 4)
