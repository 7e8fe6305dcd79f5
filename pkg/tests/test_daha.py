from affschur.combinat import Permutation
from affschur.daha import AHElement, ah_center_basis, ah_mul, is_central, poly_rep
from affschur.polyring import Poly, sym_family


def test_normal_form_rule():
    s1, x1, x2 = AHElement.simple(1, 2), AHElement.x(1, 2), AHElement.x(2, 2)
    # polynomial to the right of the permutation
    assert (x1 * s1).terms == {Permutation((2, 1)): Poly.variable(2, 2), Permutation((1, 2)): Poly.one(2)}
    assert s1 * x1 == x2 * s1 + AHElement.one(2)


def test_associativity():
    s1, s2 = AHElement.simple(1, 3), AHElement.simple(2, 3)
    x1, x3 = AHElement.x(1, 3), AHElement.x(3, 3)
    a, b, c = s1 * x3, s2 * x1 + s1, x1 * x3 * s2
    assert ah_mul(ah_mul(a, b), c) == ah_mul(a, ah_mul(b, c))


def test_braid_relation():
    s1, s2 = AHElement.simple(1, 3), AHElement.simple(2, 3)
    assert s1 * s2 * s1 == s2 * s1 * s2
    assert s1 * s1 == AHElement.one(3)


def test_polynomial_representation_is_a_module():
    f = Poly.variable(1, 2) ** 2
    s1, x2 = AHElement.simple(1, 2), AHElement.x(2, 2)
    assert poly_rep(s1 * x2, f) == poly_rep(s1, poly_rep(x2, f))


def test_center_is_symmetric_polynomials():
    basis = ah_center_basis(2, 2)
    assert len(basis) == 4
    assert all(is_central(z) for z in basis)
    assert is_central(AHElement.from_poly(sym_family("e", 2, 3)))
    assert not is_central(AHElement.x(1, 3))
