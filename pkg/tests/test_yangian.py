from math import comb

import pytest

from affschur import aschur, yangian
from affschur.aschur import ASElement, xi
from affschur.combinat import CosetMatrix, enumerate_compositions
from affschur.polyring import Poly, sym_family


@pytest.fixture(scope="module")
def T22():
    return yangian.drinfeld_image(2, 2, 5)


def test_single_strand_series():
    T = yangian.drinfeld_image(1, 1, 4)
    x1 = Poly.variable(1, 1)
    for d in range(1, 5):
        assert T.coefficient(1, 1, d) == ASElement.from_morphism(xi([[1]], x1 ** (d - 1)))


def test_off_diagonal_single_strand():
    T = yangian.drinfeld_image(2, 1, 3)
    for d in range(1, 4):
        A = CosetMatrix([[0, 1], [0, 0]])
        assert T.coefficient(1, 2, d) == ASElement.from_morphism(xi(A, Poly.variable(1, 1) ** (d - 1)))


def test_constant_terms_and_weights(T22):
    for (i, j), series in T22.entries.items():
        assert series[0] == (ASElement.identity(2, 2) if i == j else ASElement.zero(2, 2))
        for d in range(1, 6):
            for lam, mu in series[d].blocks:
                shift = [0, 0]
                shift[i - 1] += 1
                shift[j - 1] -= 1
                assert tuple(m + s for m, s in zip(mu, shift)) == lam


@pytest.mark.parametrize("n,r", [(1, 2), (2, 2), (3, 2), (2, 3)])
def test_closed_form_matches(n, r):
    assert yangian.drinfeld_image(n, r, 4) == yangian.slava_closed_form(n, r, 4)


def test_gauss_refactorizes(T22):
    g = yangian.gauss_factorize(T22)
    assert yangian.gauss_product(g, 2, 2, 5) == T22
    assert all(yangian.drinfeld_generator_check(T22).values())


def test_gauss_first_row(T22):
    g = yangian.gauss_factorize(T22)
    one, zero = ASElement.identity(2, 2), ASElement.zero(2, 2)
    expected = T22[(1, 1)].invert(one, zero) * T22[(1, 2)]
    assert all(g.E[(1, 2)][d] == expected[d] for d in range(6))
    assert g.D[1] == T22[(1, 1)]


def test_diagonal_blocks_of_D_are_shifted_power_sums(T22):
    assert yangian.diagonal_power_sums_check(T22)


def test_unshifted_diagonal_form_only_for_first_string(T22):
    # 1_lambda D_i^{(d+1)} 1_lambda is the deformed power sum of string i taken at u + i - 1
    g = yangian.gauss_factorize(T22)
    lam = (0, 2)
    plain = sym_family("tilde_p", 1, 2)
    assert g.D[2][2].blocks[(lam, lam)] != aschur.pin_object(lam, plain)
    lam = (2, 0)
    assert g.D[1][2].blocks[(lam, lam)] == aschur.pin_object(lam, plain)


def test_rtt(T22):
    assert yangian.rtt_check(T22, 3)
    assert yangian.rtt_check(T22, 3, variant="swapped")
    with pytest.raises(ValueError):
        yangian.rtt_check(T22, 4)


def test_classical_commutators(T22):
    c = T22.coefficient
    bracket = c(1, 2, 1) * c(2, 1, 1) - c(2, 1, 1) * c(1, 2, 1)
    assert bracket == c(1, 1, 1) - c(2, 2, 1)


def test_eta_shift_binomial(T22):
    c = 3
    shifted = yangian.eta_shift(T22, c)
    for d in range(1, 6):
        expected = ASElement.zero(2, 2)
        for s in range(d):
            expected = expected + T22.coefficient(1, 2, d - s) * (comb(d - 1, s) * (-c) ** s)
        assert shifted.coefficient(1, 2, d) == expected
    assert yangian.eta_shift(T22, 0) == T22


def test_hc_center(T22):
    image = yangian.hc_center_image(2, 2, 5, T22)
    assert image[3] == ASElement(2, 2, {
        (lam, lam): aschur.pin_object(lam, sym_family("tilde_p", 2, 2)) for lam in enumerate_compositions(2, 2)
    })
    assert all(aschur.is_central(image[d]) for d in range(6))
    assert yangian.hc_center_check(1, 1, 3)


def test_tau(T22):
    assert yangian.tau_check(T22)


def test_shifty():
    assert yangian.shifty_check(1, 1, 1, 4) == {"phi": True, "psi": True}


def test_surjectivity_small():
    assert yangian.surjectivity_dim(1, 2, 2) == (4, 4)
    assert yangian.surjectivity_dim(2, 2, 0) == (10, 10)
