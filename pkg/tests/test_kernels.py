import importlib

import pytest

from affschur import _kernels_py as py

try:
    cy = importlib.import_module("affschur._kernels")
except ImportError:  # pragma: no cover - extension not built
    cy = None

needs_cython = pytest.mark.skipif(cy is None, reason="compiled kernels not built")

P = {(2, 0, 1): 3, (0, 1, 1): -1, (1, 1, 0): 2}
Q = {(1, 0, 0): 1, (0, 0, 2): 5}
VEC = {((1, 2, 1), (1, 0, 2)): 2, ((2, 1, 1), (0, 3, 0)): -1}


@needs_cython
@pytest.mark.parametrize("i", [0, 1])
def test_polynomial_kernels_agree(i):
    assert cy.poly_mul(P, Q) == py.poly_mul(P, Q)
    assert cy.poly_demazure(P, i) == py.poly_demazure(P, i)
    assert cy.poly_diamond(P, i) == py.poly_diamond(P, i)
    assert cy.poly_swap(P, i) == py.poly_swap(P, i)


@needs_cython
@pytest.mark.parametrize("i", [0, 1])
def test_vector_kernels_agree(i):
    assert cy.vec_rmul_simple(VEC, i) == py.vec_rmul_simple(VEC, i)
    assert cy.vec_rmul_poly(VEC, Q) == py.vec_rmul_poly(VEC, Q)


def test_backend_switch(monkeypatch):
    import affschur.kernels as kernels

    monkeypatch.setenv("AFFSCHUR_PURE_PYTHON", "1")
    reloaded = importlib.reload(kernels)
    assert reloaded.BACKEND == "python"
    monkeypatch.delenv("AFFSCHUR_PURE_PYTHON")
    importlib.reload(kernels)
