import pytest

from affschur.combinat import (
    CosetMatrix, Permutation, all_permutations, bruhat_leq, coset_decompose, coset_matrices, dA, dA_word,
    enumerate_compositions, in_young_subgroup, matrix_of_word, min_coset_reps, redundancies, standard_word,
    word_to_min_rep,
)


def test_enumerate_compositions():
    assert enumerate_compositions(2, 2) == [(0, 2), (1, 1), (2, 0)]
    assert enumerate_compositions(3, 0) == [(0, 0, 0)]
    assert len(enumerate_compositions(3, 3)) == 10


def test_permutation_product_is_composition():
    v, w = Permutation((2, 1, 3)), Permutation((1, 3, 2))
    assert (v * w)(2) == v(w(2))
    assert (v * w).inverse() == w.inverse() * v.inverse()


def test_reduced_word_length_matches_inversions():
    for w in all_permutations(4):
        word = w.reduced_word()
        assert len(word) == w.length()
        assert Permutation.from_word(word, 4) == w


def test_permutation_rejects_bad_input():
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))


def test_min_coset_reps():
    assert min_coset_reps((1, 2), (3,)) == [(1, 2, 3), (2, 1, 3), (2, 3, 1)]
    assert len(min_coset_reps((2, 2), (4,))) == 6


def test_calibration_matrix():
    A = CosetMatrix([[1, 0, 3], [2, 2, 1]])
    assert tuple(dA(A)) == (1, 5, 6, 7, 8, 2, 3, 4, 9)
    assert dA(A).cycles() == [(2, 5, 8, 4, 7, 3, 6)]
    assert redundancies(A) == ((1, 0, 3, 2, 2, 1), (1, 2, 0, 2, 3, 1))


def test_coset_matrix_counts_match_double_cosets():
    lam, mu = (2, 1), (1, 2)
    mats = coset_matrices(lam, mu)
    assert all(A.row_sums == lam and A.col_sums == mu for A in mats)
    reps = set()
    for w in all_permutations(3):
        _, A, _ = coset_decompose(w, lam, mu)
        reps.add(A)
    assert reps == set(mats)


def test_coset_decompose_reassembles():
    lam, mu = (2, 2), (1, 3)
    for w in all_permutations(4):
        x, A, y = coset_decompose(w, lam, mu)
        assert x * dA(A) * y == w
        assert in_young_subgroup(x, lam)


def test_dA_word_is_the_index_word_of_dA():
    A = CosetMatrix([[1, 1], [0, 2]])
    assert dA_word(A) == dA(A).act_on_word(standard_word(A.row_sums))
    assert matrix_of_word(dA_word(A), A.col_sums, 2) == A
    assert word_to_min_rep(A.row_sums, dA_word(A)) == dA(A)


def test_empty_shapes_keep_their_columns():
    assert coset_matrices((), (0,)) == [CosetMatrix([], 1)]
    assert coset_matrices((0,), ()) == [CosetMatrix([[]])]
    assert CosetMatrix([], 1).shape == (0, 1)


def test_bruhat_identity_is_minimal():
    mats = coset_matrices((1, 1), (1, 1))
    diag = CosetMatrix([[1, 0], [0, 1]])
    assert all(bruhat_leq(diag, A) for A in mats)
