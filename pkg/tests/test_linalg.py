"""Exact linear algebra helpers."""

import random
from fractions import Fraction

import pytest

import oracles
from chordweight.linalg import (
    determinant,
    form_signature,
    identity_matrix,
    mat_inv,
    solve_in_span,
    sparse_rank,
)


def test_sparse_rank_matches_dense_oracle_on_random_matrices():
    rng = random.Random(7)
    for _ in range(50):
        nrows = rng.randint(0, 6)
        ncols = rng.randint(1, 6)
        dense = [[Fraction(rng.randint(-3, 3), rng.randint(1, 4))
                  for _ in range(ncols)] for _ in range(nrows)]
        sparse = [{j: v for j, v in enumerate(row) if v} for row in dense]
        assert sparse_rank(sparse) == oracles.dense_rank(dense, ncols)


def test_solve_in_span():
    vecs = [[Fraction(1), Fraction(0)], [Fraction(1), Fraction(1)]]
    assert solve_in_span(vecs, [Fraction(3), Fraction(2)]) == [1, 2]
    assert solve_in_span(vecs, [Fraction(0), Fraction(0)]) == [0, 0]
    assert solve_in_span([[Fraction(1), Fraction(0)]], [Fraction(0), Fraction(1)]) is None
    assert solve_in_span([], []) == []
    with pytest.raises(ValueError):
        solve_in_span([[Fraction(1)], [Fraction(2)]], [Fraction(1)])


def test_mat_inv():
    m = [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(1)]]
    assert mat_inv(m) == [[1, -1], [-1, 2]]
    assert mat_inv([]) == []
    with pytest.raises(ValueError):
        mat_inv([[Fraction(1), Fraction(1)], [Fraction(1), Fraction(1)]])


def test_determinant_known_values():
    assert determinant(identity_matrix(3)) == 1
    assert determinant([[0, 1], [1, 0]]) == -1
    assert determinant([[Fraction(1, 2), 0], [7, Fraction(2, 3)]]) == Fraction(1, 3)


def test_form_signature():
    assert form_signature([]) == (0, 0)
    assert form_signature(identity_matrix(4)) == (4, 0)
    assert form_signature([[-1, 0], [0, -1]]) == (0, 2)
    assert form_signature([[0, 1], [1, 0]]) == (1, 1)
    assert form_signature([[0, 0], [0, 1]]) == (1, 0)
    # leading minors 2, 3, -1/2: one sign change, so signature (2, 1)
    big = [[2, 1, 0], [1, 2, 1], [0, 1, Fraction(1, 2)]]
    assert form_signature(big) == (2, 1)
    assert form_signature([[4, 2], [2, 0]]) == (1, 1)
