"""Type B/C bipartite matrices, gradings, root systems, distributions."""

import pytest

from gradedcluster.core import ExchangeMatrix, grading_basis, is_valid_grading
from gradedcluster.finitetype import (
    EmptyGradingError, almost_positive_roots, bipartite_matrix,
    cartan_counterpart, closed_form_distribution, degree_distribution,
    grading_vector)
from gradedcluster.rank3 import m3


def test_bipartite_matrices_are_skew_symmetrizable():
    for family in ("B", "C"):
        for n in range(2, 12):
            bipartite_matrix(family, n)  # constructor validates


def test_bipartite_corner_entries():
    B3 = bipartite_matrix("B", 3)
    assert B3.rows[2][1] == 2 and B3.rows[1][2] == -1
    C3 = bipartite_matrix("C", 3)
    assert C3.rows[1][2] == -2 and C3.rows[2][1] == 1


def test_bipartite_is_bipartite():
    # b_ij * b_ik >= 0 for all rows: each vertex is a source or a sink
    for family in ("B", "C"):
        for n in range(2, 10):
            M = bipartite_matrix(family, n)
            for i in range(n):
                row = [x for x in M.rows[i] if x]
                assert all(x > 0 for x in row) or all(x < 0 for x in row)


def test_grading_vector_patterns():
    assert grading_vector("B", 5).rows == ((2, 0, -2, 0, 1),)
    assert grading_vector("B", 7).rows == ((2, 0, -2, 0, 2, 0, -1),)
    assert grading_vector("C", 7).rows == ((1, 0, -1, 0, 1, 0, -1),)
    assert grading_vector("C", 5).rows == ((1, 0, -1, 0, 1),)


def test_grading_vector_is_valid_and_spans_kernel():
    for family in ("B", "C"):
        for n in (3, 5, 7, 9):
            M = bipartite_matrix(family, n)
            g = grading_vector(family, n)
            assert is_valid_grading(g, M)
            assert grading_basis(M).r == 1


def test_even_n_full_rank_no_grading():
    for family in ("B", "C"):
        for n in (4, 6, 8):
            assert grading_basis(bipartite_matrix(family, n)).r == 0
            with pytest.raises(EmptyGradingError):
                grading_vector(family, n)


def test_root_counts():
    for family in ("B", "C"):
        for n in range(2, 10):
            roots = almost_positive_roots(family, n)
            assert len(roots) == n * n + n
            negs = [r for r in roots if sum(r) < 0]
            assert len(negs) == n
    # 0/1 roots with a zero coordinate: beta_i - beta_j (n(n-1)/2 of them)
    # plus the beta_i for i >= 2 (beta_1 is the all-ones vector)
    n = 6
    roots = almost_positive_roots("B", n)
    type1 = [r for r in roots if max(r) == 1 and min(r) == 0 and sum(r) >= 1]
    assert len(type1) == n * (n - 1) // 2 + (n - 1)


def test_degree_distribution_b7():
    assert degree_distribution("B", 7) == {-2: 12, -1: 4, 0: 24, 1: 4, 2: 12}


def test_degree_distribution_c7():
    assert degree_distribution("C", 7) == {-1: 16, 0: 24, 1: 16}


def test_distributions_match_closed_forms_all_odd_n():
    for family in ("B", "C"):
        for n in (3, 5, 7, 9, 11, 13, 15):
            got = degree_distribution(family, n)
            assert got == closed_form_distribution(family, n), (family, n)
            assert sum(got.values()) == n * n + n
            for d, count in got.items():
                assert got.get(-d, 0) == count  # balanced


def test_cartan_counterpart():
    zero = ExchangeMatrix(3, 0, ((0, 0, 0),) * 3)
    assert cartan_counterpart(zero) == ((2, 0, 0), (0, 2, 0), (0, 0, 2))
    assert cartan_counterpart(m3(2, 1, 1)) == ((2, -2, -1), (-2, 2, -1), (-1, -1, 2))
    B3 = bipartite_matrix("B", 3)
    assert cartan_counterpart(B3) == ((2, -1, 0), (-1, 2, -1), (0, -2, 2))
