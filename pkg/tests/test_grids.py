"""Grid quivers for matrix and Grassmannian coordinate rings."""

import pytest

from gradedcluster.core import apply_path, grading_basis, is_valid_grading
from gradedcluster.grids import (PATH_TABLES, grassmannian_quiver,
                                 grid_position, grid_vertex_number,
                                 matrix_quiver, verify_degree_paths)


def test_m44_shape_and_numbering():
    seed = matrix_quiver(4, 4)
    assert seed.matrix.size == 16
    assert seed.n == 9 and seed.m == 7
    # frozen vertices are 10..16 per the reference figure
    assert grid_vertex_number(4, 4, 4, 1) == 10
    assert grid_vertex_number(4, 4, 4, 4) == 13
    assert grid_vertex_number(4, 4, 1, 4) == 16
    for v in range(1, 17):
        assert grid_vertex_number(4, 4, *grid_position(4, 4, v)) == v


def test_m44_degrees_are_min_of_position():
    seed = matrix_quiver(4, 4)
    assert seed.degree(grid_vertex_number(4, 4, 2, 3)) == (2,)
    assert seed.degree(grid_vertex_number(4, 4, 4, 4)) == (4,)
    assert seed.degree(1) == (1,)


def test_grid_gradings_valid():
    for k, l in [(2, 2), (3, 4), (4, 4), (3, 6), (5, 5)]:
        seed = matrix_quiver(k, l)
        assert is_valid_grading(seed.grading, seed.matrix), (k, l)


def test_grid_rejects_tiny():
    with pytest.raises(ValueError):
        matrix_quiver(1, 5)


def test_grassmannian_quiver_shape():
    seed = grassmannian_quiver(4, 4)
    assert seed.matrix.size == 17
    assert seed.grading.rows == ((1,) * 17,)
    assert is_valid_grading(seed.grading, seed.matrix)
    assert grading_basis(seed.matrix).r >= 1


def test_verify_degree_paths_all_cases():
    for key in PATH_TABLES:
        report = verify_degree_paths(*key)
        assert report.ok, (key, report.mismatches)
        assert report.all_degrees_certified, key


def test_mutations_confined_to_small_block_do_not_leak():
    # replay every recorded M(4,4) path inside M(5,5) and M(6,4); no arrows
    # may appear from the mutated block to rows >= 6 or columns >= 6
    rows_of = lambda k, l, v: grid_position(k, l, v)[0]

    for K, L in [(5, 5), (6, 4)]:
        big = matrix_quiver(K, L)
        for row in PATH_TABLES[("matrix", 4, 4)]:
            mapped = []
            for v in row.path:
                i, j = grid_position(4, 4, v)
                mapped.append(grid_vertex_number(K, L, i, j))
            cur = apply_path(big, mapped)
            touched = {grid_position(K, L, v) for v in mapped}
            assert all(i <= 3 and j <= 3 for i, j in touched)
            B = cur.matrix
            for a in range(B.size):
                ia, ja = grid_position(K, L, a + 1)
                for b in range(B.n):
                    ib, jb = grid_position(K, L, b + 1)
                    if B.rows[a][b] != 0:
                        inner_a = ia <= 4 and ja <= 4
                        inner_b = ib <= 4 and jb <= 4
                        if inner_a != inner_b:
                            far = (ia, ja) if not inner_a else (ib, jb)
                            assert far[0] < 6 and far[1] < 6, (K, L, row.path)


def test_embedded_m44_paths_reproduce_degrees():
    # the degree subquiver found in M(4,4) appears identically in M(5,5)
    big = matrix_quiver(5, 5)
    row = PATH_TABLES[("matrix", 4, 4)][0]
    mapped = []
    for v in row.path:
        i, j = grid_position(4, 4, v)
        mapped.append(grid_vertex_number(5, 5, i, j))
    cur = apply_path(big, mapped)
    v1 = grid_vertex_number(5, 5, *grid_position(4, 4, row.v1))
    v2 = grid_vertex_number(5, 5, *grid_position(4, 4, row.v2))
    assert cur.degree(v1) == (row.d1,)
    assert cur.degree(v2) == (row.d2,)
