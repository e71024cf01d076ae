"""Exceptional presets and the closed-form verifiers."""

import pytest

from gradedcluster.core import (MutationPath, apply_path, grading_basis,
                                is_valid_grading)
from gradedcluster.exceptional import (
    PERIOD_PATHS, PRESET_NAMES, ceil_floor_identities, preset, verify_period,
    verify_denominator_forms, x7_denominator_21, x7_denominator_543_21,
    e6aff_slice3, e7aff_slice4, e8aff_slice3)


def test_all_presets_have_valid_gradings():
    for name in PRESET_NAMES:
        seed = preset(name)
        assert is_valid_grading(seed.grading, seed.matrix), name


def test_preset_gradings_span_the_grading_space():
    # the recorded bases are bases of ker(B^T): same dimension, all rows valid
    for name in PRESET_NAMES:
        seed = preset(name)
        kernel = grading_basis(seed.matrix)
        nonzero_rows = [row for row in seed.grading.rows if any(row)]
        assert len(nonzero_rows) == kernel.r, name


def test_x7_grading_vector():
    seed = preset("X7")
    assert seed.grading.rows == ((1, 1, 2, 1, 1, 1, 1),)
    assert seed.degree(3) == (2,)


def test_x6_and_e611_zero_grading():
    assert preset("X6").grading.rows == ((0,) * 6,)
    assert preset("E611").grading.rows == ((0,) * 8,)


def test_unknown_preset():
    with pytest.raises(KeyError):
        preset("Z9")


# ---------------------------------------------------------------------------
# periodic paths


def test_verify_period_all_affine():
    for name in ("E6aff", "E7aff", "E8aff"):
        report = verify_period(name, n_max=4)
        assert report.ok, (name, report.mismatches)


def test_e6aff_period_negates_initial_degrees():
    seed = preset("E6aff")
    out = apply_path(seed, PERIOD_PATHS["E6aff"])
    assert out.matrix.rows == seed.matrix.rows
    assert out.grading.rows == seed.grading.neg().rows
    again = apply_path(out, PERIOD_PATHS["E6aff"])
    assert again.grading.rows == seed.grading.rows


# ---------------------------------------------------------------------------
# denominator closed forms


def test_x7_denominator_closed_forms_small():
    report = verify_denominator_forms("X7", n_max=12)
    assert report.ok, report.mismatches


def test_x7_denominator_values():
    assert x7_denominator_21(3) == (3, 2, 0, 0, 0, 0, 0)
    assert x7_denominator_543_21(3) == (6, 4, 1, 1, 1, 0, 0)


def test_x7_path_degrees_stay_one_and_two():
    seed = preset("X7")
    base = MutationPath.of(2, 1)
    for n in range(1, 21):
        p = base.truncated(n)
        cur = apply_path(seed, p)
        k = p.steps[0]
        assert cur.degree(k) == (1,)
        tail = apply_path(cur, [5, 4, 3])
        assert tail.degree(5) == (2,)


def test_affine_denominator_slices_small():
    for name in ("E6aff", "E7aff", "E8aff"):
        report = verify_denominator_forms(name, n_max=10)
        assert report.ok, (name, report.mismatches)


def test_e6aff_slice_base_case():
    assert e6aff_slice3(1) == (0, 0, 1, 0, 0, 0, 0)


def test_e8aff_slice_entry_4_is_n_minus_1():
    for n in range(1, 30):
        assert e8aff_slice3(n)[3] == n - 1


def test_e7aff_slice_initial():
    # n = 0 reproduces the initial denominator slice (unit vector at 4)
    assert e7aff_slice4(0) == (0, 0, 0, -1, 0, 0, 0, 0)


def test_x7_intermediate_matrices_for_even_n():
    # reference matrices reached from X7 after [3,(2,1)_n] and [4,3,(2,1)_n],
    # the same for every even n
    after_3 = ((0, 1, 1, 0, -1, 0, -1), (-1, 0, -1, 1, 0, 1, 0),
               (-1, 1, 0, -1, 1, -1, 1), (0, -1, 1, 0, 1, 0, -1),
               (1, 0, -1, -1, 0, 1, 0), (0, -1, 1, 0, -1, 0, 1),
               (1, 0, -1, 1, 0, -1, 0))
    after_43 = ((0, 1, 1, 0, -1, 0, -1), (-1, 0, 0, -1, 1, 1, 0),
                (-1, 0, 0, 1, 1, -1, 0), (0, 1, -1, 0, -1, 0, 1),
                (1, -1, -1, 1, 0, 1, -1), (0, -1, 1, 0, -1, 0, 1),
                (1, 0, 0, -1, 1, -1, 0))
    seed = preset("X7")
    base = MutationPath.of(2, 1)
    for n in (2, 4, 10, 20):
        cur = apply_path(seed, base.truncated(n))
        # the full denominator cluster along the way
        assert cur.denominators[:2] == ((n - 1, n - 2, 0, 0, 0, 0, 0),
                                        (n, n - 1, 0, 0, 0, 0, 0))
        assert all(cur.denominators[j] == tuple(-1 if t == j else 0 for t in range(7))
                   for j in range(2, 7))
        assert apply_path(cur, [3]).matrix.rows == after_3
        assert apply_path(cur, [4, 3]).matrix.rows == after_43


def test_x7_matrix_period_two():
    # (X7)_[(2,1)_n] returns to X7 for even n
    seed = preset("X7")
    cur = apply_path(seed, MutationPath.of(2, 1).repeated(3))
    assert cur.matrix.rows == seed.matrix.rows


# ---------------------------------------------------------------------------
# ceiling/floor identities


def test_ceil_floor_identities():
    assert ceil_floor_identities(7, 3)
    assert ceil_floor_identities(10, 4)
    assert ceil_floor_identities(5, 1)
    for n in range(1, 40):
        for m in range(1, 9):
            assert ceil_floor_identities(n, m)
