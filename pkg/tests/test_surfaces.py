"""Triangulated surfaces: adjacency, flips, valuations, annuli."""

import random
from fractions import Fraction

import pytest

from gradedcluster.core import grading_basis, is_valid_grading, Grading
from gradedcluster.census import enumerate_census
from gradedcluster.surfaces import (
    NotFlippableError, ValuationFunction, annulus, annulus_valuation,
    arc_index, flip, hexagon_example, is_valid_valuation, polygon,
    signed_adjacency, surface_from_json, surface_to_json, theta,
    valuation_basis)


def test_hexagon_adjacency_matches_example():
    T = hexagon_example()
    B = signed_adjacency(T)
    assert B.rows == ((0, -1, 1), (1, 0, -1), (-1, 1, 0))


def test_hexagon_flip_matches_example():
    T = hexagon_example()
    T2 = flip(T, "a1")
    assert signed_adjacency(T2).rows == ((0, 1, -1), (-1, 0, 0), (1, 0, 0))


def test_flip_is_involutive():
    T = hexagon_example()
    for arc in T.arc_order:
        back = flip(flip(T, arc), arc)
        assert signed_adjacency(back).rows == signed_adjacency(T).rows
        back.validate()


def test_flip_boundary_rejected():
    T = hexagon_example()
    with pytest.raises(NotFlippableError):
        flip(T, "b0")


def test_disjoint_arcs_zero_adjacency():
    # fan triangulation of a pentagon: two arcs sharing a vertex but lying in
    # one common triangle vs polygon(6) disjoint pieces
    T = polygon(6)
    B = signed_adjacency(T)
    # the fan has arcs d2, d3, d4; d2 and d4 are not in a common triangle
    i, j = T.arc_order.index("d2"), T.arc_order.index("d4")
    assert B.rows[i][j] == 0


def test_flip_matches_mutation_on_polygons_and_annuli():
    cases = [polygon(6), polygon(7), annulus(4, 3), annulus(2, 1), annulus(3, 2)]
    for T in cases:
        B = signed_adjacency(T)
        for arc in T.arc_order:
            k = arc_index(T, arc)
            assert signed_adjacency(flip(T, arc)).rows == B.mutate(k).rows, arc


def test_500_random_flips_keep_structures_consistent():
    rng = random.Random(71)
    for n, m in [(2, 1), (4, 3), (6, 1), (8, 5), (5, 8)]:
        T = annulus(n, m)
        fs = valuation_basis(T)
        B = signed_adjacency(T)
        for _ in range(100):
            arc = rng.choice(T.arc_order)
            k = arc_index(T, arc)
            T = flip(T, arc)
            T.validate()
            B2 = signed_adjacency(T)
            assert B2.rows == B.mutate(k).rows
            B = B2
            for f in fs:
                assert is_valid_valuation(T, f)
                g = Grading.from_rows([theta(T, f)])
                assert is_valid_grading(g, B)


def test_valuation_space_dimension_matches_even_boundaries():
    hexagon = hexagon_example()
    assert len(valuation_basis(hexagon)) == 1
    assert grading_basis(signed_adjacency(hexagon)).r == 1
    for n, m in [(6, 1), (6, 2), (4, 4), (3, 5), (2, 1), (8, 8)]:
        T = annulus(n, m)
        even = sum(1 for c in T.boundaries if len(c) % 2 == 0)
        assert len(valuation_basis(T)) == even
        assert grading_basis(signed_adjacency(T)).r == even, (n, m)


def test_all_odd_boundaries_no_valuations():
    T = annulus(3, 5)
    assert valuation_basis(T) == []
    assert grading_basis(signed_adjacency(T)).r == 0


def test_theta_image_is_valid_grading_random_valuations():
    rng = random.Random(73)
    T = annulus(6, 2)
    basis = valuation_basis(T)
    B = signed_adjacency(T)
    for _ in range(20):
        coeffs = [Fraction(rng.randint(-3, 3)) for _ in basis]
        vals = {p: sum(c * f(p) for c, f in zip(coeffs, basis)) for p in T.points}
        f = ValuationFunction.of(vals)
        g = Grading.from_rows([theta(T, f)])
        assert is_valid_grading(g, B)


def test_zero_valuation_gives_zero_vector():
    T = annulus(4, 2)
    f = ValuationFunction.of({p: 0 for p in T.points})
    assert theta(T, f) == (0,) * len(T.arc_order)


def test_annulus_g_degrees_match_tuple():
    # g_{n,m} = (1 x m, then alternating 1, -1 x n)
    for n, m in [(6, 1), (4, 3), (8, 5)]:
        _, fs, seed = annulus(n, m, "g")
        want = (1,) * m + tuple(1 if j % 2 == 0 else -1 for j in range(n))
        assert seed.grading.rows == (want,), (n, m)
        assert is_valid_grading(seed.grading, seed.matrix)


def test_annulus_h_degrees_match_tuple():
    n, m = 6, 2
    _, fs, seed = annulus(n, m, "h")
    first = (1,) * m + tuple(1 if j % 2 == 0 else -1 for j in range(n))
    second_m = tuple(-1 if j % 2 == 0 else 1 for j in range(m))
    second = second_m + (-1,) * n
    assert seed.grading.rows == (first, second)
    assert is_valid_grading(seed.grading, seed.matrix)


def test_annulus_h_requires_both_even():
    with pytest.raises(ValueError):
        annulus_valuation(6, 1, "h")


def test_annulus_l_degrees():
    n, m = 4, 2
    _, fs, seed = annulus(n, m, "l")
    want = tuple([0, 1] * (m // 2)) + tuple([0, -1] * (n // 2))
    assert seed.grading.rows == (want,)
    degs = {seed.degree(j + 1)[0] for j in range(seed.n)}
    assert degs <= {0, 1, -1}


def test_annulus_quiver_is_affine_cycle():
    # the fan triangulation of A(n, m) gives the cycle quiver with n arrows
    # one way and m the other
    _, _, seed = annulus(4, 1, "g")
    B = seed.matrix
    undirected = sum(1 for i in range(B.n) for j in range(B.n)
                     if i < j and B.rows[i][j] != 0)
    assert undirected == B.n  # a single cycle


def test_annulus_degree_census_m_odd():
    # occurring degrees for the standard grading, odd inner boundary
    for n, m in [(4, 1), (2, 3), (4, 3), (6, 1)]:
        _, _, seed = annulus(n, m, "g")
        report = enumerate_census(seed, "degree")
        assert report.frontier_exhausted, (n, m)
        assert report.occurring_degrees == {0, 1, -1, 2, -2}, (n, m)


def test_annulus_2_1_is_the_mixed_case():
    # A(2,1) is the rank-3 mixed case: no embedded arc has degree 0 (an
    # outer-outer arc cannot wind), so 0 drops out of the census
    _, _, seed = annulus(2, 1, "g")
    report = enumerate_census(seed, "degree")
    assert report.occurring_degrees == {1, -1, 2, -2}


def test_degenerate_annulus_single_outer_point():
    # n = 1 produces a loop boundary segment; flips must still track mutation
    for n, m in [(1, 1), (1, 2), (1, 5)]:
        T = annulus(n, m)
        T.validate()
        B = signed_adjacency(T)
        rng = random.Random(4)
        for _ in range(30):
            arc = rng.choice(T.arc_order)
            k = arc_index(T, arc)
            T = flip(T, arc)
            T.validate()
            B2 = signed_adjacency(T)
            assert B2.rows == B.mutate(k).rows, (n, m, arc)
            B = B2


def test_surface_json_round_trip():
    T = annulus(4, 3)
    data = surface_to_json(T, annulus_valuation(4, 3, None) if False else None)
    back = surface_from_json(data)
    assert signed_adjacency(back).rows == signed_adjacency(T).rows
    assert back.arc_order == T.arc_order
