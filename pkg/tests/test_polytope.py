"""Stable sets, polytope vertices, and the singular simplex."""

from fractions import Fraction

import pytest

from magiccount.genfun import alternating_limit, cycle_series, quasipoly_fit
from magiccount.polytope import (
    EvenN,
    affinely_independent,
    fractional_vertex,
    hyperplane_vertices,
    kaplansky_count,
    max_stable_count,
    simplex_series,
    simplex_vertices,
    stable_set_sizes,
    stable_sets,
    vertices,
)


def test_triangle_stable_sets():
    assert stable_sets(3) == [(), (0,), (1,), (2,)]


def test_pentagon_pairs():
    assert stable_set_sizes(5)[2] == 5


def test_square_pairs_are_the_two_diagonals():
    assert [s for s in stable_sets(4) if len(s) == 2] == [(0, 2), (1, 3)]


@pytest.mark.parametrize("n", range(3, 13))
def test_size_counts_match_the_closed_formula(n):
    sizes = stable_set_sizes(n)
    for k in range(0, n):
        assert sizes.get(k, 0) == kaplansky_count(n, k)


@pytest.mark.parametrize(
    "n, expected", [(3, 3), (4, 2), (5, 5), (6, 2), (7, 7), (8, 2), (9, 9), (10, 2), (11, 11), (12, 2)]
)
def test_maximum_stable_set_counts(n, expected):
    assert max_stable_count(n) == expected


def test_triangle_vertices_exact_coordinates():
    coords = {v.coordinates() for v in vertices(3)}
    half = Fraction(1, 2)
    assert coords == {
        (1, 1, 1, 0, 0, 0),
        (0, 1, 0, 1, 0, 0),
        (0, 0, 1, 0, 1, 0),
        (1, 0, 0, 0, 0, 1),
        (0, 0, 0, half, half, half),
    }


def test_square_has_seven_integral_vertices():
    vs = vertices(4)
    assert len(vs) == 7
    assert not any(v.is_fractional for v in vs)


@pytest.mark.parametrize("n", range(3, 11))
def test_vertex_count_is_stable_sets_plus_parity(n):
    assert len(vertices(n)) == len(stable_sets(n)) + (n % 2)


@pytest.mark.parametrize("n", range(3, 9))
def test_every_vertex_satisfies_the_ring_equations(n):
    for v in vertices(n):
        v.check()  # raises on any violation


def test_triangle_hyperplane_vertices_are_the_singletons():
    assert [v.support for v in hyperplane_vertices(3)] == [(0,), (1,), (2,)]


def test_pentagon_hyperplane_vertices():
    vs = hyperplane_vertices(5)
    assert len(vs) == 5
    assert all(v.beta_total() == 2 for v in vs)


@pytest.mark.parametrize("n", (3, 5, 7, 9))
def test_hyperplane_separates_the_vertices(n):
    level = Fraction(n - 1, 2)
    on_plane = {v.coordinates() for v in hyperplane_vertices(n)}
    assert fractional_vertex(n).beta_total() > level
    for v in vertices(n):
        if v.is_fractional or v.coordinates() in on_plane:
            continue
        assert v.beta_total() < level


def test_hyperplane_requires_odd_n():
    with pytest.raises(EvenN):
        hyperplane_vertices(4)


@pytest.mark.parametrize("n", (3, 5, 7, 9))
def test_simplex_vertices_are_affinely_independent(n):
    points = simplex_vertices(n)
    assert len(points) == n + 1
    assert affinely_independent(points)


def test_dependent_points_are_detected():
    vs = vertices(4)  # 7 points in a 4-dimensional affine hull
    assert not affinely_independent(vs)


def test_simplex_series_values():
    assert simplex_series(3, 2) == [1, 3, 7]
    assert simplex_series(3, 0) == [1]
    assert simplex_series(5, 1) == [1, 5]


def test_simplex_series_requires_odd_n():
    with pytest.raises(EvenN):
        simplex_series(4, 3)


@pytest.mark.parametrize("n", (3, 5))
def test_cycle_minus_simplex_has_no_alternating_part(n):
    # the simplex carries the entire pole at t = -1 of the one-loop cycle series
    order = n + 12
    counts = cycle_series(n, (1,) * n, order)
    simplex = simplex_series(n, order)
    difference = {s: int(counts[s] - simplex[s]) for s in range(order + 1)}
    fit = quasipoly_fit(difference, n)
    assert fit.psi == 0
    assert alternating_limit(fit) == 0
