from fractions import Fraction as F

import pytest

from bisectorlab.errors import MismatchedSource
from bisectorlab.geometry import PointSet
from bisectorlab.invariants import (distance_multiplicities, distinct_distance_count, isoceles_count,
                                    isoceles_lower_form, multiplicity_map, pinned_lower_bound_check, pinned_profile,
                                    weighted_incidences_with_bisectors)
from bisectorlab.lab import GeneratorSpec, generate
from bisectorlab.oracles import isoceles_bruteforce


@pytest.fixture
def square():
    return PointSet([[0, 0], [1, 0], [0, 1], [1, 1]])


def test_unit_square_pinned(square):
    profile = pinned_profile(square)
    assert profile.counts == [2, 2, 2, 2]
    assert profile.delta_star == 2
    assert isoceles_count(square, profile) == 8
    assert isoceles_lower_form(profile) == 4
    assert weighted_incidences_with_bisectors(square, multiplicity_map(square)) == 8


def test_unit_square_distance_multiplicities(square):
    multiplicities = distance_multiplicities(square)
    assert multiplicities.m == {1: 8, 2: 4}
    assert multiplicities.sum_squares == 80
    assert distinct_distance_count(square) == 2


def test_collinear_triple():
    point_set = PointSet([[0, 0], [1, 0], [2, 0]])
    assert distance_multiplicities(point_set).m == {1: 4, 4: 2}
    assert distance_multiplicities(point_set).sum_squares == 20
    assert isoceles_count(point_set) == 2
    assert weighted_incidences_with_bisectors(point_set, multiplicity_map(point_set)) == 2


def test_isoceles_triangle():
    point_set = PointSet([[0, 0], [4, 0], [2, 3]])
    assert isoceles_count(point_set) == 2, 'one apex, both orders of the base'
    assert isoceles_bruteforce(point_set) == 2


def test_two_points():
    point_set = PointSet([[0, 0], [1, 1]])
    profile = pinned_profile(point_set)
    assert profile.delta_star == 1
    assert isoceles_count(point_set, profile) == 0
    assert weighted_incidences_with_bisectors(point_set, multiplicity_map(point_set)) == 0
    check = pinned_lower_bound_check(point_set, profile)
    assert (check.lhs, check.rhs, check.holds) == (0, 2, False)
    assert (check.sound_rhs, check.sound_holds) == (0, True)


def test_single_point_is_rejected():
    with pytest.raises(ValueError):
        pinned_profile(PointSet([[0, 0]]))
    with pytest.raises(ValueError):
        distance_multiplicities(PointSet([[0, 0]]))


def test_pinned_check_square(square):
    check = pinned_lower_bound_check(square)
    assert (check.lhs, check.rhs, check.holds) == (8, 8, True)
    assert check.sound_rhs == 2


def test_pinned_check_grid():
    grid = generate(GeneratorSpec('grid', 9))
    profile = pinned_profile(grid)
    assert profile.delta_star == 5
    check = pinned_lower_bound_check(grid, profile)
    assert check.rhs == F(144, 5)
    assert check.holds


@pytest.mark.parametrize('family,n,seed', [
    ('grid', 16, 0),
    ('collinear', 9, 0),
    ('rational_circle', 12, 2),
    ('random_rational', 15, 3),
    ('union_of_circles', 12, 1),
])
def test_isoceles_identities(family, n, seed):
    point_set = generate(GeneratorSpec(family, n, seed))
    profile = pinned_profile(point_set)
    count = isoceles_count(point_set, profile)
    assert count == weighted_incidences_with_bisectors(point_set, multiplicity_map(point_set))
    assert count == isoceles_bruteforce(point_set)
    assert isoceles_lower_form(profile) <= count
    assert pinned_lower_bound_check(point_set, profile).sound_holds
    multiplicities = distance_multiplicities(point_set)
    assert sum(multiplicities.m.values()) == n * (n - 1)
    assert multiplicities.sum_squares * len(multiplicities.m) >= (n * (n - 1)) ** 2


def test_incidences_in_parallel():
    point_set = generate(GeneratorSpec('grid', 16))
    multiplicities = multiplicity_map(point_set)
    assert (weighted_incidences_with_bisectors(point_set, multiplicities, workers=3)
            == weighted_incidences_with_bisectors(point_set, multiplicities))


def test_incidences_need_matching_map(square):
    other = PointSet([[0, 0], [5, 0]])
    with pytest.raises(MismatchedSource):
        weighted_incidences_with_bisectors(square, multiplicity_map(other))


@pytest.mark.parametrize('family,n,seed', [
    ('grid', 25, 0),
    ('collinear', 12, 0),
    ('rational_circle', 10, 4),
    ('random_rational', 14, 1),
    ('heavy_circle_mix', 16, 2),
    ('union_of_circles', 12, 3),
])
def test_some_point_sees_its_share_of_distances(family, n, seed):
    point_set = generate(GeneratorSpec(family, n, seed))
    profile = pinned_profile(point_set)
    distinct = distinct_distance_count(point_set)
    assert profile.delta_star * n >= distinct
    assert max(profile.counts) == profile.delta_star <= distinct
