from fractions import Fraction as F

import pytest

from bisectorlab.errors import DegeneratePair, IndexOutOfRange, InvalidRange, MismatchedSource
from bisectorlab.geometry import CanonicalCircle, PointSet, circle_through, on_curve
from bisectorlab.invariants import (build_curve_table, energy_report, heaviness_matrix, multiplicity_map,
                                    pair_heaviness, refine_pairs, rich_pair_triples, richness_profile)
from bisectorlab.lab import GeneratorSpec, generate


@pytest.fixture
def square():
    return PointSet([[0, 0], [1, 0], [0, 1], [1, 1]])


@pytest.fixture
def grid3():
    return generate(GeneratorSpec('grid', 9))


def test_unit_square_table(square):
    table = build_curve_table(square)
    assert len(table.lines()) == 6, 'no three corners are collinear'
    circles = table.circles()
    assert circles == {CanonicalCircle(F(1, 2), F(1, 2), F(1, 2)): (0, 1, 2, 3)}


def test_collinear_and_two_point_tables():
    table = build_curve_table(PointSet([[0, 0], [1, 0], [2, 0]]))
    assert list(table.lines().values()) == [(0, 1, 2)]
    assert not table.circles()
    table = build_curve_table(PointSet([[0, 0], [5, 3]]))
    assert len(table.lines()) == 1 and not table.circles()


def test_table_needs_two_points():
    with pytest.raises(ValueError):
        build_curve_table(PointSet([[0, 0]]))


def test_unit_square_profile(square):
    profile = richness_profile(build_curve_table(square))
    assert profile.s == {2: 7, 3: 1, 4: 1}
    assert profile.s_eq == {2: 6, 3: 0, 4: 1}
    assert profile.at_least(5) == 0
    assert profile.max_coverage == 4
    assert rich_pair_triples(profile) == (2 * 6 + 12, 4 * 6 + 16)


def test_profile_by_kind(square):
    table = build_curve_table(square)
    assert richness_profile(table, 'circle').s == {2: 1, 3: 1, 4: 1}
    assert richness_profile(table, 'line').max_coverage == 2
    with pytest.raises(ValueError):
        richness_profile(table, 'conic')


def test_points_on_one_line():
    table = build_curve_table(generate(GeneratorSpec('collinear', 6)))
    profile = richness_profile(table)
    assert profile.at_least(6) == 1
    assert profile.max_coverage == 6


def test_regular_heptagon_circumcircle():
    heptagon = generate(GeneratorSpec('ngon', 7), backend='qfloat')
    profile = richness_profile(build_curve_table(heptagon))
    assert profile.at_least(7) == 1, 'all vertices lie on the circumcircle'
    assert profile.max_coverage == 7
    assert profile.exactly(2) == 21


def test_table_is_complete(grid3):
    table = build_curve_table(grid3)
    for key, incident in table:
        expected = tuple(i for i, p in enumerate(grid3) if on_curve(p, key))
        assert incident == expected, f'{key} incidences differ from the membership test'


def test_every_triple_circle_is_present(grid3):
    table = build_curve_table(grid3)
    for i in range(9):
        for j in range(i + 1, 9):
            for k in range(j + 1, 9):
                a, b, c = grid3[i], grid3[j], grid3[k]
                if (b.x - a.x) * (c.y - a.y) == (b.y - a.y) * (c.x - a.x):
                    continue
                incident = table.entries[circle_through(a, b, c)]
                assert {i, j, k} <= set(incident)


def test_circle_incidences_match_profile(grid3):
    table = build_curve_table(grid3)
    profile = richness_profile(table, 'circle')
    direct = sum(len(points) for points in table.circles().values())
    assert sum(k * count for k, count in profile.s_eq.items()) == direct


def test_heaviness_examples(square):
    assert pair_heaviness(build_curve_table(square), 0, 3) == 4
    collinear = PointSet([[0, 0], [1, 0], [2, 0]])
    assert pair_heaviness(build_curve_table(collinear), 0, 2) == 3
    triangle = PointSet([[0, 0], [1, 0], [0, 1]])
    table = build_curve_table(triangle)
    assert {pair_heaviness(table, i, j) for i in range(3) for j in range(3) if i != j} == {3}


def test_circles_only_heaviness():
    table = build_curve_table(PointSet([[0, 0], [1, 0], [2, 0]]))
    assert pair_heaviness(table, 0, 1, heaviness='circles') == 2
    with pytest.raises(ValueError):
        heaviness_matrix(table, heaviness='conics')


def test_heaviness_bounds(grid3):
    table = build_curve_table(grid3)
    profile = richness_profile(table)
    lines = table.lines()
    for line, incident in lines.items():
        for i in incident:
            for j in incident:
                if i != j:
                    assert len(incident) <= pair_heaviness(table, i, j) <= profile.max_coverage


def test_heaviness_errors(square):
    table = build_curve_table(square)
    with pytest.raises(IndexOutOfRange):
        pair_heaviness(table, 0, 4)
    with pytest.raises(DegeneratePair):
        pair_heaviness(table, 1, 1)


def test_refine_pairs_square(square):
    table = build_curve_table(square)
    assert len(refine_pairs(square, table, 2, 4)) == 0
    assert len(refine_pairs(square, table, 4, 8)) == 12
    with pytest.raises(InvalidRange):
        refine_pairs(square, table, 1, 3)
    with pytest.raises(InvalidRange):
        refine_pairs(square, table, 4, 4)
    with pytest.raises(MismatchedSource):
        refine_pairs(PointSet([[0, 0], [2, 0]]), table, 2, 3)


def test_refinements_partition_pairs():
    point_set = generate(GeneratorSpec('heavy_circle_mix', 10, seed=3))
    table = build_curve_table(point_set)
    n = len(point_set)
    parts = [refine_pairs(point_set, table, low, high) for low, high in ((2, 3), (3, 5), (5, n + 1))]
    union = set().union(*(part.pairs for part in parts))
    assert len(union) == sum(len(part) for part in parts) == n * (n - 1)
    for part in parts:
        assert all((j, i) in part for i, j in part.pairs), 'membership is symmetric'


def test_refinement_grows_with_K(grid3):
    table = build_curve_table(grid3)
    previous = set()
    for K in range(2, 10):
        pairs = refine_pairs(grid3, table, 2, K + 1).pairs
        assert previous <= pairs
        previous = pairs


def test_parallel_table_matches_serial(grid3):
    serial = build_curve_table(grid3)
    parallel = build_curve_table(grid3, workers=2)
    assert list(parallel.entries.items()) == list(serial.entries.items())


def test_table_json(square):
    data = build_curve_table(square).to_json()
    assert data[-1] == {'curve': {'kind': 'circle', 'cx': '1/2', 'cy': '1/2', 'r2': '1/2'},
                        'point_indices': [0, 1, 2, 3]}


@pytest.mark.parametrize('family,n,seed', [
    ('grid', 16, 0),
    ('rational_circle', 10, 1),
    ('heavy_circle_mix', 12, 3),
    ('union_of_circles', 12, 2),
    ('random_rational', 9, 5),
])
def test_refined_energy_grows_with_K(family, n, seed):
    point_set = generate(GeneratorSpec(family, n, seed))
    table = build_curve_table(point_set)
    previous = None
    for K in range(2, n + 1):
        report = energy_report(multiplicity_map(point_set, refine_pairs(point_set, table, 2, K + 1)))
        if previous is not None:
            assert report.distinct >= previous.distinct, f'distinct count dropped at K={K}'
            assert report.energy >= previous.energy, f'energy dropped at K={K}'
            assert report.pair_count >= previous.pair_count, f'pair count dropped at K={K}'
        previous = report
    assert previous.pair_count == n * (n - 1), 'K = n admits every pair'
