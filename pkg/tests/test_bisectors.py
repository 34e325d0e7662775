from collections import Counter
from fractions import Fraction as F

import pytest

from bisectorlab.errors import EmptyMap, InvalidRange, MismatchedSource
from bisectorlab.geometry import CanonicalLine, PointSet
from bisectorlab.invariants import (banded_energy_sweep, best_heavy_circle_bound, bisector_energy, build_curve_table,
                                    conjectured_energy_ratio, cs_lower_bound, distinct_bisectors, energy_report,
                                    heavy_circle_lower_bound, multiplicity_map, refine_pairs, richness_profile)
from bisectorlab.invariants.bisectors import band_boundaries, pair_count
from bisectorlab.lab import GeneratorSpec, generate
from bisectorlab.oracles import energy_bruteforce


@pytest.fixture
def square():
    return PointSet([[0, 0], [1, 0], [0, 1], [1, 1]])


@pytest.fixture
def collinear():
    return PointSet([[0, 0], [1, 0], [2, 0]])


def line(a, b, c):
    return CanonicalLine(F(a), F(b), F(c))


def test_unit_square_multiplicities(square):
    multiplicities = multiplicity_map(square)
    assert multiplicities.w == Counter({
        line(1, 0, F(-1, 2)): 4,
        line(0, 1, F(-1, 2)): 4,
        line(1, -1, 0): 2,
        line(1, 1, -1): 2,
    })
    report = energy_report(multiplicities)
    assert (report.distinct, report.energy, report.pair_count) == (4, 40, 12)
    assert report.cs_lower_bound == F(18, 5)


def test_two_points():
    multiplicities = multiplicity_map(PointSet([[0, 0], [3, 1]]))
    assert distinct_bisectors(multiplicities) == 1
    assert bisector_energy(multiplicities) == 4
    assert cs_lower_bound(multiplicities) == 1


def test_collinear_multiplicities(collinear):
    multiplicities = multiplicity_map(collinear)
    assert set(multiplicities.w.values()) == {2}
    assert distinct_bisectors(multiplicities) == 3
    assert bisector_energy(multiplicities) == 12


def test_empty_refinement(square):
    table = build_curve_table(square)
    multiplicities = multiplicity_map(square, refine_pairs(square, table, 2, 4))
    assert len(multiplicities) == 0
    report = energy_report(multiplicities)
    assert (report.distinct, report.energy, report.pair_count, report.cs_lower_bound) == (0, 0, 0, None)
    with pytest.raises(EmptyMap):
        cs_lower_bound(multiplicities)


@pytest.mark.parametrize('family,n,seed', [
    ('grid', 9, 0),
    ('collinear', 7, 0),
    ('random_rational', 12, 4),
    ('rational_circle', 10, 1),
    ('heavy_circle_mix', 12, 2),
])
def test_map_invariants(family, n, seed):
    point_set = generate(GeneratorSpec(family, n, seed))
    multiplicities = multiplicity_map(point_set)
    assert pair_count(multiplicities) == n * (n - 1)
    assert all(count % 2 == 0 for count in multiplicities.w.values()), 'ordered pairs come in both orders'
    energy = bisector_energy(multiplicities)
    assert n * (n - 1) <= energy <= (n * (n - 1)) ** 2
    assert F(n * (n - 1)) ** 2 / energy <= distinct_bisectors(multiplicities)
    assert energy == energy_bruteforce(point_set)


def test_regular_pentagon_energy():
    pentagon = generate(GeneratorSpec('ngon', 5), backend='qfloat')
    multiplicities = multiplicity_map(pentagon)
    assert distinct_bisectors(multiplicities) == 5, 'one bisector per symmetry axis'
    assert bisector_energy(multiplicities) == 80


@pytest.mark.parametrize('n', range(5, 41))
def test_regular_polygon_has_n_bisectors(n):
    polygon = generate(GeneratorSpec('ngon', n), backend='qfloat')
    # both key sets go through the separation audit, which raises on a collision
    assert distinct_bisectors(multiplicity_map(polygon)) == n
    profile = richness_profile(build_curve_table(polygon))
    assert profile.max_coverage == n
    assert profile.s[n] >= 1


def test_refined_energy_matches_oracle():
    point_set = generate(GeneratorSpec('heavy_circle_mix', 12, seed=5))
    table = build_curve_table(point_set)
    for K in (3, 4, 6):
        refinement = refine_pairs(point_set, table, 2, K + 1)
        assert bisector_energy(multiplicity_map(point_set, refinement)) == energy_bruteforce(point_set, refinement)


def test_parallel_map_matches_serial():
    point_set = generate(GeneratorSpec('random_rational', 14, seed=9))
    serial = multiplicity_map(point_set)
    parallel = multiplicity_map(point_set, workers=3)
    assert list(parallel.w.items()) == list(serial.w.items())


def test_band_boundaries():
    assert band_boundaries(4, 4) == [(2, 4), (4, 8)]
    assert band_boundaries(3, 2) == [(2, 4)]
    assert band_boundaries(20, 3) == [(2, 3), (3, 4), (4, 8), (8, 16), (16, 32)]
    with pytest.raises(InvalidRange):
        band_boundaries(4, 1)
    with pytest.raises(InvalidRange):
        band_boundaries(4, 5)


def test_banded_sweep_square(square):
    bands = banded_energy_sweep(square, build_curve_table(square), 4)
    assert [band.label for band in bands] == ['[2,4)', '[4,8)']
    assert bands[0].report.energy == 0
    assert bands[1].report.energy == 40
    assert bands[1].report.pair_count == 12


def test_banded_sweep_collinear(collinear):
    (band,) = banded_energy_sweep(collinear, build_curve_table(collinear), 2)
    assert band.label == '[2,4)'
    assert (band.report.pair_count, band.report.distinct, band.report.energy) == (6, 3, 12)


def test_banded_sweep_partitions_pairs():
    point_set = generate(GeneratorSpec('union_of_circles', 16, seed=1, params={'circles': 2}))
    table = build_curve_table(point_set)
    bands = banded_energy_sweep(point_set, table, 3, heaviness='circles')
    assert sum(band.report.pair_count for band in bands) == 16 * 15
    pairs = [band.multiplicities.domain.pairs for band in bands]
    for i, first in enumerate(pairs):
        for second in pairs[i + 1:]:
            assert not first & second


def test_banded_sweep_rejects_foreign_table(square, collinear):
    with pytest.raises(MismatchedSource):
        banded_energy_sweep(square, build_curve_table(collinear), 2)


def test_heavy_circle_bound():
    assert heavy_circle_lower_bound(20, 10) == 25
    assert heavy_circle_lower_bound(8, 2) == 1
    assert heavy_circle_lower_bound(8, 8) == 0
    with pytest.raises(InvalidRange):
        heavy_circle_lower_bound(8, 9)


def test_heavy_circle_bound_holds_on_mix():
    point_set = generate(GeneratorSpec('heavy_circle_mix', 24, seed=3, params={'eps': '1/2'}))
    profile = richness_profile(build_curve_table(point_set), 'circle')
    bound = best_heavy_circle_bound(profile, 24)
    assert bound >= heavy_circle_lower_bound(24, 12)
    assert distinct_bisectors(multiplicity_map(point_set)) >= heavy_circle_lower_bound(24, 12)


def test_conjectured_ratio():
    assert conjectured_energy_ratio(40, 4, 3) == F(40, 48)
