from fractions import Fraction as F

import pytest

from bisectorlab.errors import BackendMismatch, DuplicatePoint
from bisectorlab.geometry import CanonicalCircle, on_curve
from bisectorlab.lab import GeneratorSpec, generate
from bisectorlab.lab.generators import FAMILIES, RATIONAL_FAMILIES


UNIT = CanonicalCircle(F(0), F(0), F(1))


@pytest.mark.parametrize('family', RATIONAL_FAMILIES)
def test_rational_families(family):
    point_set = generate(GeneratorSpec(family, 13, seed=2))
    assert len(point_set) == 13
    assert len(set(point_set)) == 13, 'points must be distinct'
    assert all(isinstance(p.x, F) and isinstance(p.y, F) for p in point_set)


@pytest.mark.parametrize('family', RATIONAL_FAMILIES)
def test_generation_is_deterministic(family):
    first = generate(GeneratorSpec(family, 10, seed=11))
    second = generate(GeneratorSpec(family, 10, seed=11))
    assert list(first) == list(second)


def test_grid_and_collinear():
    assert [tuple(p) for p in generate(GeneratorSpec('grid', 5))] == [(0, 0), (1, 0), (2, 0), (0, 1), (1, 1)]
    assert [tuple(p) for p in generate(GeneratorSpec('collinear', 3))] == [(0, 0), (1, 0), (2, 0)]


def test_rational_circle_points_are_on_the_unit_circle():
    point_set = generate(GeneratorSpec('rational_circle', 20, seed=4))
    assert all(on_curve(p, UNIT) for p in point_set)


@pytest.mark.parametrize('eps,heavy', [('1/2', 10), ('1/4', 5), (F(1, 3), 7)])
def test_heavy_circle_mix(eps, heavy):
    point_set = generate(GeneratorSpec('heavy_circle_mix', 20, seed=1, params={'eps': eps}))
    assert sum(on_curve(p, UNIT) for p in point_set) == heavy


def test_heavy_circle_mix_rejects_bad_eps():
    with pytest.raises(ValueError):
        generate(GeneratorSpec('heavy_circle_mix', 10, params={'eps': 1}))


def test_union_of_circles():
    point_set = generate(GeneratorSpec('union_of_circles', 11, seed=3, params={'circles': 3}))
    circles = [CanonicalCircle(F(3 * i), F(0), F(1)) for i in range(3)]
    assert [sum(on_curve(p, c) for p in point_set) for c in circles] == [4, 4, 3]


def test_ngon_needs_qfloat():
    with pytest.raises(BackendMismatch):
        generate(GeneratorSpec('ngon', 6))
    hexagon = generate(GeneratorSpec('ngon', 6), backend='qfloat')
    assert hexagon.backend.name == 'qfloat'
    assert all(abs(p.x ** 2 + p.y ** 2 - 1) < 1e-8 for p in hexagon)


def test_bad_specs():
    with pytest.raises(ValueError):
        GeneratorSpec('spiral', 10)
    with pytest.raises(ValueError):
        GeneratorSpec('grid', 1)
    with pytest.raises(DuplicatePoint):
        generate(GeneratorSpec('random_rational', 30, params={'num_bound': 1, 'den_bound': 1}))


def test_spec_json():
    spec = GeneratorSpec('heavy_circle_mix', 8, 3, {'eps': F(1, 4)})
    assert spec.to_json() == {'family': 'heavy_circle_mix', 'n': 8, 'seed': 3, 'params': {'eps': '1/4'}}
    assert 'ngon' in FAMILIES and 'ngon' not in RATIONAL_FAMILIES
