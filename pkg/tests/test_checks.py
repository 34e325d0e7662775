import pytest

from bisectorlab.geometry import CanonicalLine
from bisectorlab.lab import SUITES, verify
from bisectorlab.lab.checks import (BATTERY_SIZES, DETERMINISTIC_FAMILIES, LARGE_SIZES, RANDOM_FAMILIES, battery,
                                    check_delta_identity, check_heavy_circle, check_shared_bisector,
                                    check_wszt_ratio, make_case)


SMALL = dict(seeds=2, max_n=8, instances=200, ratio_max_n=32)
# suites whose properties hold on every configuration of the battery
HOLDING = [s for s in SUITES if s not in ('shared_bisector', 'heavy_circle', 'wszt_ratio')]


def test_battery_layout():
    cases = battery(seed=5, seeds=3, max_n=8)
    sizes = [n for n in BATTERY_SIZES if n <= 8]
    assert len(cases) == 3 * len(sizes) + 4 * 3
    random_cases = cases[3 * len(sizes):]
    assert [case.spec.seed for case in random_cases[:3]] == [5, 6, 7]
    assert [case.n for case in random_cases[:3]] == sizes[:3]
    assert all(case.point_set.backend.name == 'qfloat' for case in cases if case.spec.family == 'ngon')


def test_battery_reaches_large_sizes():
    cases = battery(seed=0, seeds=1, max_n=300)
    assert max(case.n for case in cases) == 300
    large = [case for case in cases if case.n > BATTERY_SIZES[-1]]
    assert sorted((case.spec.family, case.n) for case in large) == sorted(
        (family, n) for family in DETERMINISTIC_FAMILIES for n in LARGE_SIZES)
    result = check_delta_identity(large)
    assert result.checked == len(large)
    assert result.passed, result.failures[:1]


@pytest.mark.parametrize('suite', HOLDING)
def test_suite_passes_on_small_battery(suite):
    report = verify(suite, **SMALL)
    (result,) = report.results
    assert result.suite == suite
    assert result.checked > 0
    assert result.passed, f'{suite} failed: {result.failures[:2]}'


def test_shared_bisector_suite():
    result = check_shared_bisector(seed=3, instances=300)
    assert result.passed, result.failures[:2]
    assert result.checked == 301


def test_heavy_circle_suite():
    result = check_heavy_circle(seed=1)
    assert result.passed, result.failures[:2]
    assert result.checked == 9


def test_wszt_ratio_reports_grid_growth():
    cases = battery(seed=0, seeds=2, max_n=8)
    result = check_wszt_ratio(cases, max_n=32)
    assert not any('band_facts' in failure for failure in result.failures), 'dyadic band facts always hold'
    failing = {failure['family'] for failure in result.failures}
    assert 'grid' in failing
    assert all(float(failure['ratio']) > 1.1 * float(failure['base_ratio']) for failure in result.failures)
    vacuous = {item['family'] for item in result.vacuous}
    assert vacuous <= set(RANDOM_FAMILIES)
    assert not vacuous & failing
    assert all(item['base_ratio'] == 0 for item in result.vacuous)
    assert result.to_json()['vacuous'] == result.vacuous


def test_all_suites():
    report = verify('all', **SMALL)
    assert [result.suite for result in report.results] == list(SUITES)
    assert {result.suite for result in report.results if not result.passed} == {'wszt_ratio'}
    assert report.to_json()['passed'] is False


def test_broken_bisectors_are_caught(monkeypatch):
    monkeypatch.setattr('bisectorlab.invariants.bisectors.perpendicular_bisector',
                        lambda p, q, backend=None: CanonicalLine(1, 0, 0))
    report = verify('oracle_parity', **SMALL)
    assert not report.passed
    failure = report.results[0].failures[0]
    assert 'diff' in failure and 'points' in failure


def test_counterexample_payload():
    case = make_case('grid', 4)
    example = case.counterexample(energy=1)
    assert example == {'family': 'grid', 'n': 4, 'seed': 0, 'points': case.point_set.to_json(), 'energy': 1}


def test_unknown_suite():
    with pytest.raises(ValueError):
        verify('everything')
