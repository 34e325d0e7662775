"""Verification suites over a standard battery of configurations.

A suite never raises on a failed property; it records the configuration and the offending
values as a counterexample. Only broken inputs (caps, generator parameters) raise.
"""
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Any, Dict, List

from tqdm import tqdm

from ..geometry import PointSet
from ..invariants import (band_facts, banded_energy_sweep, bisector_instance, build_curve_table, energy_report,
                          full_refinement, heavy_circle_lower_bound, isoceles_count, multiplicity_map,
                          pinned_lower_bound_check, pinned_profile, refine_pairs, weighted_incidence_count,
                          weighted_incidences_with_bisectors, wszt_rhs_enclosure)
from ..oracles import (distinct_bisectors_pairwise, energy_bruteforce, isoceles_bruteforce,
                       random_shared_bisector_instance, shared_bisector_pairs, shared_bisector_witness)
from .config import CAPS
from .generators import FAMILIES, GeneratorSpec, generate


SUITES = ('proposition', 'shared_bisector', 'cs_chain', 'delta_identity', 'heavy_circle', 'band_partition',
          'wszt_ratio', 'oracle_parity', 'pinned_bound')

BATTERY_SIZES = (3, 4, 5, 6, 7, 8, 9, 12, 16, 20, 25, 32, 40)
# Deterministic families only; random draws keep to the battery sizes.
LARGE_SIZES = (64, 128, 300)
# Suites that need the curve table skip configurations above this size.
TABLE_LIMIT = 40
DETERMINISTIC_FAMILIES = ('grid', 'collinear', 'ngon')
RANDOM_FAMILIES = ('random_rational', 'rational_circle', 'heavy_circle_mix', 'union_of_circles')
HEAVY_EPS = (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4))
HEAVY_SIZES = (16, 32, 64)
RATIO_FAMILIES = FAMILIES
RATIO_SIZES = (8, 16, 32, 64, 128, 256)
# Largest allowed growth of the incidence/bound ratio over its value at the smallest size.
RATIO_SLACK = Fraction(11, 10)
REFINED_K = (3, 4)
# Counterexamples carry the points only for configurations up to this size.
DUMP_LIMIT = 40


class Case:
    """One battery configuration with its derived structures computed on first use."""

    def __init__(self, spec: GeneratorSpec, point_set: PointSet):
        self.spec = spec
        self.point_set = point_set
        self.n = len(point_set)

    @cached_property
    def multiplicities(self):
        return multiplicity_map(self.point_set, full_refinement(self.point_set))

    @cached_property
    def table(self):
        return build_curve_table(self.point_set)

    @cached_property
    def pinned(self):
        return pinned_profile(self.point_set)

    @cached_property
    def incidences(self):
        return weighted_incidences_with_bisectors(self.point_set, self.multiplicities)

    @cached_property
    def bands(self):
        return banded_energy_sweep(self.point_set, self.table, max(2, min(self.n, round(self.n ** (2 / 7)))))

    def counterexample(self, **values):
        example = {'family': self.spec.family, 'n': self.n, 'seed': self.spec.seed}
        if self.n <= DUMP_LIMIT:
            example['points'] = self.point_set.to_json()
        example.update({key: str(value) if isinstance(value, Fraction) else value for key, value in values.items()})
        return example


def make_case(family, n, seed=0, params=None):
    backend = 'qfloat' if family == 'ngon' else 'exact'
    spec = GeneratorSpec(family, n, seed, dict(params or {}))
    return Case(spec, generate(spec, backend))


def battery(seed=0, seeds=100, max_n=40) -> List[Case]:
    """Every deterministic family at every battery size, and ``seeds`` draws of each random family.

    Deterministic families also get the sizes of ``LARGE_SIZES`` up to ``max_n``. Random draw ``s``
    uses seed ``seed + s`` and cycles through the battery sizes.
    """
    sizes = [n for n in BATTERY_SIZES if n <= max_n] or [max(2, max_n)]
    large = [n for n in LARGE_SIZES if sizes[-1] < n <= max_n]
    cases = [make_case(family, n) for family in DETERMINISTIC_FAMILIES for n in sizes + large]
    for family in RANDOM_FAMILIES:
        for s in range(seeds):
            cases.append(make_case(family, sizes[s % len(sizes)], seed + s))
    return cases


@dataclass
class CheckResult:
    suite: str
    checked: int = 0
    failures: List[Dict[str, Any]] = field(default_factory=list)
    # inputs on which the property says nothing, such as a zero base ratio
    vacuous: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def passed(self):
        return not self.failures

    def expect(self, condition, counterexample):
        self.checked += 1
        if not condition:
            self.failures.append(counterexample())

    def to_json(self):
        return {'suite': self.suite, 'passed': self.passed, 'checked': self.checked, 'failures': self.failures,
                'vacuous': self.vacuous}


@dataclass
class VerifyReport:
    results: List[CheckResult]

    @property
    def passed(self):
        return all(result.passed for result in self.results)

    def to_json(self):
        return {'passed': self.passed, 'results': [result.to_json() for result in self.results]}


def check_proposition(cases, progress=False):
    """At least n distinct bisectors whenever n > 2."""
    result = CheckResult('proposition')
    for case in tqdm(cases, desc='proposition', disable=not progress):
        if case.n > 2:
            distinct = len(case.multiplicities)
            result.expect(distinct >= case.n, lambda: case.counterexample(distinct_bisectors=distinct))
    return result


def check_shared_bisector(seed=0, instances=10000, progress=False):
    """At most two shared-bisector pairs on random instances, and exactly two on the witness."""
    result = CheckResult('shared_bisector')
    witness = shared_bisector_witness()
    count = shared_bisector_pairs(witness.curve, witness.sample, witness.p, witness.q)
    result.expect(count == 2, lambda: {'instance': 'witness', 'pairs': count})
    rng = random.Random(seed)
    for index in tqdm(range(instances), desc='shared_bisector', disable=not progress):
        instance = random_shared_bisector_instance(rng)
        count = shared_bisector_pairs(instance.curve, instance.sample, instance.p, instance.q)
        result.expect(count <= 2, lambda: {'instance': index, 'curve': instance.curve.to_json(),
                                           'p': instance.p.to_json(), 'q': instance.q.to_json(), 'pairs': count})
    return result


def _table_cases(cases):
    return [case for case in cases if case.n <= TABLE_LIMIT]


def _cs_holds(report):
    return report.distinct * report.energy >= report.pair_count ** 2


def check_cs_chain(cases, progress=False):
    """``distinct * energy >= pairs^2`` for all pairs, every refined pair set and every band."""
    result = CheckResult('cs_chain')
    for case in tqdm(_table_cases(cases), desc='cs_chain', disable=not progress):
        reports = [('full', energy_report(case.multiplicities))]
        for K in REFINED_K:
            refinement = refine_pairs(case.point_set, case.table, 2, K + 1)
            reports.append((f'K={K}', energy_report(multiplicity_map(case.point_set, refinement))))
        reports.extend((band.label, band.report) for band in case.bands)
        for name, report in reports:
            result.expect(_cs_holds(report), lambda: case.counterexample(pairs=name, **report.to_json()))
    return result


def check_delta_identity(cases, progress=False):
    """Isoceles count equals the weighted point-bisector incidence count."""
    result = CheckResult('delta_identity')
    for case in tqdm(cases, desc='delta_identity', disable=not progress):
        delta = isoceles_count(case.point_set, case.pinned)
        result.expect(delta == case.incidences, lambda: case.counterexample(isoceles=delta, incidences=case.incidences))
    return result


def check_heavy_circle(seed=0, progress=False):
    """Configurations with ``ceil(eps n)`` points on a circle have enough distinct bisectors."""
    result = CheckResult('heavy_circle')
    grid = [(eps, n) for eps in HEAVY_EPS for n in HEAVY_SIZES]
    for eps, n in tqdm(grid, desc='heavy_circle', disable=not progress):
        case = make_case('heavy_circle_mix', n, seed, {'eps': eps})
        bound = heavy_circle_lower_bound(n, math.ceil(eps * n))
        distinct = len(case.multiplicities)
        result.expect(distinct >= bound, lambda: case.counterexample(eps=eps, distinct_bisectors=distinct, bound=bound))
    return result


def check_band_partition(cases, progress=False):
    """Bands split the ordered pairs and the bisector incidences exactly."""
    result = CheckResult('band_partition')
    for case in tqdm(_table_cases(cases), desc='band_partition', disable=not progress):
        pairs = sum(band.report.pair_count for band in case.bands)
        incidences = sum(weighted_incidences_with_bisectors(case.point_set, band.multiplicities)
                         for band in case.bands)
        result.expect(pairs == case.n * (case.n - 1) and incidences == case.incidences,
                      lambda: case.counterexample(band_pairs=pairs, band_incidences=incidences,
                                                  incidences=case.incidences))
    return result


def _certified_ratio(case):
    points, lines = bisector_instance(case.point_set, case.multiplicities)
    incidences = weighted_incidence_count(points, lines)
    lower, upper = wszt_rhs_enclosure(points, lines)
    # smallest and largest values the exact ratio can take
    return Fraction(incidences) / upper, Fraction(incidences) / lower, points, lines


def check_wszt_ratio(cases, max_n=RATIO_SIZES[-1], seed=0, progress=False):
    """Dyadic band facts on every bisector instance, and a stable incidence/bound ratio over growing n.

    The ratio is swept over every family. A family whose ratio is zero at the smallest size has
    no constant to stay near; it is listed under ``vacuous`` instead of being checked.
    """
    result = CheckResult('wszt_ratio')
    for case in tqdm(cases, desc='wszt_ratio', disable=not progress):
        points, lines = bisector_instance(case.point_set, case.multiplicities)
        facts = band_facts(points) + band_facts(lines)
        result.expect(all(fact.l1_holds and fact.l2_holds for fact in facts),
                      lambda: case.counterexample(band_facts=[fact._asdict() for fact in facts]))
    sizes = [n for n in RATIO_SIZES if n <= max_n]
    for family in RATIO_FAMILIES:
        if len(sizes) < 2:
            break
        base, _, _, _ = _certified_ratio(make_case(family, sizes[0], seed))
        if base == 0:
            result.vacuous.append({'family': family, 'n': sizes[0], 'seed': seed, 'base_ratio': 0})
            continue
        for n in tqdm(sizes[1:], desc=f'wszt_ratio {family}', disable=not progress):
            case = make_case(family, n, seed)
            _, high, _, _ = _certified_ratio(case)
            result.expect(high <= RATIO_SLACK * base,
                          lambda: case.counterexample(ratio=float(high), base_ratio=float(base)))
    return result


def check_oracle_parity(cases, caps=None, progress=False):
    """Fast distinct count, energy, refined energy and isoceles count equal their brute-force scans."""
    caps = dict(CAPS, **(caps or {}))
    result = CheckResult('oracle_parity')
    for case in tqdm(cases, desc='oracle_parity', disable=not progress):
        diff = {}
        if case.n <= caps['pairwise_oracle']:
            diff['distinct_bisectors'] = (len(case.multiplicities), distinct_bisectors_pairwise(case.point_set))
        if case.n <= caps['energy_oracle']:
            diff['energy'] = (energy_report(case.multiplicities).energy, energy_bruteforce(case.point_set))
            refinement = refine_pairs(case.point_set, case.table, 2, REFINED_K[0] + 1)
            fast = energy_report(multiplicity_map(case.point_set, refinement)).energy
            diff[f'energy_K{REFINED_K[0]}'] = (fast, energy_bruteforce(case.point_set, refinement))
        if case.n <= caps['isoceles_oracle']:
            diff['isoceles'] = (isoceles_count(case.point_set, case.pinned), isoceles_bruteforce(case.point_set))
        mismatched = {name: values for name, values in diff.items() if values[0] != values[1]}
        result.expect(not mismatched, lambda: case.counterexample(
            diff={name: {'fast': fast, 'oracle': oracle} for name, (fast, oracle) in mismatched.items()}))
    return result


def check_pinned_bound(cases, progress=False):
    """The isoceles count is at least ``n (n - 1 - delta*)^2 / delta*`` for n >= 3."""
    result = CheckResult('pinned_bound')
    for case in tqdm(cases, desc='pinned_bound', disable=not progress):
        if case.n >= 3:
            check = pinned_lower_bound_check(case.point_set, case.pinned)
            result.expect(check.sound_holds, lambda: case.counterexample(isoceles=check.lhs, bound=check.sound_rhs))
    return result


def verify(suite='all', seed=0, seeds=100, max_n=40, instances=10000, ratio_max_n=RATIO_SIZES[-1], caps=None,
           progress=False) -> VerifyReport:
    """Run one verification suite, or all of them, over the standard battery.

    Args:
        suite (str, optional): a name from ``SUITES`` or 'all'. Defaults to 'all'.
        seed (int, optional): first seed of the random draws. Defaults to 0.
        seeds (int, optional): random draws per random family. Defaults to 100.
        max_n (int, optional): largest battery configuration. Defaults to 40.
        instances (int, optional): random shared-bisector instances. Defaults to 10000.
        ratio_max_n (int, optional): largest size of the ratio-stability sweep. Defaults to 256.
        caps (dict, optional): oracle size caps.
        progress (bool, optional): show progress bars. Defaults to False.

    Returns:
        VerifyReport: pass/fail per suite with counterexamples
    """
    if suite != 'all' and suite not in SUITES:
        raise ValueError(f'Unknown suite: {suite}; expected "all" or one of {SUITES}')
    names = SUITES if suite == 'all' else (suite,)
    needs_battery = set(names) - {'shared_bisector', 'heavy_circle'}
    cases = battery(seed, seeds, max_n) if needs_battery else []
    runners = {
        'proposition': lambda: check_proposition(cases, progress),
        'shared_bisector': lambda: check_shared_bisector(seed, instances, progress),
        'cs_chain': lambda: check_cs_chain(cases, progress),
        'delta_identity': lambda: check_delta_identity(cases, progress),
        'heavy_circle': lambda: check_heavy_circle(seed, progress),
        'band_partition': lambda: check_band_partition(cases, progress),
        'wszt_ratio': lambda: check_wszt_ratio(cases, ratio_max_n, seed, progress),
        'oracle_parity': lambda: check_oracle_parity(cases, caps, progress),
        'pinned_bound': lambda: check_pinned_bound(cases, progress),
    }
    return VerifyReport([runners[name]() for name in names])
