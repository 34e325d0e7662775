"""Per-configuration invariant reports.

A report is a flat record. Integer fields are exact (decimal strings beyond 63 bits), rationals
are ``"p/q"`` strings and ratios against bound expressions are floats. Wall-clock timings are
kept apart from the serialized record.
"""
import math
import time
from contextlib import contextmanager
from dataclasses import dataclass, field, fields
from fractions import Fraction
from typing import Any, Dict, List, Optional

import srsly

from ..errors import CapExceeded, OracleMismatch
from ..geometry import PointSet
from ..invariants import (band_facts, banded_energy_sweep, best_heavy_circle_bound, bisector_instance,
                          build_curve_table, conjectured_energy_ratio, decomposed_incidence_count,
                          distance_multiplicities, energy_bound_expression, energy_report,
                          full_refinement, isoceles_count, isoceles_lower_form, multiplicity_map, norms,
                          pinned_lower_bound_check, pinned_profile, refine_pairs, rich_pair_triples,
                          richness_profile, weighted_incidence_count, weighted_incidences_with_bisectors,
                          wszt_rhs_enclosure)
from ..oracles import distinct_bisectors_pairwise, energy_bruteforce, isoceles_bruteforce
from ..utils import exact_number
from .config import CAPS, INVARIANT_NAMES


@dataclass
class InvariantReport:
    """All invariants computed for one configuration; fields of skipped groups stay None."""
    family: str
    n: int
    seed: int
    backend: str
    params: Dict[str, Any] = field(default_factory=dict)
    # bisectors
    distinct_bisectors: Optional[int] = None
    energy: Optional[int] = None
    pair_count: Optional[int] = None
    cs_lower_bound: Optional[Fraction] = None
    # refined
    refined: Optional[List[Dict[str, Any]]] = None
    # curves
    s: Optional[Dict[str, int]] = None
    s_eq: Optional[Dict[str, int]] = None
    max_coverage: Optional[int] = None
    rich_pair_triples: Optional[int] = None
    best_heavy_bound: Optional[Fraction] = None
    richness_ratios: Optional[Dict[str, float]] = None
    richness_conjecture_ratios: Optional[Dict[str, float]] = None
    # distances
    delta_star: Optional[int] = None
    isoceles: Optional[int] = None
    isoceles_lower_form: Optional[int] = None
    pinned_rhs: Optional[Fraction] = None
    pinned_holds: Optional[bool] = None
    pinned_sound_rhs: Optional[Fraction] = None
    pinned_sound_holds: Optional[bool] = None
    pinned_ratio: Optional[float] = None
    distinct_distances: Optional[int] = None
    distance_sum_squares: Optional[int] = None
    distance_ratio: Optional[float] = None
    # incidences
    incidences: Optional[int] = None
    # bands
    M_cut: Optional[int] = None
    bands: Optional[List[Dict[str, Any]]] = None
    # wszt
    norms_points: Optional[Dict[str, int]] = None
    norms_lines: Optional[Dict[str, int]] = None
    wszt_rhs: Optional[Fraction] = None
    wszt_ratio: Optional[float] = None
    band_facts_hold: Optional[bool] = None
    decomposed_incidences: Optional[int] = None
    # validation
    oracles_checked: List[str] = field(default_factory=list)
    audit: Optional[str] = None
    timings: Dict[str, float] = field(default_factory=dict, repr=False)

    def to_json(self):
        """JSON-ready record, without timings."""
        return {f.name: _to_json(getattr(self, f.name)) for f in fields(self) if f.name != 'timings'}

    def to_row(self):
        """Flat CSV row: scalars as they are, nested values as compact JSON."""
        row = {}
        for name, value in self.to_json().items():
            if isinstance(value, (dict, list)):
                value = srsly.json_dumps(value, sort_keys=True)
            row[name] = '' if value is None else value
        return row


REPORT_FIELDS = [f.name for f in fields(InvariantReport) if f.name != 'timings']


def validate_report(data) -> None:
    """Check a serialized report against the report layout.

    Raises:
        ValueError: on missing or unknown keys, or on wrongly typed identity fields.
    """
    missing = set(REPORT_FIELDS) - set(data)
    unknown = set(data) - set(REPORT_FIELDS)
    if missing or unknown:
        raise ValueError(f'Report keys do not match: missing {sorted(missing)}, unknown {sorted(unknown)}')
    if not isinstance(data['family'], str) or not isinstance(data['n'], int):
        raise ValueError('Report family must be a string and n an integer')
    for name in ('distinct_bisectors', 'energy', 'pair_count', 'isoceles', 'incidences', 'delta_star'):
        value = data[name]
        if value is not None and not isinstance(value, (int, str)):
            raise ValueError(f'Report field {name} must be an exact integer, got {value!r}')


def _to_json(value):
    if isinstance(value, dict):
        return {str(k): _to_json(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_to_json(v) for v in value]
    return exact_number(value)


def _ratio(value, bound) -> Optional[float]:
    if not bound:
        return None
    return float(Fraction(value) / Fraction(bound))


@contextmanager
def _timed(report, name):
    start = time.perf_counter()
    yield
    report.timings[name] = time.perf_counter() - start


def _require(n, caps, cap_name, what):
    if n > caps[cap_name]:
        raise CapExceeded(what, n, caps[cap_name])


def compute_invariants(point_set: PointSet, family='custom', seed=0, params=None, invariants=INVARIANT_NAMES,
                       K_values=(3, 4), M_cut=None, heaviness='curves', caps=None, validate_oracles=False,
                       workers=1) -> InvariantReport:
    """Compute the requested invariant groups of one configuration.

    Args:
        point_set (PointSet): the configuration
        family (str, optional): family label for the report. Defaults to 'custom'.
        seed (int, optional): seed label for the report. Defaults to 0.
        params (dict, optional): family parameters for the report.
        invariants (Iterable[str], optional): groups from ``INVARIANT_NAMES``. Defaults to all.
        K_values (Iterable[int], optional): thresholds of the refined energies. Defaults to (3, 4).
        M_cut (int, optional): first band boundary. Defaults to ``max(2, round(n^(2/7)))``.
        heaviness (str, optional): 'curves' or 'circles'. Defaults to 'curves'.
        caps (dict, optional): size caps. Defaults to ``CAPS``.
        validate_oracles (bool, optional): compare with the brute-force scans within their caps.
        workers (int, optional): processes for the sharded loops. Defaults to 1.

    Raises:
        CapExceeded: if a requested group is above its size cap.
        OracleMismatch: if a fast count disagrees with its oracle.

    Returns:
        InvariantReport: the report, with per-group timings attached
    """
    invariants = set(invariants)
    unknown = invariants - set(INVARIANT_NAMES)
    if unknown:
        raise ValueError(f'Unknown invariants: {sorted(unknown)}')
    caps = dict(CAPS, **(caps or {}))
    n = len(point_set)
    backend = point_set.backend
    report = InvariantReport(family, n, seed, backend.name, dict(params or {}))
    label = f'{family} n={n} seed={seed}'
    if M_cut is None:
        M_cut = max(2, round(n ** (2 / 7)))
    M_cut = min(M_cut, n)

    needs_map = invariants & {'bisectors', 'incidences', 'wszt'}
    needs_table = invariants & {'refined', 'curves', 'bands'}
    full = table = None
    if needs_map or needs_table:
        _require(n, caps, 'bisectors', 'bisector counting')
    if needs_map:
        with _timed(report, 'bisectors'):
            full = multiplicity_map(point_set, full_refinement(point_set), workers)
    if needs_table:
        _require(n, caps, 'curves', 'curve enumeration')
        with _timed(report, 'curves'):
            table = build_curve_table(point_set, workers)

    diff = {}
    if 'bisectors' in invariants:
        summary = energy_report(full)
        report.distinct_bisectors = summary.distinct
        report.energy = summary.energy
        report.pair_count = summary.pair_count
        report.cs_lower_bound = summary.cs_lower_bound
        if validate_oracles and n <= caps['pairwise_oracle']:
            _compare(report, diff, 'distinct_bisectors', summary.distinct, distinct_bisectors_pairwise(point_set, caps['pairwise_oracle']))
        if validate_oracles and n <= caps['energy_oracle']:
            _compare(report, diff, 'energy', summary.energy, energy_bruteforce(point_set, None, caps['energy_oracle']))

    if 'refined' in invariants:
        report.refined = []
        with _timed(report, 'refined'):
            for K in K_values:
                refinement = refine_pairs(point_set, table, 2, K + 1, heaviness)
                summary = energy_report(multiplicity_map(point_set, refinement, workers))
                report.refined.append({
                    'K': K, 'pairs': len(refinement), 'distinct': summary.distinct, 'energy': summary.energy,
                    'cs_lower_bound': summary.cs_lower_bound,
                    'bound_ratio': _ratio(summary.energy, energy_bound_expression(n, K)),
                    'conjecture_ratio': conjectured_energy_ratio(summary.energy, n, K),
                })
                if validate_oracles and n <= caps['energy_oracle']:
                    _compare(report, diff, f'energy_K{K}', summary.energy,
                             energy_bruteforce(point_set, refinement, caps['energy_oracle']))

    if 'curves' in invariants:
        profile = richness_profile(table)
        report.s = profile.s
        report.s_eq = profile.s_eq
        report.max_coverage = profile.max_coverage
        report.rich_pair_triples = rich_pair_triples(profile).exact
        report.best_heavy_bound = best_heavy_circle_bound(profile, n)
        report.richness_ratios = {k: _ratio(s_k, n ** 3 * k ** -5.5 + n * n * k ** -3 + n / k)
                                  for k, s_k in profile.s.items()}
        report.richness_conjecture_ratios = {k: _ratio(s_k, n * n * k ** -3 + n / k) for k, s_k in profile.s.items()}

    if 'distances' in invariants:
        _require(n, caps, 'bisectors', 'distance statistics')
        with _timed(report, 'distances'):
            pinned = pinned_profile(point_set)
            check = pinned_lower_bound_check(point_set, pinned)
            multiplicities = distance_multiplicities(point_set)
        report.delta_star = pinned.delta_star
        report.isoceles = isoceles_count(point_set, pinned)
        report.isoceles_lower_form = isoceles_lower_form(pinned)
        report.pinned_rhs = check.rhs
        report.pinned_holds = check.holds
        report.pinned_sound_rhs = check.sound_rhs
        report.pinned_sound_holds = check.sound_holds
        report.pinned_ratio = _ratio(check.lhs, check.rhs)
        report.distinct_distances = len(multiplicities.m)
        report.distance_sum_squares = multiplicities.sum_squares
        report.distance_ratio = _ratio(multiplicities.sum_squares, n ** 3 * math.log(n))
        if validate_oracles and n <= caps['isoceles_oracle']:
            _compare(report, diff, 'isoceles', report.isoceles, isoceles_bruteforce(point_set, caps['isoceles_oracle']))

    if 'incidences' in invariants:
        with _timed(report, 'incidences'):
            report.incidences = weighted_incidences_with_bisectors(point_set, full, workers)

    if 'bands' in invariants:
        report.M_cut = M_cut
        with _timed(report, 'bands'):
            bands = banded_energy_sweep(point_set, table, M_cut, heaviness, workers)
            report.bands = [dict(band=band.label, **band.report.to_json(),
                                 incidences=weighted_incidences_with_bisectors(point_set, band.multiplicities, workers))
                            for band in bands]

    if 'wszt' in invariants:
        with _timed(report, 'wszt'):
            points, lines = bisector_instance(point_set, full)
            incidences = weighted_incidence_count(points, lines, workers)
            _, upper = wszt_rhs_enclosure(points, lines)
            report.norms_points = norms(points).to_json()
            report.norms_lines = norms(lines).to_json()
            report.wszt_rhs = upper
            report.wszt_ratio = _ratio(incidences, upper)
            report.band_facts_hold = all(fact.l1_holds and fact.l2_holds
                                         for fact in band_facts(points) + band_facts(lines))
            report.decomposed_incidences = decomposed_incidence_count(points, lines)

    if backend.name != 'exact':
        # every key set above went through the separation audit
        report.audit = 'passed'
    if diff:
        raise OracleMismatch(label, point_set.to_json(), diff)
    return report


def _compare(report, diff, name, fast, oracle):
    report.oracles_checked.append(name)
    if fast != oracle:
        diff[name] = (fast, oracle)
