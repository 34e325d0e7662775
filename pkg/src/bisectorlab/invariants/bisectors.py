"""Bisector multiplicities, the distinct-bisector count and bisector energies.

For a set of ordered pairs, ``w(l)`` counts the pairs whose perpendicular bisector is ``l``.
The number of keys is the number of distinct bisectors, and ``sum w(l)^2`` is the energy:
the number of ordered quadruples ``(a, b, c, d)`` with both pairs in the set and
``bis(a, b) == bis(c, d)``, diagonal quadruples included.
"""
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import List, NamedTuple, Optional

from ..errors import EmptyMap, InvalidRange
from ..geometry import PointSet, perpendicular_bisector
from ..utils import exact_number, parallel_map
from .curves import CurveTable, PairRefinement, RichnessProfile, heaviness_matrix, check_table_source


@dataclass
class MultiplicityMap:
    """Bisector line -> number of ordered pairs of ``domain`` it bisects.

    Attributes:
        w (Counter): multiplicity per canonical line, in first-seen order over sorted pairs
        domain (PairRefinement): the contributing ordered pairs
        source (PointSet): the point set the pairs index into
    """
    w: Counter
    domain: PairRefinement
    source: PointSet

    def __len__(self):
        return len(self.w)

    def to_json(self):
        backend = self.source.backend
        return [{'line': line.to_json(backend), 'w': exact_number(count)} for line, count in self.w.items()]


def full_refinement(point_set: PointSet) -> PairRefinement:
    """All ordered pairs of distinct points, as the refinement ``[2, n + 1)``."""
    return PairRefinement(2, len(point_set) + 1, frozenset(point_set.ordered_pairs()))


def _count_bisectors(job):
    points, backend, pairs = job
    counts = Counter()
    for i, j in pairs:
        counts[perpendicular_bisector(points[i], points[j], backend)] += 1
    return counts


def multiplicity_map(point_set: PointSet, refinement: Optional[PairRefinement] = None, workers=1) -> MultiplicityMap:
    """Build the multiplicity map of a pair set.

    Args:
        point_set (PointSet): the points
        refinement (PairRefinement, optional): the pairs to count. Defaults to all ordered pairs.
        workers (int, optional): number of processes the pair loop is sharded over. Defaults to 1.

    Raises:
        IndexOutOfRange: if a pair references a point that does not exist.

    Returns:
        MultiplicityMap: the exact multiplicities
    """
    if refinement is None:
        refinement = full_refinement(point_set)
    pairs = refinement.sorted_pairs()
    for i, j in pairs:
        point_set.check_index(i)
        point_set.check_index(j)
    chunk_size = max(1, -(-len(pairs) // max(1, workers)))
    chunks = [pairs[start:start + chunk_size] for start in range(0, len(pairs), chunk_size)]
    w = Counter()
    for counts in parallel_map(_count_bisectors, [(point_set.points, point_set.backend, chunk) for chunk in chunks],
                               workers):
        w.update(counts)
    point_set.backend.audit(w.keys())
    return MultiplicityMap(w, refinement, point_set)


def distinct_bisectors(multiplicities: MultiplicityMap) -> int:
    return len(multiplicities.w)


def bisector_energy(multiplicities: MultiplicityMap) -> int:
    return sum(count * count for count in multiplicities.w.values())


def pair_count(multiplicities: MultiplicityMap) -> int:
    return sum(multiplicities.w.values())


def cs_lower_bound(multiplicities: MultiplicityMap) -> Fraction:
    """Cauchy-Schwarz lower bound ``(sum w)^2 / sum w^2`` on the number of distinct bisectors.

    Raises:
        EmptyMap: if the map has no lines.
    """
    if not multiplicities.w:
        raise EmptyMap('The Cauchy-Schwarz bound needs at least one bisector')
    return Fraction(pair_count(multiplicities) ** 2, bisector_energy(multiplicities))


@dataclass
class EnergyReport:
    distinct: int
    energy: int
    pair_count: int
    cs_lower_bound: Optional[Fraction]

    def to_json(self):
        return {'distinct': exact_number(self.distinct), 'energy': exact_number(self.energy),
                'pair_count': exact_number(self.pair_count),
                'cs_lower_bound': None if self.cs_lower_bound is None else exact_number(self.cs_lower_bound)}


def energy_report(multiplicities: MultiplicityMap) -> EnergyReport:
    """Distinct count, energy, pair count and Cauchy-Schwarz bound of a map (bound is None when empty)."""
    bound = cs_lower_bound(multiplicities) if multiplicities.w else None
    return EnergyReport(distinct_bisectors(multiplicities), bisector_energy(multiplicities),
                        pair_count(multiplicities), bound)


class EnergyBand(NamedTuple):
    """One heaviness band of a banded sweep, with its multiplicity map and energy report."""
    k_low: int
    k_high: int
    multiplicities: MultiplicityMap
    report: EnergyReport

    @property
    def label(self):
        return f'[{self.k_low},{self.k_high})'


def band_boundaries(n, M_cut):
    """Heaviness bands ``[2, M_cut)``, then bands up to the next powers of two, covering ``[2, n]``.

    Raises:
        InvalidRange: unless ``2 <= M_cut <= n``.
    """
    if not 2 <= M_cut <= n:
        raise InvalidRange(f'Need 2 <= M_cut <= n = {n}, got {M_cut}')
    bands = []
    if M_cut > 2:
        bands.append((2, M_cut))
    low = M_cut
    while low <= n:
        high = 1 << low.bit_length()
        bands.append((low, high))
        low = high
    return bands


def banded_energy_sweep(point_set: PointSet, table: CurveTable, M_cut, heaviness='curves', workers=1) -> List[EnergyBand]:
    """Split all ordered pairs into heaviness bands and report the bisector energy of each.

    The first band is ``[2, M_cut)`` (omitted when ``M_cut == 2``); the remaining bands end at
    powers of two, e.g. ``[M_cut, 2^i)``, ``[2^i, 2^(i+1))`` and so on until ``n`` is covered.
    Every ordered pair lands in exactly one band.

    Raises:
        InvalidRange: unless ``2 <= M_cut <= n``.
    """
    check_table_source(point_set, table)
    bounds = band_boundaries(len(point_set), M_cut)
    matrix = heaviness_matrix(table, heaviness)
    members = {bound: set() for bound in bounds}
    for i, row in enumerate(matrix):
        for j, c in enumerate(row):
            if i == j:
                continue
            for low, high in bounds:
                if low <= c < high:
                    members[(low, high)].add((i, j))
                    break
    bands = []
    for low, high in bounds:
        refinement = PairRefinement(low, high, frozenset(members[(low, high)]))
        multiplicities = multiplicity_map(point_set, refinement, workers)
        bands.append(EnergyBand(low, high, multiplicities, energy_report(multiplicities)))
    return bands


def heavy_circle_lower_bound(n, k) -> Fraction:
    """Lower bound on the distinct bisectors of n points when one curve holds exactly k of them.

    With ``k = eps * n`` this is ``min(eps, 1 - eps) * eps * n^2 / 4``.
    """
    if not 0 < k <= n:
        raise InvalidRange(f'Need 0 < k <= n = {n}, got {k}')
    return Fraction(min(k, n - k) * k, 4)


def best_heavy_circle_bound(profile: RichnessProfile, n) -> Fraction:
    """Largest heavy-curve bound over all populated curve sizes of a profile."""
    bounds = [heavy_circle_lower_bound(n, k) for k, count in profile.s_eq.items() if count]
    return max(bounds, default=Fraction(0))


def energy_bound_expression(n, K) -> float:
    """``K^(2/5) n^(12/5) + K n^2``, the refined-energy bound shape with constant 1."""
    return K ** 0.4 * n ** 2.4 + K * n * n


def conjectured_energy_ratio(energy, n, K) -> Fraction:
    """``Q_K / (K n^2)``, bounded if the refined energy is as small as conjectured."""
    return Fraction(energy, K * n * n)
