"""Pinned distances, distance multiplicities and isoceles triangles.

Every distance here is a squared distance, and the zero distance of a point to itself is never
counted. The number of ordered isoceles triples ``(a, b, c)`` with ``|ab| = |ac|`` and
``b != c`` equals the number of incidences between the points and their bisectors counted with
multiplicity, which :func:`weighted_incidences_with_bisectors` computes independently.
"""
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, NamedTuple

from ..errors import MismatchedSource
from ..geometry import LineIndex, PointSet, squared_distance
from ..utils import exact_number, parallel_map, split_range


def _require_two(point_set):
    if len(point_set) < 2:
        raise ValueError(f'Distance statistics need at least two points, got {len(point_set)}')


@dataclass
class PinnedProfile:
    """Distinct distances seen from every point.

    Attributes:
        counts (list[int]): ``|delta(p)|`` per point index
        delta_star (int): the largest of the counts
        multiplicities (list[Counter]): per point, squared distance -> number of points at it
    """
    counts: List[int]
    delta_star: int
    multiplicities: List[Counter]

    def to_json(self, backend):
        return {'counts': self.counts, 'delta_star': self.delta_star,
                'multiplicities': [{backend.to_json(d): c for d, c in row.items()} for row in self.multiplicities]}


def pinned_profile(point_set: PointSet) -> PinnedProfile:
    _require_two(point_set)
    quantize = point_set.backend.quantize
    multiplicities = []
    for p in point_set:
        multiplicities.append(Counter(quantize(squared_distance(p, q)) for q in point_set if q != p))
    counts = [len(row) for row in multiplicities]
    return PinnedProfile(counts, max(counts), multiplicities)


def isoceles_count(point_set: PointSet, profile: PinnedProfile = None) -> int:
    """Ordered isoceles triples ``(apex, b, c)``, ``b != c``: ``sum over p, d of n(p,d) (n(p,d) - 1)``."""
    profile = profile or pinned_profile(point_set)
    return sum(c * (c - 1) for row in profile.multiplicities for c in row.values())


def isoceles_lower_form(profile: PinnedProfile) -> int:
    """``sum over p, d of (n(p,d) - 1)^2``, never larger than the isoceles count."""
    return sum((c - 1) ** 2 for row in profile.multiplicities for c in row.values())


def _incidence_shard(job):
    points, index = job
    return sum(index.weight_through(p) for p in points)


def weighted_incidences_with_bisectors(point_set: PointSet, multiplicities, workers=1) -> int:
    """``sum over points p and bisectors l of w(l) [p on l]``.

    Args:
        point_set (PointSet): the points
        multiplicities (MultiplicityMap): a bisector map built from the same points
        workers (int, optional): number of processes the points are sharded over. Defaults to 1.

    Raises:
        MismatchedSource: if the map was built from another point set.
    """
    source = multiplicities.source
    if source is not point_set and source != point_set:
        raise MismatchedSource('The multiplicity map was built from a different point set')
    if not multiplicities.w:
        return 0
    index = LineIndex(multiplicities.w.items(), point_set.backend)
    shards = [([point_set[i] for i in r], index) for r in split_range(len(point_set), workers)]
    return sum(parallel_map(_incidence_shard, shards, workers))


@dataclass
class DistanceMultiplicities:
    """Ordered-pair count per squared distance, and the sum of the squared counts."""
    m: Dict[object, int]
    sum_squares: int

    def to_json(self, backend):
        return {'m': {backend.to_json(d): exact_number(c) for d, c in self.m.items()},
                'sum_squares': exact_number(self.sum_squares)}


def distance_multiplicities(point_set: PointSet) -> DistanceMultiplicities:
    _require_two(point_set)
    quantize = point_set.backend.quantize
    m = Counter(quantize(squared_distance(p, q)) for p in point_set for q in point_set if p != q)
    m = dict(sorted(m.items()))
    return DistanceMultiplicities(m, sum(c * c for c in m.values()))


def distinct_distance_count(point_set: PointSet) -> int:
    """Number of distinct nonzero squared distances in the set."""
    return len(distance_multiplicities(point_set).m)


class PinnedBoundCheck(NamedTuple):
    """The isoceles count against two pinned-distance lower bounds.

    ``rhs`` is ``n (n - delta*)^2 / delta*``. ``sound_rhs`` is ``n (n - 1 - delta*)^2 / delta*``,
    which follows from Cauchy-Schwarz when the zero distance is excluded and always holds.
    """
    lhs: int
    rhs: Fraction
    holds: bool
    sound_rhs: Fraction
    sound_holds: bool


def pinned_lower_bound_check(point_set: PointSet, profile: PinnedProfile = None) -> PinnedBoundCheck:
    _require_two(point_set)
    profile = profile or pinned_profile(point_set)
    n, delta_star = len(point_set), profile.delta_star
    lhs = isoceles_count(point_set, profile)
    rhs = Fraction(n * (n - delta_star) ** 2, delta_star)
    sound_rhs = Fraction(n * (n - 1 - delta_star) ** 2, delta_star)
    return PinnedBoundCheck(lhs, rhs, lhs >= rhs, sound_rhs, lhs >= sound_rhs)
