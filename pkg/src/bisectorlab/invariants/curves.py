"""Rich lines and circles of a point set.

The curve table holds every line through at least two points and every circle through at
least three points, each with the full list of points it contains. Richness statistics,
pair heaviness and heaviness-refined pair sets are all read off the table.
"""
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, NamedTuple, Optional, Tuple

import srsly

from ..errors import Collinear, DegeneratePair, InvalidRange, MismatchedSource
from ..geometry import CanonicalCircle, CanonicalLine, PointSet, circle_through, line_through
from ..utils import parallel_map, split_range


HEAVINESS_MODES = ('curves', 'circles')
CURVE_KINDS = {'line': CanonicalLine, 'circle': CanonicalCircle}


class CurveTable:
    """Map from canonical curve to the sorted indices of the points on it.

    Args:
        point_set (PointSet): the point set the table was built from
        entries (dict[CurveKey, tuple[int, ...]]): incident point indices per curve
    """

    def __init__(self, point_set: PointSet, entries: Dict[object, Tuple[int, ...]]):
        self.point_set = point_set
        self.entries = entries
        self._heaviness = {}

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries.items())

    def lines(self):
        return {key: points for key, points in self.entries.items() if isinstance(key, CanonicalLine)}

    def circles(self):
        return {key: points for key, points in self.entries.items() if isinstance(key, CanonicalCircle)}

    def to_json(self):
        backend = self.point_set.backend
        return [{'curve': key.to_json(backend), 'point_indices': list(points)}
                for key, points in self.entries.items()]

    def dump(self, path):
        srsly.write_json(path, self.to_json())


def _line_shard(job):
    points, backend, first_indices = job
    found = {}
    for i in first_indices:
        for j in range(i + 1, len(points)):
            key = line_through(points[i], points[j], backend)
            found.setdefault(key, set()).update((i, j))
    return found


def _circle_shard(job):
    points, backend, first_indices = job
    n = len(points)
    found = {}
    for i in first_indices:
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                try:
                    key = circle_through(points[i], points[j], points[k], backend)
                except Collinear:
                    continue
                found.setdefault(key, set()).update((i, j, k))
    return found


def _merge(shards, entries):
    for shard in shards:
        for key, indices in shard.items():
            entries.setdefault(key, set()).update(indices)


def build_curve_table(point_set: PointSet, workers=1) -> CurveTable:
    """Enumerate all lines through two points and all circles through three points.

    Lines come from all pairs and circles from all non-collinear triples; keys are canonical, so
    every curve appears once with the union of the indices that produced it. Under the
    quantized-float backend the keys are audited for separation.

    Args:
        point_set (PointSet): at least two points
        workers (int, optional): number of processes for the pair and triple loops. Defaults to 1.

    Returns:
        CurveTable: the table, lines first and in discovery order
    """
    n = len(point_set)
    if n < 2:
        raise ValueError(f'A curve table needs at least two points, got {n}')
    points, backend = point_set.points, point_set.backend
    shards = split_range(n, workers)
    entries = {}
    _merge(parallel_map(_line_shard, [(points, backend, r) for r in shards], workers), entries)
    _merge(parallel_map(_circle_shard, [(points, backend, r) for r in shards], workers), entries)
    backend.audit(entries.keys())
    return CurveTable(point_set, {key: tuple(sorted(indices)) for key, indices in entries.items()})


@dataclass
class RichnessProfile:
    """Exact ``s_k`` (curves with at least k points) and ``s_eq`` (exactly k points) for k >= 2."""
    s: Dict[int, int] = field(default_factory=dict)
    s_eq: Dict[int, int] = field(default_factory=dict)
    max_coverage: int = 0

    def at_least(self, k) -> int:
        if k > self.max_coverage:
            return 0
        return self.s[max(k, 2)]

    def exactly(self, k) -> int:
        return self.s_eq.get(k, 0)

    def to_json(self):
        return {'s': {str(k): v for k, v in self.s.items()},
                's_eq': {str(k): v for k, v in self.s_eq.items()},
                'max_coverage': self.max_coverage}


def richness_profile(table: CurveTable, kind: Optional[str] = None) -> RichnessProfile:
    """Richness statistics of a curve table.

    Args:
        table (CurveTable): the curve table
        kind (str, optional): 'line' or 'circle' to restrict to one kind of curve. Defaults to both.

    Returns:
        RichnessProfile: ``s`` and ``s_eq`` for every k from 2 to the largest coverage
    """
    if kind is not None and kind not in CURVE_KINDS:
        raise ValueError(f'Unknown curve kind: {kind}')
    sizes = Counter(len(points) for key, points in table
                    if kind is None or isinstance(key, CURVE_KINDS[kind]))
    if not sizes:
        return RichnessProfile()
    max_coverage = max(sizes)
    s_eq = {k: sizes.get(k, 0) for k in range(2, max_coverage + 1)}
    s, running = {}, 0
    for k in range(max_coverage, 1, -1):
        running += s_eq[k]
        s[k] = running
    return RichnessProfile(s=dict(sorted(s.items())), s_eq=s_eq, max_coverage=max_coverage)


class RichPairCount(NamedTuple):
    exact: int
    upper: int


def rich_pair_triples(profile: RichnessProfile, k_low=2, k_high=None) -> RichPairCount:
    """Count triples ``(p, q, curve)`` with ``p != q`` on a curve holding k points, k_low <= k <= k_high.

    Returns the exact count ``sum k(k-1) s_eq[k]`` and the cruder ``sum k^2 s_eq[k]``.
    """
    k_high = profile.max_coverage if k_high is None else k_high
    exact = upper = 0
    for k, count in profile.s_eq.items():
        if k_low <= k <= k_high:
            exact += k * (k - 1) * count
            upper += k * k * count
    return RichPairCount(exact, upper)


def heaviness_matrix(table: CurveTable, heaviness='curves') -> List[List[int]]:
    """All pair heavinesses C(a, b) at once.

    ``C(a, b)`` is the largest number of points on a curve through both points. With
    ``heaviness='circles'`` only circles count, and a pair on no circle gets 2, the count of the
    pair itself. The diagonal is 0. Matrices are cached on the table.
    """
    if heaviness not in HEAVINESS_MODES:
        raise ValueError(f'Unknown heaviness mode: {heaviness}; expected one of {HEAVINESS_MODES}')
    if heaviness in table._heaviness:
        return table._heaviness[heaviness]
    n = len(table.point_set)
    base = 2 if heaviness == 'circles' else 0
    matrix = [[base if i != j else 0 for j in range(n)] for i in range(n)]
    for key, points in table:
        if heaviness == 'circles' and not isinstance(key, CanonicalCircle):
            continue
        k = len(points)
        for i in points:
            row = matrix[i]
            for j in points:
                if i != j and row[j] < k:
                    row[j] = k
    table._heaviness[heaviness] = matrix
    return matrix


def pair_heaviness(table: CurveTable, i, j, heaviness='curves') -> int:
    """The heaviness C(p_i, p_j) of one pair.

    Raises:
        IndexOutOfRange: if an index is not a point of the table's set.
        DegeneratePair: if ``i == j``.
    """
    table.point_set.check_index(i)
    table.point_set.check_index(j)
    if i == j:
        raise DegeneratePair(f'Heaviness of the pair ({i}, {i})')
    return heaviness_matrix(table, heaviness)[i][j]


@dataclass(frozen=True)
class PairRefinement:
    """Ordered index pairs ``(i, j)``, ``i != j``, whose heaviness lies in ``[K_low, K_high)``."""
    K_low: int
    K_high: int
    pairs: FrozenSet[Tuple[int, int]]

    def __len__(self):
        return len(self.pairs)

    def __contains__(self, pair):
        return pair in self.pairs

    def sorted_pairs(self):
        return sorted(self.pairs)


def check_table_source(point_set, table):
    if table.point_set is not point_set and table.point_set != point_set:
        raise MismatchedSource('The curve table was built from a different point set')


def refine_pairs(point_set: PointSet, table: CurveTable, K_low, K_high, heaviness='curves') -> PairRefinement:
    """The ordered pairs with ``K_low <= C(a, b) < K_high``.

    ``refine_pairs(P, T, 2, K + 1)`` is the set of pairs with heaviness at most K.

    Raises:
        InvalidRange: unless ``2 <= K_low < K_high``.
        MismatchedSource: if the table belongs to another point set.
    """
    if not 2 <= K_low < K_high:
        raise InvalidRange(f'Need 2 <= K_low < K_high, got [{K_low}, {K_high})')
    check_table_source(point_set, table)
    matrix = heaviness_matrix(table, heaviness)
    pairs = frozenset((i, j) for i, row in enumerate(matrix) for j, c in enumerate(row)
                      if i != j and K_low <= c < K_high)
    return PairRefinement(K_low, K_high, pairs)
