"""Weighted point-line incidences and the weighted Szemeredi-Trotter bound expression.

A weighted instance file looks like

.. code-block:: json

    {"points": [[0, 0, 2], ["1/2", 1, 1]], "lines": [[0, 1, 0, 3]]}

where a point row is ``[x, y, w]`` and a line row ``[a, b, c, w]`` for ``a*x + b*y + c = 0``.
"""
from fractions import Fraction
from typing import Iterable, List, NamedTuple, Tuple

import srsly

from ..errors import DuplicatePoint, EmptySet, NonPositiveValue
from ..geometry import EXACT, CanonicalLine, LineIndex, Point, PointSet, ScalarBackend, canonical_line, get_backend
from ..utils import exact_number, parallel_map, split_range


# Bits of headroom of the cube root enclosure: relative width is at most 2^-31 < 1e-9.
CUBE_ROOT_BITS = 31


class WeightedSet:
    """Distinct items with positive integer weights."""
    kind = 'item'

    def __init__(self, items: Iterable[Tuple[object, int]], backend: ScalarBackend = EXACT):
        self.backend = get_backend(backend)
        self.items: List[Tuple[object, int]] = []
        seen = set()
        for item, weight in items:
            if isinstance(weight, bool) or not isinstance(weight, int) or weight < 1:
                raise NonPositiveValue(f'Weight of {self.kind} {item} must be a positive integer, got {weight!r}')
            if item in seen:
                raise self._duplicate_error(f'{self.kind.capitalize()} {item} occurs twice')
            seen.add(item)
            self.items.append((item, weight))

    def _duplicate_error(self, message):
        return ValueError(message)

    def __len__(self):
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    @property
    def weights(self):
        return [weight for _, weight in self.items]

    def subset(self, items):
        return type(self)(items, self.backend)


class WeightedPoints(WeightedSet):
    kind = 'point'

    def _duplicate_error(self, message):
        return DuplicatePoint(message)

    def to_json(self):
        return [[*point.to_json(self.backend), weight] for point, weight in self.items]


class WeightedLines(WeightedSet):
    kind = 'line'

    def to_json(self):
        return [[self.backend.to_json(v) for v in line.fields()] + [weight] for line, weight in self.items]


class NormTriple(NamedTuple):
    l1: int
    l2sq: int
    linf: int

    def to_json(self):
        return {'l1': exact_number(self.l1), 'l2sq': exact_number(self.l2sq), 'linf': exact_number(self.linf)}


def norms(weighted: WeightedSet) -> NormTriple:
    """The L1 norm, squared L2 norm and L-infinity norm of the weights.

    Raises:
        EmptySet: if there are no items.
    """
    if not len(weighted):
        raise EmptySet(f'Norms of an empty weighted {weighted.kind} set')
    weights = weighted.weights
    return NormTriple(sum(weights), sum(w * w for w in weights), max(weights))


def _weighted_incidence_shard(job):
    points, index = job
    return sum(weight * index.weight_through(point) for point, weight in points)


def weighted_incidence_count(points: WeightedPoints, lines: WeightedLines, workers=1) -> int:
    """``sum over p, l of w(p) w(l) [p on l]``, sharded over the points."""
    if not len(points) or not len(lines):
        return 0
    index = LineIndex(lines.items, points.backend)
    shards = [([points.items[i] for i in r], index) for r in split_range(len(points), workers)]
    return sum(parallel_map(_weighted_incidence_shard, shards, workers))


def integer_cube_root(value: int) -> int:
    """The largest integer r with r^3 <= value."""
    if value < 0:
        raise NonPositiveValue(f'Cube root of negative integer {value}')
    if value < 2:
        return value
    root = 1 << -(-value.bit_length() // 3)
    while True:
        nxt = (2 * root + value // (root * root)) // 3
        if nxt >= root:
            break
        root = nxt
    while root ** 3 > value:
        root -= 1
    while (root + 1) ** 3 <= value:
        root += 1
    return root


def cube_root_enclosure(value) -> Tuple[Fraction, Fraction]:
    """Rationals ``lo <= value^(1/3) <= hi`` with ``(hi - lo) / lo <= 1e-9``; ``lo == hi`` for exact cubes.

    Raises:
        NonPositiveValue: if ``value`` is negative.
    """
    value = Fraction(value)
    if value < 0:
        raise NonPositiveValue(f'Cube root of negative value {value}')
    if value == 0:
        return Fraction(0), Fraction(0)
    p, q = value.numerator, value.denominator
    magnitude = p.bit_length() - q.bit_length()
    shift = max(0, -(-(3 * (CUBE_ROOT_BITS + 2) - magnitude) // 3))
    scale = 1 << shift
    scaled = p * scale ** 3
    root = integer_cube_root(scaled // q)
    lo = Fraction(root, scale)
    if root ** 3 * q == scaled:
        return lo, lo
    return lo, Fraction(root + 1, scale)


def wszt_rhs_enclosure(points: WeightedPoints, lines: WeightedLines) -> Tuple[Fraction, Fraction]:
    """Lower and upper rational values of the bound expression with constant 1.

    The expression is ``(|P|_2^2 |P|_1 |L|_2^2 |L|_1)^(1/3) + |L|_inf |P|_1 + |P|_inf |L|_1``.
    """
    p, l = norms(points), norms(lines)
    lo, hi = cube_root_enclosure(p.l2sq * p.l1 * l.l2sq * l.l1)
    linear = l.linf * p.l1 + p.linf * l.l1
    return lo + linear, hi + linear


def wszt_rhs(points: WeightedPoints, lines: WeightedLines) -> Fraction:
    """The bound expression rounded upward, within relative error 1e-9.

    Raises:
        EmptySet: if either set is empty.
    """
    return wszt_rhs_enclosure(points, lines)[1]


class DyadicBand(NamedTuple):
    """Items with weight in ``[2^index, 2^(index + 1))``."""
    index: int
    members: WeightedSet


def dyadic_weight_bands(weighted: WeightedSet) -> List[DyadicBand]:
    """Partition a weighted set into its nonempty dyadic weight bands, lightest first."""
    bands = {}
    for item, weight in weighted:
        bands.setdefault(weight.bit_length() - 1, []).append((item, weight))
    return [DyadicBand(i, weighted.subset(bands[i])) for i in sorted(bands)]


class BandFact(NamedTuple):
    index: int
    size: int
    l1_holds: bool
    l2_holds: bool


def band_facts(weighted: WeightedSet) -> List[BandFact]:
    """Check ``2^i |A_i| <= |A|_1`` and ``2^(2i) |A_i| <= |A|_2^2`` for every dyadic band ``A_i``."""
    total = norms(weighted)
    facts = []
    for band in dyadic_weight_bands(weighted):
        size = len(band.members)
        facts.append(BandFact(band.index, size, (size << band.index) <= total.l1,
                              (size << (2 * band.index)) <= total.l2sq))
    return facts


def decomposed_incidence_count(points: WeightedPoints, lines: WeightedLines) -> int:
    """Weighted incidences summed over all pairs of a point band and a line band."""
    return sum(weighted_incidence_count(point_band.members, line_band.members)
               for point_band in dyadic_weight_bands(points)
               for line_band in dyadic_weight_bands(lines))


def bisector_instance(point_set: PointSet, multiplicities) -> Tuple[WeightedPoints, WeightedLines]:
    """Unit-weight points against their bisectors weighted by multiplicity."""
    backend = point_set.backend
    return (WeightedPoints([(p, 1) for p in point_set], backend),
            WeightedLines(list(multiplicities.w.items()), backend))


def load_weighted_instance(path, backend='exact', quantum=1e-9) -> Tuple[WeightedPoints, WeightedLines]:
    """Load a weighted instance file; line coefficients are brought into canonical form."""
    backend = get_backend(backend, quantum)
    data = srsly.read_json(path)
    if not isinstance(data, dict) or set(data) - {'points', 'lines'}:
        raise ValueError(f'{path}: expected an object with "points" and "lines"')
    points = []
    for row in data.get('points', []):
        if len(row) != 3:
            raise ValueError(f'{path}: a point row is [x, y, w], got {row!r}')
        points.append((Point.from_pair(row[:2], backend), row[2]))
    lines = []
    for row in data.get('lines', []):
        if len(row) != 4:
            raise ValueError(f'{path}: a line row is [a, b, c, w], got {row!r}')
        a, b, c = (backend.coerce(v) for v in row[:3])
        lines.append((canonical_line(a, b, c, backend), row[3]))
    return WeightedPoints(points, backend), WeightedLines(lines, backend)
