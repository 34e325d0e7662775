"""Brute-force reference counts.

These scans use only the geometry primitives: no hash maps over canonical keys, no curve tables.
They are slow on purpose and refuse inputs above a size cap.
"""
import random
from fractions import Fraction
from typing import List, NamedTuple, Optional, Union

from .errors import CapExceeded, DegeneratePair, PointOnCurve
from .geometry import (EXACT, CanonicalCircle, CanonicalLine, Point, PointSet, ScalarBackend, on_curve,
                       perpendicular_bisector, rational_circle_point, squared_distance)


DEFAULT_CAPS = {
    'energy_oracle': 40,
    'isoceles_oracle': 300,
    'pairwise_oracle': 60,
}


def _check_cap(what, n, cap):
    if n > cap:
        raise CapExceeded(what, n, cap)


def _pair_list(point_set, refinement):
    if refinement is None:
        return point_set.ordered_pairs()
    return refinement.sorted_pairs()


def energy_bruteforce(point_set: PointSet, refinement=None, cap=DEFAULT_CAPS['energy_oracle']) -> int:
    """Count quadruples ``(a, b, c, d)`` with both pairs in the refinement and equal bisectors.

    Args:
        point_set (PointSet): the points
        refinement (PairRefinement, optional): admissible ordered pairs. Defaults to all pairs.
        cap (int, optional): largest n accepted. Defaults to 40.

    Raises:
        CapExceeded: if ``n > cap``.
    """
    _check_cap('energy oracle', len(point_set), cap)
    backend = point_set.backend
    lines = [perpendicular_bisector(point_set[i], point_set[j], backend)
             for i, j in _pair_list(point_set, refinement)]
    count = 0
    for first in lines:
        for second in lines:
            if first == second:
                count += 1
    return count


def isoceles_bruteforce(point_set: PointSet, cap=DEFAULT_CAPS['isoceles_oracle']) -> int:
    """Count ordered triples ``(a, b, c)``, ``b != c``, with ``|ab| == |ac|`` by a triple scan."""
    n = len(point_set)
    _check_cap('isoceles oracle', n, cap)
    is_zero = point_set.backend.is_zero
    count = 0
    for a in range(n):
        row = [squared_distance(point_set[a], point_set[b]) for b in range(n)]
        for b in range(n):
            if b == a:
                continue
            for c in range(n):
                if c != a and c != b and is_zero(row[b] - row[c]):
                    count += 1
    return count


def distinct_bisectors_pairwise(point_set: PointSet, cap=DEFAULT_CAPS['pairwise_oracle']) -> int:
    """Count distinct bisectors by comparing every new line with all lines kept so far."""
    n = len(point_set)
    _check_cap('pairwise bisector oracle', n, cap)
    backend = point_set.backend
    kept: List[CanonicalLine] = []
    for i in range(n):
        for j in range(i + 1, n):
            line = perpendicular_bisector(point_set[i], point_set[j], backend)
            if not any(line == other for other in kept):
                kept.append(line)
    return len(kept)


def shared_bisector_pairs(curve: Union[CanonicalCircle, CanonicalLine], sample, p: Point, q: Point,
                          backend: ScalarBackend = EXACT) -> int:
    """Number of pairs ``(r, s)`` of sample points on a curve with ``bis(p, r) == bis(q, s)``.

    Raises:
        DegeneratePair: if ``p == q``.
        PointOnCurve: if ``p`` or ``q`` lies on the curve.
        ValueError: if a sample point is off the curve.
    """
    if p == q:
        raise DegeneratePair(f'p and q coincide at {p}')
    for name, point in (('p', p), ('q', q)):
        if on_curve(point, curve, backend):
            raise PointOnCurve(f'{name} = {point} lies on {curve}')
    for point in sample:
        if not on_curve(point, curve, backend):
            raise ValueError(f'Sample point {point} is not on {curve}')
    from_q = {}
    for s in sample:
        from_q.setdefault(perpendicular_bisector(q, s, backend), []).append(s)
    return sum(len(from_q.get(perpendicular_bisector(p, r, backend), ())) for r in sample)


class SharedBisectorInstance(NamedTuple):
    curve: Union[CanonicalCircle, CanonicalLine]
    sample: List[Point]
    p: Point
    q: Point


def rational_circle_sample(m, seed=0, center: Point = Point(0, 0), radius=1, bound=50) -> List[Point]:
    """``m`` distinct rational points of a circle from random tangent-half-angle parameters."""
    rng = random.Random(seed)
    params = set()
    while len(params) < m:
        params.add(Fraction(rng.randint(-bound, bound), rng.randint(1, bound)))
    center = Point(Fraction(center.x), Fraction(center.y))
    return [rational_circle_point(t, center, Fraction(radius)) for t in sorted(params)]


def rational_line_sample(m, line: CanonicalLine, seed=0, bound=50) -> List[Point]:
    """``m`` distinct rational points of a canonical line."""
    rng = random.Random(seed)
    params = set()
    while len(params) < m:
        params.add(Fraction(rng.randint(-bound * bound, bound * bound), rng.randint(1, bound)))
    points = []
    for t in sorted(params):
        if line.a != 0:
            # x = -(b*y + c) with a normalized to 1
            points.append(Point(-(line.b * t + line.c), t))
        else:
            points.append(Point(t, -line.c))
    return points


def shared_bisector_witness(extra=8, seed=0) -> SharedBisectorInstance:
    """A unit-circle instance with exactly two shared pairs.

    ``p = (0, 4/5)`` and ``q = (0, -4/5)`` are mirror images in the x-axis. The unit circles
    through both are centered at ``(3/5, 0)`` and ``(-3/5, 0)``; the reflections taking the unit
    circle onto them send ``(p, q)`` to ``((3/5, 4/5), (3/5, -4/5))`` and
    ``((-3/5, 4/5), (-3/5, -4/5))``. No other reflection moves both points onto the circle.
    """
    circle = CanonicalCircle(Fraction(0), Fraction(0), Fraction(1))
    witnesses = [Point(Fraction(x, 5), Fraction(y, 5)) for x, y in ((3, 4), (3, -4), (-3, 4), (-3, -4))]
    sample = list(witnesses)
    for point in rational_circle_sample(extra + len(witnesses), seed):
        if point not in sample and len(sample) < extra + len(witnesses):
            sample.append(point)
    return SharedBisectorInstance(circle, sample, Point(Fraction(0), Fraction(4, 5)), Point(Fraction(0), Fraction(-4, 5)))


def random_shared_bisector_instance(rng: random.Random, m=10, kind: Optional[str] = None) -> SharedBisectorInstance:
    """A random circle or line, ``m`` rational points on it and two random rational points off it."""
    kind = kind or rng.choice(('circle', 'line'))

    def rational(bound=20):
        return Fraction(rng.randint(-bound * bound, bound * bound), rng.randint(1, bound))

    if kind == 'circle':
        center = Point(rational(), rational())
        radius = Fraction(rng.randint(1, 20), rng.randint(1, 5))
        curve = CanonicalCircle(center.x, center.y, radius * radius)
        sample = rational_circle_sample(m, rng.randrange(2 ** 32), center, radius)
    else:
        if rng.random() < 0.1:
            curve = CanonicalLine(Fraction(0), Fraction(1), rational())
        else:
            curve = CanonicalLine(Fraction(1), rational(), rational())
        sample = rational_line_sample(m, curve, rng.randrange(2 ** 32))
    off = []
    while len(off) < 2:
        point = Point(rational(), rational())
        if not on_curve(point, curve) and point not in off:
            off.append(point)
    return SharedBisectorInstance(curve, sample, off[0], off[1])
