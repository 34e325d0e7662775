"""Point configuration families.

Every family but ``ngon`` produces exact rational coordinates. Regular polygons have irrational
vertices and are only available under the quantized-float backend.
"""
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict

from ..errors import BackendMismatch, DuplicatePoint
from ..geometry import CanonicalCircle, Point, PointSet, get_backend, on_curve, parse_rational, rational_circle_point


FAMILIES = ('ngon', 'rational_circle', 'grid', 'random_rational', 'collinear', 'heavy_circle_mix',
            'union_of_circles')
RATIONAL_FAMILIES = tuple(family for family in FAMILIES if family != 'ngon')

# Default coordinate bounds of random rationals: |numerator| <= 10^4, denominator <= 10^2.
NUM_BOUND = 10 ** 4
DEN_BOUND = 10 ** 2
# Draws allowed per requested point before a family gives up on finding distinct points.
ATTEMPTS_PER_POINT = 100


def as_fraction(value) -> Fraction:
    """Read a rational parameter given as a number, a Fraction or a ``"p/q"`` string."""
    if isinstance(value, str):
        return parse_rational(value)
    return Fraction(value)


@dataclass
class GeneratorSpec:
    """A family, a size, a seed and family-specific parameters.

    Parameters by family:
        - heavy_circle_mix: ``eps`` in (0, 1), the fraction of points on the unit circle (default 1/2)
        - union_of_circles: ``circles``, the number of disjoint circles (default 2)
        - random_rational, heavy_circle_mix: ``num_bound`` and ``den_bound``
        - rational_circle, union_of_circles, heavy_circle_mix: ``t_bound``, bound of the circle parameters
    """
    family: str
    n: int
    seed: int = 0
    params: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f'Unknown family: {self.family}; expected one of {FAMILIES}')
        if not isinstance(self.n, int) or self.n < 2:
            raise ValueError(f'A configuration needs n >= 2, got {self.n!r}')

    def to_json(self):
        return {'family': self.family, 'n': self.n, 'seed': self.seed,
                'params': {key: str(value) if isinstance(value, Fraction) else value
                           for key, value in sorted(self.params.items())}}


def _distinct(draw, count, taken=()):
    """Collect ``count`` new distinct points from ``draw()``."""
    seen = set(taken)
    points = []
    for _ in range(ATTEMPTS_PER_POINT * max(count, 1)):
        if len(points) == count:
            break
        point = draw()
        if point not in seen:
            seen.add(point)
            points.append(point)
    if len(points) < count:
        raise DuplicatePoint(f'Only {len(points)} of {count} distinct points found; loosen the family parameters')
    return points


def _random_rational(rng, num_bound, den_bound):
    return Fraction(rng.randint(-num_bound, num_bound), rng.randint(1, den_bound))


def _circle_points(rng, count, center, radius, t_bound):
    def draw():
        return rational_circle_point(_random_rational(rng, t_bound, t_bound), center, radius)
    return _distinct(draw, count)


def ngon(n):
    return [(math.cos(2 * math.pi * k / n), math.sin(2 * math.pi * k / n)) for k in range(n)]


def grid(n):
    """The first n points, row by row, of the smallest square integer grid holding n points."""
    side = math.isqrt(n - 1) + 1
    return [Point(Fraction(k % side), Fraction(k // side)) for k in range(n)]


def collinear(n):
    return [Point(Fraction(k), Fraction(0)) for k in range(n)]


def rational_circle(n, rng, t_bound=100):
    return _circle_points(rng, n, Point(Fraction(0), Fraction(0)), Fraction(1), t_bound)


def random_rational(n, rng, num_bound=NUM_BOUND, den_bound=DEN_BOUND):
    return _distinct(lambda: Point(_random_rational(rng, num_bound, den_bound),
                                   _random_rational(rng, num_bound, den_bound)), n)


def heavy_circle_mix(n, rng, eps=Fraction(1, 2), t_bound=100, num_bound=NUM_BOUND, den_bound=DEN_BOUND):
    """``ceil(eps * n)`` points on the unit circle, the others random rationals off it."""
    eps = as_fraction(eps)
    if not 0 < eps < 1:
        raise ValueError(f'eps must lie strictly between 0 and 1, got {eps}')
    heavy = math.ceil(eps * n)
    unit = CanonicalCircle(Fraction(0), Fraction(0), Fraction(1))
    on_circle = _circle_points(rng, heavy, Point(Fraction(0), Fraction(0)), Fraction(1), t_bound)

    def draw():
        while True:
            point = Point(_random_rational(rng, num_bound, den_bound), _random_rational(rng, num_bound, den_bound))
            if not on_curve(point, unit):
                return point
    return on_circle + _distinct(draw, n - heavy, on_circle)


def union_of_circles(n, rng, circles=2, t_bound=100):
    """n points spread over disjoint unit circles centered at ``(3i, 0)``."""
    if not 1 <= circles <= n:
        raise ValueError(f'Need 1 <= circles <= n, got {circles}')
    points = []
    for i in range(circles):
        count = n // circles + (1 if i < n % circles else 0)
        points.extend(_circle_points(rng, count, Point(Fraction(3 * i), Fraction(0)), Fraction(1), t_bound))
    return points


def generate(spec: GeneratorSpec, backend='exact', quantum=1e-9) -> PointSet:
    """Generate the point set of a spec.

    Args:
        spec (GeneratorSpec): the family, size, seed and parameters
        backend (str | ScalarBackend, optional): scalar backend. Defaults to 'exact'.
        quantum (float, optional): grid width of the quantized-float backend. Defaults to 1e-9.

    Raises:
        BackendMismatch: if a regular polygon is requested under the exact backend.
        DuplicatePoint: if the family cannot produce n distinct points with its parameters.

    Returns:
        PointSet: exactly ``spec.n`` distinct points
    """
    backend = get_backend(backend, quantum)
    params = dict(spec.params)
    if spec.family == 'ngon':
        if backend.name == 'exact':
            raise BackendMismatch('Regular polygons have irrational vertices; use the qfloat backend')
        point_set = PointSet(ngon(spec.n), backend)
        backend.audit(point_set.points)
        return point_set
    rng = random.Random(spec.seed)
    if spec.family == 'grid':
        points = grid(spec.n)
    elif spec.family == 'collinear':
        points = collinear(spec.n)
    elif spec.family == 'rational_circle':
        points = rational_circle(spec.n, rng, **params)
    elif spec.family == 'random_rational':
        points = random_rational(spec.n, rng, **params)
    elif spec.family == 'heavy_circle_mix':
        points = heavy_circle_mix(spec.n, rng, **params)
    else:
        points = union_of_circles(spec.n, rng, **params)
    return PointSet(points, backend)
