"""Points, canonical lines and circles, and the predicates everything else is built on.

All operations are pure. Coordinates are scalars of a :class:`ScalarBackend`; the exact
backend is the default, so calling any function with Fraction or int coordinates needs no
backend argument. A "distance" is always a squared distance.
"""
from dataclasses import dataclass
from typing import NamedTuple, Union

from ..errors import Collinear, DegeneratePair
from .backends import EXACT, ScalarBackend


class Point(NamedTuple):
    """A point in the plane. Equal iff both coordinates are equal."""
    x: object
    y: object

    @classmethod
    def from_pair(cls, pair, backend: ScalarBackend = EXACT):
        """Build a point from ``[x, y]``, coercing both coordinates with the backend."""
        if len(pair) != 2:
            raise ValueError(f'A point needs exactly two coordinates, got {pair!r}')
        return cls(backend.coerce(pair[0]), backend.coerce(pair[1]))

    def to_json(self, backend: ScalarBackend = EXACT):
        return [backend.to_json(self.x), backend.to_json(self.y)]


@dataclass(frozen=True)
class CanonicalLine:
    """The line ``a*x + b*y + c = 0`` scaled so that the first nonzero of ``(a, b)`` is 1."""
    a: object
    b: object
    c: object

    def fields(self):
        return (self.a, self.b, self.c)

    def to_json(self, backend: ScalarBackend = EXACT):
        return {'kind': 'line', 'a': backend.to_json(self.a), 'b': backend.to_json(self.b),
                'c': backend.to_json(self.c)}


@dataclass(frozen=True)
class CanonicalCircle:
    """The circle with center ``(cx, cy)`` and squared radius ``r2 > 0``."""
    cx: object
    cy: object
    r2: object

    def fields(self):
        return (self.cx, self.cy, self.r2)

    @property
    def center(self):
        return Point(self.cx, self.cy)

    def to_json(self, backend: ScalarBackend = EXACT):
        return {'kind': 'circle', 'cx': backend.to_json(self.cx), 'cy': backend.to_json(self.cy),
                'r2': backend.to_json(self.r2)}


# Dataclass equality compares the class first, so a line never equals a circle.
CurveKey = Union[CanonicalLine, CanonicalCircle]


def canonical_line(a, b, c, backend: ScalarBackend = EXACT) -> CanonicalLine:
    """Scale ``a*x + b*y + c = 0`` into canonical form.

    Raises:
        DegeneratePair: if ``(a, b)`` is zero, i.e. the coefficients describe no line.
    """
    one = backend.coerce(1)
    if not backend.is_zero(a):
        return CanonicalLine(one, backend.quantize(backend.div(b, a)), backend.quantize(backend.div(c, a)))
    if not backend.is_zero(b):
        return CanonicalLine(backend.coerce(0), one, backend.quantize(backend.div(c, b)))
    raise DegeneratePair(f'({a}, {b}, {c}) does not describe a line')


def squared_distance(a: Point, b: Point):
    """Squared Euclidean distance; zero iff ``a == b``."""
    dx = a.x - b.x
    dy = a.y - b.y
    return dx * dx + dy * dy


def perpendicular_bisector(a: Point, b: Point, backend: ScalarBackend = EXACT) -> CanonicalLine:
    """The canonical perpendicular bisector of two distinct points.

    The line is ``dx*x + dy*y = (|b|^2 - |a|^2) / 2`` with ``(dx, dy) = b - a``.

    Raises:
        DegeneratePair: if ``a == b``.
    """
    if a == b:
        raise DegeneratePair(f'Bisector of coincident points {a}')
    dx = b.x - a.x
    dy = b.y - a.y
    c = backend.div(a.x * a.x + a.y * a.y - b.x * b.x - b.y * b.y, 2)
    return canonical_line(dx, dy, c, backend)


def line_through(a: Point, b: Point, backend: ScalarBackend = EXACT) -> CanonicalLine:
    """The canonical line containing two distinct points.

    Raises:
        DegeneratePair: if ``a == b``.
    """
    if a == b:
        raise DegeneratePair(f'Line through coincident points {a}')
    return canonical_line(a.y - b.y, b.x - a.x, a.x * b.y - b.x * a.y, backend)


def circle_through(a: Point, b: Point, c: Point, backend: ScalarBackend = EXACT) -> CanonicalCircle:
    """The unique circle through three pairwise distinct, non-collinear points.

    Raises:
        DegeneratePair: if two of the points coincide.
        Collinear: if the points lie on one line.
    """
    if a == b or b == c or a == c:
        raise DegeneratePair(f'Circle through repeated points {a}, {b}, {c}')
    d = 2 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y))
    if backend.is_zero(d):
        raise Collinear(f'{a}, {b}, {c} are collinear')
    na = a.x * a.x + a.y * a.y
    nb = b.x * b.x + b.y * b.y
    nc = c.x * c.x + c.y * c.y
    cx = backend.div(na * (b.y - c.y) + nb * (c.y - a.y) + nc * (a.y - b.y), d)
    cy = backend.div(na * (c.x - b.x) + nb * (a.x - c.x) + nc * (b.x - a.x), d)
    r2 = squared_distance(a, Point(cx, cy))
    return CanonicalCircle(backend.quantize(cx), backend.quantize(cy), backend.quantize(r2))


def reflect_over_line(p: Point, line: CanonicalLine, backend: ScalarBackend = EXACT) -> Point:
    """Mirror image of ``p`` in ``line``. An involution; points on the line are fixed."""
    t = backend.div(line.a * p.x + line.b * p.y + line.c, line.a * line.a + line.b * line.b)
    return Point(p.x - 2 * line.a * t, p.y - 2 * line.b * t)


def side_of_line(p: Point, line: CanonicalLine, backend: ScalarBackend = EXACT) -> int:
    """-1, 0 or 1 according to the sign of ``a*px + b*py + c``."""
    return backend.sign(line.a * p.x + line.b * p.y + line.c)


def on_curve(p: Point, key: CurveKey, backend: ScalarBackend = EXACT) -> bool:
    """Exact (or quantum-tolerant) membership of a point in a line or circle."""
    if isinstance(key, CanonicalLine):
        return backend.is_zero(key.a * p.x + key.b * p.y + key.c)
    if isinstance(key, CanonicalCircle):
        return backend.is_zero(squared_distance(p, key.center) - key.r2)
    raise TypeError(f'Not a curve key: {key!r}')


def rational_circle_point(t, center: Point = Point(0, 0), radius=1,
                          backend: ScalarBackend = EXACT) -> Point:
    """The point ``((1-t^2)/(1+t^2), 2t/(1+t^2))`` of a circle, scaled and translated.

    Rational ``t``, center and radius give a rational point; distinct ``t`` give distinct points.
    """
    denominator = 1 + t * t
    return Point(center.x + backend.div(radius * (1 - t * t), denominator),
                 center.y + backend.div(radius * 2 * t, denominator))
