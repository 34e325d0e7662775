"""Finite point sets with stable indices, and the point-set file format.

A point-set file is a JSON array of ``[x, y]`` where each coordinate is an integer or a
``"p/q"`` string in lowest terms, e.g.

.. code-block:: json

    [[0, 0], [1, 0], ["1/2", "3/4"]]

The quantized-float backend additionally accepts float coordinates.
"""
from typing import Iterable, Iterator, List

import srsly

from ..errors import DuplicatePoint, IndexOutOfRange
from .backends import EXACT, ScalarBackend, get_backend, parse_rational
from .primitives import Point


class PointSet:
    """An ordered, duplicate-free set of points.

    Args:
        points (Iterable[Point | list]): the points, in index order
        backend (ScalarBackend, optional): scalar backend of the coordinates. Defaults to exact.

    Raises:
        DuplicatePoint: if a point occurs twice.
    """

    def __init__(self, points: Iterable, backend: ScalarBackend = EXACT):
        self.backend = get_backend(backend)
        self.points: List[Point] = []
        self.index = {}
        for point in points:
            if not isinstance(point, Point):
                point = Point.from_pair(point, self.backend)
            else:
                point = Point(self.backend.coerce(point.x), self.backend.coerce(point.y))
            if point in self.index:
                raise DuplicatePoint(f'Point {point} occurs twice (indices {self.index[point]} and {len(self.points)})')
            self.index[point] = len(self.points)
            self.points.append(point)
        if not self.points:
            raise ValueError('A point set needs at least one point')

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[Point]:
        return iter(self.points)

    def __getitem__(self, i) -> Point:
        return self.points[i]

    def __eq__(self, other):
        if not isinstance(other, PointSet):
            return NotImplemented
        return self.backend.name == other.backend.name and self.points == other.points

    def __repr__(self):
        return f'PointSet(n={len(self)}, backend={self.backend.name})'

    def check_index(self, i):
        """Raise IndexOutOfRange unless ``i`` is a valid point index."""
        if not isinstance(i, int) or not 0 <= i < len(self.points):
            raise IndexOutOfRange(f'Point index {i} out of range for n = {len(self.points)}')

    def ordered_pairs(self):
        """All ordered pairs ``(i, j)`` of distinct indices."""
        n = len(self.points)
        return [(i, j) for i in range(n) for j in range(n) if i != j]

    def to_json(self):
        return [point.to_json(self.backend) for point in self.points]

    @classmethod
    def load(cls, path, backend='exact', quantum=1e-9):
        """Load a point-set file.

        Args:
            path (str): path to the JSON file
            backend (str | ScalarBackend, optional): scalar backend. Defaults to 'exact'.
            quantum (float, optional): grid width for the qfloat backend. Defaults to 1e-9.

        Raises:
            ValueError: if the file is not an array of pairs or a 'p/q' literal is not in lowest terms.

        Returns:
            PointSet: the loaded points, duplicates rejected
        """
        data = srsly.read_json(path)
        if not isinstance(data, list):
            raise ValueError(f'{path}: a point-set file holds a JSON array of [x, y] pairs')
        for value in (v for pair in data if isinstance(pair, list) for v in pair if isinstance(v, str)):
            parse_rational(value, strict=True)
        return cls(data, backend=get_backend(backend, quantum))

    def dump(self, path):
        srsly.write_json(path, self.to_json())
