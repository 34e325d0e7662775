"""Weighted line lookup by direction, for counting point-line incidences without a full scan."""
from collections import defaultdict
from typing import Iterable, Tuple

from .backends import EXACT, ScalarBackend
from .primitives import CanonicalLine, Point


class LineIndex:
    """Weighted canonical lines grouped by their direction ``(a, b)``.

    A point ``p`` lies on the canonical line ``(a, b, c)`` iff ``c == -(a*px + b*py)``, so the
    total weight of the lines through ``p`` is one dictionary lookup per direction.

    Args:
        weighted_lines (Iterable[tuple[CanonicalLine, int]]): lines with their weights
        backend (ScalarBackend, optional): backend the line coefficients were computed in.
    """

    def __init__(self, weighted_lines: Iterable[Tuple[CanonicalLine, int]], backend: ScalarBackend = EXACT):
        self.backend = backend
        self.directions = defaultdict(dict)
        for line, weight in weighted_lines:
            offsets = self.directions[(line.a, line.b)]
            offsets[line.c] = offsets.get(line.c, 0) + weight

    def __len__(self):
        return sum(len(offsets) for offsets in self.directions.values())

    def weight_through(self, p: Point) -> int:
        """Sum of the weights of the indexed lines containing ``p``."""
        total = 0
        quantize = self.backend.quantize
        for (a, b), offsets in self.directions.items():
            weight = offsets.get(quantize(-(a * p.x + b * p.y)))
            if weight:
                total += weight
        return total
