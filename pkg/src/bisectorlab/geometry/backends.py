'''Scalar backends: the number domain every coordinate, distance and curve coefficient lives in.'''

import itertools
import math
from abc import abstractmethod
from fractions import Fraction
from typing import Iterable, Tuple

from ..errors import SeparationViolation


class ScalarBackend:
    """Scalar backend base class.

    A backend decides how raw values are coerced, when a value counts as zero and how a value
    is turned into a hashable canonical key component.
    """
    name: str = 'base'

    @abstractmethod
    def coerce(self, value):
        """Convert an int, a ``"p/q"`` string, a Fraction or a float into a backend scalar.

        Args:
            value (int | str | Fraction | float): raw value

        Returns:
            the backend scalar
        """
        raise NotImplementedError

    @abstractmethod
    def div(self, numerator, denominator):
        """Quotient of two computed values, staying inside the backend (ints divide exactly)."""
        raise NotImplementedError

    @abstractmethod
    def is_zero(self, value) -> bool:
        """Whether a computed value is zero in this backend."""
        raise NotImplementedError

    @abstractmethod
    def quantize(self, value):
        """Map a computed value to its canonical, hashable representative."""
        raise NotImplementedError

    @abstractmethod
    def to_json(self, value):
        """JSON-ready representation of a scalar."""
        raise NotImplementedError

    def audit(self, keys: Iterable) -> None:
        """Check that distinct canonical keys are far apart. Exact keys need no audit."""

    def sign(self, value) -> int:
        """Sign of a computed value, with zero decided by :meth:`is_zero`."""
        if self.is_zero(value):
            return 0
        return 1 if value > 0 else -1


class ExactBackend(ScalarBackend):
    """Arbitrary-precision rationals (``fractions.Fraction``), always in lowest terms."""
    name = 'exact'

    def coerce(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, bool):
            raise TypeError(f'Not a coordinate: {value!r}')
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            return parse_rational(value)
        if isinstance(value, float):
            raise TypeError(f'Float {value!r} given to the exact backend; '
                            'use an integer, a "p/q" string or the qfloat backend')
        raise TypeError(f'Not a coordinate: {value!r}')

    def div(self, numerator, denominator):
        return Fraction(numerator) / denominator

    def is_zero(self, value):
        return value == 0

    def quantize(self, value):
        return value

    def to_json(self, value):
        return format_rational(value)


class QuantizedFloatBackend(ScalarBackend):
    """Double precision with canonical values rounded to a grid of width ``quantum``.

    Only meant for configurations with irrational coordinates, such as regular polygons.
    Every set of canonical keys produced under this backend goes through :meth:`audit`.
    """
    name = 'qfloat'

    def __init__(self, quantum=1e-9, separation_factor=10):
        if quantum <= 0:
            raise ValueError(f'quantum must be positive, got {quantum}')
        self.quantum = float(quantum)
        self.separation_factor = separation_factor

    def coerce(self, value):
        if isinstance(value, str):
            value = parse_rational(value)
        return float(value)

    def div(self, numerator, denominator):
        return numerator / denominator

    def is_zero(self, value):
        return abs(value) <= self.quantum

    def quantize(self, value):
        return round(value / self.quantum) * self.quantum

    def to_json(self, value):
        return float(value)

    @property
    def threshold(self):
        return self.separation_factor * self.quantum

    def audit(self, keys):
        """Assert that distinct keys are more than ``separation_factor * quantum`` apart.

        Distance is the maximum coordinate difference between two keys of the same kind.
        Keys are bucketed on a grid of the threshold width, so only neighbouring buckets are
        compared.

        Raises:
            SeparationViolation: if two distinct keys are closer than the threshold.
        """
        threshold = self.threshold
        buckets = {}
        for key in set(keys):
            kind, vector = key_vector(key)
            cell = tuple(math.floor(v / threshold) for v in vector)
            buckets.setdefault((kind, cell), []).append((key, vector))
        for (kind, cell), members in buckets.items():
            for offset in itertools.product((-1, 0, 1), repeat=len(cell)):
                neighbour = (kind, tuple(c + o for c, o in zip(cell, offset)))
                if neighbour < (kind, cell) or neighbour not in buckets:
                    continue
                others = buckets[neighbour]
                for i, (key, vector) in enumerate(members):
                    candidates = others[i + 1:] if neighbour == (kind, cell) else others
                    for other, other_vector in candidates:
                        distance = max(abs(u - v) for u, v in zip(vector, other_vector))
                        if distance <= threshold:
                            raise SeparationViolation(key, other, distance, threshold)


def key_vector(key) -> Tuple[str, Tuple[float, ...]]:
    """Split a canonical key into its kind and a float vector."""
    if hasattr(key, 'fields'):
        return type(key).__name__, tuple(float(v) for v in key.fields())
    if isinstance(key, tuple):
        return 'tuple', tuple(float(v) for v in key)
    return 'scalar', (float(key),)


def parse_rational(text: str, strict=False) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` into a Fraction.

    ``"2/4"`` is normalized to ``1/2`` unless ``strict``, which asks for ``q > 0`` and lowest terms.
    """
    text = text.strip()
    if not text:
        raise ValueError('Empty rational literal')
    numerator, _, denominator = text.partition('/')
    try:
        p, q = int(numerator), int(denominator) if denominator else 1
        value = Fraction(p, q)
    except (ValueError, ZeroDivisionError) as err:
        raise ValueError(f'Not a rational literal: {text!r}') from err
    if strict and (q < 0 or math.gcd(p, q) != 1):
        raise ValueError(f'Rational literal not in lowest terms: {text!r}')
    return value


def format_rational(value) -> str:
    """Format a rational as ``"p/q"``, or ``"p"`` when it is an integer."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f'{value.numerator}/{value.denominator}'


EXACT = ExactBackend()


def get_backend(backend_type='exact', quantum=1e-9):
    """Create a scalar backend.

    Args:
        backend_type (str): One of 'exact', 'qfloat'. Defaults to 'exact'.
        quantum (float, optional): Grid width of the quantized-float backend. Defaults to 1e-9.

    Raises:
        ValueError: If the backend type is not supported.

    Returns:
        ScalarBackend: A scalar backend.
    """
    if isinstance(backend_type, ScalarBackend):
        return backend_type
    if backend_type == 'exact':
        return EXACT
    if backend_type == 'qfloat':
        return QuantizedFloatBackend(quantum)
    raise ValueError(f'Unknown scalar backend: {backend_type}')
