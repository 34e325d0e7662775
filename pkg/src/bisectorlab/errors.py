"""Exceptions raised by bisectorlab.

Every error derives from :class:`BisectorLabError` and from the closest builtin, so
``except ValueError`` keeps working for callers that do not know about this package.
"""


class BisectorLabError(Exception):
    """Base class for all bisectorlab errors."""


class DegeneratePair(BisectorLabError, ValueError):
    """Two points that must be distinct coincide."""


class Collinear(BisectorLabError, ValueError):
    """Three points that must span a circle lie on one line."""


class IndexOutOfRange(BisectorLabError, IndexError):
    """A point index does not belong to the point set."""


class InvalidRange(BisectorLabError, ValueError):
    """A heaviness or band range is malformed."""


class EmptyMap(BisectorLabError, ValueError):
    """A multiplicity map without any line was given where one is required."""


class EmptySet(BisectorLabError, ValueError):
    """A weighted set without items was given where one is required."""


class MismatchedSource(BisectorLabError, ValueError):
    """A derived structure was built from a different point set."""


class BackendMismatch(BisectorLabError, ValueError):
    """The requested scalar backend cannot represent the configuration."""


class DuplicatePoint(BisectorLabError, ValueError):
    """A point set contains the same point twice, or a generator ran out of fresh points."""


class PointOnCurve(BisectorLabError, ValueError):
    """A point that must avoid a curve lies on it."""


class InsufficientData(BisectorLabError, ValueError):
    """Too few samples for a fit."""


class NonPositiveValue(BisectorLabError, ValueError):
    """A value that enters a logarithm is not positive."""


class CapExceeded(BisectorLabError, RuntimeError):
    """A configuration is larger than the cap configured for a computation."""

    def __init__(self, what, n, cap):
        super().__init__(f"{what}: n = {n} exceeds the configured cap {cap}")
        self.what = what
        self.n = n
        self.cap = cap

    def __reduce__(self):
        return type(self), (self.what, self.n, self.cap)


class SeparationViolation(BisectorLabError, RuntimeError):
    """Two distinct quantized keys are too close to trust the quantization."""

    def __init__(self, first, second, distance, threshold):
        super().__init__(f"quantized keys {first} and {second} are {distance:.3e} apart, "
                         f"below the separation threshold {threshold:.3e}")
        self.first = first
        self.second = second
        self.distance = distance
        self.threshold = threshold

    def __reduce__(self):
        return type(self), (self.first, self.second, self.distance, self.threshold)


class OracleMismatch(BisectorLabError, RuntimeError):
    """A fast path disagrees with its brute-force oracle.

    Attributes:
        configuration (list): the offending point set, JSON-ready.
        diff (dict): invariant name -> (fast value, oracle value).
    """

    def __init__(self, label, configuration, diff):
        details = ', '.join(f'{name}: fast={fast} oracle={oracle}' for name, (fast, oracle) in diff.items())
        super().__init__(f"oracle mismatch on {label}: {details}")
        self.label = label
        self.configuration = configuration
        self.diff = diff

    def __reduce__(self):
        return type(self), (self.label, self.configuration, self.diff)
