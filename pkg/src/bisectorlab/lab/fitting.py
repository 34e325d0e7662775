"""Log-log exponent fits of invariant growth. The slopes are observations, never acceptance gates."""
from fractions import Fraction
from typing import Iterable, NamedTuple, Tuple

import numpy as np

from ..errors import InsufficientData, NonPositiveValue


class ExponentFit(NamedTuple):
    slope: float
    intercept: float
    residual: float

    @property
    def slope_fraction(self) -> Fraction:
        """The slope as a nearby rational with a small denominator."""
        return Fraction(self.slope).limit_denominator(1000)


def fit_exponent(series: Iterable[Tuple[float, float]]) -> ExponentFit:
    """Least-squares slope of ``log(value)`` against ``log(n)``.

    Args:
        series (Iterable[tuple[n, value]]): observations

    Raises:
        InsufficientData: with fewer than three observations or fewer than two distinct n.
        NonPositiveValue: if some n or value is not positive.

    Returns:
        ExponentFit: slope, intercept and the sum of squared residuals
    """
    series = [(float(n), float(value)) for n, value in series]
    if len(series) < 3:
        raise InsufficientData(f'An exponent fit needs at least 3 observations, got {len(series)}')
    if len({n for n, _ in series}) < 2:
        raise InsufficientData('An exponent fit needs at least two distinct sizes')
    bad = [(n, value) for n, value in series if n <= 0 or value <= 0]
    if bad:
        raise NonPositiveValue(f'Observations must be positive to take logarithms, got {bad}')
    x = np.log(np.array([n for n, _ in series]))
    y = np.log(np.array([value for _, value in series]))
    (slope, intercept), residuals, _, _, _ = np.polyfit(x, y, 1, full=True)
    residual = float(residuals[0]) if len(residuals) else 0.0
    return ExponentFit(float(slope), float(intercept), residual)
