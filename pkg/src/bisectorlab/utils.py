import os
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path

from .geometry.backends import format_rational


THREADS_ENV = 'BISECTORLAB_THREADS'
INT64_LIMIT = 2 ** 63


def get_num_workers(requested=None, configured=None):
    """Resolve the worker count.

    An explicit request wins, then the BISECTORLAB_THREADS environment variable, then the
    configured value, then 1.
    """
    if requested:
        return max(1, int(requested))
    env_value = os.environ.get(THREADS_ENV)
    if env_value:
        try:
            return max(1, int(env_value))
        except ValueError as err:
            raise ValueError(f'{THREADS_ENV} must be an integer, got {env_value!r}') from err
    if configured:
        return max(1, int(configured))
    return 1


def parallel_map(fn, chunks, workers=1):
    """Apply ``fn`` to every chunk, in a process pool when ``workers > 1``.

    Results come back in chunk order, so the output does not depend on the worker count.
    """
    chunks = list(chunks)
    if workers <= 1 or len(chunks) <= 1:
        return [fn(chunk) for chunk in chunks]
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(fn, chunks))


def split_range(n, parts):
    """Split ``range(n)`` into at most ``parts`` contiguous, nonempty ranges."""
    parts = max(1, min(parts, n))
    step, extra = divmod(n, parts)
    ranges, start = [], 0
    for i in range(parts):
        stop = start + step + (1 if i < extra else 0)
        ranges.append(range(start, stop))
        start = stop
    return [r for r in ranges if len(r)]


def exact_number(value):
    """JSON-ready exact value: small ints stay numbers, big ints and rationals become strings."""
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return value if -INT64_LIMIT < value < INT64_LIMIT else str(value)
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return exact_number(value.numerator)
        return format_rational(value)
    return value


def ensure_parent_dir(path):
    """Create the parent folder of ``path`` if it does not exist."""
    Path(path).parent.mkdir(parents=True, exist_ok=True)
