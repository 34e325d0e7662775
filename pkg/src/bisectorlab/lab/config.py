"""Experiment configuration files.

An experiment file is a JSON object, e.g.

.. code-block:: json

    {
        "sweeps": [
            {"family": "grid", "sizes": [4, 9, 16, 25]},
            {"family": "heavy_circle_mix", "sizes": [16, 32], "seeds": [0, 1], "params": {"eps": "1/4"}}
        ],
        "invariants": ["bisectors", "distances"],
        "validate_oracles": true,
        "seed": 7
    }

Every key but ``sweeps`` is optional.
"""
from dataclasses import asdict, dataclass, field, fields
from typing import Any, Dict, List, Optional

import srsly

from ..geometry import get_backend
from ..invariants.curves import HEAVINESS_MODES
from ..oracles import DEFAULT_CAPS
from ..utils import exact_number
from .generators import FAMILIES


INVARIANT_NAMES = ('bisectors', 'refined', 'curves', 'distances', 'incidences', 'bands', 'wszt')

# Largest n for the O(n^4), O(n^3) and O(n^2 log n) paths.
CAPS = dict(DEFAULT_CAPS, curves=300, bisectors=2000)


@dataclass
class SweepSpec:
    """One generator family over a list of sizes and seeds."""
    family: str
    sizes: List[int]
    seeds: Optional[List[int]] = None
    params: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f'Unknown family: {self.family}; expected one of {FAMILIES}')
        if not self.sizes or any(not isinstance(n, int) or n < 2 for n in self.sizes):
            raise ValueError(f'Sweep sizes must be integers >= 2, got {self.sizes!r}')


@dataclass
class ExperimentConfig:
    """A sweep of generator families and the invariants to compute for each configuration.

    Args:
        sweeps (list[SweepSpec]): families, sizes, seeds and family parameters
        invariants (list[str]): invariant groups to compute, see ``INVARIANT_NAMES``
        validate_oracles (bool): compare fast counts with the brute-force scans within their caps
        backend (str): 'exact' or 'qfloat'; regular polygons always run under 'qfloat'
        quantum (float): grid width of the quantized-float backend
        heaviness (str): 'curves' (lines and circles) or 'circles'
        K_values (list[int]): heaviness thresholds K of the refined energies
        M_cut (int, optional): first band boundary; defaults to ``max(2, round(n^(2/7)))``
        seed (int): seed used by sweeps that list no seeds
        workers (int, optional): worker processes, overridden by BISECTORLAB_THREADS
        caps (dict[str, int]): size caps, see ``CAPS``
    """
    sweeps: List[SweepSpec]
    invariants: List[str] = field(default_factory=lambda: list(INVARIANT_NAMES))
    validate_oracles: bool = True
    backend: str = 'exact'
    quantum: float = 1e-9
    heaviness: str = 'curves'
    K_values: List[int] = field(default_factory=lambda: [3, 4])
    M_cut: Optional[int] = None
    seed: int = 0
    workers: Optional[int] = None
    caps: Dict[str, int] = field(default_factory=lambda: dict(CAPS))

    def __post_init__(self):
        self.sweeps = [s if isinstance(s, SweepSpec) else SweepSpec(**s) for s in self.sweeps]
        unknown = set(self.invariants) - set(INVARIANT_NAMES)
        if unknown:
            raise ValueError(f'Unknown invariants: {sorted(unknown)}; expected names from {INVARIANT_NAMES}')
        get_backend(self.backend, self.quantum)
        if self.heaviness not in HEAVINESS_MODES:
            raise ValueError(f'Unknown heaviness mode: {self.heaviness}')
        if any(k < 2 for k in self.K_values):
            raise ValueError(f'K values must be at least 2, got {self.K_values}')
        unknown_caps = set(self.caps) - set(CAPS)
        if unknown_caps:
            raise ValueError(f'Unknown caps: {sorted(unknown_caps)}')
        self.caps = dict(CAPS, **self.caps)

    def m_cut_for(self, n) -> int:
        """The first band boundary for a configuration of n points."""
        if self.M_cut is not None:
            return min(max(2, self.M_cut), n)
        return min(max(2, round(n ** (2 / 7))), n)

    def to_json(self):
        data = asdict(self)
        for sweep in data['sweeps']:
            sweep['params'] = {key: exact_number(value) for key, value in sorted(sweep['params'].items())}
        return data

    @classmethod
    def from_dict(cls, data):
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f'Unknown experiment config keys: {sorted(unknown)}')
        return cls(**data)

    @classmethod
    def load(cls, path):
        return cls.from_dict(srsly.read_json(path))
