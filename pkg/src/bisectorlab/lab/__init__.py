from .config import CAPS, INVARIANT_NAMES, ExperimentConfig, SweepSpec
from .generators import FAMILIES, GeneratorSpec, generate
from .fitting import ExponentFit, fit_exponent
from .report import InvariantReport, compute_invariants, validate_report
from .runner import run_experiment, write_outputs
from .checks import SUITES, VerifyReport, verify
