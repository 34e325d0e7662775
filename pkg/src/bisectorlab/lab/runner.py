"""Run a sweep of configurations and write its reports.

Jobs are ``(family, n, seed)`` triples in config order. They run inline or in a process pool;
results are collected in job order, so the written reports do not depend on the worker count.
"""
import csv
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import List, NamedTuple, Optional

import srsly
from tqdm import tqdm

from ..errors import InsufficientData, NonPositiveValue
from ..utils import get_num_workers
from .config import ExperimentConfig
from .fitting import fit_exponent
from .generators import GeneratorSpec, generate
from .report import REPORT_FIELDS, InvariantReport, compute_invariants


SLOPE_METRICS = ('distinct_bisectors', 'energy', 'isoceles', 'delta_star')


class Job(NamedTuple):
    spec: GeneratorSpec
    backend: str
    quantum: float
    invariants: tuple
    K_values: tuple
    M_cut: Optional[int]
    heaviness: str
    caps: dict
    validate_oracles: bool


def experiment_jobs(cfg: ExperimentConfig) -> List[Job]:
    jobs = []
    for sweep in cfg.sweeps:
        backend = 'qfloat' if sweep.family == 'ngon' else cfg.backend
        for n in sweep.sizes:
            for seed in (sweep.seeds if sweep.seeds is not None else [cfg.seed]):
                jobs.append(Job(GeneratorSpec(sweep.family, n, seed, dict(sweep.params)), backend, cfg.quantum,
                                tuple(cfg.invariants), tuple(cfg.K_values), cfg.m_cut_for(n), cfg.heaviness,
                                dict(cfg.caps), cfg.validate_oracles))
    return jobs


def run_job(job: Job) -> InvariantReport:
    point_set = generate(job.spec, job.backend, job.quantum)
    return compute_invariants(point_set, family=job.spec.family, seed=job.spec.seed, params=job.spec.params,
                              invariants=job.invariants, K_values=job.K_values, M_cut=job.M_cut,
                              heaviness=job.heaviness, caps=job.caps, validate_oracles=job.validate_oracles)


def run_experiment(cfg: ExperimentConfig, workers=None, progress=True) -> List[InvariantReport]:
    """Generate and evaluate every configuration of an experiment.

    Args:
        cfg (ExperimentConfig): the experiment
        workers (int, optional): worker processes; wins over BISECTORLAB_THREADS and the config.
        progress (bool, optional): show a progress bar. Defaults to True.

    Raises:
        OracleMismatch: if a fast count disagrees with its oracle on some configuration.
        CapExceeded: if a configuration is too large for a requested invariant.

    Returns:
        list[InvariantReport]: one report per job, in job order
    """
    jobs = experiment_jobs(cfg)
    workers = get_num_workers(workers, cfg.workers)
    if workers <= 1:
        return [run_job(job) for job in tqdm(jobs, desc='Configurations', disable=not progress)]
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(tqdm(executor.map(run_job, jobs), total=len(jobs), desc='Configurations', disable=not progress))


def summarize(reports: List[InvariantReport]):
    """Fitted log-log slopes of the main invariants per family, as CSV rows."""
    rows = []
    for family in sorted({report.family for report in reports}):
        members = [report for report in reports if report.family == family]
        for metric in SLOPE_METRICS:
            series = [(report.n, getattr(report, metric)) for report in members if getattr(report, metric) is not None]
            row = {'family': family, 'metric': metric, 'points': len(series),
                   'slope': '', 'slope_fraction': '', 'residual': ''}
            try:
                fit = fit_exponent(series)
            except (InsufficientData, NonPositiveValue):
                pass
            else:
                row.update(slope=fit.slope, slope_fraction=str(fit.slope_fraction), residual=fit.residual)
            rows.append(row)
    return rows


def _write_csv(path, fieldnames, rows):
    with open(path, 'w', encoding='utf-8', newline='') as f:
        writer = csv.DictWriter(f, fieldnames=fieldnames, lineterminator='\n')
        writer.writeheader()
        writer.writerows(rows)


def write_outputs(reports: List[InvariantReport], out_dir):
    """Write report.json, report.csv, summary.csv and timings.csv into ``out_dir``.

    Timings are the only non-deterministic output and live in their own file.
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    srsly.write_json(out_dir / 'report.json', [report.to_json() for report in reports])
    _write_csv(out_dir / 'report.csv', REPORT_FIELDS, [report.to_row() for report in reports])
    _write_csv(out_dir / 'summary.csv', ['family', 'metric', 'points', 'slope', 'slope_fraction', 'residual'],
               summarize(reports))
    timings = [{'family': report.family, 'n': report.n, 'seed': report.seed, 'group': group,
                'seconds': f'{seconds:.6f}'}
               for report in reports for group, seconds in report.timings.items()]
    _write_csv(out_dir / 'timings.csv', ['family', 'n', 'seed', 'group', 'seconds'], timings)
    return out_dir
