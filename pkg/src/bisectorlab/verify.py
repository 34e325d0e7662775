"""Run the verification suites and exit nonzero if any check fails."""
import argparse
import sys

import srsly
from tqdm import tqdm

from .lab import SUITES, verify as run_verify
from .utils import ensure_parent_dir


def verify(args):
    """Run the requested suites over the standard battery and report pass/fail per suite."""
    report = run_verify(args.suite, seed=args.seed, seeds=args.seeds, max_n=args.max_n,
                        instances=args.instances, ratio_max_n=args.ratio_max_n, progress=not args.quiet)
    for result in report.results:
        status = 'PASS' if result.passed else 'FAIL'
        tqdm.write(f'{status} {result.suite}: {result.checked} checks, {len(result.failures)} failures')
        for failure in result.failures[:args.show]:
            tqdm.write(f'    counterexample: {srsly.json_dumps(failure)}')
        for item in result.vacuous:
            tqdm.write(f'    vacuous: {srsly.json_dumps(item)}')
    if args.output:
        ensure_parent_dir(args.output)
        srsly.write_json(args.output, report.to_json())
        print(f'Verification report saved to {args.output}')
    if not report.passed:
        sys.exit(1)


def _add_arguments(parser):
    """Add verify arguments to the parser in place."""
    parser.description = '''Check the exact identities and inequalities over a battery of configurations:
    every deterministic family at every battery size plus seeded draws of every random family.
    Failed checks are listed with counterexamples, and the command exits with status 1.
    '''
    parser.add_argument('--suite', type=str, choices=('all',) + SUITES, default='all',
                        help='suite to run (default: all).')
    parser.add_argument('--seed', type=int, default=0, help='first seed of the random draws (default: 0).')
    parser.add_argument('--seeds', type=int, default=100, help='random draws per random family (default: 100).')
    parser.add_argument('--max-n', type=int, default=40, help='largest battery configuration (default: 40).')
    parser.add_argument('--instances', type=int, default=10000,
                        help='random instances of the shared-bisector suite (default: 10000).')
    parser.add_argument('--ratio-max-n', type=int, default=256,
                        help='largest size of the incidence/bound ratio sweep (default: 256).')
    parser.add_argument('--show', type=int, default=3, help='counterexamples printed per suite (default: 3).')
    parser.add_argument('-o', '--output', type=str, default=None, help='path to save the full JSON report.')
    parser.add_argument('-q', '--quiet', action='store_true', help='hide the progress bars.')


if __name__ == '__main__':
    parser = argparse.ArgumentParser()
    _add_arguments(parser)
    args = parser.parse_args()
    verify(args)
