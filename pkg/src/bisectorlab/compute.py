"""Compute the invariants of one point-set file.

The point-set file is a JSON array of ``[x, y]`` pairs with integer or ``"p/q"`` coordinates.
The report is printed as JSON, or saved when ``--output`` is given.
"""
import argparse

import srsly

from .geometry import PointSet
from .lab import INVARIANT_NAMES, compute_invariants
from .utils import ensure_parent_dir, get_num_workers


def compute(args):
    """Compute the requested invariants of a point set and print or save the report."""
    point_set = PointSet.load(args.pointset, backend=args.backend, quantum=args.quantum)
    report = compute_invariants(point_set, family='file', invariants=args.invariants, K_values=args.K,
                                M_cut=args.M_cut, heaviness=args.heaviness, validate_oracles=args.validate_oracles,
                                workers=get_num_workers(args.workers))
    data = report.to_json()
    if args.output:
        ensure_parent_dir(args.output)
        srsly.write_json(args.output, data)
        print(f'Invariant report of {len(point_set)} points saved to {args.output}')
    else:
        print(srsly.json_dumps(data, indent=2))


def _add_arguments(parser):
    """Add compute arguments to the parser in place."""
    parser.description = '''Compute exact bisector, curve, distance and incidence invariants of a point set.
    The input is a JSON array of [x, y] pairs whose coordinates are integers or "p/q" strings
    (floats are accepted by the qfloat backend only). Duplicate points are rejected.
    '''
    parser.add_argument('pointset', type=str, help='path to the point-set JSON file.')
    parser.add_argument('--invariants', nargs='+', choices=INVARIANT_NAMES, default=list(INVARIANT_NAMES),
                        help='invariant groups to compute (default: all).')
    parser.add_argument('--backend', type=str, choices=('exact', 'qfloat'), default='exact',
                        help='scalar backend: exact rationals or quantized floats (default: exact).')
    parser.add_argument('--quantum', type=float, default=1e-9,
                        help='grid width of the qfloat backend (default: 1e-9).')
    parser.add_argument('--heaviness', type=str, choices=('curves', 'circles'), default='curves',
                        help='curves counted by the pair heaviness C(a,b): lines and circles, or circles only \
                        (default: curves).')
    parser.add_argument('--K', type=int, nargs='+', default=[3, 4],
                        help='heaviness thresholds K of the refined energies Q_K (default: 3 4).')
    parser.add_argument('--M-cut', type=int, default=None,
                        help='first band boundary of the banded energy sweep (default: max(2, round(n^(2/7)))).')
    parser.add_argument('--validate-oracles', action='store_true',
                        help='compare the fast counts with the brute-force scans where n is within their caps.')
    parser.add_argument('--workers', type=int, default=None,
                        help='worker processes (default: BISECTORLAB_THREADS, else 1).')
    parser.add_argument('-o', '--output', type=str, default=None,
                        help='path to save the JSON report (default: print to stdout).')


if __name__ == '__main__':
    parser = argparse.ArgumentParser()
    _add_arguments(parser)
    args = parser.parse_args()
    compute(args)
