"""Compare the fast counts of one point-set file with the brute-force scans."""
import argparse
import sys

from .geometry import PointSet
from .invariants import (build_curve_table, energy_report, isoceles_count, multiplicity_map, refine_pairs)
from .oracles import DEFAULT_CAPS, distinct_bisectors_pairwise, energy_bruteforce, isoceles_bruteforce


def oracle_check(args):
    """Print fast and brute-force values side by side; exit 1 on any disagreement."""
    point_set = PointSet.load(args.pointset, backend=args.backend, quantum=args.quantum)
    n = len(point_set)
    full = energy_report(multiplicity_map(point_set))
    rows = []
    if n <= args.pairwise_cap:
        rows.append(('distinct_bisectors', full.distinct, distinct_bisectors_pairwise(point_set, args.pairwise_cap)))
    if n <= args.energy_cap:
        rows.append(('energy', full.energy, energy_bruteforce(point_set, None, args.energy_cap)))
        table = build_curve_table(point_set)
        for K in args.K:
            refinement = refine_pairs(point_set, table, 2, K + 1, args.heaviness)
            fast = energy_report(multiplicity_map(point_set, refinement)).energy
            rows.append((f'energy_K{K}', fast, energy_bruteforce(point_set, refinement, args.energy_cap)))
    if n <= args.isoceles_cap:
        rows.append(('isoceles', isoceles_count(point_set), isoceles_bruteforce(point_set, args.isoceles_cap)))
    if not rows:
        print(f'n = {n} exceeds every oracle cap; nothing to compare')
        return
    mismatches = 0
    for name, fast, oracle in rows:
        status = 'ok' if fast == oracle else 'MISMATCH'
        mismatches += fast != oracle
        print(f'{name:>20}: fast={fast} oracle={oracle} {status}')
    if mismatches:
        print(f'{mismatches} of {len(rows)} invariants disagree with their oracle')
        sys.exit(1)
    print(f'All {len(rows)} invariants agree with their oracles')


def _add_arguments(parser):
    """Add oracle-check arguments to the parser in place."""
    parser.description = '''Cross-check the fast distinct-bisector count, bisector energy, refined energies and
    isoceles count of a point set against brute-force scans. Oracles are skipped above their size caps.
    '''
    parser.add_argument('pointset', type=str, help='path to the point-set JSON file.')
    parser.add_argument('--backend', type=str, choices=('exact', 'qfloat'), default='exact',
                        help='scalar backend (default: exact).')
    parser.add_argument('--quantum', type=float, default=1e-9, help='grid width of the qfloat backend (default: 1e-9).')
    parser.add_argument('--heaviness', type=str, choices=('curves', 'circles'), default='curves',
                        help='curves counted by the pair heaviness (default: curves).')
    parser.add_argument('--K', type=int, nargs='+', default=[3, 4],
                        help='heaviness thresholds of the refined energies (default: 3 4).')
    parser.add_argument('--energy-cap', type=int, default=DEFAULT_CAPS['energy_oracle'],
                        help=f"largest n for the quadruple scan (default: {DEFAULT_CAPS['energy_oracle']}).")
    parser.add_argument('--isoceles-cap', type=int, default=DEFAULT_CAPS['isoceles_oracle'],
                        help=f"largest n for the triple scan (default: {DEFAULT_CAPS['isoceles_oracle']}).")
    parser.add_argument('--pairwise-cap', type=int, default=DEFAULT_CAPS['pairwise_oracle'],
                        help=f"largest n for the pairwise bisector comparison (default: {DEFAULT_CAPS['pairwise_oracle']}).")


if __name__ == '__main__':
    parser = argparse.ArgumentParser()
    _add_arguments(parser)
    args = parser.parse_args()
    oracle_check(args)
