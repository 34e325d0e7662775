"""Command-line interface for bisectorlab."""
import argparse

from .compute import _add_arguments as add_compute_arguments
from .compute import compute
from .generate import _add_arguments as add_generate_arguments
from .generate import generate
from .oracle_check import _add_arguments as add_oracle_check_arguments
from .oracle_check import oracle_check
from .sweep import _add_arguments as add_sweep_arguments
from .sweep import sweep
from .verify import _add_arguments as add_verify_arguments
from .verify import verify


def main():
    """Main entry to the command line interface.
    """
    parser = argparse.ArgumentParser(description='bisectorlab: exact perpendicular-bisector invariants of planar point sets')
    subparsers = parser.add_subparsers(help='sub-command help')

    parser_compute = subparsers.add_parser('compute', help='compute the invariants of a point-set file')
    add_compute_arguments(parser_compute)
    parser_compute.set_defaults(func=compute)

    parser_sweep = subparsers.add_parser('sweep', help='run an experiment file over generated configurations')
    add_sweep_arguments(parser_sweep)
    parser_sweep.set_defaults(func=sweep)

    parser_verify = subparsers.add_parser('verify', help='run the verification suites')
    add_verify_arguments(parser_verify)
    parser_verify.set_defaults(func=verify)

    parser_oracle_check = subparsers.add_parser('oracle-check', help='compare fast counts with brute-force scans')
    add_oracle_check_arguments(parser_oracle_check)
    parser_oracle_check.set_defaults(func=oracle_check)

    parser_generate = subparsers.add_parser('generate', help='write a generated configuration to a file')
    add_generate_arguments(parser_generate)
    parser_generate.set_defaults(func=generate)

    args = parser.parse_args()
    if hasattr(args, 'func'):
        args.func(args)
    else:
        parser.print_help()

if __name__ == '__main__':
    main()
