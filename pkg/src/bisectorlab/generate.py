"""Write a generated point configuration to a point-set file."""
import argparse

from .lab import FAMILIES, GeneratorSpec, generate as generate_points
from .utils import ensure_parent_dir


def _parse_param(text):
    key, sep, value = text.partition('=')
    if not sep or not key:
        raise argparse.ArgumentTypeError(f'expected key=value, got {text!r}')
    try:
        value = int(value)
    except ValueError:
        pass
    return key, value


def generate(args):
    """Generate a configuration of one family and save it as a point-set file."""
    spec = GeneratorSpec(args.family, args.n, args.seed, dict(args.param or []))
    backend = 'qfloat' if args.family == 'ngon' else 'exact'
    point_set = generate_points(spec, backend, args.quantum)
    ensure_parent_dir(args.output)
    point_set.dump(args.output)
    print(f'{len(point_set)} points of family {args.family} saved to {args.output}')


def _add_arguments(parser):
    """Add generate arguments to the parser in place."""
    parser.description = '''Generate a point configuration. Rational families are written with exact
    "p/q" coordinates; regular polygons (ngon) are written with float coordinates and must be read
    back with the qfloat backend.
    '''
    parser.add_argument('family', type=str, choices=FAMILIES, help='configuration family.')
    parser.add_argument('n', type=int, help='number of points.')
    parser.add_argument('-o', '--output', type=str, required=True, help='path of the point-set JSON file.')
    parser.add_argument('--seed', type=int, default=0, help='random seed (default: 0).')
    parser.add_argument('--param', type=_parse_param, action='append',
                        help='family parameter as key=value, e.g. eps=1/4 or circles=3; may be repeated.')
    parser.add_argument('--quantum', type=float, default=1e-9, help='grid width of the qfloat backend (default: 1e-9).')


if __name__ == '__main__':
    parser = argparse.ArgumentParser()
    _add_arguments(parser)
    args = parser.parse_args()
    generate(args)
