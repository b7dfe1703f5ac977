from cli import EXIT_OK, ArgumentParser, CLIArgsException, add_common_arguments, check_common_arguments, execute, \
    load_input, write_output
from cli.reeslab.rees import is_linear_type, power_component, rees_algebra, special_fiber
from cli.reeslab.report import emit_object


def _ideal(ideal):
    return [str(g) for g in ideal.gens]


def rees_presentation(module, max_power=None):
    """S(E), R(E), the special fiber and the first powers E^n as plain data."""
    package = rees_algebra(module)
    fiber = special_fiber(package)
    spread = fiber.dimension()
    top = max_power if max_power is not None else max(spread - package.rank, 1)

    powers = {}
    for n in range(1, top + 1):
        power = power_component(package, n)
        powers[n] = {
            'generators': power.n,
            'row_degrees': list(power.row_degrees) if power.graded else None,
            'matrix': power.phi.render(),
        }

    return {
        'ring': str(package.ring),
        'variables': list(package.ring.variables),
        'rank': package.rank,
        'symmetric_ideal': _ideal(package.sym.defining_ideal),
        'rees_ideal': _ideal(package.rees.defining_ideal),
        'saturating_element': str(package.saturating_element),
        'torsion_generators': [str(g) for g in package.correction],
        'linear_type': is_linear_type(package),
        'analytic_spread': spread,
        'special_fiber': _ideal(fiber.defining_ideal),
        'powers': powers,
    }


def parse_args(argv=None):
    parser = ArgumentParser(description='Print the symmetric algebra, the Rees algebra and the first powers of '
                                        'a module', prog='reeslab rees')
    add_common_arguments(parser)
    parser.add_argument('--max-power', dest='max_power', metavar='N', type=int, default=None,
                        help='largest power E^n to present (default is l - e)')

    args = parser.parse_args(argv)
    check_common_arguments(parser, args)
    if args.max_power is not None and args.max_power < 1:
        raise CLIArgsException(parser, 'max-power must be at least 1')

    return args


def _rees(args):
    spec = load_input(args)
    with spec.options.budget():
        output = rees_presentation(spec.module, spec.options.max_power)
    write_output(emit_object(output, args.format), args.out)
    return EXIT_OK


def main(argv=None):
    return execute(_rees, parse_args, argv)
