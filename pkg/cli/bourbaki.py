from cli import EXIT_OK, ArgumentParser, add_common_arguments, check_common_arguments, execute, load_input, \
    write_output
from cli.reeslab.bourbaki import RANDOM, bourbaki_verify, generic_bourbaki, stable_bourbaki_height
from cli.reeslab.report import emit_object


def parse_args(argv=None):
    parser = ArgumentParser(description='Construct the generic Bourbaki ideal of a module', prog='reeslab bourbaki')
    add_common_arguments(parser)
    parser.add_argument('--no-verify', dest='verify', action='store_false', default=True,
                        help='skip the cross-checks between the module and its Bourbaki ideal (random mode)')

    args = parser.parse_args(argv)
    check_common_arguments(parser, args)
    return args


def _bourbaki(args):
    spec = load_input(args)
    options = spec.options

    with options.budget():
        result = generic_bourbaki(spec.module, spec.subset, options.bourbaki_mode, options.seed,
                                  options.bourbaki_retries)
        output = result.to_json()
        output['submodule'] = [i + 1 for i in result.subset]

        if result.mode == RANDOM and result.rank >= 2 and args.verify:
            output['verified'] = bourbaki_verify(result, spec.module, options.seed, options.reduction_retries)
            height, results = stable_bourbaki_height(spec.module, spec.subset, options.seed,
                                                     options.stability_seeds, options.bourbaki_retries)
            output['stable_height'] = {'height': height, 'seeds': [r.seed for r in results]}

    write_output(emit_object(output, args.format), args.out)
    return EXIT_OK


def main(argv=None):
    return execute(_bourbaki, parse_args, argv)
