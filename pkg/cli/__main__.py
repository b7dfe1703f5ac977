import sys

from cli.reeslab import VERSION

COMMANDS = {
    'analyze': 'Compute invariants and check the Cohen-Macaulayness and linear type criteria',
    'rees': 'Print the symmetric algebra, the Rees algebra and the first powers of a module',
    'bourbaki': 'Construct the generic Bourbaki ideal of a module',
}


def _usage():
    lines = ['usage: reeslab <command> [options]', '', 'commands:']
    lines.extend('  %-10s %s' % (name, description) for name, description in COMMANDS.items())
    lines.append('')
    lines.append('Run "reeslab <command> --help" for the options of a command.')
    return '\n'.join(lines)


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv

    if len(argv) == 0 or argv[0] in ('-h', '--help'):
        print(_usage())
        return 0
    if argv[0] == '--version':
        print('reeslab %s' % VERSION)
        return 0

    command, argv = argv[0], argv[1:]
    if command == 'analyze':
        from cli.analyze import main as command_main
    elif command == 'rees':
        from cli.rees import main as command_main
    elif command == 'bourbaki':
        from cli.bourbaki import main as command_main
    else:
        print('reeslab: error: unknown command "%s"\n\n%s' % (command, _usage()), file=sys.stderr)
        return 4

    return command_main(argv)


if __name__ == '__main__':
    sys.exit(main())
