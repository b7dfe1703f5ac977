import argparse
import inspect
import logging
import sys
import time

EXIT_OK = 0
EXIT_INCONSISTENT = 2
EXIT_BUDGET = 3
EXIT_INPUT = 4


class CLIArgsException(Exception):
    def __init__(self, parser, error):
        self.parser = parser
        self.message = error

    def __str__(self):
        return '{prog}: error: {message}'.format(prog=self.parser.prog, message=self.message)


class ArgumentParser(argparse.ArgumentParser):
    """Reports bad arguments with CLIArgsException instead of exiting with argparse's own status."""

    def error(self, message):
        raise CLIArgsException(self, message)


class SkipException(Exception):
    def __init__(self, *args: object) -> None:
        super().__init__(*args)


def pp_time(elapsed):
    elapsed = int(elapsed)
    parts = []

    if elapsed > 86400:  # days
        d = int(elapsed / 86400)
        elapsed -= d * 86400
        parts.append('%dd' % d)
    if elapsed > 3600:  # hours
        h = int(elapsed / 3600)
        elapsed -= h * 3600
        parts.append('%dh' % h)
    if elapsed > 60:  # minutes
        m = int(elapsed / 60)
        elapsed -= m * 60
        parts.append('%dm' % m)
    parts.append('%ds' % elapsed)

    return ' '.join(parts)


def activitystep(description):
    def decorator(method):
        _, line_no = inspect.getsourcelines(method)
        return _Step(method, line_no, description)

    return decorator


class _Step:
    def __init__(self, f, line_no, description):
        self.id = f.__name__.strip('_')
        self._description = description
        self._line_no = line_no
        self._f = f

    def __lt__(self, other):
        return self._line_no < other._line_no

    def __call__(self, *_args, **_kwargs):
        self._f(*_args, **_kwargs)

    def __str__(self):
        return self._description

    def __repr__(self):
        return 'Step(line=%d, id=%s, desc=%s)' % (self._line_no, self.id, self._description)


class Namespace(object):
    def __init__(self, **kwargs):
        self.__dict__.update(kwargs)

    def __getattr__(self, key):
        return self.__dict__[key] if key in self.__dict__ else None

    def __setattr__(self, key, value):
        self.__dict__[key] = value

    def __repr__(self):
        return 'Namespace' + str(self.__dict__)

    def __str__(self):
        return repr(self)


class Activity(object):
    """Runs the @activitystep methods in source order, printing progress to a stream and timing each step."""

    @classmethod
    def steps(cls):
        return sorted([method for _, method in inspect.getmembers(cls) if isinstance(method, _Step)])

    def __init__(self, args, progress=None):
        self.args = args
        self.progress = progress if progress is not None else sys.stderr
        self.state = Namespace()
        self.timings = {}

        self._logger = logging.getLogger(type(self).__name__)
        self._steps = self.steps()

    def _print(self, text, end='\n'):
        if self.progress:
            print(text, end=end, file=self.progress, flush=True)

    def run(self):
        for i, step in enumerate(self._steps):
            step_desc = '(%d/%d) %s' % (i + 1, len(self._steps), str(step))
            self._print('{:<65s}'.format('%s...' % step_desc), end='')

            try:
                self._logger.info('Step "%s" started' % step.id)
                begin = time.time()
                step(self)
                elapsed_time = time.time() - begin
                self.timings[step.id] = round(elapsed_time, 3)
                self._logger.info('Step "%s" completed in %s' % (step.id, pp_time(elapsed_time)))

                self._print('DONE in %s' % pp_time(elapsed_time))
            except SkipException:
                self._print('SKIPPED')
            except BaseException:
                self._print('FAILED')
                raise


def add_common_arguments(parser):
    parser.add_argument('input_file', metavar='INPUT', help='the input file describing ring, module and options')
    parser.add_argument('--seed', dest='seed', metavar='N', type=int, default=None,
                        help='seed of every random choice (default is 42)')
    parser.add_argument('--mode', dest='mode', choices=['symbolic', 'random'], default=None,
                        help='generic Bourbaki construction: new variables or seeded random scalars (default random)')
    parser.add_argument('--out', dest='out', metavar='PATH', default=None,
                        help='write the report to this file instead of standard output')
    parser.add_argument('--format', dest='format', choices=['json', 'text'], default='json',
                        help='report format (default is json)')

    budget_args = parser.add_argument_group('Budget arguments')
    budget_args.add_argument('--time-cap', dest='time_cap', metavar='SECONDS', type=float, default=None,
                             help='time budget of a single Groebner basis computation (default is 300)')
    budget_args.add_argument('--degree-cap', dest='degree_cap', metavar='DEGREE', type=int, default=None,
                             help='largest degree a Groebner basis computation may reach (default is 30)')

    log_args = parser.add_argument_group('Logging arguments')
    log_args.add_argument('--log-file', dest='log_file', metavar='PATH', default=None,
                          help='append log messages to this file instead of standard error')
    log_args.add_argument('--log-level', dest='log_level', metavar='LEVEL', default='warning',
                          choices=['critical', 'error', 'warning', 'info', 'debug'], help='select the log level')
    log_args.add_argument('--log-format', dest='log_format', choices=['text', 'json'], default='text',
                          help='format of log messages (default is text)')


def check_common_arguments(parser, args):
    if args.seed is not None and args.seed < 0:
        raise CLIArgsException(parser, 'seed must be non-negative')
    if args.time_cap is not None and args.time_cap <= 0:
        raise CLIArgsException(parser, 'time cap must be positive')
    if args.degree_cap is not None and args.degree_cap < 1:
        raise CLIArgsException(parser, 'degree cap must be positive')


def load_input(args):
    """Reads the input file and merges its options with command-line flags and the environment."""
    from cli.reeslab.inputformat import InputSpec

    spec = InputSpec.load(args.input_file)
    spec.options.apply_args(args).apply_environment()
    logging.getLogger('cli').info('Options: %s' % spec.options)
    return spec


def write_output(data, path=None):
    if path is None:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        with open(path, 'wb') as stream:
            stream.write(data)


def execute(command, parse_args, argv=None):
    """Parses arguments, sets up logging and runs command(args); errors become JSON objects and exit codes."""
    from cli.reeslab import ReesLabError
    from cli.reeslab.bourbaki import VerificationFailed
    from cli.reeslab.groebner import BudgetExceeded
    from cli.reeslab.report import emit_error
    from cli.utils.logs import setup_logging

    logger = logging.getLogger('cli')
    try:
        args = parse_args(argv)
    except CLIArgsException as e:
        print(str(e), file=sys.stderr)
        write_output(emit_error(e))
        return EXIT_INPUT

    log_stream = open(args.log_file, 'a', encoding='utf-8') if args.log_file else None
    try:
        setup_logging(args.log_level, args.log_format, stream=log_stream)
        return command(args)
    except BudgetExceeded as e:
        logger.error('Aborted: %s' % e)
        write_output(emit_error(e))
        return EXIT_BUDGET
    except VerificationFailed as e:
        logger.error('Inconsistent result: %s' % e)
        write_output(emit_error(e))
        return EXIT_INCONSISTENT
    except (ReesLabError, OSError, ValueError) as e:
        logger.error('Invalid input: %s' % e)
        write_output(emit_error(e))
        return EXIT_INPUT
    finally:
        if log_stream is not None:
            log_stream.close()
