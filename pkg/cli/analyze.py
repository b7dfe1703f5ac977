import os

from cli import EXIT_BUDGET, EXIT_INCONSISTENT, EXIT_OK, Activity, ArgumentParser, CLIArgsException, SkipException, \
    activitystep, add_common_arguments, check_common_arguments, execute, load_input, write_output
from cli.reeslab import ReesLabError
from cli.reeslab.bourbaki import RANDOM, VerificationFailed, bourbaki_verify
from cli.reeslab.checker import ALL_THEOREMS, THEOREMS, ModuleProfile, run_theorem
from cli.reeslab.report import AnalysisReport, computed, emit_report, error_object, not_computable


class AnalyzeActivity(Activity):
    def __init__(self, args, spec, budget, progress=None):
        super().__init__(args, progress)
        self.spec = spec
        self.budget = budget
        self.profile = ModuleProfile(spec.module, spec.options)
        self.report = AnalysisReport(os.path.basename(args.input_file), spec.options, spec.ring.field)
        self.inconsistent = False

    @activitystep('Computing rank, generators and depth')
    def _invariants(self):
        self.report.set_invariant('rank', self.profile.rank)
        self.report.set_invariant('mu', self.profile.mu)
        self.report.set_invariant('torsion_free', self.profile.torsion_free)
        self.report.set_invariant('depth', self.profile.depth)

    @activitystep('Building the Rees algebra')
    def _rees(self):
        profile = self.profile
        if profile.rank() < 1:
            raise SkipException()

        self.report.set_invariant('analytic_spread', profile.spread)
        self.report.set_invariant('linear_type', profile.linear_type)
        self.report.set_invariant('reduction_number', profile.reduction)
        self.report.set_invariant('rees_cm', profile.rees_cm)

    @activitystep('Computing depths of powers')
    def _powers(self):
        profile = self.profile
        if profile.rank() < 1:
            raise SkipException()

        top = profile.options.max_power
        if top is None:
            spread = self.report.invariants.get('analytic_spread')
            top = max(spread - profile.rank(), 1) if isinstance(spread, int) else 1

        self.report.invariants['depth_of_powers'] = {n: computed(profile.power_depth, n) for n in range(1, top + 1)}

    @activitystep('Constructing the generic Bourbaki ideal')
    def _bourbaki(self):
        profile = self.profile
        subset = self.spec.subset
        if profile.rank() < 1:
            raise SkipException()

        result = computed(profile.bourbaki, subset)
        if isinstance(result, dict):
            self.report.invariants['bourbaki'] = result
            return

        entry = self.report.invariants['bourbaki'] = result.to_json()
        if result.mode != RANDOM or result.rank < 2:
            return

        options = profile.options
        try:
            entry['verified'] = bourbaki_verify(result, profile.module, options.seed, options.reduction_retries)
            entry['stable_height'] = profile.bourbaki_height(subset)
        except VerificationFailed as e:
            self._logger.error('Bourbaki verification failed: %s' % e)
            entry['verified'] = error_object(e)
            self.inconsistent = True
        except ReesLabError as e:
            entry.setdefault('verified', not_computable(e))

    @activitystep('Checking theorems')
    def _theorems(self):
        for theorem_id in self.args.theorem or THEOREMS:
            report = run_theorem(theorem_id, self.profile, subset=self.spec.subset)
            self.report.theorem_reports.append(report)
            if not report.consistent:
                self._logger.error('Theorem %s: every hypothesis holds but the conclusion does not' % theorem_id)
                self.inconsistent = True

    @property
    def exit_code(self):
        if self.inconsistent:
            return EXIT_INCONSISTENT
        if self.budget.exceeded:
            self._logger.warning('%d computations exceeded their budget' % len(self.budget.exceeded))
            return EXIT_BUDGET
        return EXIT_OK


def run_analyze(args, progress=None):
    """Analyses the input file named by args; returns the report and the exit code."""
    spec = load_input(args)
    budget = spec.options.budget()
    activity = AnalyzeActivity(args, spec, budget, progress)
    with budget:
        activity.run()

    if args.timings:
        activity.report.timings = activity.timings
    return activity.report, activity.exit_code


def parse_args(argv=None):
    parser = ArgumentParser(description='Compute the Rees algebra invariants of a module and check which '
                                        'Cohen-Macaulayness and linear type criteria apply', prog='reeslab analyze')
    add_common_arguments(parser)

    parser.add_argument('--theorem', dest='theorem', choices=ALL_THEOREMS, action='append', default=None,
                        help='check only this theorem (may be repeated, default is all but ideal_cm)')
    parser.add_argument('--timings', dest='timings', action='store_true', default=False,
                        help='include the duration of each step in the report')

    computation_args = parser.add_argument_group('Computation arguments')
    computation_args.add_argument('--r-max', dest='r_max', metavar='R', type=int, default=None,
                                  help='largest reduction number searched for (default is l - e + 2)')
    computation_args.add_argument('--max-power', dest='max_power', metavar='N', type=int, default=None,
                                  help='largest power E^n whose depth is reported (default is l - e)')
    computation_args.add_argument('-s', dest='s', metavar='S', type=int, default=None,
                                  help='the integer s of the cm2 and cm3 criteria (default is r(E))')

    args = parser.parse_args(argv)
    check_common_arguments(parser, args)

    if args.r_max is not None and args.r_max < 0:
        raise CLIArgsException(parser, 'r-max must be non-negative')
    if args.max_power is not None and args.max_power < 1:
        raise CLIArgsException(parser, 'max-power must be at least 1')
    if args.s is not None and args.s < 0:
        raise CLIArgsException(parser, 's must be non-negative')

    return args


def _analyze(args):
    report, exit_code = run_analyze(args)
    write_output(emit_report(report, args.format), args.out)
    return exit_code


def main(argv=None):
    return execute(_analyze, parse_args, argv)
