from carleson.analysis.intervals import analytic_verdict
from carleson.oracle.inclusion import oracle_verdicts
from carleson.runner.base.command import PLAN_FLAGS, Command
from carleson.runner.output import OutputRecord
from carleson.utils.constants import ExitCodes


def exit_code(analytic, verdicts):
    """0 holds, 1 refuted, 3 when the oracle contradicts the analytic verdict."""
    if verdicts is not None and all(v.verified for v in verdicts) != analytic:
        return ExitCodes.DISAGREEMENT
    return ExitCodes.OK if analytic else ExitCodes.REFUTED


def oracle_status(verdicts):
    if verdicts is None:
        return 'skipped'
    return 'verified' if all(v.verified for v in verdicts) else 'refuted'


class CheckCommand(Command):

    def __init__(self, top_parser, subparser):
        super().__init__(top_parser, subparser)
        self.command = 'check'
        self.help = 'Decides whether the inclusions of one part hold for (h, c).'
        self.flags = [
            {'command': '--h', 'help': 'Height h in (0, 1).', 'type': float, 'required': True},
            {'command': '--c', 'help': 'Constant c > 1.', 'type': float, 'required': True},
            {'command': '--which', 'help': "Part of the calculus: 'i', 'ii' or 'iii'.",
             'type': str, 'default': 'iii'},
        ] + PLAN_FLAGS

        self.add_subcommand()

    def run(self, args):
        analytic = analytic_verdict(args.which, args.h, args.c)
        record = OutputRecord(self.command).update(h=args.h, c=args.c, which=args.which,
                                                   analytic=analytic)
        if not args.oracle:
            self.emit(record, args)
            return exit_code(analytic, None)

        verdicts = oracle_verdicts(args.which, self.base_point(args), args.h, args.c,
                                   self.sampling_plan(args))
        record.add('oracle', oracle_status(verdicts))
        if verdicts is not None:
            refuted = next((v for v in verdicts if v.refuted), None)
            record.add('tested_points', sum(v.tested_points for v in verdicts))
            record.add('marginal_failures', sum(v.marginal_failures for v in verdicts))
            record.add('subject', None if refuted is None else refuted.subject.describe())
            record.add_point('witness', None if refuted is None else refuted.witness)
        self.emit(record, args)
        return exit_code(analytic, verdicts)
