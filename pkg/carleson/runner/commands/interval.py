from carleson.analysis.intervals import admissible_interval
from carleson.runner.base.command import TOLERANCE_FLAG, Command
from carleson.runner.output import OutputRecord
from carleson.utils.constants import ExitCodes


class IntervalCommand(Command):

    def __init__(self, top_parser, subparser):
        super().__init__(top_parser, subparser)
        self.command = 'interval'
        self.help = 'Admissible constants c of one part of the inclusion calculus.'
        self.flags = [
            {'command': '--h', 'help': 'Height h in (0, 1).', 'type': float, 'required': True},
            {'command': '--which', 'help': "Part of the calculus: 'i', 'ii' or 'iii'.",
             'type': str, 'default': 'iii'},
            TOLERANCE_FLAG,
        ]

        self.add_subcommand()

    def run(self, args):
        interval = admissible_interval(args.which, args.h, args.tol)
        record = OutputRecord(self.command).update(h=args.h, which=args.which)
        record.add('kind', interval.kind.value)
        if interval.is_empty:
            record.update(lower=None, upper=None)
        else:
            record.update(lower=interval.lower, upper=interval.upper)
        self.emit(record, args)
        return ExitCodes.OK
