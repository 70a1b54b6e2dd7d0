from carleson.analysis.functions import solve_h0
from carleson.runner.base.command import TOLERANCE_FLAG, Command
from carleson.runner.output import OutputRecord
from carleson.utils.constants import ExitCodes


class H0Command(Command):

    def __init__(self, top_parser, subparser):
        super().__init__(top_parser, subparser)
        self.command = 'h0'
        self.help = 'Crossover root h0 where g switches from f^-1 to k.'
        self.flags = [TOLERANCE_FLAG]

        self.add_subcommand()

    def run(self, args):
        root = solve_h0(args.tol)
        record = OutputRecord(self.command).update(
            value=root.value, residual=root.residual, iterations=root.iterations)
        self.emit(record, args)
        return ExitCodes.OK
