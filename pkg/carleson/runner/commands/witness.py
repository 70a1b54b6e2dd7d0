from carleson.geometry.points import Height
from carleson.geometry.regions import CarlesonSet, CarlesonWindow
from carleson.geometry.witness import prop1_witness
from carleson.runner.base.command import Command
from carleson.runner.output import OutputRecord
from carleson.utils.constants import ExitCodes


class WitnessCommand(Command):

    def __init__(self, top_parser, subparser):
        super().__init__(top_parser, subparser)
        self.command = 'witness'
        self.help = 'A point of S(b,h) outside W(b,h), showing S(b,h) is never inside W(b,h).'
        self.flags = [
            {'command': '--h', 'help': 'Height h in (0, 1).', 'type': float, 'required': True},
        ]

        self.add_subcommand()

    def run(self, args):
        base = self.base_point(args)
        height = Height(args.h)
        witness = prop1_witness(base, height)
        carleson_set = CarlesonSet(base, height)
        window = CarlesonWindow(base, height)

        record = OutputRecord(self.command).add('h', args.h).add_point('witness', witness)
        record.update(in_set=carleson_set.contains(witness),
                      in_window=window.contains(witness),
                      set_slack=carleson_set.slack(witness),
                      window_slack=window.slack(witness))
        self.emit(record, args)
        return ExitCodes.OK
