import argparse

from carleson.runner.commands.batch import BatchCommand
from carleson.runner.commands.check import CheckCommand
from carleson.runner.commands.h0 import H0Command
from carleson.runner.commands.interval import IntervalCommand
from carleson.runner.commands.render import RenderCommand
from carleson.runner.commands.sweep import SweepCommand
from carleson.runner.commands.witness import WitnessCommand


class ParserBuilder:
    DESCRIPTION = 'Inclusions between Carleson sets S(b,h) and Carleson windows W(b,h) of the' \
                  + ' unit disk: admissible constants, a sampling oracle, witnesses and figures.'
    COMMANDS = [IntervalCommand, CheckCommand, H0Command, SweepCommand, WitnessCommand,
                RenderCommand, BatchCommand]

    @staticmethod
    def DefaultParser():
        parser = argparse.ArgumentParser(prog='carleson', description=ParserBuilder.DESCRIPTION)
        subparser = parser.add_subparsers(title='subcommands',
                                          description='valid subcommands',
                                          help='additional help')

        for cls in ParserBuilder.COMMANDS:
            cls(parser, subparser)

        return parser
