import json
import os

from carleson.analysis.functions import solve_h0
from carleson.analysis.sweep import sweep_csv, sweep_table
from carleson.runner.base.command import TOLERANCE_FLAG, Command
from carleson.runner.output import json_value
from carleson.utils.constants import ExitCodes
from carleson.utils.reporter import Reporter as rp


class SweepCommand(Command):

    def __init__(self, top_parser, subparser):
        super().__init__(top_parser, subparser)
        self.command = 'sweep'
        self.help = 'Tabulates f^-1, k, g and the part (iii) interval over a range of h.'
        self.flags = [
            {'command': '--h-min', 'help': 'Smallest height.', 'type': float, 'default': 0.05},
            {'command': '--h-max', 'help': 'Largest height.', 'type': float, 'default': 0.95},
            {'command': '--steps', 'help': 'Number of rows.', 'type': int, 'default': 19},
            TOLERANCE_FLAG,
            {'command': '--out', 'help': 'CSV file to write. Standard output when omitted.',
             'type': str, 'metavar': 'CSV_PATH'},
            {'command': '--plot', 'help': 'Also draw the table with matplotlib to this file.',
             'type': str, 'metavar': 'PLOT_PATH'},
        ]

        self.add_subcommand()

    def run(self, args):
        table = sweep_table(args.h_min, args.h_max, args.steps, args.tol)

        if args.json:
            rows = [{key: json_value(value) for key, value in row.items()}
                    for row in table.to_dict(orient='records')]
            text = json.dumps({'command': self.command, 'rows': rows}) + '\n'
        else:
            text = sweep_csv(table)

        if args.out is None:
            print(text, end='')
        else:
            os.makedirs(os.path.dirname(os.path.abspath(args.out)), exist_ok=True)
            with open(args.out, 'w', newline='') as csv_out:
                csv_out.write(text)
            rp.report('Sweep of {} rows written to {}'.format(len(table), args.out))

        if args.plot is not None:
            # imported here so that plain sweeps never load matplotlib
            from carleson.render.plots import plot_sweep
            plot_sweep(table, args.plot, h0=solve_h0(args.tol).value)
        return ExitCodes.OK
